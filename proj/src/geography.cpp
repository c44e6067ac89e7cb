#include "dcover/geography.hpp"

#include "dcover/audit.hpp"
#include "dcover/cover_invariants.hpp"
#include "dcover/errors.hpp"

#include <algorithm>
#include <map>

namespace dcover {

GeographyLine GeographyLine::l(const Integer& a) {
  if (a < 1) throw DomainError("l_a needs a >= 1");
  Rational slope(4 * a, a + 1);
  return GeographyLine(Kind::L, a, slope, -slope * Rational(a + 2));
}

GeographyLine GeographyLine::noether() { return GeographyLine(Kind::Noether, 0, 2, -6); }

GeographyLine GeographyLine::castelnuovo() {
  return GeographyLine(Kind::Castelnuovo, 0, 3, -10);
}

std::string GeographyLine::id() const {
  switch (kind_) {
    case Kind::L: return "l" + a_.str();
    case Kind::Noether: return "noether";
    case Kind::Castelnuovo: return "castelnuovo";
  }
  return "?";
}

GeographyPoint point_of(const Polarization& p) {
  const CoverInvariants inv = invariants(p);
  return {inv.chi, inv.c1_sq, {p}};
}

std::pair<Integer, Rational> line_intersection(const Integer& a, const Integer& a_prime) {
  if (a == a_prime) throw DomainError("identical lines");
  const GeographyLine la = GeographyLine::l(a);
  const GeographyLine lb = GeographyLine::l(a_prime);
  const Rational x = (lb.intercept() - la.intercept()) / (la.slope() - lb.slope());
  if (!is_integral(x))
    throw InvariantViolation("l_a and l_a' meet at non-integral x = " + to_string(x));
  if (x != Rational(a * a_prime + a + a_prime + 2))
    throw InvariantViolation("l_a and l_a' meet away from x = aa' + a + a' + 2");
  const Rational y = la.at(x);
  if (y != lb.at(x)) throw InvariantViolation("line intersection inconsistent");
  return {numerator(x), y};
}

namespace {

Integer plane_chi(const Integer& d) { return (d * d + 3 * d + 4) / 2; }

// chi of the cover for H = aC0 + bf on F_e.
Integer hirzebruch_chi(const Integer& e, const Integer& a, const Integer& b) {
  return (a + 1) * (2 * b + 2 - a * e) / 2 + 1;
}

void scan_hirzebruch_a(const Integer& a, const Integer& x_max, const EnumerationOptions& options,
                       const std::function<void(const Polarization&)>& visit,
                       Enumeration* diag) {
  // chi(e, a, b) > e for every very ample H, so e < x_max always suffices;
  // the loop stops earlier once the smallest chi on F_e exceeds x_max.
  const Integer e_bound = 2 * x_max;
  for (Integer e = 0; e <= e_bound; ++e) {
    if (e == 1 && !options.include_f1) continue;
    if (hirzebruch_chi(e, a, a * e + 1) > x_max) break;
    if (e > options.e_cap) {
      if (diag)
        diag->warnings.push_back("e-scan truncated at e_cap = " + options.e_cap.str() +
                                 " for a = " + a.str() + "; points with larger e omitted");
      break;
    }
    if (diag && e > diag->e_scanned) diag->e_scanned = e;
    for (Integer b = a * e + 1; hirzebruch_chi(e, a, b) <= x_max; ++b) {
      const Polarization p = Polarization::hirzebruch(e, a, b);
      if (audit(p).verdict) visit(p);
    }
  }
}

}  // namespace

void scan_theorem_polarizations(const Integer& x_max, const std::optional<Integer>& a_only,
                                const EnumerationOptions& options,
                                const std::function<void(const Polarization&)>& visit,
                                Enumeration* diagnostics) {
  if (!a_only || options.include_p2) {
    for (Integer d = 1; plane_chi(d) <= x_max; ++d) {
      if (a_only && d != *a_only) continue;
      const Polarization p = Polarization::plane(d);
      if (audit(p).verdict) visit(p);
    }
  }
  if (a_only) {
    scan_hirzebruch_a(*a_only, x_max, options, visit, diagnostics);
    return;
  }
  // smallest chi for first coefficient a is 2a + 3 (F_0, b = 1)
  for (Integer a = 1; 2 * a + 3 <= x_max; ++a)
    scan_hirzebruch_a(a, x_max, options, visit, diagnostics);
}

std::vector<GeographyPoint> merge_points(std::vector<GeographyPoint> points) {
  std::map<std::pair<Integer, Integer>, std::vector<Polarization>> merged;
  for (auto& pt : points) {
    auto& prov = merged[{pt.x, pt.y}];
    for (auto& p : pt.provenance)
      if (std::find(prov.begin(), prov.end(), p) == prov.end()) prov.push_back(std::move(p));
  }
  std::vector<GeographyPoint> out;
  out.reserve(merged.size());
  for (auto& [xy, prov] : merged) {
    std::sort(prov.begin(), prov.end(), polarization_less);
    out.push_back({xy.first, xy.second, std::move(prov)});
  }
  return out;
}

Enumeration enumerate_points(const Integer& a, const Integer& x_max,
                             const EnumerationOptions& options) {
  if (a < 1) throw DomainError("enumerate_points needs a >= 1");
  Enumeration result;
  std::vector<GeographyPoint> raw;
  scan_theorem_polarizations(
      x_max, a, options, [&](const Polarization& p) { raw.push_back(point_of(p)); }, &result);
  result.points = merge_points(std::move(raw));
  return result;
}

std::vector<std::pair<Integer, Integer>> semiline_lattice_points(const Integer& a,
                                                                 const Integer& x_max) {
  const GeographyLine line = GeographyLine::l(a);
  std::vector<std::pair<Integer, Integer>> out;
  for (Integer x = 2 * a + 3; x <= x_max; ++x) {
    const Rational y = line.at(x);
    if (is_integral(y)) out.emplace_back(x, numerator(y));
  }
  return out;
}

std::vector<std::pair<Integer, Integer>> semiline_gaps(const Integer& a, const Integer& x_max,
                                                       const Enumeration& enumeration) {
  std::vector<std::pair<Integer, Integer>> gaps;
  for (auto& xy : semiline_lattice_points(a, x_max)) {
    const bool realized =
        std::any_of(enumeration.points.begin(), enumeration.points.end(),
                    [&](const GeographyPoint& p) { return p.x == xy.first && p.y == xy.second; });
    if (!realized) gaps.push_back(xy);
  }
  return gaps;
}

}  // namespace dcover
