#include "dcover/collisions.hpp"

#include "dcover/audit.hpp"
#include "dcover/cover_invariants.hpp"
#include "dcover/errors.hpp"

#include "json.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace dcover {

MPLine::MPLine(const Integer& m) : m_(m) {
  if (m < 4) throw DomainError("MPLine needs m >= 4, got m = " + m.str());
}

bool MPLine::contains(const Integer& x_prime, const Integer& y) const {
  return (m_ - 2) * y == 6 * (m_ - 3) * x_prime - (m_ - 2) * (m_ - 3) * (m_ + 3);
}

FeasibilityPredicate::FeasibilityPredicate()
    : name_("accept-all"),
      fn_([](const Integer&, const Integer&, const Integer&) { return true; }),
      default_(true) {}

FeasibilityPredicate::FeasibilityPredicate(std::string name, Fn fn)
    : name_(std::move(name)), fn_(std::move(fn)), default_(false) {}

namespace {

using PairSet = std::set<std::pair<Integer, Integer>>;

Integer json_integer(const nlohmann::json& v, const char* what) {
  if (v.is_number_integer()) return Integer(v.get<std::int64_t>());
  if (v.is_string()) {
    try {
      return Integer(v.get<std::string>());
    } catch (const std::exception&) {
    }
  }
  throw DomainError(std::string("feasibility config: ") + what + " must be an integer");
}

PairSet json_pairs(const nlohmann::json& v, const char* what) {
  if (!v.is_array()) throw DomainError(std::string("feasibility config: ") + what + " must be a list");
  PairSet out;
  for (const auto& item : v) {
    if (!item.is_array() || item.size() != 2)
      throw DomainError(std::string("feasibility config: ") + what + " entries are [x', y]");
    out.emplace(json_integer(item[0], what), json_integer(item[1], what));
  }
  return out;
}

}  // namespace

FeasibilityPredicate FeasibilityPredicate::from_json_text(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& err) {
    throw DomainError(std::string("feasibility config is not valid JSON: ") + err.what());
  }
  if (!doc.is_object()) throw DomainError("feasibility config must be a JSON object");

  static const std::set<std::string> known{"name",  "allow",       "deny",  "x_prime_min",
                                           "x_prime_max", "y_min", "y_max"};
  for (auto it = doc.begin(); it != doc.end(); ++it)
    if (!known.count(it.key())) throw DomainError("feasibility config: unknown key " + it.key());

  std::string name = doc.value("name", std::string("config"));
  std::optional<PairSet> allow, deny;
  if (doc.contains("allow")) allow = json_pairs(doc["allow"], "allow");
  if (doc.contains("deny")) deny = json_pairs(doc["deny"], "deny");
  std::optional<Integer> x_lo, x_hi, y_lo, y_hi;
  if (doc.contains("x_prime_min")) x_lo = json_integer(doc["x_prime_min"], "x_prime_min");
  if (doc.contains("x_prime_max")) x_hi = json_integer(doc["x_prime_max"], "x_prime_max");
  if (doc.contains("y_min")) y_lo = json_integer(doc["y_min"], "y_min");
  if (doc.contains("y_max")) y_hi = json_integer(doc["y_max"], "y_max");

  return FeasibilityPredicate(
      std::move(name), [=](const Integer&, const Integer& x, const Integer& y) {
        const std::pair<Integer, Integer> key{x, y};
        if (allow && !allow->count(key)) return false;
        if (deny && deny->count(key)) return false;
        if (x_lo && x < *x_lo) return false;
        if (x_hi && x > *x_hi) return false;
        if (y_lo && y < *y_lo) return false;
        if (y_hi && y > *y_hi) return false;
        return true;
      });
}

XiSearch xi_candidates(const Integer& m, const Integer& search_bound,
                       const FeasibilityPredicate& feas) {
  const MPLine line(m);
  if (search_bound < 1) throw DomainError("search bound must be >= 1");

  XiSearch result{m, search_bound, {}, {}};
  std::map<std::pair<Integer, Integer>, std::vector<Polarization>> hits;
  Enumeration diag;
  // p_g <= bound  <=>  chi <= bound + 1
  scan_theorem_polarizations(
      search_bound + 1, std::nullopt, {},
      [&](const Polarization& p) {
        const CoverInvariants inv = invariants(p);
        if (line.contains(inv.p_g, inv.c1_sq) && feas(m, inv.p_g, inv.c1_sq))
          hits[{inv.p_g, inv.c1_sq}].push_back(p);
      },
      &diag);

  for (auto& [xy, prov] : hits) {
    std::sort(prov.begin(), prov.end(), polarization_less);
    result.candidates.push_back({xy.first, xy.second, std::move(prov), !feas.is_default()});
  }
  result.warnings = std::move(diag.warnings);
  if (feas.is_default())
    result.warnings.push_back(
        "no S-side feasibility predicate supplied: candidates satisfy the X side and the line "
        "equation only (s_side_verified = false)");
  return result;
}

std::vector<Integer> p2_solutions(const Integer& m) {
  const MPLine line(m);
  const Integer qa = 5 - m;
  const Integer qb = -9 * (m - 3);
  const Integer qc = (m - 3) * ((m - 2) * (m + 3) - 6);

  std::set<Integer> roots;
  const auto consider = [&](const Integer& num, const Integer& den) {
    if (den != 0 && num % den == 0 && num / den >= 1) roots.insert(num / den);
  };
  if (qa == 0) {
    consider(-qc, qb);
  } else if (auto s = exact_sqrt(qb * qb - 4 * qa * qc)) {
    consider(-qb + *s, 2 * qa);
    consider(-qb - *s, 2 * qa);
  }

  std::vector<Integer> out(roots.begin(), roots.end());
  for (const Integer& d : out) {
    const CoverInvariants inv = invariants(Polarization::plane(d));
    if (!line.contains(inv.p_g, inv.c1_sq))
      throw InvariantViolation("p2_solutions: root d = " + d.str() + " is off the line");
  }
  return out;
}

namespace {

std::string triple(const CoverInvariants& inv) {
  return "(" + inv.p_g.str() + "," + inv.q.str() + "," + inv.c1_sq.str() + ")";
}

}  // namespace

ExamplesReport verify_moduli_examples() {
  ExamplesReport report{{}, true};
  const auto add = [&](std::string id, std::string description, std::string expected,
                       std::string actual) {
    const bool ok = expected == actual;
    report.checks.push_back(
        {std::move(id), std::move(description), std::move(expected), std::move(actual), ok});
    report.all_passed = report.all_passed && ok;
  };
  const auto verdict = [](const Polarization& p) {
    return audit(p).verdict ? std::string("pass") : std::string("fail");
  };

  const Polarization f1 = Polarization::hirzebruch(1, 5, 8);
  const Polarization p2 = Polarization::plane(8);
  const Polarization f0 = Polarization::hirzebruch(0, 4, 8);

  add("f1_5_8.invariants", "F1, H=5C0+8f: (p_g, q, c1^2)", "(39,0,110)",
      triple(invariants(f1)));
  add("f1_5_8.audit", "F1, H=5C0+8f passes the hypothesis audit", "pass", verdict(f1));
  add("p2_8.invariants", "P2, H=O(8): (p_g, q, c1^2)", "(45,0,128)",
      triple(invariants(p2)));
  add("p2_8.audit", "P2, H=O(8) passes the hypothesis audit", "pass", verdict(p2));
  add("f0_4_8.invariants", "F0, H=4C0+8f: (p_g, q, c1^2)", "(45,0,128)",
      triple(invariants(f0)));
  add("f0_4_8.audit", "F0, H=4C0+8f passes the hypothesis audit", "pass", verdict(f0));

  const Integer mu_p2 = moduli_dimension(p2);
  const Integer mu_f0 = moduli_dimension(f0);
  add("p2_8.mu", "moduli dimension of the P2 octic component", "267", mu_p2.str());
  add("f0_4_8.mu", "moduli dimension of the F0 component", "266", mu_f0.str());
  add("mu_gap", "the two (45,0,128) components have different dimensions", "true",
      mu_p2 != mu_f0 ? "true" : "false");

  const MPLine m4(4);
  add("mpline4.39", "(39,110) lies on the m = 4 line y = 3x' - 7", "true",
      m4.contains(39, 110) ? "true" : "false");
  add("mpline4.45", "(45,128) lies on the m = 4 line y = 3x' - 7", "true",
      m4.contains(45, 128) ? "true" : "false");
  return report;
}

}  // namespace dcover
