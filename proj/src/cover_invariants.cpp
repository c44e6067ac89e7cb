#include "dcover/cover_invariants.hpp"

#include "dcover/audit.hpp"
#include "dcover/cohomology.hpp"
#include "dcover/errors.hpp"

namespace dcover {

CoverInvariants invariants(const Polarization& p) {
  Rational p_g;
  Integer c1_sq;
  if (p.base().is_plane()) {
    const Integer& d = p.hyperplane().degree();
    p_g = Rational(d * d, 2) + Rational(3 * d, 2) + 1;
    c1_sq = 2 * d * d;
  } else {
    const Integer& e = p.base().e();
    const Integer& a = p.hyperplane().alpha();
    const Integer& b = p.hyperplane().beta();
    p_g = Rational(a + 1) * (Rational(b + 1) - Rational(a * e, 2));
    c1_sq = 2 * a * (2 * b - a * e);
  }
  if (!is_integral(p_g))
    throw InvariantViolation("p_g is not an integer for " + p.label() + ": " + to_string(p_g));

  CoverInvariants inv;
  inv.p_g = numerator(p_g);
  inv.q = 0;
  inv.chi = inv.p_g + 1 - inv.q;
  inv.c1_sq = c1_sq;
  inv.c2 = 12 * inv.chi - inv.c1_sq;
  inv.chern_ratio = Rational(inv.c1_sq, inv.c2);
  return inv;
}

Integer moduli_dimension(const Polarization& p) {
  const AuditReport report = audit(p);
  if (!report.verdict) {
    const auto failing = report.failing_conditions();
    std::string list;
    for (const auto& id : failing) list += (list.empty() ? "" : ",") + id;
    throw AuditRefusal("moduli dimension undefined for " + p.label() +
                           ": hypothesis audit failed (" + list + ")",
                       failing);
  }
  if (p.base().is_plane()) {
    const Integer& d = p.hyperplane().degree();
    return 2 * d * d + 15 * d + 19;
  }
  const Integer& e = p.base().e();
  const Integer& a = p.hyperplane().alpha();
  const Integer& b = p.hyperplane().beta();
  return (2 * a + 5) * (2 * b - a * e + 5) - 7;
}

Integer normal_sheaf_h0(const Polarization& p) { return cohomology(p.branch()).h0 - 1; }

Integer normal_sheaf_h0_formula(const Polarization& p) {
  if (p.base().is_plane()) {
    const Integer& d = p.hyperplane().degree();
    return 2 * d * d + 15 * d + 27;
  }
  const Integer& e = p.base().e();
  const Integer& a = p.hyperplane().alpha();
  const Integer& b = p.hyperplane().beta();
  return (2 * a + 5) * (2 * b - a * e + 5) - 1;
}

Integer tangent_chi_constant(const SurfaceBase& base) { return base.is_plane() ? 8 : 6; }

}  // namespace dcover
