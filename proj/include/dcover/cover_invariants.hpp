#pragma once

// Invariants of the canonical double cover X of a polarized base Y and the
// dimension of the moduli component containing X.

#include "dcover/polarization.hpp"

namespace dcover {

struct CoverInvariants {
  Integer p_g;
  Integer q;
  Integer chi;
  Integer c1_sq;
  Integer c2;
  /// c1^2 / c2, reduced.
  Rational chern_ratio;

  friend bool operator==(const CoverInvariants&, const CoverInvariants&) = default;
};

/// Closed-form invariants:
///   P^2, H = O(d):   p_g = d^2/2 + 3d/2 + 1,   c1^2 = 2d^2
///   F_e, H = aC0+bf: p_g = (a+1)(b+1-ae/2),   c1^2 = 2a(2b-ae)
/// with q = 0, chi = p_g + 1 and c2 = 12 chi - c1^2.
CoverInvariants invariants(const Polarization& p);

/// 2d^2 + 15d + 19 on P^2, (2a+5)(2b-ae+5) - 7 on F_e. Throws AuditRefusal
/// when the audit fails, since the formula only holds under its hypotheses.
Integer moduli_dimension(const Polarization& p);

/// h^0(N_pi) = h^0(O_Y(B)) - 1, from the cohomology engine.
Integer normal_sheaf_h0(const Polarization& p);

/// Closed form of the same number: 2d^2 + 15d + 27 on P^2,
/// (2a+5)(2b-ae+5) - 1 on F_e (valid when the branch class is base point free).
Integer normal_sheaf_h0_formula(const Polarization& p);

/// h^0(T_Y) - h^1(T_Y): 8 on P^2, 6 on F_e.
Integer tangent_chi_constant(const SurfaceBase& base);

}  // namespace dcover
