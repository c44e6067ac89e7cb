#pragma once

// Line bundle cohomology on P^2 and F_e.
//
// On F_e, for D = alpha*C0 + beta*f with alpha >= 0 the pushforward to P^1
// splits as  O(beta) + O(beta - e) + ... + O(beta - alpha*e),  so h^0 and h^1
// are sums of P^1 cohomology and h^2 vanishes. For alpha = -1 everything
// vanishes, and alpha <= -2 is reduced to the first case by Serre duality.

#include "dcover/surface.hpp"

#include <vector>

namespace dcover {

struct CohomologyTable {
  Integer h0;
  Integer h1;
  Integer h2;
  Integer chi;

  friend bool operator==(const CohomologyTable&, const CohomologyTable&) = default;
};

/// h^i(O_Y(D)) for i = 0, 1, 2. Memoized.
CohomologyTable cohomology(const DivisorClass& d);

/// K - D.
DivisorClass serre_dual(const DivisorClass& d);

/// Number of lattice points of the moment polygon of D. Equals h^0(D); kept
/// free of any shortcut so it can serve as an oracle for cohomology().
Integer h0_lattice_oracle(const DivisorClass& d);

/// Riemann-Roch: 1 + D.(D - K)/2.
Integer riemann_roch_chi(const DivisorClass& d);

/// Degrees beta - k*e (k = 0..alpha) of the line bundles O_{P^1}(.) whose sum
/// is the pushforward of O(D) to P^1. Empty for alpha < 0 or on P^2.
std::vector<Integer> pushforward_twists(const DivisorClass& d);

/// Drops every memoized table.
void clear_cohomology_cache();
std::size_t cohomology_cache_size();

}  // namespace dcover
