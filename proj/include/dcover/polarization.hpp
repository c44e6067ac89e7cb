#pragma once

#include "dcover/surface.hpp"

#include <string>
#include <vector>

namespace dcover {

/// A base surface embedded in P^N by the complete linear system of a very
/// ample class H = O_Y(1), together with the classes attached to a canonical
/// double cover of it.
class Polarization {
 public:
  /// Throws DomainError unless H is very ample (on F_e: a >= 1, b - ae >= 1).
  explicit Polarization(DivisorClass hyperplane);

  static Polarization plane(const Integer& d);
  static Polarization hirzebruch(const Integer& e, const Integer& a, const Integer& b);

  const SurfaceBase& base() const noexcept { return h_.base(); }
  const DivisorClass& hyperplane() const noexcept { return h_; }
  const DivisorClass& canonical() const noexcept { return k_; }
  /// Branch class -2K + 2H of the canonical double cover.
  const DivisorClass& branch() const noexcept { return branch_; }
  /// Trace-zero class K - H.
  const DivisorClass& trace_zero() const noexcept { return trace_zero_; }
  /// Dimension of the ambient projective space, h^0(H) - 1.
  const Integer& ambient_dimension() const noexcept { return n_; }

  /// "P2, H=O(8)" / "F1, H=5C0+8f".
  std::string label() const;

  /// Notes for polarizations the library accepts but that sit at the edge
  /// of the intended family (P^2 with d <= 2).
  std::vector<std::string> caveats() const;

  friend bool operator==(const Polarization& x, const Polarization& y) { return x.h_ == y.h_; }

 private:
  DivisorClass h_;
  DivisorClass k_;
  DivisorClass branch_;
  DivisorClass trace_zero_;
  Integer n_;
};

inline DivisorClass branch_class(const Polarization& p) { return p.branch(); }
inline DivisorClass trace_zero_class(const Polarization& p) { return p.trace_zero(); }

/// Strict weak order: P^2 before F_e, then by (e, a, b) or d.
bool polarization_less(const Polarization& x, const Polarization& y);

}  // namespace dcover
