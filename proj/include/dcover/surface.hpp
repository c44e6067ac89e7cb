#pragma once

// Base surfaces Y = P^2 or F_e, their divisor classes and intersection
// theory.
//
// On F_e every class is written alpha*C0 + beta*f where C0 is the minimal
// section (C0^2 = -e) and f the fibre of F_e -> P^1 (C0.f = 1, f^2 = 0).
// On P^2 a class is its degree d.

#include "dcover/arith.hpp"

#include <string>

namespace dcover {

class SurfaceBase {
 public:
  enum class Kind { ProjectivePlane, Hirzebruch };

  static SurfaceBase projective_plane() { return SurfaceBase(Kind::ProjectivePlane, 0); }
  /// Throws DomainError for e < 0.
  static SurfaceBase hirzebruch(const Integer& e);

  Kind kind() const noexcept { return kind_; }
  bool is_plane() const noexcept { return kind_ == Kind::ProjectivePlane; }
  bool is_hirzebruch() const noexcept { return kind_ == Kind::Hirzebruch; }
  /// Twisting number of F_e; 0 for P^2.
  const Integer& e() const noexcept { return e_; }

  /// "P2" or "F<e>".
  std::string name() const;

  friend bool operator==(const SurfaceBase&, const SurfaceBase&) = default;

 private:
  SurfaceBase(Kind kind, Integer e) : kind_(kind), e_(std::move(e)) {}

  Kind kind_;
  Integer e_;
};

class DivisorClass {
 public:
  /// O(d) on P^2.
  static DivisorClass plane(const Integer& d);
  /// alpha*C0 + beta*f on F_e.
  static DivisorClass hirzebruch(const Integer& e, const Integer& alpha, const Integer& beta);
  /// Zero class on `base`.
  static DivisorClass trivial(const SurfaceBase& base);
  /// Generic constructor; for P^2 `beta` must be 0.
  static DivisorClass on(const SurfaceBase& base, const Integer& alpha, const Integer& beta = 0);

  const SurfaceBase& base() const noexcept { return base_; }
  /// Degree on P^2.
  const Integer& degree() const noexcept { return alpha_; }
  /// Coefficient of C0 on F_e.
  const Integer& alpha() const noexcept { return alpha_; }
  /// Coefficient of f on F_e.
  const Integer& beta() const noexcept { return beta_; }

  /// Human-readable label: "O(8)" on P^2, "5C0+8f" on F_e.
  std::string label() const;

  DivisorClass operator-() const;
  friend DivisorClass operator+(const DivisorClass& x, const DivisorClass& y);
  friend DivisorClass operator-(const DivisorClass& x, const DivisorClass& y);
  friend DivisorClass operator*(const Integer& k, const DivisorClass& x);

  friend bool operator==(const DivisorClass&, const DivisorClass&) = default;

 private:
  DivisorClass(SurfaceBase base, Integer alpha, Integer beta)
      : base_(std::move(base)), alpha_(std::move(alpha)), beta_(std::move(beta)) {}

  SurfaceBase base_;
  Integer alpha_;
  Integer beta_;
};

/// K_Y: -3 on P^2, -2C0 - (e+2)f on F_e.
DivisorClass canonical_class(const SurfaceBase& base);

/// The minimal section C0 and the fibre f of F_e.
DivisorClass minimal_section(const SurfaceBase& base);
DivisorClass fibre(const SurfaceBase& base);

/// Intersection number. Throws DomainError("base mismatch") when the classes
/// live on different surfaces.
Integer intersect(const DivisorClass& d1, const DivisorClass& d2);

bool is_nef(const DivisorClass& d);
bool is_base_point_free(const DivisorClass& d);
bool is_very_ample(const DivisorClass& d);

/// Whether the complete linear system |D| contains a smooth member.
///
/// On F_e, when D is not base point free but D - C0 is nef, the system is
/// C0 plus the base point free system |D - C0|; a general member is smooth
/// exactly when the moving part misses C0, i.e. (D - C0).C0 = 0. When D - C0
/// is not nef either, 2C0 is fixed and every member is non-reduced.
bool has_smooth_member(const DivisorClass& d);

}  // namespace dcover
