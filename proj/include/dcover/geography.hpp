#pragma once

// Geography of the covers: points (x, y) = (chi(X), c1^2(X)), the lines l_a
// they lie on, and Noether's and Castelnuovo's lines.
//
// For H = aC0 + bf on F_e,  x - a - 2 = (a+1)(b - ae/2)  and
// y = 2a(2b - ae), so every such point satisfies (a+1) y = 4a (x - a - 2):
// the line l_a through (a+2, 0) with slope 4a/(a+1). The same holds on P^2
// with a = d.

#include "dcover/polarization.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace dcover {

struct GeographyPoint {
  Integer x;  // chi(X)
  Integer y;  // c1^2(X)
  /// Polarizations realizing the point, ordered by polarization_less.
  std::vector<Polarization> provenance;
};

class GeographyLine {
 public:
  enum class Kind { L, Noether, Castelnuovo };

  /// l_a: y = 4a/(a+1) (x - a - 2). Throws DomainError for a < 1.
  static GeographyLine l(const Integer& a);
  /// y - 2x + 6 = 0.
  static GeographyLine noether();
  /// y = 3x - 10.
  static GeographyLine castelnuovo();

  Kind kind() const noexcept { return kind_; }
  /// Index a of l_a; 0 otherwise.
  const Integer& index() const noexcept { return a_; }
  const Rational& slope() const noexcept { return slope_; }
  const Rational& intercept() const noexcept { return intercept_; }
  /// "l1", "l2", ..., "noether", "castelnuovo".
  std::string id() const;

  Rational at(const Rational& x) const { return slope_ * x + intercept_; }
  bool contains(const Rational& x, const Rational& y) const { return at(x) == y; }
  /// Same slope and intercept.
  bool coincides_with(const GeographyLine& other) const {
    return slope_ == other.slope_ && intercept_ == other.intercept_;
  }

 private:
  GeographyLine(Kind kind, Integer a, Rational slope, Rational intercept)
      : kind_(kind), a_(std::move(a)), slope_(std::move(slope)), intercept_(std::move(intercept)) {}

  Kind kind_;
  Integer a_;
  Rational slope_;
  Rational intercept_;
};

/// (chi, c1^2) of the cover of `p`, with `p` as its only provenance entry.
GeographyPoint point_of(const Polarization& p);

/// The meeting point of l_a and l_a': x = aa' + a + a' + 2.
/// Throws DomainError("identical lines") when a == a'.
std::pair<Integer, Rational> line_intersection(const Integer& a, const Integer& a_prime);

struct EnumerationOptions {
  bool include_f1 = true;
  /// Also add the P^2 cover with d = a. Off by default: the d = 1 cover sits
  /// at (4, 2), before the start of the l_1 semiline.
  bool include_p2 = false;
  /// Largest e scanned; a warning is emitted if the scan had to stop here.
  Integer e_cap = 64;
};

struct Enumeration {
  std::vector<GeographyPoint> points;  // sorted by (x, y)
  /// Largest e that contributed or was examined.
  Integer e_scanned = 0;
  std::vector<std::string> warnings;
};

/// Calls `visit` for every polarization passing the hypothesis audit whose
/// cover has chi <= x_max. `a_only` restricts F_e to first coefficient a and
/// P^2 to d = a. Scan order is deterministic: P^2 by d, then F_e by (a, e, b).
void scan_theorem_polarizations(const Integer& x_max, const std::optional<Integer>& a_only,
                                const EnumerationOptions& options,
                                const std::function<void(const Polarization&)>& visit,
                                Enumeration* diagnostics = nullptr);

/// Merges points with equal (x, y) and sorts everything canonically.
std::vector<GeographyPoint> merge_points(std::vector<GeographyPoint> points);

/// All geography points with x <= x_max of covers of F_e embedded by
/// |aC0 + bf| with fixed a (plus P^2 with d = a if requested).
Enumeration enumerate_points(const Integer& a, const Integer& x_max,
                             const EnumerationOptions& options = {});

/// Integer points of l_a with 2a + 3 <= x <= x_max.
std::vector<std::pair<Integer, Integer>> semiline_lattice_points(const Integer& a,
                                                                 const Integer& x_max);

/// Integer points of the l_a semiline up to x_max that the enumeration did
/// not realize.
std::vector<std::pair<Integer, Integer>> semiline_gaps(const Integer& a, const Integer& x_max,
                                                       const Enumeration& enumeration);

}  // namespace dcover
