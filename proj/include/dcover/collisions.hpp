#pragma once

// Coincidences between invariants of the double covers and of canonically
// embedded surfaces S on the scroll S(1,1,1), whose (p_g, c1^2) = (x', y)
// lie on
//
//     y = 6 (m-3)/(m-2) x' - (m-3)(m+3),      m >= 4.
//
// Only the line is available here; the remaining constraints on S are
// represented by a pluggable FeasibilityPredicate.

#include "dcover/geography.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace dcover {

class MPLine {
 public:
  /// Throws DomainError for m < 4.
  explicit MPLine(const Integer& m);

  const Integer& m() const noexcept { return m_; }
  Rational slope() const { return Rational(6 * (m_ - 3), m_ - 2); }
  Integer intercept() const { return -(m_ - 3) * (m_ + 3); }

  /// Exact membership: (m-2) y = 6(m-3) x' - (m-2)(m-3)(m+3).
  bool contains(const Integer& x_prime, const Integer& y) const;

 private:
  Integer m_;
};

/// Constraint on the S side. The default accepts everything and marks the
/// result unverified.
class FeasibilityPredicate {
 public:
  using Fn = std::function<bool(const Integer& m, const Integer& x_prime, const Integer& y)>;

  /// Accept-all; candidates stay flagged as S-side unverified.
  FeasibilityPredicate();
  FeasibilityPredicate(std::string name, Fn fn);

  /// Builds a predicate from a JSON document:
  ///   { "name": "...",
  ///     "allow": [[x', y], ...],        // optional whitelist
  ///     "deny":  [[x', y], ...],        // optional blacklist
  ///     "x_prime_min": .., "x_prime_max": .., "y_min": .., "y_max": .. }
  /// Throws DomainError on malformed input.
  static FeasibilityPredicate from_json_text(const std::string& text);

  bool operator()(const Integer& m, const Integer& x_prime, const Integer& y) const {
    return fn_(m, x_prime, y);
  }
  bool is_default() const noexcept { return default_; }
  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
  Fn fn_;
  bool default_;
};

struct XiCandidate {
  Integer x_prime;  // p_g(X)
  Integer y;        // c1^2(X)
  std::vector<Polarization> provenance;
  bool s_side_verified;
};

struct XiSearch {
  Integer m;
  Integer bound;
  std::vector<XiCandidate> candidates;  // sorted by (x', y)
  std::vector<std::string> warnings;
};

/// Pairs (p_g, c1^2) with p_g <= search_bound of covers passing the audit
/// that lie on MPLine(m) and are accepted by `feas`.
XiSearch xi_candidates(const Integer& m, const Integer& search_bound,
                       const FeasibilityPredicate& feas = {});

/// Degrees d >= 1 whose P^2 cover lands on MPLine(m), by exact solution of
///   (5-m) d^2 - 9(m-3) d + (m-3)((m-2)(m+3) - 6) = 0.
std::vector<Integer> p2_solutions(const Integer& m);

struct ExampleCheck {
  std::string id;
  std::string description;
  std::string expected;
  std::string actual;
  bool passed;
};

struct ExamplesReport {
  std::vector<ExampleCheck> checks;
  bool all_passed;
};

/// The two moduli examples: F_1 with 5C0+8f gives (39, 0, 110); P^2 octics
/// and F_0 with 4C0+8f both give (45, 0, 128) with moduli dimensions 267
/// and 266; both pairs lie on MPLine(4).
ExamplesReport verify_moduli_examples();

}  // namespace dcover
