#pragma once

// Hypothesis audit for canonical double covers X -> Y -> P^N.
//
// The deformation-theoretic hypotheses of the main theorem reduce, for P^2
// and F_e, to a finite list of line bundle cohomology vanishings plus a
// positivity condition on the branch class. The audit evaluates each of
// them and records exactly which class was computed.
//
//   C1  h^1(O_Y) = 0                       (Y regular; m - 1 = 1 for surfaces)
//   C2  h^1(H) = 0
//   C3  h^0(K - H) = 0
//   C4  h^1(-2K + 2H) = 0
//   C5  unobstructedness of Y in P^N: h^1(H) = 0, h^2(O_Y) = 0, and on F_e
//       h^2(2C0 + ef) = h^2(2f) = 0
//   C6  no canonical ropes: on F_e h^1((a-2)C0 + (b-e)f) = h^1(aC0 + (b-2)f) = 0
//   C7  -2K + 2H has a smooth member and is base point free

#include "dcover/cohomology.hpp"
#include "dcover/polarization.hpp"

#include <optional>
#include <string>
#include <vector>

namespace dcover {

enum class CohomologyGroup { H0, H1, H2 };

const char* group_name(CohomologyGroup g);

/// One computed number: h^i of a named class, and whether it took the
/// value the condition requires.
struct CohomologyCheck {
  std::string role;  // e.g. "H", "K-H", "2C0+ef"
  DivisorClass divisor;
  CohomologyGroup group;
  CohomologyTable table;
  Integer required;
  bool passed;
};

/// A positivity predicate evaluated on a class.
struct PredicateCheck {
  std::string name;  // "has_smooth_member", "is_base_point_free", ...
  DivisorClass divisor;
  bool value;
};

struct AuditCondition {
  std::string id;  // "C1" .. "C7"
  std::string description;
  std::vector<CohomologyCheck> cohomology;
  std::vector<PredicateCheck> predicates;
  /// Facts that are recorded rather than computed.
  std::vector<std::string> notes;
  bool passed = true;
};

struct AuditReport {
  Polarization polarization;
  std::vector<AuditCondition> conditions;
  bool verdict = true;
  std::vector<std::string> notes;

  std::vector<std::string> failing_conditions() const;
  const AuditCondition& condition(const std::string& id) const;
};

AuditReport audit(const Polarization& p);

/// Polarizations (a, b) on F_e with 1 <= a <= a_max whose branch class has a
/// smooth member but is not base point free. Only b with b - ae < e - 2 can
/// fail base point freeness, so the scan covers that window.
std::vector<std::pair<Integer, Integer>> bpf_exception_locus(const Integer& e,
                                                             const Integer& a_max);

/// Closed-form description of the same locus: e even, e >= 6, b - ae = e/2 - 2.
bool in_bpf_exception_closed_form(const Integer& e, const Integer& a, const Integer& b);

/// Second route for C4 that never touches the cohomology engine: on F_e the
/// branch class is base point free iff every twist of its pushforward to P^1
/// is non-negative, and since beta - alpha*e is even for a branch class, that
/// is also exactly when h^1 vanishes. On P^2 intermediate cohomology vanishes.
bool branch_h1_vanishes_by_positivity(const Polarization& p);

}  // namespace dcover
