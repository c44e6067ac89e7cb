#include "dcover/audit.hpp"
#include "dcover/cohomology.hpp"
#include "dcover/cover_invariants.hpp"
#include "dcover/errors.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <vector>

using namespace dcover;

namespace {

// Valid polarizations with e <= 8, a <= 6, b <= 6e + 12 and d <= 12.
std::vector<Polarization> grid() {
  std::vector<Polarization> out;
  for (int d = 1; d <= 12; ++d) out.push_back(Polarization::plane(d));
  for (int e = 0; e <= 8; ++e)
    for (int a = 1; a <= 6; ++a)
      for (int b = a * e + 1; b <= 6 * e + 12; ++b) out.push_back(Polarization::hirzebruch(e, a, b));
  return out;
}

}  // namespace

TEST(Invariants, Examples) {
  const CoverInvariants p2 = invariants(Polarization::plane(8));
  EXPECT_EQ(p2.p_g, 45);
  EXPECT_EQ(p2.q, 0);
  EXPECT_EQ(p2.c1_sq, 128);
  EXPECT_EQ(moduli_dimension(Polarization::plane(8)), 267);

  const CoverInvariants f0 = invariants(Polarization::hirzebruch(0, 4, 8));
  EXPECT_EQ(f0.p_g, 45);
  EXPECT_EQ(f0.c1_sq, 128);
  EXPECT_EQ(moduli_dimension(Polarization::hirzebruch(0, 4, 8)), 266);

  const Polarization f1 = Polarization::hirzebruch(1, 5, 8);
  const CoverInvariants inv = invariants(f1);
  EXPECT_EQ(inv.p_g, 39);
  EXPECT_EQ(inv.q, 0);
  EXPECT_EQ(inv.c1_sq, 110);
  EXPECT_EQ(inv.chi, 40);
  EXPECT_EQ(inv.c2, 12 * 40 - 110);
  // 15 * 16 - 7; also h0 of the branch class 14C0 + 22f, less one, less 6
  EXPECT_EQ(moduli_dimension(f1), 233);
  EXPECT_EQ(h0_lattice_oracle(DivisorClass::hirzebruch(1, 14, 22)) - 1 - 6, 233);

  for (int a = 1; a <= 6; ++a) {
    const CoverInvariants s = invariants(Polarization::hirzebruch(0, a, 1));
    EXPECT_EQ(s.chi, 2 * a + 3);
    EXPECT_EQ(s.c1_sq, 4 * a);
  }
}

TEST(Invariants, NormalSheafExamples) {
  // branch class of C0 + f on F0 is 6C0 + 6f: 7 * 7 sections
  EXPECT_EQ(normal_sheaf_h0(Polarization::hirzebruch(0, 1, 1)), 48);
  EXPECT_EQ(h0_lattice_oracle(DivisorClass::hirzebruch(0, 6, 6)) - 1, 48);
  // O(22) on P2
  EXPECT_EQ(normal_sheaf_h0(Polarization::plane(8)), 275);
  EXPECT_EQ(tangent_chi_constant(SurfaceBase::projective_plane()), 8);
  EXPECT_EQ(tangent_chi_constant(SurfaceBase::hirzebruch(3)), 6);
}

TEST(InvariantProperties, ClosedFormsAgreeWithEngine) {
  for (const Polarization& p : grid()) {
    const CoverInvariants inv = invariants(p);
    const DivisorClass& h = p.hyperplane();
    ASSERT_EQ(inv.p_g, cohomology(h).h0) << p.label();
    ASSERT_EQ(inv.p_g, h0_lattice_oracle(h)) << p.label();
    ASSERT_EQ(inv.c1_sq, 2 * intersect(h, h)) << p.label();
    ASSERT_EQ(inv.chi, inv.p_g + 1) << p.label();
    ASSERT_EQ(inv.c1_sq + inv.c2, 12 * inv.chi) << p.label();
    // q splits into the invariant and anti-invariant parts
    ASSERT_EQ(inv.q, cohomology(DivisorClass::trivial(p.base())).h1 + cohomology(p.trace_zero()).h1);
    ASSERT_EQ(cohomology(p.trace_zero()).h1, cohomology(h).h1);
    ASSERT_EQ(inv.q, 0);
    ASSERT_EQ(cohomology(p.trace_zero()).h0, 0) << p.label();

    const Integer normal = cohomology(p.branch()).h0 - 1;
    ASSERT_EQ(normal_sheaf_h0(p), normal) << p.label();
    // the closed forms are chi(B) - 1; they give h0 exactly when h1(B) = 0
    const CohomologyTable branch = cohomology(p.branch());
    ASSERT_EQ(normal_sheaf_h0_formula(p), branch.chi - 1) << p.label();
    Integer closed;
    if (p.base().is_plane()) {
      const Integer d = h.degree();
      closed = 2 * d * d + 15 * d + 27;
    } else {
      const Integer a = h.alpha(), b = h.beta(), e = p.base().e();
      closed = (2 * a + 5) * (2 * b - a * e + 5) - 1;
    }
    ASSERT_EQ(closed, branch.chi - 1) << p.label();
    ASSERT_EQ(closed == normal, branch.h1 == 0) << p.label();
    ASSERT_EQ(branch.h1 == 0, audit(p).verdict) << p.label();
    if (audit(p).verdict) {
      ASSERT_EQ(moduli_dimension(p), normal - tangent_chi_constant(p.base())) << p.label();
    }
  }
}

TEST(InvariantProperties, ChernRatioBelowOneHalf) {
  for (const Polarization& p : grid()) {
    const CoverInvariants inv = invariants(p);
    ASSERT_LT(inv.chern_ratio, Rational(1, 2)) << p.label();
    ASSERT_EQ(inv.chern_ratio, Rational(inv.c1_sq, inv.c2)) << p.label();
  }
  const CoverInvariants big = invariants(Polarization::hirzebruch(0, 1000, 1000));
  EXPECT_GT(big.chern_ratio, Rational(49, 100));
  EXPECT_LT(big.chern_ratio, Rational(1, 2));
}

TEST(Invariants, ModuliDimensionRefusedWhenAuditFails) {
  try {
    moduli_dimension(Polarization::hirzebruch(6, 1, 7));
    FAIL() << "expected AuditRefusal";
  } catch (const AuditRefusal& err) {
    const auto& failing = err.failing_conditions();
    EXPECT_NE(std::find(failing.begin(), failing.end(), "C7"), failing.end());
  }
  // invariants are defined regardless
  EXPECT_NO_THROW(invariants(Polarization::hirzebruch(6, 1, 7)));
}

TEST(Invariants, HugePolarization) {
  const Integer a("100000000000"), b("300000000000");
  const Polarization p = Polarization::hirzebruch(2, a, b);
  EXPECT_EQ(invariants(p).c1_sq, 2 * a * (2 * b - 2 * a));
  EXPECT_EQ(normal_sheaf_h0(p), normal_sheaf_h0_formula(p));
}
