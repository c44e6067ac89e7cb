#include "dcover/errors.hpp"
#include "dcover/polarization.hpp"
#include "dcover/surface.hpp"

#include <gtest/gtest.h>

using namespace dcover;

namespace {

DivisorClass fe(int e, int alpha, int beta) { return DivisorClass::hirzebruch(e, alpha, beta); }

// Multiplicity of C0 in the base locus of |alpha C0 + beta f| read off the
// toric monomials: the summand O(beta - k e) of the pushforward consists of
// sections vanishing to order alpha - k along C0.
int c0_base_multiplicity(int e, int alpha, int beta) {
  int best = -1;
  for (int k = 0; k <= alpha; ++k)
    if (beta - k * e >= 0) best = k;
  return best < 0 ? -1 : alpha - best;  // -1: empty system
}

// Smooth member oracle: no fixed part (Bertini), or a reduced fixed C0 whose
// residual sections restricted to C0 have degree 0.
bool smooth_member_oracle(int e, int alpha, int beta) {
  if (alpha < 0) return false;
  const int mult = c0_base_multiplicity(e, alpha, beta);
  if (mult < 0) return false;
  if (mult == 0) return true;
  if (mult >= 2) return false;
  return beta - (alpha - 1) * e == 0;
}

}  // namespace

TEST(SurfaceBase, HirzebruchNeedsNonNegativeTwist) {
  EXPECT_THROW(SurfaceBase::hirzebruch(-1), DomainError);
  EXPECT_EQ(SurfaceBase::hirzebruch(1).name(), "F1");
  EXPECT_EQ(SurfaceBase::projective_plane().name(), "P2");
}

TEST(CanonicalClass, KnownValues) {
  EXPECT_EQ(canonical_class(SurfaceBase::projective_plane()), DivisorClass::plane(-3));
  EXPECT_EQ(canonical_class(SurfaceBase::hirzebruch(0)), fe(0, -2, -2));
  EXPECT_EQ(canonical_class(SurfaceBase::hirzebruch(3)), fe(3, -2, -5));
}

TEST(CanonicalClass, AdjunctionOnRationalCurves) {
  // C0 and f are smooth rational curves: (K + D).D = 2g - 2 = -2
  for (int e = 0; e <= 8; ++e) {
    const SurfaceBase base = SurfaceBase::hirzebruch(e);
    const DivisorClass k = canonical_class(base);
    for (const DivisorClass& d : {minimal_section(base), fibre(base)})
      EXPECT_EQ(intersect(k + d, d), -2) << "e=" << e << " D=" << d.label();
  }
  // a line in P2
  EXPECT_EQ(intersect(DivisorClass::plane(-3 + 1), DivisorClass::plane(1)), -2);
}

TEST(Intersect, Examples) {
  // (2a+3)C0 + (2b+2e+4)f meets C0 trivially for a = 1, b = 7, e = 6
  EXPECT_EQ(intersect(fe(6, 5, 30), fe(6, 1, 0)), 0);
  for (int e = 0; e <= 5; ++e) EXPECT_EQ(intersect(fe(e, 0, 1), fe(e, 0, 1)), 0);
  EXPECT_EQ(intersect(fe(2, 3, 7), fe(2, 1, 4)), 13);
  EXPECT_EQ(intersect(fe(4, 1, 0), fe(4, 1, 0)), -4);
  EXPECT_EQ(intersect(DivisorClass::plane(3), DivisorClass::plane(5)), 15);
}

TEST(Intersect, BaseMismatchIsAnError) {
  try {
    intersect(fe(1, 1, 1), fe(2, 1, 1));
    FAIL() << "expected DomainError";
  } catch (const DomainError& err) {
    EXPECT_STREQ(err.what(), "base mismatch");
  }
  EXPECT_THROW(intersect(DivisorClass::plane(1), fe(0, 1, 1)), DomainError);
  EXPECT_THROW(fe(1, 1, 1) + fe(0, 1, 1), DomainError);
}

TEST(Intersect, SymmetricAndBilinearOnGrid) {
  for (int e = 0; e <= 8; ++e) {
    for (int a1 = -10; a1 <= 10; a1 += 3)
      for (int b1 = -10; b1 <= 10; b1 += 4)
        for (int a2 = -10; a2 <= 10; a2 += 5)
          for (int b2 = -10; b2 <= 10; b2 += 3) {
            const DivisorClass x = fe(e, a1, b1);
            const DivisorClass y = fe(e, a2, b2);
            const DivisorClass z = fe(e, b1 - a2, a1 + 1);
            ASSERT_EQ(intersect(x, y), intersect(y, x));
            ASSERT_EQ(intersect(x + z, y), intersect(x, y) + intersect(z, y));
            ASSERT_EQ(intersect(Integer(3) * x, y), 3 * intersect(x, y));
          }
  }
  for (int d1 = -10; d1 <= 10; ++d1)
    for (int d2 = -10; d2 <= 10; ++d2)
      ASSERT_EQ(intersect(DivisorClass::plane(d1), DivisorClass::plane(d2)), d1 * d2);
}

TEST(Positivity, Examples) {
  EXPECT_TRUE(is_very_ample(fe(1, 5, 8)));
  EXPECT_FALSE(is_very_ample(DivisorClass::plane(0)));
  EXPECT_FALSE(is_very_ample(fe(6, 1, 6)));
  EXPECT_TRUE(is_very_ample(DivisorClass::plane(1)));

  // branch class of H = C0 + 7f on F6 is 6C0 + 30f: 30 - 36 < 0
  const Polarization p = Polarization::hirzebruch(6, 1, 7);
  EXPECT_EQ(p.branch(), fe(6, 6, 30));
  EXPECT_FALSE(is_base_point_free(p.branch()));
  EXPECT_TRUE(has_smooth_member(p.branch()));

  // H = C0 + 8f: branch 6C0 + 32f, C0 fixed and the residual meets it twice
  const Polarization q = Polarization::hirzebruch(6, 1, 8);
  EXPECT_EQ(q.branch(), fe(6, 6, 32));
  EXPECT_FALSE(is_base_point_free(q.branch()));
  EXPECT_FALSE(has_smooth_member(q.branch()));

  for (int e = 0; e <= 4; ++e) EXPECT_TRUE(is_base_point_free(DivisorClass::trivial(SurfaceBase::hirzebruch(e))));
  EXPECT_TRUE(is_base_point_free(DivisorClass::plane(0)));
}

TEST(Positivity, ImplicationChainOnGrid) {
  for (int e = 0; e <= 8; ++e)
    for (int a = -10; a <= 10; ++a)
      for (int b = -10; b <= 10; ++b) {
        const DivisorClass d = fe(e, a, b);
        if (is_very_ample(d)) ASSERT_TRUE(is_base_point_free(d)) << d.label();
        if (is_base_point_free(d)) ASSERT_TRUE(is_nef(d)) << d.label();
        if (is_base_point_free(d)) ASSERT_TRUE(has_smooth_member(d)) << d.label();
      }
  for (int d = -15; d <= 15; ++d) {
    const DivisorClass c = DivisorClass::plane(d);
    if (is_very_ample(c)) ASSERT_TRUE(is_base_point_free(c));
    if (is_base_point_free(c)) ASSERT_TRUE(is_nef(c));
  }
}

TEST(Positivity, SmoothMemberMatchesMonomialOracle) {
  for (int e = 0; e <= 12; ++e)
    for (int a = -3; a <= 14; ++a)
      for (int b = -20; b <= 90; ++b)
        ASSERT_EQ(has_smooth_member(fe(e, a, b)), smooth_member_oracle(e, a, b))
            << "e=" << e << " " << fe(e, a, b).label();
}

TEST(Positivity, BranchExceptionMatchesClosedForm) {
  // Among very ample H, "smooth branch member but not base point free"
  // happens exactly for e even, e >= 6, b - ae = e/2 - 2.
  for (int e = 0; e <= 14; ++e)
    for (int a = 1; a <= 7; ++a)
      for (int b = a * e + 1; b <= 6 * e + 12 + a * e; ++b) {
        const Polarization p = Polarization::hirzebruch(e, a, b);
        const bool exception = has_smooth_member(p.branch()) && !is_base_point_free(p.branch());
        const bool closed = e % 2 == 0 && e >= 6 && 2 * (b - a * e) == e - 4;
        ASSERT_EQ(exception, closed) << p.label();
      }
}

TEST(Polarization, DerivedClasses) {
  const Polarization p2 = Polarization::plane(8);
  EXPECT_EQ(p2.branch(), DivisorClass::plane(22));
  EXPECT_EQ(p2.trace_zero(), DivisorClass::plane(-11));
  EXPECT_EQ(p2.ambient_dimension(), 44);

  const Polarization f1 = Polarization::hirzebruch(1, 5, 8);
  EXPECT_EQ(branch_class(f1), fe(1, 14, 22));
  EXPECT_EQ(f1.ambient_dimension(), 38);

  const Polarization f0 = Polarization::hirzebruch(0, 1, 1);
  EXPECT_EQ(trace_zero_class(f0), fe(0, -3, -3));
  EXPECT_EQ(f0.ambient_dimension(), 3);
}

TEST(Polarization, RejectsNonVeryAmple) {
  EXPECT_THROW(Polarization::plane(0), DomainError);
  EXPECT_THROW(Polarization::hirzebruch(6, 1, 6), DomainError);
  EXPECT_THROW(Polarization::hirzebruch(0, 0, 3), DomainError);
  EXPECT_THROW(Polarization::hirzebruch(-1, 1, 3), DomainError);
}

TEST(Polarization, SmallPlaneDegreesCarryACaveat) {
  EXPECT_EQ(Polarization::plane(1).caveats().size(), 1u);
  EXPECT_EQ(Polarization::plane(2).caveats().size(), 1u);
  EXPECT_TRUE(Polarization::plane(3).caveats().empty());
  EXPECT_TRUE(Polarization::hirzebruch(0, 1, 1).caveats().empty());
}

TEST(DivisorClass, ArbitraryPrecisionCoefficients) {
  const Integer huge("123456789012345678901234567890");
  const DivisorClass d = DivisorClass::hirzebruch(2, huge, huge);
  EXPECT_EQ(intersect(d, fibre(d.base())), huge);
  EXPECT_EQ(d.label(), huge.str() + "C0+" + huge.str() + "f");
}
