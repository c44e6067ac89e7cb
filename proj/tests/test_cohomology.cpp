#include "dcover/cohomology.hpp"
#include "dcover/errors.hpp"
#include "dcover/surface.hpp"

#include <gtest/gtest.h>

#include <thread>
#include <vector>

using namespace dcover;

namespace {

DivisorClass fe(int e, int alpha, int beta) { return DivisorClass::hirzebruch(e, alpha, beta); }

CohomologyTable table(long h0, long h1, long h2) {
  return {Integer(h0), Integer(h1), Integer(h2), Integer(h0 - h1 + h2)};
}

// Every class of the property grid: |alpha|, |beta| <= 12 with e <= 8, and
// |d| <= 15 on the plane.
std::vector<DivisorClass> grid() {
  std::vector<DivisorClass> out;
  for (int d = -15; d <= 15; ++d) out.push_back(DivisorClass::plane(d));
  for (int e = 0; e <= 8; ++e)
    for (int a = -12; a <= 12; ++a)
      for (int b = -12; b <= 12; ++b) out.push_back(fe(e, a, b));
  return out;
}

}  // namespace

TEST(Cohomology, Examples) {
  EXPECT_EQ(cohomology(fe(1, 5, 8)).h0, 39);
  for (int e = 0; e <= 6; ++e) EXPECT_EQ(cohomology(fe(e, 0, 0)), table(1, 0, 0));
  EXPECT_EQ(cohomology(DivisorClass::plane(0)), table(1, 0, 0));
  EXPECT_EQ(cohomology(fe(3, 2, 1)), table(2, 5, 0));
  EXPECT_EQ(cohomology(fe(3, 2, 1)).chi, -3);
  EXPECT_EQ(cohomology(DivisorClass::plane(8)).h0, 45);
  EXPECT_EQ(h0_lattice_oracle(DivisorClass::plane(8)), 45);
  EXPECT_EQ(cohomology(fe(0, 4, 8)).h0, 45);
  EXPECT_EQ(cohomology(fe(0, 0, -1)), table(0, 0, 0));
  EXPECT_EQ(serre_dual(fe(2, 3, 1)), fe(2, -5, -5));
  EXPECT_EQ(cohomology(DivisorClass::plane(-3)), table(0, 0, 1));
  EXPECT_EQ(cohomology(fe(1, -1, 0)), table(0, 0, 0));
}

TEST(Cohomology, PushforwardTwists) {
  const std::vector<Integer> expected{Integer(1), Integer(-2), Integer(-5)};
  EXPECT_EQ(pushforward_twists(fe(3, 2, 1)), expected);
  EXPECT_TRUE(pushforward_twists(fe(3, -1, 4)).empty());
}

TEST(CohomologyProperties, SerreDualityReversesTheTable) {
  for (const DivisorClass& d : grid()) {
    const CohomologyTable t = cohomology(d);
    const CohomologyTable u = cohomology(serre_dual(d));
    ASSERT_EQ(t.h0, u.h2) << d.label();
    ASSERT_EQ(t.h1, u.h1) << d.label();
    ASSERT_EQ(t.h2, u.h0) << d.label();
  }
}

TEST(CohomologyProperties, EulerCharacteristicIsRiemannRoch) {
  for (const DivisorClass& d : grid()) {
    const CohomologyTable t = cohomology(d);
    ASSERT_EQ(t.chi, t.h0 - t.h1 + t.h2) << d.label();
    ASSERT_EQ(t.chi, riemann_roch_chi(d)) << d.label();
    // 1 + D.(D-K)/2 written out independently of the library
    const Integer two_chi = 2 + intersect(d, d - canonical_class(d.base()));
    ASSERT_EQ(2 * t.chi, two_chi) << d.label();
  }
}

TEST(CohomologyProperties, LatticeOracleMatchesH0) {
  for (const DivisorClass& d : grid()) {
    ASSERT_EQ(cohomology(d).h0, h0_lattice_oracle(d)) << d.label();
    const CohomologyTable t = cohomology(d);
    ASSERT_GE(t.h0, 0);
    ASSERT_GE(t.h1, 0);
    ASSERT_GE(t.h2, 0);
  }
}

TEST(CohomologyProperties, VeryAmpleClassesHaveNoHigherCohomology) {
  for (const DivisorClass& d : grid()) {
    if (!is_very_ample(d)) continue;
    const CohomologyTable t = cohomology(d);
    ASSERT_EQ(t.h1, 0) << d.label();
    ASSERT_EQ(t.h2, 0) << d.label();
    ASSERT_GE(t.h0, 3) << d.label();
  }
}

TEST(CohomologyProperties, NefClassesHaveNoH1OrH2) {
  for (const DivisorClass& d : grid()) {
    if (!is_nef(d)) continue;
    const CohomologyTable t = cohomology(d);
    ASSERT_EQ(t.h1, 0) << d.label();
    ASSERT_EQ(t.h2, 0) << d.label();
  }
}

TEST(Cohomology, HugeCoefficients) {
  // h0(O(d)) on P2 is (d+1)(d+2)/2
  const Integer d("1000000000000000000000");
  EXPECT_EQ(cohomology(DivisorClass::plane(d)).h0, (d + 1) * (d + 2) / 2);
  EXPECT_EQ(cohomology(DivisorClass::plane(-d)).h2, (d - 2) * (d - 1) / 2);
}

TEST(Cohomology, CacheIsThreadSafe) {
  clear_cohomology_cache();
  const std::vector<DivisorClass> classes = grid();
  std::vector<CohomologyTable> reference;
  reference.reserve(classes.size());
  for (const DivisorClass& d : classes) reference.push_back(cohomology(d));
  clear_cohomology_cache();

  std::vector<std::thread> workers;
  std::vector<int> mismatches(8, 0);
  for (int w = 0; w < 8; ++w)
    workers.emplace_back([&, w] {
      for (std::size_t i = w; i < classes.size(); i += 3)
        if (!(cohomology(classes[i]) == reference[i])) ++mismatches[w];
    });
  for (auto& t : workers) t.join();
  for (int w = 0; w < 8; ++w) EXPECT_EQ(mismatches[w], 0) << "worker " << w;
  EXPECT_GT(cohomology_cache_size(), 0u);
}
