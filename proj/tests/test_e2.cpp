#include <gtest/gtest.h>

#include "bq/builders.hpp"
#include "bq/e2_bridge.hpp"

using namespace bq;

TEST(E2Bridge, RNIsQuasitriangular) {
  const QTReport r = check_quasitriangular(build_RN(e2_hopf()));
  EXPECT_TRUE(r.axioms.ok()) << r.axioms.summary();
}

TEST(E2Bridge, TIsHopfMorphismAndPushesR) {
  const DrinfeldDouble dd = dh4();
  const HopfPtr E2 = e2_hopf();
  const HopfMorphism T = build_T(dd, E2);
  EXPECT_TRUE(check_hopf_morphism(T).ok());
  EXPECT_EQ(push_qt(T, dd.R), build_RN(E2).R);
}

TEST(E2Bridge, DoubleRelationsHold) {
  for (bool b : dh4_relations_hold(dh4())) EXPECT_TRUE(b);
}

TEST(E2Bridge, ThetaIsHopfMorphism) {
  for (const auto& [l, m] : std::vector<std::pair<int, int>>{{0, 0}, {1, 2}, {-3, 1}})
    EXPECT_TRUE(check_hopf_morphism(build_theta(e2_hopf(), h4_hopf(), l, m)).ok());
}

TEST(E2Bridge, KernelWitnessSteps) {
  const KernelWitness kw = kernel_witness(dh4(), e2_hopf());
  EXPECT_TRUE(kw.steps.ok()) << kw.steps.summary();
}

TEST(E2Bridge, InnerEquivalenceOnPulledBackFamily) {
  const HopfPtr E2 = e2_hopf(), H4 = h4_hopf();
  for (const auto& [a, l, m] : std::vector<std::tuple<int, int, int>>{{1, 3, 2}, {1, 1, 2}, {2, 0, 0}, {-1, 1, 1}}) {
    const YDAlgebra A = build_CE(E2, H4, a, l, m);
    ASSERT_TRUE(check_yd_algebra(A).ok());
    const InnerEquivalenceReport r = inner_equivalence_check(A);
    EXPECT_TRUE(r.equivalent) << a << " " << l << " " << m;
    EXPECT_TRUE(r.addendum) << a << " " << l << " " << m;
  }
}

TEST(E2Bridge, ClosureFailsForProducts) {
  const NotSubgroupReport r = not_subgroup_demo(e2_hopf(), h4_hopf(), 3, 0);
  EXPECT_TRUE(r.closure_fails());
  EXPECT_THROW(not_subgroup_demo(e2_hopf(), h4_hopf(), 1, 0), std::invalid_argument);
}

TEST(E2Bridge, RestrictionToH4RoundTrip) {
  const DrinfeldDouble dd = dh4();
  const HopfPtr E2 = e2_hopf(), H4 = h4_hopf();
  const YDAlgebra A = build_CE(E2, H4, 2, 1, 3);
  const YDAlgebra R = restrict_to_h4(A, dd, E2, H4);
  EXPECT_TRUE(check_yd_algebra(R).ok()) << check_yd_algebra(R).summary();
}
