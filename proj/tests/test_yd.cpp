#include <gtest/gtest.h>

#include "bq/builders.hpp"
#include "bq/sweedler.hpp"
#include "bq/yd.hpp"

using namespace bq;

namespace {

const std::vector<CFamilyDescriptor>& corpus() {
  static const std::vector<CFamilyDescriptor> c{
      {1, 0, 0}, {2, 1, 3}, {-1, 2, 0}, {0, 1, 1}, {1, 2, 1}, {Rational(-1, 3), 0, 2}, {3, -1, 6}, {0, 0, 0}};
  return c;
}

}  // namespace

TEST(YD, CFamilyIsYDForAllParameters) {
  const HopfPtr H = h4_hopf();
  for (const auto& d : corpus()) {
    const AxiomReport r = check_yd_algebra(build_C(H, d));
    EXPECT_TRUE(r.ok()) << d.str() << "\n" << r.summary();
  }
}

TEST(YD, AzumayaExactlyWhenTwoANotST) {
  const HopfPtr H = h4_hopf();
  for (const auto& d : corpus()) EXPECT_EQ(is_h_azumaya(build_C(H, d)), d.azumaya()) << d.str();
}

TEST(YD, DescriptorRoundTrip) {
  const HopfPtr H = h4_hopf();
  for (const auto& d : corpus()) EXPECT_EQ(read_descriptor(build_C(H, d)), d) << d.str();
}

TEST(YD, BraidedOppositeOfCFamily) {
  const HopfPtr H = h4_hopf();
  for (const auto& d : corpus()) {
    const YDAlgebra op = h_opposite(build_C(H, d));
    EXPECT_TRUE(check_yd_algebra(op).ok()) << d.str();
    EXPECT_EQ(read_descriptor(op), c_opposite(d)) << d.str();
  }
}

TEST(YD, SharpProductIsYDAndMatchesPresentation) {
  const HopfPtr H = h4_hopf();
  for (const auto& x : corpus())
    for (const auto& y : corpus()) {
      const YDAlgebra P = sharp_product(build_C(H, x), build_C(H, y));
      ASSERT_TRUE(check_yd_algebra(P).ok()) << x.str() << y.str();
      EXPECT_EQ(read_quaternion(P), c_product(x, y));
      if (x.azumaya() && y.azumaya()) {
        EXPECT_TRUE(is_h_azumaya(P)) << x.str() << y.str();
      }
    }
}

TEST(YD, EndomorphismAlgebrasOfModulesAreAzumaya) {
  const HopfPtr H = h4_hopf();
  for (const auto& d : corpus()) {
    const YDAlgebra C = build_C(H, d);
    for (EndVariant v : {EndVariant::plain, EndVariant::op}) {
      const YDAlgebra E = end_yd(C, v);
      EXPECT_TRUE(check_yd_algebra(E).ok()) << d.str();
      EXPECT_TRUE(is_h_azumaya(E)) << d.str();
    }
  }
}

TEST(YD, FAndGAreYDIsomorphismsForAzumaya) {
  const HopfPtr H = h4_hopf();
  for (const auto& d : corpus()) {
    if (!d.azumaya()) continue;
    const YDAlgebra C = build_C(H, d);
    const FGMaps fg = fg_maps(C);
    const YDAlgebra endC = end_yd(C, EndVariant::plain), endCop = end_yd(C, EndVariant::op);
    const YDAlgebra CCbar = sharp_product(C, h_opposite(C)), CbarC = sharp_product(h_opposite(C), C);
    EXPECT_TRUE(check_yd_isomorphism(CCbar, endC, fg_in_end_basis(fg.F, C.dim)).ok()) << d.str();
    EXPECT_TRUE(check_yd_isomorphism(CbarC, endCop, fg_in_end_basis(fg.G, C.dim)).ok()) << d.str();
  }
}

TEST(YD, TrivialStructureOnMatrixAlgebra) {
  const HopfPtr H = h4_hopf();
  const YDAlgebra T = trivial_yd(H, endomorphism_algebra(2));
  EXPECT_TRUE(check_yd_algebra(T).ok());
  EXPECT_TRUE(is_h_azumaya(T));
}

TEST(YD, BrokenCoactionIsRejected) {
  const HopfPtr H = h4_hopf();
  YDAlgebra C = build_C(H, {1, 2, 3});
  C.coaction(1 * 4 + h4::h, 1) += 1;
  EXPECT_FALSE(check_yd_algebra(C).ok());
}

TEST(YD, DoubleRoundTrip) {
  const HopfPtr H = h4_hopf();
  const DrinfeldDouble dd = dh4();
  for (const auto& d : corpus()) {
    const YDAlgebra C = build_C(H, d);
    const YDAlgebra D = yd_to_double(C, dd);
    const YDAlgebra back = double_to_yd(D, H, dd);
    EXPECT_EQ(back.action, C.action) << d.str();
    EXPECT_EQ(back.coaction, C.coaction) << d.str();
  }
}

TEST(YD, InducedStructuresFromTriangularFamilies) {
  const HopfPtr H = h4_hopf();
  for (const Rational& l : {Rational(1), Rational(-2), Rational(1, 3)}) {
    const CFamilyDescriptor d{2, 3, 3 * l};
    const YDAlgebra C = build_C(H, d);
    EXPECT_EQ(induced_coaction(module_part(C), build_R(H, l)).coaction, C.coaction);
    const CFamilyDescriptor e{2, 3 * l, 3};
    const YDAlgebra D = build_C(H, e);
    EXPECT_EQ(induced_action(comodule_part(D), build_r(H, l)).action, D.action);
  }
}
