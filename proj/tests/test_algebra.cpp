#include <gtest/gtest.h>

#include "bq/algebra.hpp"
#include "bq/builders.hpp"

using namespace bq;

namespace {

/// k[x]/(x^2 - a) on the basis 1, x.
StructureAlgebra quadratic(const Rational& a) {
  return StructureAlgebra({"1", "x"}, {1, 0}, {{1, 0}, {0, 1}, {0, 1}, {a, 0}});
}

/// Quaternion algebra (a, b) on 1, i, j, ij.
StructureAlgebra quaternion(const Rational& a, const Rational& b) {
  const std::size_t n = 4;
  std::vector<Vec> t(n * n, zero_vec(n));
  auto set = [&](std::size_t x, std::size_t y, std::size_t z, const Rational& c) { t[x * n + y][z] = c; };
  for (std::size_t k = 0; k < n; ++k) set(0, k, k, 1), set(k, 0, k, 1);
  set(1, 1, 0, a), set(2, 2, 0, b), set(3, 3, 0, -a * b);
  set(1, 2, 3, 1), set(2, 1, 3, -1);
  set(1, 3, 2, a), set(3, 1, 2, -a);
  set(2, 3, 1, -b), set(3, 2, 1, b);
  return StructureAlgebra({"1", "i", "j", "ij"}, unit_vec(n, 0), t);
}

}  // namespace

TEST(Algebra, GroupAlgebraOfZ2) {
  const StructureAlgebra a = kz2_hopf()->alg();
  EXPECT_TRUE(check_algebra_axioms(a).ok());
  EXPECT_EQ(center(a).size(), 2u);
  EXPECT_FALSE(is_central_simple(a));
}

TEST(Algebra, QuaternionAlgebrasAreCentralSimple) {
  for (const auto& [a, b] : std::vector<std::pair<int, int>>{{1, 1}, {-1, -1}, {2, 3}, {-3, 5}}) {
    const StructureAlgebra q = quaternion(a, b);
    ASSERT_TRUE(check_algebra_axioms(q).ok()) << a << "," << b;
    EXPECT_TRUE(is_central_simple(q));
    EXPECT_EQ(center(q).size(), 1u);
  }
}

TEST(Algebra, EndomorphismAlgebraMatchesMatrixProduct) {
  const std::size_t n = 3;
  const StructureAlgebra e = endomorphism_algebra(n);
  EXPECT_TRUE(check_algebra_axioms(e).ok());
  EXPECT_TRUE(is_central_simple(e));
  const Matrix x{{1, 2, 0}, {0, -1, 3}, {Rational(1, 2), 0, 1}};
  const Matrix y{{0, 1, 1}, {2, 0, -1}, {1, 1, 1}};
  EXPECT_EQ(e.mul(matrix_to_vec(x), matrix_to_vec(y)), matrix_to_vec(x * y));
  EXPECT_EQ(vec_to_matrix(matrix_to_vec(x), n), x);
}

TEST(Algebra, OppositeIsInvolutiveAndReversesProducts) {
  const StructureAlgebra q = quaternion(2, 3);
  const StructureAlgebra op = opposite_algebra(q);
  EXPECT_TRUE(check_algebra_axioms(op).ok());
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      EXPECT_EQ(op.product(i, j), q.product(j, i));
      EXPECT_EQ(opposite_algebra(op).product(i, j), q.product(i, j));
    }
}

TEST(Algebra, TensorProductOfCentralSimpleIsCentralSimple) {
  const StructureAlgebra t = tensor_algebra(quaternion(-1, -1), endomorphism_algebra(2));
  EXPECT_TRUE(check_algebra_axioms(t).ok());
  EXPECT_TRUE(is_central_simple(t));
}

TEST(Algebra, CorruptedProductReportsAssociativityTriples) {
  // 1, x, y with x^2 = y, xy = 1, yx = 1 but y^2 = y: (x x) y = y^2 = y, x (x y) = x.
  const StructureAlgebra bad({"1", "x", "y"}, {1, 0, 0},
                             {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {0, 1, 0}, {0, 0, 1}, {1, 0, 0}, {0, 0, 1}, {1, 0, 0}, {0, 0, 1}});
  const AlgebraAxiomReport r = check_algebra_axioms(bad);
  EXPECT_FALSE(r.ok());
  ASSERT_FALSE(r.associativity.empty());
  EXPECT_NE(std::find(r.associativity.begin(), r.associativity.end(), std::array<std::size_t, 3>{1, 1, 2}),
            r.associativity.end());
  EXPECT_FALSE(to_axiom_report(r).passed("associativity"));
}

TEST(Algebra, WrongUnitIsReported) {
  const StructureAlgebra bad({"1", "x"}, {0, 1}, {{1, 0}, {0, 1}, {0, 1}, {1, 0}});
  const AlgebraAxiomReport r = check_algebra_axioms(bad);
  EXPECT_FALSE(r.left_unit.empty());
  EXPECT_FALSE(r.right_unit.empty());
}

TEST(Algebra, SuperCenterOfCliffordAlgebra) {
  // k[x]/(x^2 - a) with x odd is graded central simple; with x even the
  // graded and ordinary centers agree.
  const StructureAlgebra c = quadratic(3);
  EXPECT_EQ(super_center(c, Grading{{0, 1}}).size(), 1u);
  EXPECT_EQ(super_center(c, Grading::trivial(2)).size(), 2u);
  EXPECT_EQ(center(c).size(), 2u);
}

TEST(Algebra, SuperCenterRejectsIncompatibleGrading) {
  // x odd forces x^2 = 1 + x to mix parities.
  const StructureAlgebra a({"1", "x"}, {1, 0}, {{1, 0}, {0, 1}, {0, 1}, {1, 1}});
  EXPECT_THROW(super_center(a, Grading{{0, 1}}), grading_error);
  EXPECT_EQ((Grading{{0, 1}}.parity_of({1, 1})), -1);
}

TEST(Algebra, ConstructorRejectsBadShapes) {
  EXPECT_THROW(StructureAlgebra({"1"}, {1, 0}, {{1}}), dimension_error);
  EXPECT_THROW(StructureAlgebra({"1", "x"}, {1, 0}, {{1, 0}}), dimension_error);
  EXPECT_THROW(endomorphism_algebra(0), dimension_error);
}
