#include <random>

#include <gtest/gtest.h>

#include "bq/matrix.hpp"
#include "bq/rational.hpp"

using namespace bq;

namespace {

Matrix random_matrix(std::mt19937_64& rng, std::size_t n, std::size_t m) {
  Matrix a(n, m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      const int num = static_cast<int>(rng() % 7) - 3;
      const int den = static_cast<int>(rng() % 3) + 1;
      a(i, j) = Rational(num, den);
      a(i, j).canonicalize();
    }
  return a;
}

}  // namespace

TEST(Rational, ParsesIntegersAndFractions) {
  EXPECT_EQ(parse_rational("-1/3"), Rational(-1, 3));
  EXPECT_EQ(parse_rational("+4/6"), Rational(2, 3));
  EXPECT_EQ(parse_rational("7"), Rational(7));
}

TEST(Rational, RejectsMalformedText) {
  for (const char* bad : {"", "x", "1/", "/2", "1/0", "1/-2", "1.5", "--1"}) EXPECT_THROW(parse_rational(bad), parse_error) << bad;
}

TEST(Rational, SquareTests) {
  EXPECT_EQ(rational_sqrt(Rational(9, 4)), Rational(3, 2));
  EXPECT_FALSE(rational_sqrt(Rational(2)).has_value());
  EXPECT_FALSE(rational_sqrt(Rational(-4)).has_value());
  EXPECT_EQ(squarefree_class(Rational(12)), Integer(3));
  EXPECT_EQ(squarefree_class(Rational(-1, 8)), Integer(-2));
}

TEST(Matrix, DeterminantKnownValues) {
  EXPECT_EQ(det(Matrix{{1, 2}, {3, 4}}), Rational(-2));
  EXPECT_EQ(det(Matrix{{0, 1}, {1, 0}}), Rational(-1));
  EXPECT_EQ(det(Matrix{{1, 2}, {2, 4}}), Rational(0));
  EXPECT_EQ(det(Matrix::identity(5)), Rational(1));
}

TEST(Matrix, DeterminantIsMultiplicative) {
  std::mt19937_64 rng(11);
  for (int k = 0; k < 30; ++k) {
    const std::size_t n = 1 + k % 5;
    const Matrix a = random_matrix(rng, n, n), b = random_matrix(rng, n, n);
    EXPECT_EQ(det(a * b), det(a) * det(b));
    EXPECT_EQ(det(a.transpose()), det(a));
  }
}

TEST(Matrix, InverseIsTwoSided) {
  std::mt19937_64 rng(12);
  for (int k = 0; k < 30; ++k) {
    const Matrix a = random_matrix(rng, 4, 4);
    const auto inv = try_inverse(a);
    ASSERT_EQ(inv.has_value(), sgn(det(a)) != 0);
    if (inv) {
      EXPECT_EQ(a * *inv, Matrix::identity(4));
      EXPECT_EQ(*inv * a, Matrix::identity(4));
    }
  }
  EXPECT_THROW(inverse(Matrix{{1, 1}, {1, 1}}), std::domain_error);
}

TEST(Matrix, RankNullityAndKernel) {
  std::mt19937_64 rng(13);
  for (int k = 0; k < 30; ++k) {
    const Matrix a = random_matrix(rng, 3, 5) * random_matrix(rng, 5, 6);
    const auto ker = kernel(a);
    EXPECT_EQ(rank(a) + ker.size(), 6u);
    for (const auto& v : ker) EXPECT_TRUE(is_zero(a * v));
  }
}

TEST(Matrix, SolveFindsSolutionsAndDetectsInconsistency) {
  std::mt19937_64 rng(14);
  for (int k = 0; k < 30; ++k) {
    const Matrix a = random_matrix(rng, 4, 3);
    const Vec x = random_matrix(rng, 3, 1).col(0);
    const Vec b = a * x;
    const LinearSolution s = solve_linear(a, b);
    ASSERT_TRUE(s.consistent());
    EXPECT_EQ(a * *s.particular, b);
  }
  EXPECT_FALSE(solve_linear(Matrix{{1, 0}, {1, 0}}, Vec{Rational(1), Rational(2)}).consistent());
}

TEST(Matrix, KroneckerMixedProduct) {
  std::mt19937_64 rng(15);
  const Matrix a = random_matrix(rng, 2, 2), b = random_matrix(rng, 3, 3), c = random_matrix(rng, 2, 2),
               d = random_matrix(rng, 3, 3);
  EXPECT_EQ(kron(a, b) * kron(c, d), kron(a * c, b * d));
}

TEST(Matrix, ShapeMismatchThrows) {
  EXPECT_THROW(Matrix(2, 3) * Matrix(2, 3), dimension_error);
  EXPECT_THROW(det(Matrix(2, 3)), dimension_error);
}
