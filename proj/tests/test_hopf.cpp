#include <gtest/gtest.h>

#include "bq/builders.hpp"
#include "bq/hopf.hpp"
#include "bq/sweedler.hpp"

using namespace bq;

TEST(Hopf, BuildersSatisfyAxioms) {
  for (const HopfPtr& h : {kz2_hopf(), h4_hopf(), e2_hopf(), h4_dual(), dh4().D}) {
    const AxiomReport r = check_hopf_axioms(*h);
    EXPECT_TRUE(r.ok()) << h->name() << "\n" << r.summary();
  }
}

TEST(Hopf, DimensionsAndGrouplikes) {
  EXPECT_EQ(kz2_hopf()->dim(), 2u);
  EXPECT_EQ(h4_hopf()->dim(), 4u);
  EXPECT_EQ(e2_hopf()->dim(), 8u);
  EXPECT_EQ(dh4().D->dim(), 16u);
  const HopfPtr H = h4_hopf();
  const Vec g = H->basis(1);
  EXPECT_EQ(H->mul(g, g), H->unit());
  EXPECT_EQ(H->delta(g), kron(g, g));
  EXPECT_EQ(H->eps(g), Rational(1));
}

TEST(Hopf, SweedlerAntipodeHasOrderFour) {
  const HopfPtr H = h4_hopf();
  const Matrix& S = H->antipode();
  EXPECT_NE(S * S, Matrix::identity(4));
  EXPECT_EQ(S * S * S * S, Matrix::identity(4));
}

TEST(Hopf, CorruptedAntipodeFails) {
  const HopfPtr H = h4_hopf();
  Matrix S = H->antipode();
  S(3, 2) = -S(3, 2);
  const Matrix S_inv = inverse(S);
  std::vector<Vec> cop;
  for (std::size_t i = 0; i < 4; ++i) cop.push_back(H->coproduct(i));
  const HopfAlgebra bad("bad", H->alg(), cop, H->counit(), S, S_inv, H->grouplike());
  const AxiomReport r = check_hopf_axioms(bad);
  EXPECT_FALSE(r.passed("antipode"));
  EXPECT_TRUE(r.passed("coassociativity"));
}

TEST(Hopf, FamilyOfTriangularStructures) {
  const HopfPtr H = h4_hopf();
  for (const Rational& t : {Rational(0), Rational(1), Rational(-2, 3), Rational(5)}) {
    const QTReport r = check_quasitriangular(build_R(H, t));
    EXPECT_TRUE(r.axioms.ok()) << t << "\n" << r.axioms.summary();
    EXPECT_TRUE(r.triangular);
    const QTReport c = check_coquasitriangular(build_r(H, t));
    EXPECT_TRUE(c.axioms.ok()) << t << "\n" << c.axioms.summary();
    EXPECT_TRUE(c.triangular);
  }
}

TEST(Hopf, TrivialRIsNotQuasitriangular) {
  const HopfPtr H = h4_hopf();
  const QTReport r = check_quasitriangular(QTStructure(H, kron(H->unit(), H->unit())));
  EXPECT_FALSE(r.axioms.ok());
}

TEST(Hopf, DoubleCarriesCanonicalR) {
  const DrinfeldDouble dd = dh4();
  const QTReport r = check_quasitriangular(dd.R);
  EXPECT_TRUE(r.axioms.ok()) << r.axioms.summary();
  EXPECT_FALSE(r.triangular);
}

TEST(Hopf, SelfDualityOfSweedler) {
  const HopfMorphism f = phi_morphism(h4_hopf(), h4_dual());
  EXPECT_TRUE(check_hopf_morphism(f).ok());
  EXPECT_TRUE(is_isomorphism(f));
}

TEST(Hopf, DoubleDualIsIdentityInCoordinates) {
  const HopfPtr H = h4_hopf();
  const HopfPtr Hdd = dual_hopf(*h4_dual(), "H4dd");
  const HopfMorphism f = double_dual_map(H, Hdd);
  EXPECT_TRUE(check_hopf_morphism(f).ok());
}
