#include <gtest/gtest.h>

#include "bq/builders.hpp"
#include "bq/sweedler.hpp"

using namespace bq;

TEST(Sweedler, MembershipOfDescriptors) {
  const CMembership m = c_membership({1, 2, 6});
  EXPECT_TRUE(m.in_i.contains(3));
  EXPECT_FALSE(m.in_i.contains(2));
  EXPECT_TRUE(m.in_iota.contains(Rational(1, 3)));
  const CMembership bw = c_membership({1, 0, 0});
  EXPECT_EQ(bw.in_i.kind, Membership::Kind::all);
  EXPECT_EQ(bw.in_iota.kind, Membership::Kind::all);
  EXPECT_EQ(c_membership({1, 0, 2}).in_i.kind, Membership::Kind::none);
  EXPECT_THROW(c_membership({1, 2, 1}), std::invalid_argument);
}

TEST(Sweedler, CEquivalenceDetectsScaling) {
  const HopfPtr H = h4_hopf();
  const CFamilyDescriptor d{2, 1, 3};
  const auto alpha = find_c_isomorphism(build_C(H, d), build_C(H, {8, 2, 6}));
  ASSERT_TRUE(alpha.has_value());
  EXPECT_EQ(*alpha * *alpha, Rational(1, 4));
  EXPECT_TRUE(check_yd_isomorphism(build_C(H, d), build_C(H, {8, 2, 6}), c_isomorphism(*alpha)).ok());
  EXPECT_FALSE(find_c_isomorphism(build_C(H, d), build_C(H, {2, 1, 4})).has_value());
}

TEST(Sweedler, CanonicalDescriptorIsEquivalentAndStable) {
  const HopfPtr H = h4_hopf();
  const std::vector<CFamilyDescriptor> ds{{8, 2, 6}, {Rational(-3, 4), 0, Rational(1, 2)}, {12, 0, 0}, {0, 0, 0}, {Rational(1, 9), 3, 0}};
  for (const auto& d : ds) {
    const CFamilyDescriptor c = canonical_descriptor(d);
    EXPECT_EQ(canonical_descriptor(c), c) << d.str();
    EXPECT_TRUE(c_equivalent(d, c).has_value()) << d.str();
    EXPECT_TRUE(find_c_isomorphism(build_C(H, d), build_C(H, c)).has_value()) << d.str();
    for (const Rational& l : {Rational(2), Rational(-1, 3)})
      EXPECT_EQ(canonical_descriptor({l * l * d.a, l * d.t, l * d.s}), c) << d.str() << " " << l;
  }
}

TEST(Sweedler, AutomorphismConjugationIsStructural) {
  const HopfPtr H = h4_hopf();
  for (const Rational& alpha : {Rational(1), Rational(-1), Rational(2), Rational(-1, 3)}) {
    const CFamilyDescriptor d{1, 2, 3};
    const YDAlgebra tw = aut_twist(build_C(H, d), alpha);
    EXPECT_TRUE(check_yd_algebra(tw).ok());
    EXPECT_TRUE(find_c_isomorphism(tw, build_C(H, aut_conjugate(d, alpha))).has_value()) << alpha;
  }
}

TEST(Sweedler, TransportsAreConfirmedAndInvertible) {
  const HopfPtr H = h4_hopf();
  for (const Rational& a : {Rational(1), Rational(-2), Rational(3, 2)}) {
    const CFamilyDescriptor p{a, 0, 1};
    for (const Rational& s : {Rational(0), Rational(5), Rational(-1, 2)}) {
      const TransportResult r = psi_transport(H, p, s);
      EXPECT_TRUE(r.ok()) << p.str() << " " << s;
      EXPECT_EQ(psi_inverse(r.image, s), p);
    }
    const CFamilyDescriptor f{a, 1, 3};
    const TransportResult r = phi_transport(H, f);
    EXPECT_TRUE(r.ok()) << f.str();
    EXPECT_EQ(phi_inverse(r.image), f);
  }
}

TEST(Sweedler, BM0InvariantAgreesWithWitness) {
  const HopfPtr H = h4_hopf();
  for (const auto& d : std::vector<CFamilyDescriptor>{{1, 0, 0}, {-1, 2, 0}, {Rational(-1, 3), 2, 0}, {5, -3, 0}}) {
    const BM0Invariant inv = classify_bm0(H, d);
    EXPECT_TRUE(inv.agree()) << d.str();
    EXPECT_EQ(inv.beta, d.t * d.t / (4 * d.a));
  }
  EXPECT_THROW(classify_bm0(H, {1, 1, 1}), std::invalid_argument);
}

TEST(Sweedler, LazyCocycleFamily) {
  const HopfPtr H = h4_hopf();
  for (const Rational& t : {Rational(0), Rational(1), Rational(-3, 2)})
    EXPECT_TRUE(check_lazy_cocycle(*H, build_sigma(t).table).ok()) << t;
}

TEST(Sweedler, IntersectionWitnessesLieInBothImages) {
  const IntersectionReport r = intersection_report(2, Rational(1, 2));
  ASSERT_TRUE(r.i_iota_witness.has_value());
  const CMembership m = c_membership(*r.i_iota_witness);
  EXPECT_TRUE(m.in_i.contains(2));
  EXPECT_TRUE(m.in_iota.contains(Rational(1, 2)));
  EXPECT_FALSE(intersection_report(2, 3).i_iota_nontrivial);
}
