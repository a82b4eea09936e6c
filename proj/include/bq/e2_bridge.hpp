#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bq/builders.hpp"
#include "bq/sweedler.hpp"
#include "bq/yd.hpp"

namespace bq {

// E(2) basis indices, c^a x_S at a + 2 * mask(S).
namespace e2 {
inline constexpr std::size_t one = 0, c = 1, x1 = 2, cx1 = 3, x2 = 4, cx2 = 5, x1x2 = 6, cx1x2 = 7;
}

/// 1/2 (1(x)1 + 1(x)c + c(x)1 - c(x)c + x1(x)cx2 + x1(x)x2 + cx1(x)cx2 - cx1(x)x2).
inline QTStructure build_RN(const HopfPtr& E2) {
  using namespace e2;
  Vec R = zero_vec(64);
  const Rational half(1, 2);
  auto set = [&](std::size_t p, std::size_t q, int sign) { R[p * 8 + q] = sign * half; };
  set(one, one, 1);
  set(one, c, 1);
  set(c, one, 1);
  set(c, c, -1);
  set(x1, cx2, 1);
  set(x1, x2, 1);
  set(cx1, cx2, 1);
  set(cx1, x2, -1);
  return QTStructure(E2, std::move(R));
}

/// phi(l) >< 1 as an element of D(H4).
inline Vec dh4_phi(const DrinfeldDouble& dd, std::size_t l) { return dd.dual_part(phi_matrix().col(l)); }
/// eps >< l as an element of D(H4).
inline Vec dh4_base(const DrinfeldDouble& dd, std::size_t l) { return dd.base_part(unit_vec(dd.base_dim, l)); }

/// Builds the D(H4) action matrices from the images of phi(1), phi(g),
/// phi(h), phi(gh) and of 1, g, h, gh, using f_i >< e_j = (f_i >< 1)(eps >< e_j).
template <class T, class Mul>
std::vector<T> extend_over_dh4(const std::array<T, 4>& phi_images, const std::array<T, 4>& base_images, Mul mul) {
  const Matrix phi_inv = inverse(phi_matrix());
  std::vector<T> out;
  for (std::size_t i = 0; i < 4; ++i) {
    T fi = Rational(0) * phi_images[0];
    for (std::size_t q = 0; q < 4; ++q)
      if (sgn(phi_inv(q, i)) != 0) fi = fi + phi_inv(q, i) * phi_images[q];
    for (std::size_t j = 0; j < 4; ++j) out.push_back(mul(fi, base_images[j]));
  }
  return out;
}

/// T: D(H4) -> E(2) with phi(g) -> c, g -> c, h -> x1, phi(h) -> c x2.
inline HopfMorphism build_T(const DrinfeldDouble& dd, const HopfPtr& E2) {
  using namespace e2;
  auto b = [&](std::size_t i) { return E2->basis(i); };
  const std::array<Vec, 4> phis{b(one), b(c), b(cx2), b(x2)};
  const std::array<Vec, 4> base{b(one), b(c), b(x1), b(cx1)};
  const auto cols = extend_over_dh4(phis, base, [&](const Vec& x, const Vec& y) { return E2->mul(x, y); });
  return HopfMorphism{dd.D, E2, Matrix::from_columns(8, cols)};
}

/// theta: E(2) -> H4 with c -> g, x1 -> lambda h, x2 -> mu h.
inline HopfMorphism build_theta(const HopfPtr& E2, const HopfPtr& H4, const Rational& lambda, const Rational& mu) {
  Matrix m(4, 8);
  for (std::size_t a = 0; a < 2; ++a) {
    m(a, a) = 1;
    m(h4::h + a, e2::x1 + a) = lambda;
    m(h4::h + a, e2::x2 + a) = mu;
  }
  return HopfMorphism{E2, H4, std::move(m)};
}

/// E(2)-module from the matrices of c, x1, x2; e_k acts as C^a X1^s1 X2^s2.
inline YDModule e2_module(const HopfPtr& E2, const Matrix& C, const Matrix& X1, const Matrix& X2) {
  const std::size_t d = C.rows();
  std::vector<Matrix> action;
  for (std::size_t k = 0; k < 8; ++k) {
    Matrix m = Matrix::identity(d);
    if (k & 1u) m = m * C;
    if ((k >> 1) & 1u) m = m * X1;
    if ((k >> 2) & 1u) m = m * X2;
    action.push_back(m);
  }
  return YDModule{E2, d, std::move(action), Matrix(0, 0)};
}

/// The E(2)-algebra generated by x, x^2 = a, c.x = -x, x1.x = lambda, x2.x = mu,
/// pulled back from C(a; 1, lambda mu) along theta, with coaction from R_N.
inline YDAlgebra build_CE(const HopfPtr& E2, const HopfPtr& H4, const Rational& a, const Rational& lambda,
                          const Rational& mu) {
  const YDAlgebra pulled = restrict_along(build_theta(E2, H4, lambda, mu), build_C(H4, {a, 1, lambda * mu}));
  return induced_coaction(pulled, build_RN(E2));
}

/// Pulls an E(2)-algebra back to D(H4) along T and reads the H4 YD data.
inline YDAlgebra restrict_to_h4(const YDAlgebra& A, const DrinfeldDouble& dd, const HopfPtr& E2, const HopfPtr& H4) {
  return double_to_yd(restrict_along(build_T(dd, E2), A), H4, dd);
}

/// The action grading and the coaction grading agree.
inline bool bq_grad_member(const YDAlgebra& A) { return gradings(A).equal; }

/// Left and right sides of the ten defining relations of D(H4) in the
/// generators phi(h), phi(g), g, h, evaluated with `mul` on images.
template <class T, class Mul>
std::vector<std::pair<T, T>> dh4_relations(const T& Ph, const T& Pg, const T& G, const T& Hh, const T& one, Mul mul) {
  const T zero = Rational(0) * one;
  return {
      {mul(Ph, Ph), zero},
      {mul(Pg, Pg), one},
      {mul(Ph, Pg) + mul(Pg, Ph), zero},
      {mul(Hh, Hh), zero},
      {mul(Hh, G) + mul(G, Hh), zero},
      {mul(G, G), one},
      {mul(Ph, G) + mul(G, Ph), zero},
      {mul(Pg, Hh) + mul(Hh, Pg), zero},
      {mul(G, Pg), mul(Pg, G)},
      {mul(Ph, Hh) - mul(Hh, Ph), Pg - G},
  };
}

/// Which of the ten relations hold inside D(H4) itself.
inline std::vector<bool> dh4_relations_hold(const DrinfeldDouble& dd) {
  const HopfAlgebra& D = *dd.D;
  const auto rel = dh4_relations(dh4_phi(dd, h4::h), dh4_phi(dd, h4::g), dh4_base(dd, h4::g), dh4_base(dd, h4::h),
                                 D.unit(), [&](const Vec& x, const Vec& y) { return D.mul(x, y); });
  std::vector<bool> out;
  for (const auto& [l, r] : rel) out.push_back(l == r);
  return out;
}

struct KernelWitness {
  Matrix u, w, U, W;
  YDModule P;        // over D(H4)
  YDAlgebra EndP_D;  // End(P) as a D(H4)-module algebra
  YDAlgebra EndP;    // End(P) over E(2) with coaction from R_N
  AxiomReport steps;
  std::optional<E2InnerAnalysis> inner;
};

namespace detail {

/// Action of x in H on M (x) N through the coproduct.
inline Matrix tensor_action(const HopfAlgebra& H, const YDModule& M, const YDModule& N, const Vec& x) {
  const Vec d = H.delta(x);
  const std::size_t n = H.dim();
  Matrix out(M.dim * N.dim, M.dim * N.dim);
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q)
      if (sgn(d[p * n + q]) != 0) out = out + d[p * n + q] * kron(M.action[p], N.action[q]);
  return out;
}

inline Matrix mat_mul(const Matrix& a, const Matrix& b) { return a * b; }

}  // namespace detail

/// P = k^2 with g, h, phi(g), phi(h) acting as u, w, U, W, and the checks
/// that End(P) gives a nontrivial class over E(2):
/// (i) P is a D(H4)-module, (ii) g and phi(g) differ on P, (iii) End(P) is an
/// E(2)-module algebra, (iv) it is Azumaya for R_N, (v) the action is not
/// strongly inner on either sign branch, (vi) g and phi(g) agree on P (x) P.
inline KernelWitness kernel_witness(const DrinfeldDouble& dd, const HopfPtr& E2) {
  const Matrix I = Matrix::identity(2);
  const Matrix u{{1, 0}, {0, -1}};
  const Matrix w{{0, 0}, {-2, 0}};
  const Matrix U = Rational(-1) * u;
  const Matrix W{{0, 1}, {0, 0}};
  const HopfAlgebra& D = *dd.D;

  AxiomReport steps;
  const auto rel = dh4_relations(W, U, u, w, I, detail::mat_mul);
  std::string bad;
  for (std::size_t k = 0; k < rel.size() && bad.empty(); ++k)
    if (rel[k].first != rel[k].second) bad = "relation " + std::to_string(k + 1) + " fails on P";
  const auto action = extend_over_dh4<Matrix>({I, U, W, U * W}, {I, u, w, u * w}, detail::mat_mul);
  YDModule P{dd.D, 2, action, Matrix(0, 0)};
  if (bad.empty() && !check_yd_module(P).ok()) bad = check_yd_module(P).summary();
  steps.add("i.dh4_module", bad.empty(), bad);

  steps.add("ii.not_e2_module", P.action_of(dh4_phi(dd, h4::g)) != P.action_of(dh4_base(dd, h4::g)),
            "g and phi(g) act equally on P");

  YDAlgebra EndD = end_module_algebra(P);
  // E(2) acts through c -> g, x1 -> h, x2 -> phi(gh).
  const YDModule onEnd{dd.D, 4, EndD.action, Matrix(0, 0)};
  const YDModule viaE2 = e2_module(E2, onEnd.action_of(dh4_base(dd, h4::g)), onEnd.action_of(dh4_base(dd, h4::h)),
                                   onEnd.action_of(dh4_phi(dd, h4::gh)));
  YDAlgebra EndE(E2, EndD.alg, viaE2.action, Matrix(0, 0));
  bad.clear();
  const auto mod = check_yd_algebra(EndE);
  if (!mod.ok()) bad = mod.summary();
  else if (restrict_along(build_T(dd, E2), EndE).action != EndD.action)
    bad = "restriction along T differs from the D(H4)-action on End(P)";
  else if (onEnd.action_of(dh4_phi(dd, h4::g)) != onEnd.action_of(dh4_base(dd, h4::g)))
    bad = "g and phi(g) act differently on End(P)";
  steps.add("iii.e2_module_algebra", bad.empty(), bad);

  YDAlgebra EndP = induced_coaction(EndE, build_RN(E2));
  bad.clear();
  const auto yd = check_yd_algebra(EndP);
  if (!yd.ok()) bad = yd.summary();
  else if (!is_h_azumaya(EndP)) bad = "F or G is singular";
  steps.add("iv.azumaya", bad.empty(), bad);

  auto inner = strongly_inner_e2(EndP);
  bad.clear();
  if (!inner) bad = "no conjugating involution for c";
  else if (inner->branches.size() != 2) bad = "expected two sign branches";
  else if (inner->strongly_inner()) bad = "a strongly inner implementation exists";
  steps.add("v.not_strongly_inner", bad.empty(), bad);

  steps.add("vi.order_two",
            detail::tensor_action(D, P, P, dh4_phi(dd, h4::g)) == detail::tensor_action(D, P, P, dh4_base(dd, h4::g)),
            "g and phi(g) differ on P (x) P");

  return KernelWitness{u, w, U, W, std::move(P), std::move(EndD), std::move(EndP), std::move(steps), std::move(inner)};
}

/// Grading from the c-action.
inline Grading c_grading(const YDAlgebra& A) { return Grading{parity_from_involution(A.action.at(e2::c), "c-grading")}; }

struct GradedFG {
  Matrix F0, G0;
};

/// F0(a#b)(d) = (-1)^{|d||b|} a d b and G0(a#b)(d) = (-1)^{|a||d|} a d b on
/// basis elements, in the layout of fg_maps.
inline GradedFG graded_fg_maps(const StructureAlgebra& A, const Grading& g) {
  const std::size_t d = A.dim();
  Matrix F0(d * d, d * d), G0(d * d, d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t c = 0; c < d; ++c) {
        const Vec adb = A.mul(A.product(i, c), A.basis(j));
        const int sf = (g.parity[c] * g.parity[j]) % 2 ? -1 : 1;
        const int sg = (g.parity[i] * g.parity[c]) % 2 ? -1 : 1;
        for (std::size_t q = 0; q < d; ++q) {
          F0(c * d + q, i * d + j) = sf * adb[q];
          G0(c * d + q, i * d + j) = sg * adb[q];
        }
      }
  return {std::move(F0), std::move(G0)};
}

inline bool is_graded_central_simple(const YDAlgebra& A) {
  const auto fg = graded_fg_maps(A.alg, c_grading(A));
  return sgn(det(fg.F0)) != 0 && sgn(det(fg.G0)) != 0;
}

/// Applies a map in fg_maps layout to a # b and evaluates at d.
inline Vec apply_fg(const Matrix& M, const Vec& a, const Vec& b, const Vec& d) {
  const std::size_t n = d.size();
  const Vec f = M * kron(a, b);
  Vec out = zero_vec(n);
  for (std::size_t c = 0; c < n; ++c)
    if (sgn(d[c]) != 0)
      for (std::size_t q = 0; q < n; ++q) out[q] += d[c] * f[c * n + q];
  return out;
}

struct DecompositionCheck {
  bool braiding = false;
  bool F = false;
  bool G = false;
  bool ok() const { return braiding && F && G; }
};

/// Compares the R_N braiding and F, G with their graded parts plus the x1, x2
/// correction terms, on homogeneous a, b, d with parities pa, pb, pd.
inline DecompositionCheck check_decompositions(const YDAlgebra& A, const QTStructure& RN, const Vec& a, int pa,
                                               const Vec& b, int pb, const Vec& d, int pd) {
  using namespace e2;
  const Grading g = c_grading(A);
  if (g.parity_of(a) != pa || g.parity_of(b) != pb || g.parity_of(d) != pd)
    throw grading_error("check_decompositions: element is not homogeneous of the stated parity");
  auto sign = [](int e) { return e % 2 == 0 ? Rational(1) : Rational(-1); };
  auto psi0 = [&](const Vec& v, int pv, const Vec& w, int pw) { return sign(pv * pw) * kron(w, v); };
  DecompositionCheck out;

  const Matrix psi = braiding_psi(A, A, RN);
  const Vec lhs = psi * kron(a, b);
  const Vec rhs = psi0(a, pa, b, pb) + sign(pb + 1) * psi0(A.act(x1, a), pa + 1, A.act(x2, b), pb + 1);
  out.braiding = lhs == rhs;

  const FGMaps fg = fg_maps(A);
  const GradedFG fg0 = graded_fg_maps(A.alg, g);
  // F0(a # x1.b)(x2.d) and G0(x2.a # b)(x1.d), with the shifted parities.
  const Vec x1b = A.act(x1, b), x2d = A.act(x2, d), x2a = A.act(x2, a), x1d = A.act(x1, d);
  const Vec f_corr = sign((pb + 1) * (pd + 1)) * A.mul(A.mul(a, x2d), x1b);
  const Vec g_corr = sign((pa + 1) * (pd + 1)) * A.mul(A.mul(x2a, x1d), b);
  out.F = apply_fg(fg.F, a, b, d) == apply_fg(fg0.F0, a, b, d) + sign(pd + 1) * f_corr;
  out.G = apply_fg(fg.G, a, b, d) == apply_fg(fg0.G0, a, b, d) + sign(pa + 1) * g_corr;
  return out;
}

/// An invertible u with u a = (c.a) u, searched over kernel basis vectors and
/// a few fixed combinations of them.
inline std::optional<Vec> invertible_conjugator(const YDAlgebra& A, std::size_t c) {
  const std::size_t d = A.dim;
  Matrix sys(d * d, d);
  for (std::size_t a = 0; a < d; ++a) {
    const Vec ca = A.action[c].col(a);
    for (std::size_t i = 0; i < d; ++i) {
      const Vec term = A.alg.product(i, a) - A.mul(ca, A.basis(i));
      for (std::size_t k = 0; k < d; ++k) sys(a * d + k, i) = term[k];
    }
  }
  const auto ker = kernel(sys);
  std::vector<Vec> candidates = ker;
  if (ker.size() > 1) {
    for (int scheme = 1; scheme <= 3; ++scheme) {
      Vec v = zero_vec(d);
      for (std::size_t k = 0; k < ker.size(); ++k) {
        const long m = static_cast<long>(k + 1);
        axpy(v, Rational(scheme == 1 ? 1 : (scheme == 2 ? m : m * m)), ker[k]);
      }
      candidates.push_back(v);
    }
  }
  for (const auto& v : candidates)
    if (sgn(det(A.alg.left_mult(v))) != 0) return v;
  return std::nullopt;
}

struct InnerEquivalenceReport {
  bool azumaya = false;
  std::optional<Vec> v1, v2;  // inner witnesses for x1, x2
  bool graded_central_simple = false;
  bool equivalent = false;
  bool e2_inner = false;
  bool central_simple = false;
  bool addendum = false;
  bool x1_inner() const { return v1.has_value(); }
  bool x2_inner() const { return v2.has_value(); }
  bool ok() const { return azumaya && equivalent && addendum; }
};

/// Evaluates the x1-inner, x2-inner and graded-central-simple predicates and
/// whether they agree, and whether an inner E(2)-action matches central simplicity.
inline InnerEquivalenceReport inner_equivalence_check(const YDAlgebra& A) {
  if (A.H->dim() != 8) throw std::invalid_argument("inner_equivalence_check: expects an algebra over E(2)");
  InnerEquivalenceReport r;
  r.azumaya = is_h_azumaya(A);
  const Grading g = c_grading(A);
  r.v1 = inner_witness(A, e2::x1, e2::c, g);
  r.v2 = inner_witness(A, e2::x2, e2::c, g);
  r.graded_central_simple = is_graded_central_simple(A);
  r.equivalent = r.x1_inner() == r.x2_inner() && r.x2_inner() == r.graded_central_simple;
  r.e2_inner = r.x1_inner() && r.x2_inner() && invertible_conjugator(A, e2::c).has_value();
  r.central_simple = is_central_simple(A.alg);
  r.addendum = r.e2_inner == r.central_simple;
  return r;
}

struct NotSubgroupReport {
  bool factors_azumaya = false;
  bool factors_gcs = false;
  bool product_azumaya = false;
  QuaternionPresentation relations{};  // X^2, Y^2, XY + YX
  bool relations_match = false;
  Vec super_central;  // X - Y
  bool is_super_central = false;
  bool product_gcs = true;
  bool x1_inner = true;
  bool x2_inner = true;
  bool closure_fails() const {
    return factors_azumaya && factors_gcs && product_azumaya && relations_match && is_super_central && !product_gcs &&
           !x1_inner && !x2_inner;
  }
};

/// C(1;t,2) and C(1;1,q) over E(2), their product, and the graded centre element X - Y.
inline NotSubgroupReport not_subgroup_demo(const HopfPtr& E2, const HopfPtr& H4, const Rational& t, const Rational& q) {
  if (sgn(t) == 0 || t == 1 || q == 2) throw std::invalid_argument("not_subgroup_demo: needs t not in {0, 1} and q != 2");
  NotSubgroupReport r;
  const YDAlgebra A = build_CE(E2, H4, 1, t, 2);
  const YDAlgebra B = build_CE(E2, H4, 1, 1, q);
  r.factors_azumaya = is_h_azumaya(A) && is_h_azumaya(B);
  r.factors_gcs = is_graded_central_simple(A) && is_graded_central_simple(B);
  const YDAlgebra P = sharp_product(A, B);
  r.product_azumaya = check_yd_algebra(P).ok() && is_h_azumaya(P);
  const Vec one = P.unit(), X = P.basis(2), Y = P.basis(1);
  const auto X2 = detail::scalar_part(P.mul(X, X), one);
  const auto Y2 = detail::scalar_part(P.mul(Y, Y), one);
  const auto anti = detail::scalar_part(P.mul(X, Y) + P.mul(Y, X), one);
  if (X2 && Y2 && anti) {
    r.relations.X2 = *X2;
    r.relations.Y2 = *Y2;
    r.relations.anti = *anti;
    r.relations_match = *X2 == 1 && *Y2 == 1 && *anti == 2;
  }
  r.super_central = X - Y;
  // Odd element z is super-central iff z y = (-1)^{|y|} y z on generators.
  const Vec z = r.super_central;
  r.is_super_central = P.mul(z, X) == Rational(-1) * P.mul(X, z) && P.mul(z, Y) == Rational(-1) * P.mul(Y, z);
  r.product_gcs = is_graded_central_simple(P);
  const Grading g = c_grading(P);
  r.x1_inner = inner_witness(P, e2::x1, e2::c, g).has_value();
  r.x2_inner = inner_witness(P, e2::x2, e2::c, g).has_value();
  return r;
}

/// Q with coaction from R_N, then End(Q); the x_i-action is inner on A iff
/// it is inner on A # End(Q), for i = 1, 2.
struct StabilizationReport {
  bool A_x1 = false, A_x2 = false, B_x1 = false, B_x2 = false;
  bool ok() const { return A_x1 == B_x1 && A_x2 == B_x2; }
};

inline StabilizationReport stabilization_inner_check(const YDAlgebra& A, const YDModule& Q) {
  if (A.H->dim() != 8 || Q.H != A.H) throw std::invalid_argument("stabilization_inner_check: expects A and Q over the same E(2)");
  const QTStructure RN = build_RN(A.H);
  const YDAlgebra EndQ = end_yd(induced_coaction(Q, RN), EndVariant::plain);
  const YDAlgebra B = sharp_product(A, EndQ);
  StabilizationReport r;
  const Grading ga = c_grading(A), gb = c_grading(B);
  r.A_x1 = inner_witness(A, e2::x1, e2::c, ga).has_value();
  r.A_x2 = inner_witness(A, e2::x2, e2::c, ga).has_value();
  r.B_x1 = inner_witness(B, e2::x1, e2::c, gb).has_value();
  r.B_x2 = inner_witness(B, e2::x2, e2::c, gb).has_value();
  return r;
}

}  // namespace bq
