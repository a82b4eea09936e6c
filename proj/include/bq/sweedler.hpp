#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bq/builders.hpp"
#include "bq/rational.hpp"
#include "bq/yd.hpp"

namespace bq {

// H4 basis indices.
namespace h4 {
inline constexpr std::size_t one = 0, g = 1, h = 2, gh = 3;
}

/// R_t = 1/2(1(x)1 + 1(x)g + g(x)1 - g(x)g) + t/2(h(x)h + h(x)gh + gh(x)gh - gh(x)h).
inline QTStructure build_R(const HopfPtr& H4, const Rational& t) {
  using namespace h4;
  Vec R = zero_vec(16);
  const Rational half(1, 2);
  const Rational th = t / 2;
  R[one * 4 + one] = half;
  R[one * 4 + g] = half;
  R[g * 4 + one] = half;
  R[g * 4 + g] = -half;
  R[h * 4 + h] = th;
  R[h * 4 + gh] = th;
  R[gh * 4 + gh] = th;
  R[gh * 4 + h] = -th;
  return QTStructure(H4, std::move(R));
}

/// r_t(x, y), rows indexed by x in {1, g, h, gh}.
inline Matrix r_table(const Rational& t) {
  return Matrix{{1, 1, 0, 0}, {1, -1, 0, 0}, {0, 0, t, -t}, {0, 0, t, t}};
}

inline CoQTStructure build_r(const HopfPtr& H4, const Rational& t) { return CoQTStructure(H4, r_table(t)); }

struct LazyCocycle {
  Rational t;
  Matrix table;
};

/// sigma_t on {1, g, h, gh}, rows indexed by the first argument.
inline LazyCocycle build_sigma(const Rational& t) {
  const Rational th = t / 2;
  return {t, Matrix{{1, 1, 0, 0}, {1, 1, 0, 0}, {0, 0, th, -th}, {0, 0, th, -th}}};
}

/// sigma(h1, l1) sigma(h2 l2, m) = sigma(l1, m1) sigma(h, l2 m2) and
/// sigma(h1, l1) h2 l2 = h1 l1 sigma(h2, l2) on basis triples / pairs.
inline AxiomReport check_lazy_cocycle(const HopfAlgebra& H, const Matrix& sigma) {
  const std::size_t n = H.dim();
  AxiomReport rep;
  auto form = [&](const Vec& x, const Vec& y) { return CoQTStructure::eval_form(sigma, x, y); };
  std::string bad;
  for (std::size_t x = 0; x < n && bad.empty(); ++x)
    for (std::size_t y = 0; y < n && bad.empty(); ++y)
      for (std::size_t z = 0; z < n && bad.empty(); ++z) {
        Rational lhs = 0, rhs = 0;
        detail::for_coproduct(H, H.coproduct(x), [&](const Rational& cx, std::size_t x1, std::size_t x2) {
          detail::for_coproduct(H, H.coproduct(y), [&](const Rational& cy, std::size_t y1, std::size_t y2) {
            lhs += cx * cy * sigma(x1, y1) * form(H.alg().product(x2, y2), H.basis(z));
          });
        });
        detail::for_coproduct(H, H.coproduct(y), [&](const Rational& cy, std::size_t y1, std::size_t y2) {
          detail::for_coproduct(H, H.coproduct(z), [&](const Rational& cz, std::size_t z1, std::size_t z2) {
            rhs += cy * cz * sigma(y1, z1) * form(H.basis(x), H.alg().product(y2, z2));
          });
        });
        if (lhs != rhs) bad = "cocycle identity fails at e" + std::to_string(x) + ", e" + std::to_string(y) + ", e" + std::to_string(z);
      }
  rep.add("cocycle", bad.empty(), bad);
  bad.clear();
  for (std::size_t x = 0; x < n && bad.empty(); ++x)
    for (std::size_t y = 0; y < n && bad.empty(); ++y) {
      Vec lhs = zero_vec(n), rhs = zero_vec(n);
      detail::for_coproduct(H, H.coproduct(x), [&](const Rational& cx, std::size_t x1, std::size_t x2) {
        detail::for_coproduct(H, H.coproduct(y), [&](const Rational& cy, std::size_t y1, std::size_t y2) {
          axpy(lhs, cx * cy * sigma(x1, y1), H.alg().product(x2, y2));
          axpy(rhs, cx * cy * sigma(x2, y2), H.alg().product(x1, y1));
        });
      });
      if (lhs != rhs) bad = detail::first_bad("laziness", x, y);
    }
  rep.add("lazy", bad.empty(), bad);
  return rep;
}

/// A_sigma: same coaction, product a . b = a0 b0 sigma(a1, b1). Any action is
/// dropped; the result is a comodule algebra.
inline YDAlgebra cocycle_twist(const YDAlgebra& A, const Matrix& sigma) {
  A.require_coaction();
  if (!check_lazy_cocycle(*A.H, sigma).ok()) throw std::invalid_argument("cocycle_twist: not a lazy cocycle");
  const std::size_t d = A.dim;
  std::vector<Vec> table(d * d, zero_vec(d));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      A.for_coaction(i, [&](const Rational& ci, std::size_t p, std::size_t q) {
        A.for_coaction(j, [&](const Rational& cj, std::size_t r, std::size_t s) {
          axpy(table[i * d + j], ci * cj * sigma(q, s), A.alg.product(p, r));
        });
      });
  std::vector<std::string> labels = A.alg.labels();
  return YDAlgebra(A.H, StructureAlgebra(std::move(labels), A.unit(), std::move(table)), {}, A.coaction);
}

inline YDAlgebra cocycle_twist(const YDAlgebra& A, const LazyCocycle& sigma) { return cocycle_twist(A, sigma.table); }

/// The triple naming C(a;t,s): x^2 = a, g.x = -x, h.x = t, rho(x) = x (x) g + s (x) h.
struct CFamilyDescriptor {
  Rational a, t, s;

  bool azumaya() const { return 2 * a != s * t; }
  friend bool operator==(const CFamilyDescriptor& x, const CFamilyDescriptor& y) {
    return x.a == y.a && x.t == y.t && x.s == y.s;
  }
  std::string str() const { return "(" + to_string(a) + ", " + to_string(t) + ", " + to_string(s) + ")"; }
};

/// Two-dimensional algebra k[x]/(x^2 - a) on the basis {1, x}.
inline StructureAlgebra quadratic_algebra(const Rational& a, const std::string& x = "x") {
  return StructureAlgebra({"1", x}, {1, 0}, {{1, 0}, {0, 1}, {0, 1}, {a, 0}});
}

inline YDAlgebra build_C(const HopfPtr& H4, const CFamilyDescriptor& d) {
  using namespace h4;
  std::vector<Matrix> action(4);
  action[one] = Matrix::identity(2);
  action[g] = Matrix{{1, 0}, {0, -1}};
  action[h] = Matrix{{0, d.t}, {0, 0}};
  action[gh] = Matrix{{0, d.t}, {0, 0}};
  Matrix coaction(8, 2);
  coaction(0 * 4 + one, 0) = 1;
  coaction(1 * 4 + g, 1) = 1;
  coaction(0 * 4 + h, 1) = d.s;
  return YDAlgebra(H4, quadratic_algebra(d.a), std::move(action), std::move(coaction));
}

/// Reads (a, t, s) back from a two-dimensional algebra on {1, x} and returns
/// it only when the algebra equals build_C of that triple on the nose.
inline std::optional<CFamilyDescriptor> read_descriptor(const YDAlgebra& A) {
  if (A.dim != 2 || A.H->dim() != 4 || !A.has_action() || !A.has_coaction()) return std::nullopt;
  const CFamilyDescriptor d{A.alg.product(1, 1)[0], A.action[h4::h](0, 1), A.coaction(0 * 4 + h4::h, 1)};
  const YDAlgebra ref = build_C(A.H, d);
  if (!check_yd_isomorphism(A, ref, Matrix::identity(2)).ok()) return std::nullopt;
  return d;
}

/// alpha with a = alpha^2 a', t = alpha t', s = alpha s', if one exists over Q.
inline std::optional<Rational> c_equivalent(const CFamilyDescriptor& x, const CFamilyDescriptor& y) {
  std::optional<Rational> alpha;
  if (sgn(y.t) != 0) alpha = x.t / y.t;
  else if (sgn(y.s) != 0) alpha = x.s / y.s;
  if (alpha) {
    if (sgn(*alpha) == 0) return std::nullopt;
    if (x.t != *alpha * y.t || x.s != *alpha * y.s || x.a != *alpha * *alpha * y.a) return std::nullopt;
    return alpha;
  }
  if (sgn(x.t) != 0 || sgn(x.s) != 0) return std::nullopt;
  if (sgn(y.a) == 0) return sgn(x.a) == 0 ? std::optional<Rational>(1) : std::nullopt;
  if (sgn(x.a) == 0) return std::nullopt;
  return rational_is_square(x.a / y.a);
}

/// Representative of the rescaling class of d: t = 1, else s = 1, else a squarefree.
inline CFamilyDescriptor canonical_descriptor(const CFamilyDescriptor& d) {
  if (sgn(d.t) != 0) return {d.a / (d.t * d.t), 1, d.s / d.t};
  if (sgn(d.s) != 0) return {d.a / (d.s * d.s), 0, 1};
  if (sgn(d.a) == 0) return d;
  return {Rational(squarefree_class(d.a)), 0, 0};
}

/// The isomorphism x -> alpha y from C(x) to C(y) as a matrix on {1, x}.
inline Matrix c_isomorphism(const Rational& alpha) { return Matrix{{1, 0}, {0, alpha}}; }

/// Searches for an isomorphism 1 -> 1, x -> beta + alpha y between two
/// algebras on {1, x} with x^2 scalar, intertwining whichever structures both
/// carry. Returns alpha when one exists.
inline std::optional<Rational> find_c_isomorphism(const YDAlgebra& A, const YDAlgebra& B) {
  if (A.dim != 2 || B.dim != 2) throw std::invalid_argument("find_c_isomorphism: expects 2-dimensional algebras");
  const auto a = detail::scalar_part(A.alg.product(1, 1), A.unit());
  const auto b = detail::scalar_part(B.alg.product(1, 1), B.unit());
  if (!a || !b) throw std::invalid_argument("find_c_isomorphism: x^2 is not scalar");
  // (beta + alpha y)^2 = a forces alpha beta = 0, so beta = 0 and alpha^2 b = a.
  std::vector<Rational> candidates;
  if (sgn(*b) != 0) {
    const auto root = rational_is_square(*a / *b);
    if (!root) return std::nullopt;
    if (sgn(*root) == 0) return std::nullopt;
    candidates = {*root, -*root};
  } else {
    if (sgn(*a) != 0) return std::nullopt;
    // x^2 = 0 on both sides: alpha is fixed by the linear structure, if at all.
    const std::size_t n = A.H->dim();
    std::vector<Rational> coeff, rhs;
    if (A.has_action() && B.has_action())
      for (std::size_t l = 0; l < n; ++l) {
        // alpha * B.act(l)(0,1) = A.act(l)(0,1) on the 1-component; alpha cancels on the x-component.
        coeff.push_back(B.action[l](0, 1));
        rhs.push_back(A.action[l](0, 1));
      }
    if (A.has_coaction() && B.has_coaction())
      for (std::size_t q = 0; q < n; ++q) {
        coeff.push_back(B.coaction(q, 1));
        rhs.push_back(A.coaction(q, 1));
      }
    std::optional<Rational> alpha;
    for (std::size_t k = 0; k < coeff.size(); ++k)
      if (sgn(coeff[k]) != 0) {
        alpha = rhs[k] / coeff[k];
        break;
      }
    candidates = {alpha.value_or(Rational(1))};
  }
  for (const auto& alpha : candidates)
    if (sgn(alpha) != 0 && check_yd_isomorphism(A, B, c_isomorphism(alpha)).ok()) return alpha;
  return std::nullopt;
}

/// The same algebra keeping only the action or only the coaction.
inline YDAlgebra module_part(const YDAlgebra& A) { return YDAlgebra(A.H, A.alg, A.action, Matrix(0, 0)); }
inline YDAlgebra comodule_part(const YDAlgebra& A) { return YDAlgebra(A.H, A.alg, {}, A.coaction); }

inline CFamilyDescriptor c_opposite(const CFamilyDescriptor& d) { return {d.s * d.t - d.a, d.t, d.s}; }

struct Membership {
  enum class Kind { none, unique, all };
  Kind kind = Kind::none;
  Rational l;

  bool contains(const Rational& v) const { return kind == Kind::all || (kind == Kind::unique && l == v); }
  std::string str() const {
    switch (kind) {
      case Kind::none: return "none";
      case Kind::all: return "all";
      default: return to_string(l);
    }
  }
};

struct CMembership {
  Membership in_i;     // BM images: s = l t
  Membership in_iota;  // BC images: s l = t
};

/// Requires 2a != st.
inline CMembership c_membership(const CFamilyDescriptor& d) {
  if (!d.azumaya()) throw std::invalid_argument("c_membership: descriptor " + d.str() + " is not Azumaya");
  CMembership out;
  if (sgn(d.t) != 0) out.in_i = {Membership::Kind::unique, d.s / d.t};
  else out.in_i = {sgn(d.s) == 0 ? Membership::Kind::all : Membership::Kind::none, 0};
  if (sgn(d.s) != 0) out.in_iota = {Membership::Kind::unique, d.t / d.s};
  else out.in_iota = {sgn(d.t) == 0 ? Membership::Kind::all : Membership::Kind::none, 0};
  return out;
}

/// X^2, Y^2, XY + YX, h-action and s-coefficients of X = x#1 and Y = 1#y.
struct QuaternionPresentation {
  Rational X2, Y2, anti, hX, hY, sX, sY;
  friend bool operator==(const QuaternionPresentation&, const QuaternionPresentation&) = default;
};

inline QuaternionPresentation c_product(const CFamilyDescriptor& x, const CFamilyDescriptor& y) {
  return {x.a, y.a, x.s * y.t, x.t, y.t, x.s, y.s};
}

/// Reads the presentation off a built 4-dim product on {1#1, 1#y, x#1, x#y};
/// none when the product is not of that shape.
inline std::optional<QuaternionPresentation> read_quaternion(const YDAlgebra& P) {
  if (P.dim != 4 || P.H->dim() != 4) return std::nullopt;
  const Vec one = P.unit(), X = P.basis(2), Y = P.basis(1);
  auto scalar = [&](const Vec& v) { return detail::scalar_part(v, one); };
  const auto X2 = scalar(P.mul(X, X));
  const auto Y2 = scalar(P.mul(Y, Y));
  const auto anti = scalar(P.mul(X, Y) + P.mul(Y, X));
  const auto hX = scalar(P.act(h4::h, X));
  const auto hY = scalar(P.act(h4::h, Y));
  if (!X2 || !Y2 || !anti || !hX || !hY) return std::nullopt;
  if (P.act(h4::g, X) != Rational(-1) * X || P.act(h4::g, Y) != Rational(-1) * Y) return std::nullopt;
  const Rational sX = P.coaction(0 * 4 + h4::h, 2), sY = P.coaction(0 * 4 + h4::h, 1);
  const Vec rX = kron(X, unit_vec(4, h4::g)) + sX * kron(one, unit_vec(4, h4::h));
  const Vec rY = kron(Y, unit_vec(4, h4::g)) + sY * kron(one, unit_vec(4, h4::h));
  if (P.coact(X) != rX || P.coact(Y) != rY) return std::nullopt;
  return QuaternionPresentation{*X2, *Y2, *anti, *hX, *hY, sX, sY};
}

struct BM0Invariant {
  Rational beta;          // closed form t^2 / (4a)
  Rational beta_witness;  // from the strongly inner witness
  Integer square_class;
  bool agree() const { return beta == beta_witness; }
};

/// Requires s = 0 and a != 0.
inline BM0Invariant classify_bm0(const HopfPtr& H4, const CFamilyDescriptor& d) {
  if (sgn(d.s) != 0 || sgn(d.a) == 0) throw std::invalid_argument("classify_bm0: needs s = 0 and a != 0, got " + d.str());
  BM0Invariant out;
  out.beta = d.t * d.t / (4 * d.a);
  out.square_class = squarefree_class(d.a);
  const YDAlgebra P = sharp_product(build_C(H4, d), build_C(H4, {-d.a, 0, 0}));
  const auto w = strongly_inner_witness(P, h4::g, h4::h);
  if (!w) throw std::domain_error("classify_bm0: no strongly inner witness for " + d.str());
  out.beta_witness = w->beta;
  return out;
}

struct TransportResult {
  CFamilyDescriptor image;
  std::optional<CFamilyDescriptor> structural;  // descriptor read off the built algebra
  AxiomReport validity;
  bool ok() const { return structural && *structural == image && validity.ok(); }
};

/// Psi_s on generators (a, 0, 1): twist by sigma_s, then the action induced
/// by r_s. Image (a + s/2, s, 1).
inline TransportResult psi_transport(const HopfPtr& H4, const CFamilyDescriptor& d, const Rational& s) {
  if (sgn(d.t) != 0 || d.s != 1) throw std::invalid_argument("psi_transport: expects a descriptor (a, 0, 1), got " + d.str());
  TransportResult out{{d.a + s / 2, s, 1}, std::nullopt, {}};
  const YDAlgebra twisted = cocycle_twist(build_C(H4, d), build_sigma(s));
  const YDAlgebra A = induced_action(twisted, build_r(H4, s));
  out.validity = check_yd_algebra(A);
  out.structural = read_descriptor(A);
  return out;
}

inline CFamilyDescriptor psi_inverse(const CFamilyDescriptor& d, const Rational& s) {
  if (d.t != s || d.s != 1) throw std::invalid_argument("psi_inverse: expects (b, s, 1), got " + d.str());
  return {d.a - s / 2, 0, 1};
}

/// Phi_t on generators (a, 1, t): the action becomes an H4*-coaction
/// a -> sum_i e_i.a (x) e_i*, pulled back to H4 through phi^-1 on the
/// opposite algebra, with the action induced by r_t. Image (a, t, 1).
inline TransportResult phi_transport(const HopfPtr& H4, const CFamilyDescriptor& d) {
  if (d.t != 1) throw std::invalid_argument("phi_transport: expects a descriptor (a, 1, t), got " + d.str());
  const Rational t = d.s;
  TransportResult out{{d.a, t, 1}, std::nullopt, {}};
  const YDAlgebra C = build_C(H4, d);
  const Matrix phi_inv = inverse(phi_matrix());
  const std::size_t n = 4;
  Matrix coaction(2 * n, 2);
  for (std::size_t m = 0; m < 2; ++m)
    for (std::size_t i = 0; i < n; ++i) {
      const Vec im = C.action[i].col(m);
      const Vec pulled = phi_inv.col(i);  // e_i* = sum_q phi^-1(q, i) phi(e_q)
      for (std::size_t p = 0; p < 2; ++p)
        for (std::size_t q = 0; q < n; ++q) coaction(p * n + q, m) += im[p] * pulled[q];
    }
  const YDAlgebra comodule(H4, opposite_algebra(C.alg), {}, std::move(coaction));
  const YDAlgebra A = induced_action(comodule, build_r(H4, t));
  out.validity = check_yd_algebra(A);
  out.structural = read_descriptor(A);
  return out;
}

inline CFamilyDescriptor phi_inverse(const CFamilyDescriptor& d) {
  if (d.s != 1) throw std::invalid_argument("phi_inverse: expects (a, t, 1), got " + d.str());
  return {d.a, 1, d.t};
}

/// Hopf automorphism of H4 fixing g and scaling h by alpha.
inline Matrix aut_matrix(const Rational& alpha) { return Matrix::diagonal({1, 1, alpha, alpha}); }

/// h ._alpha b = alpha(h).b and rho_alpha = (id (x) alpha^-1) rho.
inline YDAlgebra aut_twist(const YDAlgebra& A, const Rational& alpha) {
  if (sgn(alpha) == 0) throw std::invalid_argument("aut_twist: alpha must be nonzero");
  const Matrix a = aut_matrix(alpha);
  std::vector<Matrix> action;
  for (std::size_t l = 0; l < 4; ++l) action.push_back(A.action_of(a.col(l)));
  const Matrix coaction = kron(Matrix::identity(A.dim), aut_matrix(1 / alpha)) * A.coaction;
  return YDAlgebra(A.H, A.alg, std::move(action), coaction);
}

inline CFamilyDescriptor aut_conjugate(const CFamilyDescriptor& d, const Rational& alpha) {
  if (sgn(alpha) == 0) throw std::invalid_argument("aut_conjugate: alpha must be nonzero");
  return {d.a, alpha * d.t, d.s / alpha};
}

/// H_alpha: the regular right comodule H4 with l.m = alpha(l2) m S^-1(l1).
inline YDModule h_alpha_module(const HopfPtr& H4, const Rational& alpha) {
  if (sgn(alpha) == 0) throw std::invalid_argument("h_alpha_module: alpha must be nonzero");
  const HopfAlgebra& h = *H4;
  const Matrix a = aut_matrix(alpha);
  std::vector<Matrix> action(4, Matrix(4, 4));
  for (std::size_t l = 0; l < 4; ++l)
    detail::for_coproduct(h, h.coproduct(l), [&](const Rational& c, std::size_t l1, std::size_t l2) {
      const Vec left = a.col(l2);
      const Vec right = h.S_inv(h.basis(l1));
      for (std::size_t m = 0; m < 4; ++m)
        action[l].set_col(m, action[l].col(m) + c * h.mul(h.mul(left, h.basis(m)), right));
    });
  return YDModule{H4, 4, std::move(action), h.coproduct_matrix()};
}

inline YDAlgebra aut_algebra(const HopfPtr& H4, const Rational& alpha) {
  return end_yd(h_alpha_module(H4, alpha), EndVariant::plain);
}

struct IntersectionReport {
  bool i_iota_nontrivial = false;  // Im(i_t) and Im(iota_s)
  bool i_i_nontrivial = false;     // Im(i_t) and Im(i_s)
  bool iota_iota_nontrivial = false;
  std::optional<CFamilyDescriptor> i_iota_witness;
  std::optional<CFamilyDescriptor> i_i_witness;
  std::optional<CFamilyDescriptor> iota_iota_witness;
};

/// Common generator witnesses: (a, 1, t) lies in Im(i_t) and, when t != 0,
/// in Im(iota_{1/t}); (a, t, 1) lies in Im(iota_t). a is chosen with 2a != st.
inline IntersectionReport intersection_report(const Rational& t, const Rational& s) {
  IntersectionReport r;
  r.i_iota_nontrivial = t * s == 1;
  r.i_i_nontrivial = t == s;
  r.iota_iota_nontrivial = t == s;
  if (r.i_iota_nontrivial) r.i_iota_witness = CFamilyDescriptor{t / 2 + 1, 1, t};
  if (r.i_i_nontrivial) r.i_i_witness = CFamilyDescriptor{t / 2 + 1, 1, t};
  if (r.iota_iota_nontrivial) r.iota_iota_witness = CFamilyDescriptor{t / 2 + 1, t, 1};
  return r;
}

}  // namespace bq
