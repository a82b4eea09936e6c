#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bq/algebra.hpp"
#include "bq/hopf.hpp"
#include "bq/matrix.hpp"
#include "bq/tensor.hpp"

namespace bq {

/// Left H-module and/or right H-comodule on k^dim.
///
/// action[l] is the matrix of e_l; coaction is a (dim * H.dim) x dim matrix
/// whose column i is rho(e_i) in M (x) H. An empty action vector or a 0 x 0
/// coaction means the structure is absent.
struct YDModule {
  HopfPtr H;
  std::size_t dim = 0;
  std::vector<Matrix> action;
  Matrix coaction{0, 0};

  bool has_action() const { return !action.empty(); }
  bool has_coaction() const { return coaction.rows() != 0; }

  Matrix action_of(const Vec& h) const {
    require_action();
    Matrix out(dim, dim);
    for (std::size_t l = 0; l < h.size(); ++l)
      if (sgn(h[l]) != 0) out = out + h[l] * action[l];
    return out;
  }
  Vec act(const Vec& h, const Vec& m) const { return action_of(h) * m; }
  Vec act(std::size_t l, const Vec& m) const {
    require_action();
    return action[l] * m;
  }
  Vec coact(const Vec& m) const {
    require_coaction();
    return coaction * m;
  }
  /// Calls f(coef, p, q) for each nonzero e_p (x) e_q term of rho(e_i).
  template <class F>
  void for_coaction(std::size_t i, F f) const {
    require_coaction();
    const std::size_t n = H->dim();
    for (std::size_t p = 0; p < dim; ++p)
      for (std::size_t q = 0; q < n; ++q) {
        const Rational& c = coaction(p * n + q, i);
        if (sgn(c) != 0) f(c, p, q);
      }
  }

  void require_action() const {
    if (!has_action()) throw std::invalid_argument("module has no action");
  }
  void require_coaction() const {
    if (!has_coaction()) throw std::invalid_argument("module has no coaction");
  }
};

/// YD module algebra; also used for module algebras (no coaction) and
/// comodule algebras (no action).
struct YDAlgebra : YDModule {
  StructureAlgebra alg;

  YDAlgebra(HopfPtr h, StructureAlgebra a, std::vector<Matrix> act, Matrix coact)
      : YDModule{std::move(h), a.dim(), std::move(act), std::move(coact)}, alg(std::move(a)) {
    validate_shapes();
  }

  Vec mul(const Vec& x, const Vec& y) const { return alg.mul(x, y); }
  Vec basis(std::size_t i) const { return alg.basis(i); }
  const Vec& unit() const { return alg.unit(); }

  void validate_shapes() const {
    if (has_action()) {
      if (action.size() != H->dim()) throw dimension_error("YD data: action needs one matrix per H basis element");
      for (const auto& m : action)
        if (m.rows() != dim || m.cols() != dim) throw dimension_error("YD data: action matrix must be dim x dim");
    }
    if (has_coaction() && (coaction.rows() != dim * H->dim() || coaction.cols() != dim))
      throw dimension_error("YD data: coaction must be (dim*Hdim) x dim");
  }
};

namespace detail {

inline void check_module_families(const YDModule& m, AxiomReport& rep) {
  const HopfAlgebra& h = *m.H;
  const std::size_t n = h.dim();
  const Matrix id = Matrix::identity(m.dim);
  if (m.has_action()) {
    rep.add("module.unit", m.action_of(h.unit()) == id, "1 does not act as identity");
    std::string bad;
    for (std::size_t a = 0; a < n && bad.empty(); ++a)
      for (std::size_t b = 0; b < n && bad.empty(); ++b)
        if (m.action_of(h.alg().product(a, b)) != m.action[a] * m.action[b])
          bad = first_bad("(ab).m = a.(b.m)", a, b);
    rep.add("module.associativity", bad.empty(), bad);
  }
  if (m.has_coaction()) {
    const Matrix idM = Matrix::identity(m.dim);
    const Matrix idH = Matrix::identity(n);
    std::string bad;
    for (std::size_t i = 0; i < m.dim && bad.empty(); ++i) {
      const Vec r = m.coact(unit_vec(m.dim, i));
      const Vec left = tensor_apply({&m.coaction, &idH}, r);
      const Vec right = tensor_apply({&idM, &h.coproduct_matrix()}, r);
      if (left != right) bad = first_bad("(rho (x) id)rho = (id (x) Delta)rho", i);
      else if (tensor_apply({&idM, &h.counit_matrix()}, r) != unit_vec(m.dim, i))
        bad = first_bad("(id (x) eps)rho = id", i);
    }
    rep.add("comodule", bad.empty(), bad);
  }
  if (m.has_action() && m.has_coaction()) {
    std::string bad;
    for (std::size_t l = 0; l < n && bad.empty(); ++l) {
      const Vec d2 = h.delta2(h.basis(l));
      for (std::size_t b = 0; b < m.dim && bad.empty(); ++b) {
        const Vec lhs = m.coact(m.action[l] * unit_vec(m.dim, b));
        Vec rhs = zero_vec(m.dim * n);
        for (std::size_t flat = 0; flat < d2.size(); ++flat) {
          if (sgn(d2[flat]) == 0) continue;
          const auto idx = split_index(flat, {n, n, n});
          const Vec s_inv_l1 = h.S_inv(h.basis(idx[0]));
          m.for_coaction(b, [&](const Rational& c, std::size_t p, std::size_t q) {
            const Vec left = m.action[idx[1]].col(p);
            const Vec right = h.mul(h.alg().product(idx[2], q), s_inv_l1);
            axpy(rhs, d2[flat] * c, kron(left, right));
          });
        }
        if (lhs != rhs) bad = first_bad("Yetter-Drinfeld condition", l, b);
      }
    }
    rep.add("yd_condition", bad.empty(), bad);
  }
}

}  // namespace detail

inline AxiomReport check_yd_module(const YDModule& m) {
  AxiomReport rep;
  detail::check_module_families(m, rep);
  return rep;
}

/// Itemized check of algebra, module algebra, H^op-comodule algebra and YD
/// families (the latter only where both structures are present).
inline AxiomReport check_yd_algebra(const YDAlgebra& a) {
  AxiomReport rep;
  rep.append(to_axiom_report(check_algebra_axioms(a.alg)), "algebra.");
  detail::check_module_families(a, rep);
  const HopfAlgebra& h = *a.H;
  const std::size_t n = h.dim();
  const std::size_t d = a.dim;
  if (a.has_action()) {
    std::string bad;
    for (std::size_t l = 0; l < n && bad.empty(); ++l) {
      if (a.action[l] * a.unit() != h.counit()[l] * a.unit()) bad = detail::first_bad("h.1 = eps(h)1", l);
      for (std::size_t i = 0; i < d && bad.empty(); ++i)
        for (std::size_t j = 0; j < d && bad.empty(); ++j) {
          const Vec lhs = a.action[l] * a.alg.product(i, j);
          Vec rhs = zero_vec(d);
          detail::for_coproduct(h, h.coproduct(l), [&](const Rational& c, std::size_t p, std::size_t q) {
            axpy(rhs, c, a.mul(a.action[p].col(i), a.action[q].col(j)));
          });
          if (lhs != rhs) bad = "h.(ab) fails at h=e" + std::to_string(l) + ", a=e" + std::to_string(i) + ", b=e" + std::to_string(j);
        }
    }
    rep.add("module_algebra", bad.empty(), bad);
  }
  if (a.has_coaction()) {
    std::string bad;
    if (a.coact(a.unit()) != kron(a.unit(), h.unit())) bad = "rho(1) != 1 (x) 1";
    for (std::size_t i = 0; i < d && bad.empty(); ++i)
      for (std::size_t j = 0; j < d && bad.empty(); ++j) {
        const Vec lhs = a.coact(a.alg.product(i, j));
        Vec rhs = zero_vec(d * n);
        a.for_coaction(i, [&](const Rational& ci, std::size_t p, std::size_t q) {
          a.for_coaction(j, [&](const Rational& cj, std::size_t r, std::size_t s) {
            axpy(rhs, ci * cj, kron(a.alg.product(p, r), h.alg().product(s, q)));
          });
        });
        if (lhs != rhs) bad = detail::first_bad("rho(ab) = a0 b0 (x) b1 a1", i, j);
      }
    rep.add("comodule_algebra", bad.empty(), bad);
  }
  return rep;
}

/// Trivial YD structure on an algebra: action through eps, coaction a -> a (x) 1.
inline YDAlgebra trivial_yd(const HopfPtr& h, const StructureAlgebra& alg) {
  const std::size_t d = alg.dim();
  std::vector<Matrix> action;
  for (std::size_t l = 0; l < h->dim(); ++l) action.push_back(h->counit()[l] * Matrix::identity(d));
  Matrix coaction(d * h->dim(), d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t q = 0; q < h->dim(); ++q) coaction(i * h->dim() + q, i) = h->unit()[q];
  return YDAlgebra(h, alg, std::move(action), std::move(coaction));
}

namespace detail {

/// c0 (c1 . a) for basis a = e_i and c = e_j.
inline Vec braided_swap_product(const YDAlgebra& A, std::size_t i, std::size_t j) {
  Vec out = zero_vec(A.dim);
  A.for_coaction(j, [&](const Rational& c, std::size_t p, std::size_t q) {
    axpy(out, c, A.mul(A.basis(p), A.action[q].col(i)));
  });
  return out;
}

}  // namespace detail

/// Same action and coaction with product a o c = c0 (c1 . a).
inline YDAlgebra h_opposite(const YDAlgebra& A) {
  const std::size_t d = A.dim;
  std::vector<Vec> table(d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) table[i * d + j] = detail::braided_swap_product(A, i, j);
  std::vector<std::string> labels = A.alg.labels();
  return YDAlgebra(A.H, StructureAlgebra(std::move(labels), A.unit(), std::move(table)), A.action, A.coaction);
}

/// A # B on A (x) B: (a#b)(c#d) = a c0 # (c1 . b) d, diagonal action through
/// Delta, coaction a (x) b -> a0 (x) b0 (x) b1 a1.
inline YDAlgebra sharp_product(const YDAlgebra& A, const YDAlgebra& B) {
  if (A.H.get() != B.H.get() && !(A.H->dim() == B.H->dim() && A.H->alg() == B.H->alg()))
    throw std::invalid_argument("sharp_product: Hopf algebra mismatch");
  A.require_action();
  A.require_coaction();
  B.require_action();
  B.require_coaction();
  const HopfAlgebra& h = *A.H;
  const std::size_t n = h.dim();
  const std::size_t da = A.dim, db = B.dim, d = da * db;
  std::vector<std::string> labels;
  for (const auto& la : A.alg.labels())
    for (const auto& lb : B.alg.labels()) labels.push_back(la + "#" + lb);
  std::vector<Vec> table(d * d, zero_vec(d));
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t j = 0; j < db; ++j)
      for (std::size_t k = 0; k < da; ++k)
        for (std::size_t l = 0; l < db; ++l) {
          Vec& out = table[(i * db + j) * d + (k * db + l)];
          A.for_coaction(k, [&](const Rational& c, std::size_t p, std::size_t q) {
            axpy(out, c, kron(A.alg.product(i, p), B.mul(B.action[q].col(j), B.basis(l))));
          });
        }
  std::vector<Matrix> action(n, Matrix(d, d));
  for (std::size_t l = 0; l < n; ++l)
    detail::for_coproduct(h, h.coproduct(l), [&](const Rational& c, std::size_t p, std::size_t q) {
      action[l] = action[l] + c * kron(A.action[p], B.action[q]);
    });
  Matrix coaction(d * n, d);
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t j = 0; j < db; ++j) {
      Vec col = zero_vec(d * n);
      A.for_coaction(i, [&](const Rational& ci, std::size_t p, std::size_t q) {
        B.for_coaction(j, [&](const Rational& cj, std::size_t r, std::size_t s) {
          axpy(col, ci * cj, kron(unit_vec(d, p * db + r), h.alg().product(s, q)));
        });
      });
      coaction.set_col(i * db + j, col);
    }
  return YDAlgebra(A.H, StructureAlgebra(std::move(labels), kron(A.unit(), B.unit()), std::move(table)),
                   std::move(action), std::move(coaction));
}

enum class EndVariant { plain, op };

/// End(M) with (h.f)(m) = h1.f(S(h2).m) and rho(f)(m) = f(m0)0 (x) S^-1(m1) f(m0)1,
/// or End(M)^op with (h.f)(m) = h2.f(S^-1(h1).m) and rho(f)(m) = f(m0)0 (x) f(m0)1 S(m1).
/// Basis E_pq (index p * dim + q) sends e_q to e_p.
inline YDAlgebra end_yd(const YDModule& M, EndVariant variant = EndVariant::plain) {
  M.require_action();
  M.require_coaction();
  const HopfAlgebra& h = *M.H;
  const std::size_t n = h.dim();
  const std::size_t m = M.dim;
  const std::size_t d = m * m;
  StructureAlgebra end = endomorphism_algebra(m);
  if (variant == EndVariant::op) end = opposite_algebra(end);

  std::vector<Matrix> action(n, Matrix(d, d));
  for (std::size_t l = 0; l < n; ++l)
    detail::for_coproduct(h, h.coproduct(l), [&](const Rational& c, std::size_t a, std::size_t b) {
      const Matrix left = variant == EndVariant::plain ? M.action[a] : M.action[b];
      const Matrix right = variant == EndVariant::plain ? M.action_of(h.S(h.basis(b))) : M.action_of(h.S_inv(h.basis(a)));
      for (std::size_t p = 0; p < m; ++p)
        for (std::size_t q = 0; q < m; ++q) {
          // left * E_pq * right = (column p of left) (row q of right)
          for (std::size_t x = 0; x < m; ++x) {
            if (sgn(left(x, p)) == 0) continue;
            for (std::size_t y = 0; y < m; ++y)
              if (sgn(right(q, y)) != 0) action[l](x * m + y, p * m + q) += c * left(x, p) * right(q, y);
          }
        }
    });

  Matrix coaction(d * n, d);
  for (std::size_t p = 0; p < m; ++p)
    for (std::size_t q = 0; q < m; ++q)
      for (std::size_t r = 0; r < m; ++r)
        // rho(e_r) = sum gamma e_u (x) e_v; only u = q survives E_pq.
        M.for_coaction(r, [&](const Rational& gamma, std::size_t u, std::size_t v) {
          if (u != q) return;
          M.for_coaction(p, [&](const Rational& delta, std::size_t x, std::size_t y) {
            const Vec hpart = variant == EndVariant::plain ? h.mul(h.S_inv(h.basis(v)), h.basis(y))
                                                           : h.mul(h.basis(y), h.S(h.basis(v)));
            for (std::size_t t = 0; t < n; ++t)
              if (sgn(hpart[t]) != 0) coaction((x * m + r) * n + t, p * m + q) += gamma * delta * hpart[t];
          });
        });
  return YDAlgebra(M.H, std::move(end), std::move(action), std::move(coaction));
}

/// End(M) as an H-module algebra only: (h.f) = h1 f S(h2).
inline YDAlgebra end_module_algebra(const YDModule& M) {
  M.require_action();
  const HopfAlgebra& h = *M.H;
  const std::size_t m = M.dim;
  std::vector<Matrix> action(h.dim(), Matrix(m * m, m * m));
  for (std::size_t l = 0; l < h.dim(); ++l)
    detail::for_coproduct(h, h.coproduct(l), [&](const Rational& c, std::size_t a, std::size_t b) {
      action[l] = action[l] + c * kron(M.action[a], M.action_of(h.S(h.basis(b))).transpose());
    });
  return YDAlgebra(M.H, endomorphism_algebra(m), std::move(action), Matrix(0, 0));
}

struct FGMaps {
  Matrix F;
  Matrix G;
};

/// F(a#b)(c) = a c0 (c1 . b) and G(a#b)(c) = a0 (a1 . c) b. Column i*d+j is
/// e_i # e_j; row p*d+q holds the coefficient of e_q in the image of e_p.
inline FGMaps fg_maps(const YDAlgebra& A) {
  A.require_action();
  A.require_coaction();
  const std::size_t d = A.dim;
  Matrix F(d * d, d * d), G(d * d, d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t c = 0; c < d; ++c) {
        Vec f = zero_vec(d), g = zero_vec(d);
        A.for_coaction(c, [&](const Rational& k, std::size_t p, std::size_t q) {
          axpy(f, k, A.mul(A.alg.product(i, p), A.action[q].col(j)));
        });
        A.for_coaction(i, [&](const Rational& k, std::size_t p, std::size_t q) {
          axpy(g, k, A.mul(A.mul(A.basis(p), A.action[q].col(c)), A.basis(j)));
        });
        for (std::size_t q = 0; q < d; ++q) {
          F(c * d + q, i * d + j) = f[q];
          G(c * d + q, i * d + j) = g[q];
        }
      }
  return {std::move(F), std::move(G)};
}

/// Re-indexes a map in fg_maps layout so its columns are coordinates in the
/// matrix-unit basis of end_yd (E_pq at p*d+q sends e_q to e_p).
inline Matrix fg_in_end_basis(const Matrix& M, std::size_t d) {
  Matrix perm(d * d, d * d);
  for (std::size_t c = 0; c < d; ++c)
    for (std::size_t q = 0; q < d; ++q) perm(q * d + c, c * d + q) = 1;
  return perm * M;
}

inline bool is_h_azumaya(const YDAlgebra& A) {
  const FGMaps fg = fg_maps(A);
  return sgn(det(fg.F)) != 0 && sgn(det(fg.G)) != 0;
}

/// rho(m) = (R2 . m) (x) R1 as a (dim * n) x dim coaction matrix.
inline Matrix induced_coaction_matrix(const YDModule& M, const QTStructure& R) {
  M.require_action();
  const std::size_t n = M.H->dim();
  const std::size_t d = M.dim;
  Matrix coaction(d * n, d);
  for (std::size_t i = 0; i < d; ++i) {
    Vec col = zero_vec(d * n);
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = 0; q < n; ++q) {
        const Rational& c = R.R[p * n + q];
        if (sgn(c) != 0) axpy(col, c, kron(M.action[q].col(i), unit_vec(n, p)));
      }
    coaction.set_col(i, col);
  }
  return coaction;
}

inline YDModule induced_coaction(const YDModule& M, const QTStructure& R) {
  return YDModule{M.H, M.dim, M.action, induced_coaction_matrix(M, R)};
}

inline YDAlgebra induced_coaction(const YDAlgebra& A, const QTStructure& R) {
  return YDAlgebra(A.H, A.alg, A.action, induced_coaction_matrix(A, R));
}

/// h . a = a0 r(h (x) a1).
inline YDAlgebra induced_action(const YDAlgebra& A, const CoQTStructure& r) {
  A.require_coaction();
  const std::size_t n = A.H->dim();
  const std::size_t d = A.dim;
  std::vector<Matrix> action(n, Matrix(d, d));
  for (std::size_t i = 0; i < d; ++i)
    A.for_coaction(i, [&](const Rational& c, std::size_t p, std::size_t q) {
      for (std::size_t l = 0; l < n; ++l) action[l](p, i) += c * r.r(l, q);
    });
  return YDAlgebra(A.H, A.alg, std::move(action), A.coaction);
}

/// psi(v (x) w) = R2 . w (x) R1 . v as a (dW*dV) x (dV*dW) matrix.
inline Matrix braiding_psi(const YDModule& V, const YDModule& W, const QTStructure& R) {
  V.require_action();
  W.require_action();
  const std::size_t n = R.H->dim();
  const std::size_t dv = V.dim, dw = W.dim;
  Matrix psi(dw * dv, dv * dw);
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q) {
      const Rational& c = R.R[p * n + q];
      if (sgn(c) == 0) continue;
      const Matrix& aw = W.action[q];
      const Matrix& av = V.action[p];
      for (std::size_t i = 0; i < dv; ++i)
        for (std::size_t j = 0; j < dw; ++j)
          for (std::size_t x = 0; x < dw; ++x) {
            if (sgn(aw(x, j)) == 0) continue;
            for (std::size_t y = 0; y < dv; ++y)
              if (sgn(av(y, i)) != 0) psi(x * dv + y, i * dw + j) += c * aw(x, j) * av(y, i);
          }
    }
  return psi;
}

/// Parities read off a matrix that must be diagonal with entries +1 / -1.
inline std::vector<int> parity_from_involution(const Matrix& m, const std::string& what) {
  std::vector<int> parity(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (i != j && sgn(m(i, j)) != 0) throw grading_error(what + ": basis is not homogeneous");
      if (i == j) {
        if (m(i, i) == 1) parity[i] = 0;
        else if (m(i, i) == -1) parity[i] = 1;
        else throw grading_error(what + ": diagonal entry is not +1 or -1");
      }
    }
  return parity;
}

struct GradingPair {
  Grading action_grading;
  Grading coaction_grading;
  bool equal = false;
};

/// |a| = 1 iff g.a = -a; deg(a) = 1 iff (id (x) pi) rho(a) = a (x) g, with pi
/// keeping the unit and grouplike coordinates.
inline GradingPair gradings(const YDAlgebra& A) {
  const auto g = A.H->grouplike();
  if (!g) throw grading_error("gradings: Hopf algebra has no grouplike index");
  const std::size_t n = A.H->dim();
  GradingPair out;
  out.action_grading.parity = parity_from_involution(A.action.at(*g), "action grading");
  A.require_coaction();
  out.coaction_grading.parity.resize(A.dim);
  for (std::size_t i = 0; i < A.dim; ++i) {
    Vec one = zero_vec(A.dim), grp = zero_vec(A.dim);
    for (std::size_t p = 0; p < A.dim; ++p) {
      one[p] = A.coaction(p * n, i);
      grp[p] = A.coaction(p * n + *g, i);
    }
    const Vec ei = unit_vec(A.dim, i);
    if (one == ei && is_zero(grp)) out.coaction_grading.parity[i] = 0;
    else if (grp == ei && is_zero(one)) out.coaction_grading.parity[i] = 1;
    else throw grading_error("coaction grading: basis is not homogeneous");
  }
  out.equal = out.action_grading.parity == out.coaction_grading.parity;
  return out;
}

namespace detail {

inline Matrix columns_of(const std::vector<Vec>& basis, std::size_t d) { return Matrix::from_columns(d, basis); }

inline bool in_span(const Matrix& span, const Vec& v) { return solve_linear(span, v).consistent(); }

}  // namespace detail

struct Centralizers {
  std::vector<Vec> left;
  std::vector<Vec> right;
};

/// C^l = {a : b a = a0 (a1 . b)} and C^r = {a : a b = b0 (b1 . a)} for all b in B.
inline Centralizers yd_centralizers(const YDAlgebra& A, const std::vector<Vec>& B) {
  const std::size_t d = A.dim;
  const std::size_t n = A.H->dim();
  if (B.empty()) return {kernel(Matrix(1, d)), kernel(Matrix(1, d))};
  const Matrix span = detail::columns_of(B, d);
  for (const auto& b : B) {
    for (std::size_t l = 0; l < n; ++l)
      if (!detail::in_span(span, A.act(l, b))) throw std::invalid_argument("yd_centralizers: B is not closed under the action");
    const Vec r = A.coact(b);
    for (std::size_t q = 0; q < n; ++q) {
      Vec slice = zero_vec(d);
      for (std::size_t p = 0; p < d; ++p) slice[p] = r[p * n + q];
      if (!detail::in_span(span, slice)) throw std::invalid_argument("yd_centralizers: B is not closed under the coaction");
    }
  }
  std::vector<Matrix> lrows, rrows;
  for (const auto& b : B) {
    Matrix L(d, d), R(d, d);
    for (std::size_t i = 0; i < d; ++i) {
      Vec lcol = A.mul(b, A.basis(i));
      A.for_coaction(i, [&](const Rational& c, std::size_t p, std::size_t q) {
        axpy(lcol, -c, A.mul(A.basis(p), A.action[q] * b));
      });
      L.set_col(i, lcol);
      Vec rcol = A.mul(A.basis(i), b);
      for (std::size_t j = 0; j < d; ++j) {
        if (sgn(b[j]) == 0) continue;
        A.for_coaction(j, [&](const Rational& c, std::size_t p, std::size_t q) {
          axpy(rcol, -b[j] * c, A.mul(A.basis(p), A.action[q].col(i)));
        });
      }
      R.set_col(i, rcol);
    }
    lrows.push_back(L);
    rrows.push_back(R);
  }
  return {kernel(vstack(lrows)), kernel(vstack(rrows))};
}

/// Odd v (for `parity`) with x.a = v (c.a) - a v for all a, or none.
inline std::optional<Vec> inner_witness(const YDAlgebra& A, std::size_t x, std::size_t c, const Grading& parity) {
  A.require_action();
  const std::size_t d = A.dim;
  std::vector<std::size_t> odd;
  for (std::size_t i = 0; i < d; ++i)
    if (parity.parity.at(i) == 1) odd.push_back(i);
  Matrix sys(d * d, odd.size());
  Vec rhs = zero_vec(d * d);
  for (std::size_t a = 0; a < d; ++a) {
    const Vec ca = A.action[c].col(a);
    const Vec xa = A.action[x].col(a);
    for (std::size_t k = 0; k < d; ++k) rhs[a * d + k] = xa[k];
    for (std::size_t o = 0; o < odd.size(); ++o) {
      const Vec term = A.mul(A.basis(odd[o]), ca) - A.alg.product(a, odd[o]);
      for (std::size_t k = 0; k < d; ++k) sys(a * d + k, o) = term[k];
    }
  }
  const LinearSolution sol = solve_linear(sys, rhs);
  if (!sol.consistent()) return std::nullopt;
  Vec v = zero_vec(d);
  for (std::size_t o = 0; o < odd.size(); ++o) v[odd[o]] = (*sol.particular)[o];
  return v;
}

class normalization_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

namespace detail {

/// Scalar lambda with x = lambda * unit, if any.
inline std::optional<Rational> scalar_part(const Vec& x, const Vec& unit) {
  std::size_t k = 0;
  while (k < unit.size() && sgn(unit[k]) == 0) ++k;
  if (k == unit.size()) return std::nullopt;
  const Rational lambda = x[k] / unit[k];
  if (x != lambda * unit) return std::nullopt;
  return lambda;
}

/// The unique (up to scale) u with u a = (g.a) u, normalized to u^2 = 1.
inline std::optional<Vec> conjugating_involution(const YDAlgebra& A, std::size_t g) {
  const std::size_t d = A.dim;
  Matrix sys(d * d, d);
  for (std::size_t a = 0; a < d; ++a) {
    const Vec ga = A.action[g].col(a);
    for (std::size_t i = 0; i < d; ++i) {
      const Vec term = A.alg.product(i, a) - A.mul(ga, A.basis(i));
      for (std::size_t k = 0; k < d; ++k) sys(a * d + k, i) = term[k];
    }
  }
  const auto ker = kernel(sys);
  if (ker.empty()) return std::nullopt;
  if (ker.size() > 1) throw std::domain_error("strongly inner search: carrier is not central simple");
  const Vec& u = ker.front();
  const auto sq = scalar_part(A.mul(u, u), A.unit());
  if (!sq || sgn(*sq) == 0) throw normalization_error("no rational normalization: u^2 is not a nonzero scalar");
  const auto root = rational_is_square(*sq);
  if (!root) throw normalization_error("no rational normalization: u^2 = " + to_string(*sq) + " is not a square in Q");
  return Rational(1 / *root) * u;
}

/// Solves gen.a = w L(a) + R(a) w style systems: for each basis a,
/// sum_i w_i * term(i, a) = target(a); plus w anticommuting with u.
template <class Term>
std::optional<Vec> solve_anticommuting(const YDAlgebra& A, const Vec& u, const Matrix& target_action, Term term) {
  const std::size_t d = A.dim;
  Matrix sys(d * d + d, d);
  Vec rhs = zero_vec(d * d + d);
  for (std::size_t a = 0; a < d; ++a) {
    const Vec t = target_action.col(a);
    for (std::size_t k = 0; k < d; ++k) rhs[a * d + k] = t[k];
    for (std::size_t i = 0; i < d; ++i) {
      const Vec col = term(i, a);
      for (std::size_t k = 0; k < d; ++k) sys(a * d + k, i) = col[k];
    }
  }
  for (std::size_t i = 0; i < d; ++i) {
    const Vec ac = A.mul(A.basis(i), u) + A.mul(u, A.basis(i));
    for (std::size_t k = 0; k < d; ++k) sys(d * d + k, i) = ac[k];
  }
  const LinearSolution sol = solve_linear(sys, rhs);
  if (!sol.consistent()) return std::nullopt;
  return *sol.particular;
}

}  // namespace detail

struct StronglyInnerWitness {
  Vec u;
  Vec w;
  Rational beta;
};

/// g.a = u a u^-1, h.a = w (g.a) - a w, u^2 = 1, wu + uw = 0, w^2 = beta.
/// Throws normalization_error when u cannot be scaled to an involution over Q
/// and std::domain_error when w^2 is not scalar.
inline std::optional<StronglyInnerWitness> strongly_inner_witness(const YDAlgebra& A, std::size_t g, std::size_t h) {
  A.require_action();
  const auto u = detail::conjugating_involution(A, g);
  if (!u) return std::nullopt;
  const auto w = detail::solve_anticommuting(A, *u, A.action[h], [&](std::size_t i, std::size_t a) {
    return A.mul(A.basis(i), A.action[g].col(a)) - A.alg.product(a, i);
  });
  if (!w) return std::nullopt;
  const auto beta = detail::scalar_part(A.mul(*w, *w), A.unit());
  if (!beta) throw std::domain_error("strongly inner witness: w^2 is not a scalar");
  return StronglyInnerWitness{*u, *w, *beta};
}

struct E2InnerBranch {
  int lambda = 1;
  std::optional<Vec> w1;  // image of x1
  std::optional<Vec> W2;  // image of c x2
  bool w1_square_zero = false;
  bool W2_square_zero = false;
  bool relation_holds = false;  // (c x2) x1 - x1 (c x2) = 0
  bool ok() const { return w1 && W2 && w1_square_zero && W2_square_zero && relation_holds; }
};

struct E2InnerAnalysis {
  Vec u;
  std::vector<E2InnerBranch> branches;
  bool strongly_inner() const {
    for (const auto& b : branches)
      if (b.ok()) return true;
    return false;
  }
};

/// Branch analysis for an algebra map p: E(2) -> A implementing the action:
/// u' = p(c) = +-u, then x1.f = w' f u' + f u' w' and
/// (c x2).f = W' f - u' f u' W', each with anticommutation against u'.
/// Indices follow the E(2) builder: c = 1, x1 = 2, c x2 = 5.
inline std::optional<E2InnerAnalysis> strongly_inner_e2(const YDAlgebra& A) {
  A.require_action();
  if (A.H->dim() != 8) throw std::invalid_argument("strongly_inner_e2: expects an E(2)-module algebra");
  if (!is_central_simple(A.alg)) throw std::domain_error("strongly_inner_e2: carrier is not central simple");
  const auto u0 = detail::conjugating_involution(A, 1);
  if (!u0) return std::nullopt;
  E2InnerAnalysis out{*u0, {}};
  for (int lambda : {1, -1}) {
    E2InnerBranch b;
    b.lambda = lambda;
    const Vec u = Rational(lambda) * *u0;
    b.w1 = detail::solve_anticommuting(A, u, A.action[2], [&](std::size_t i, std::size_t a) {
      const Vec fu = A.mul(A.basis(a), u);
      return A.mul(A.basis(i), fu) + A.mul(fu, A.basis(i));
    });
    b.W2 = detail::solve_anticommuting(A, u, A.action[5], [&](std::size_t i, std::size_t a) {
      const Vec ufu = A.mul(A.mul(u, A.basis(a)), u);
      return A.alg.product(i, a) - A.mul(ufu, A.basis(i));
    });
    if (b.w1) b.w1_square_zero = is_zero(A.mul(*b.w1, *b.w1));
    if (b.W2) b.W2_square_zero = is_zero(A.mul(*b.W2, *b.W2));
    if (b.w1 && b.W2) b.relation_holds = is_zero(A.mul(*b.W2, *b.w1) - A.mul(*b.w1, *b.W2));
    out.branches.push_back(std::move(b));
  }
  return out;
}

/// Action precomposed with f: source -> target; the coaction is dropped.
inline YDAlgebra restrict_along(const HopfMorphism& f, const YDAlgebra& A) {
  A.require_action();
  if (A.H->dim() != f.target->dim()) throw std::invalid_argument("restrict_along: algebra is not over the target");
  std::vector<Matrix> action;
  for (std::size_t l = 0; l < f.source->dim(); ++l) action.push_back(A.action_of(f.matrix.col(l)));
  return YDAlgebra(f.source, A.alg, std::move(action), Matrix(0, 0));
}

inline YDModule restrict_along(const HopfMorphism& f, const YDModule& M) {
  M.require_action();
  std::vector<Matrix> action;
  for (std::size_t l = 0; l < f.source->dim(); ++l) action.push_back(M.action_of(f.matrix.col(l)));
  return YDModule{f.source, M.dim, std::move(action), Matrix(0, 0)};
}

/// D(H)-action with (f_i >< e_j).m = m0 f_i(m1) applied to e_j.m.
inline std::vector<Matrix> yd_to_double_action(const YDModule& M, const DrinfeldDouble& dd) {
  M.require_action();
  M.require_coaction();
  const std::size_t n = dd.base_dim;
  std::vector<Matrix> dual(n, Matrix(M.dim, M.dim));
  for (std::size_t i = 0; i < M.dim; ++i)
    M.for_coaction(i, [&](const Rational& c, std::size_t p, std::size_t q) { dual[q](p, i) += c; });
  std::vector<Matrix> action;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) action.push_back(dual[i] * M.action[j]);
  return action;
}

inline YDModule yd_to_double(const YDModule& M, const DrinfeldDouble& dd) {
  return YDModule{dd.D, M.dim, yd_to_double_action(M, dd), Matrix(0, 0)};
}

inline YDAlgebra yd_to_double(const YDAlgebra& A, const DrinfeldDouble& dd) {
  return YDAlgebra(dd.D, A.alg, yd_to_double_action(A, dd), Matrix(0, 0));
}

/// Action restricted to eps >< H; rho(m) = sum_i (f_i >< 1).m (x) e_i.
inline std::pair<std::vector<Matrix>, Matrix> double_to_yd_data(const YDModule& M, const DrinfeldDouble& dd) {
  M.require_action();
  const std::size_t n = dd.base_dim;
  std::vector<Matrix> action;
  for (std::size_t j = 0; j < n; ++j) action.push_back(M.action_of(dd.base_part(unit_vec(n, j))));
  Matrix coaction(M.dim * n, M.dim);
  for (std::size_t i = 0; i < n; ++i) {
    const Matrix fi = M.action_of(dd.dual_part(unit_vec(n, i)));
    for (std::size_t m = 0; m < M.dim; ++m)
      for (std::size_t p = 0; p < M.dim; ++p) coaction(p * n + i, m) = fi(p, m);
  }
  return {std::move(action), std::move(coaction)};
}

inline YDModule double_to_yd(const YDModule& M, const HopfPtr& base, const DrinfeldDouble& dd) {
  auto [action, coaction] = double_to_yd_data(M, dd);
  return YDModule{base, M.dim, std::move(action), std::move(coaction)};
}

inline YDAlgebra double_to_yd(const YDAlgebra& A, const HopfPtr& base, const DrinfeldDouble& dd) {
  auto [action, coaction] = double_to_yd_data(A, dd);
  return YDAlgebra(base, A.alg, std::move(action), std::move(coaction));
}

/// Checks that the linear map iso: A -> B (column j = image of e_j) is an
/// algebra isomorphism intertwining whichever structures both carry.
inline AxiomReport check_yd_isomorphism(const YDAlgebra& A, const YDAlgebra& B, const Matrix& iso) {
  AxiomReport rep;
  if (iso.rows() != B.dim || iso.cols() != A.dim || sgn(det(iso)) == 0) {
    rep.add("bijective", false, "map is not a square invertible matrix");
    return rep;
  }
  std::string bad;
  if (iso * A.unit() != B.unit()) bad = "unit not preserved";
  for (std::size_t i = 0; i < A.dim && bad.empty(); ++i)
    for (std::size_t j = 0; j < A.dim && bad.empty(); ++j)
      if (iso * A.alg.product(i, j) != B.mul(iso.col(i), iso.col(j))) bad = detail::first_bad("product", i, j);
  rep.add("algebra", bad.empty(), bad);
  if (A.has_action() && B.has_action()) {
    bad.clear();
    for (std::size_t l = 0; l < A.H->dim() && bad.empty(); ++l)
      if (iso * A.action[l] != B.action[l] * iso) bad = detail::first_bad("action", l);
    rep.add("action", bad.empty(), bad);
  }
  if (A.has_coaction() && B.has_coaction()) {
    const Matrix id = Matrix::identity(A.H->dim());
    rep.add("coaction", kron(iso, id) * A.coaction == B.coaction * iso, "coaction not intertwined");
  }
  return rep;
}

}  // namespace bq
