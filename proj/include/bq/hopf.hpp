#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bq/algebra.hpp"
#include "bq/matrix.hpp"
#include "bq/tensor.hpp"

namespace bq {

/// Finite-dimensional Hopf algebra as structure constants.
///
/// coproduct[i] is Delta(e_i) in H (x) H (index p * dim + q for e_p (x) e_q);
/// antipode / antipode_inv are dim x dim matrices whose column j is S(e_j).
/// `grouplike` optionally names the grouplike generator (g in H4, c in E(2))
/// used for the two Z2-gradings; the projection onto k<grouplike> keeps the
/// coefficients of e_0 (the unit) and of the grouplike and drops the rest.
class HopfAlgebra {
 public:
  HopfAlgebra(std::string name, StructureAlgebra alg, std::vector<Vec> coproduct, Vec counit, Matrix antipode,
              Matrix antipode_inv, std::optional<std::size_t> grouplike = std::nullopt)
      : name_(std::move(name)),
        alg_(std::move(alg)),
        coproduct_(std::move(coproduct)),
        counit_(std::move(counit)),
        antipode_(std::move(antipode)),
        antipode_inv_(std::move(antipode_inv)),
        grouplike_(grouplike) {
    const std::size_t n = alg_.dim();
    if (coproduct_.size() != n) throw dimension_error("HopfAlgebra: coproduct needs dim entries");
    for (const auto& d : coproduct_)
      if (d.size() != n * n) throw dimension_error("HopfAlgebra: coproduct entry length != dim^2");
    if (counit_.size() != n) throw dimension_error("HopfAlgebra: counit length != dim");
    if (antipode_.rows() != n || antipode_.cols() != n || antipode_inv_.rows() != n || antipode_inv_.cols() != n)
      throw dimension_error("HopfAlgebra: antipode must be dim x dim");
    coproduct_matrix_ = Matrix::from_columns(n * n, coproduct_);
    counit_matrix_ = Matrix(1, n);
    for (std::size_t i = 0; i < n; ++i) counit_matrix_(0, i) = counit_[i];
  }

  const std::string& name() const { return name_; }
  const StructureAlgebra& alg() const { return alg_; }
  std::size_t dim() const { return alg_.dim(); }
  const std::vector<std::string>& labels() const { return alg_.labels(); }
  const Vec& unit() const { return alg_.unit(); }
  const std::vector<Vec>& coproduct() const { return coproduct_; }
  const Vec& coproduct(std::size_t i) const { return coproduct_[i]; }
  const Vec& counit() const { return counit_; }
  const Matrix& antipode() const { return antipode_; }
  const Matrix& antipode_inv() const { return antipode_inv_; }
  const Matrix& coproduct_matrix() const { return coproduct_matrix_; }
  const Matrix& counit_matrix() const { return counit_matrix_; }
  std::optional<std::size_t> grouplike() const { return grouplike_; }

  Vec basis(std::size_t i) const { return unit_vec(dim(), i); }
  Vec mul(const Vec& x, const Vec& y) const { return alg_.mul(x, y); }
  Vec delta(const Vec& x) const { return coproduct_matrix_ * x; }
  Rational eps(const Vec& x) const {
    Rational s = 0;
    for (std::size_t i = 0; i < x.size(); ++i) s += counit_[i] * x[i];
    return s;
  }
  Vec S(const Vec& x) const { return antipode_ * x; }
  Vec S_inv(const Vec& x) const { return antipode_inv_ * x; }

  /// (Delta (x) id) Delta(x) in H^{(x)3}.
  Vec delta2(const Vec& x) const {
    const Matrix id = Matrix::identity(dim());
    return tensor_apply({&coproduct_matrix_, &id}, delta(x));
  }

  /// Product in H (x) H.
  Vec mul2(const Vec& x, const Vec& y) const { return tensor_mul({&alg_, &alg_}, x, y); }
  Vec mul3(const Vec& x, const Vec& y) const { return tensor_mul({&alg_, &alg_, &alg_}, x, y); }

  std::size_t index_of(const std::string& label) const { return alg_.index_of(label); }

 private:
  std::string name_;
  StructureAlgebra alg_;
  std::vector<Vec> coproduct_;
  Vec counit_;
  Matrix antipode_;
  Matrix antipode_inv_;
  std::optional<std::size_t> grouplike_;
  Matrix coproduct_matrix_;
  Matrix counit_matrix_;
};

using HopfPtr = std::shared_ptr<const HopfAlgebra>;

inline HopfPtr make_hopf(HopfAlgebra h) { return std::make_shared<const HopfAlgebra>(std::move(h)); }

namespace detail {

inline std::string first_bad(const std::string& what, std::size_t i, std::size_t j = static_cast<std::size_t>(-1)) {
  std::string s = what + " fails at e" + std::to_string(i);
  if (j != static_cast<std::size_t>(-1)) s += ", e" + std::to_string(j);
  return s;
}

}  // namespace detail

inline AxiomReport check_hopf_axioms(const HopfAlgebra& h) {
  AxiomReport rep;
  rep.append(to_axiom_report(check_algebra_axioms(h.alg())), "algebra.");
  const std::size_t n = h.dim();
  const Matrix id = Matrix::identity(n);

  {
    std::string bad;
    for (std::size_t i = 0; i < n && bad.empty(); ++i) {
      const Vec d = h.coproduct(i);
      const Vec left = tensor_apply({&h.coproduct_matrix(), &id}, d);
      const Vec right = tensor_apply({&id, &h.coproduct_matrix()}, d);
      if (left != right) bad = detail::first_bad("coassociativity", i);
    }
    rep.add("coassociativity", bad.empty(), bad);
  }
  {
    std::string bad;
    for (std::size_t i = 0; i < n && bad.empty(); ++i) {
      const Vec d = h.coproduct(i);
      if (tensor_apply({&h.counit_matrix(), &id}, d) != h.basis(i) ||
          tensor_apply({&id, &h.counit_matrix()}, d) != h.basis(i))
        bad = detail::first_bad("counit law", i);
    }
    rep.add("counit", bad.empty(), bad);
  }
  {
    std::string bad;
    if (h.delta(h.unit()) != kron(h.unit(), h.unit())) bad = "Delta(1) != 1 (x) 1";
    for (std::size_t i = 0; i < n && bad.empty(); ++i)
      for (std::size_t j = 0; j < n && bad.empty(); ++j)
        if (h.delta(h.alg().product(i, j)) != h.mul2(h.coproduct(i), h.coproduct(j)))
          bad = detail::first_bad("Delta multiplicativity", i, j);
    rep.add("coproduct_is_algebra_map", bad.empty(), bad);
  }
  {
    std::string bad;
    if (h.eps(h.unit()) != 1) bad = "eps(1) != 1";
    for (std::size_t i = 0; i < n && bad.empty(); ++i)
      for (std::size_t j = 0; j < n && bad.empty(); ++j)
        if (h.eps(h.alg().product(i, j)) != h.counit()[i] * h.counit()[j])
          bad = detail::first_bad("eps multiplicativity", i, j);
    rep.add("counit_is_algebra_map", bad.empty(), bad);
  }
  {
    std::string bad;
    for (std::size_t i = 0; i < n && bad.empty(); ++i) {
      const Vec d = h.coproduct(i);
      const Vec target = h.eps(h.basis(i)) * h.unit();
      Vec left = zero_vec(n), right = zero_vec(n);
      for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q) {
          const Rational& c = d[p * n + q];
          if (sgn(c) == 0) continue;
          axpy(left, c, h.mul(h.S(h.basis(p)), h.basis(q)));
          axpy(right, c, h.mul(h.basis(p), h.S(h.basis(q))));
        }
      if (left != target || right != target) bad = detail::first_bad("antipode law", i);
    }
    rep.add("antipode", bad.empty(), bad);
  }
  rep.add("antipode_inverse",
          h.antipode() * h.antipode_inv() == id && h.antipode_inv() * h.antipode() == id,
          "S o S^-1 != id");
  return rep;
}

/// Quasitriangular structure R in H (x) H (left factor major).
struct QTStructure {
  HopfPtr H;
  Vec R;
  Vec R_inv;

  QTStructure(HopfPtr h, Vec r) : H(std::move(h)), R(std::move(r)) {
    if (R.size() != H->dim() * H->dim()) throw dimension_error("QTStructure: R length != dim^2");
    const Matrix id = Matrix::identity(H->dim());
    R_inv = tensor_apply({&H->antipode(), &id}, R);
  }
};

struct QTReport {
  AxiomReport axioms;
  bool triangular = false;
};

inline QTReport check_quasitriangular(const QTStructure& qt) {
  const HopfAlgebra& h = *qt.H;
  const std::size_t n = h.dim();
  const Matrix id = Matrix::identity(n);
  const Vec one2 = kron(h.unit(), h.unit());
  QTReport out;
  const Vec r13 = leg_embed(qt.R, h.unit(), 0, 2);
  const Vec r23 = leg_embed(qt.R, h.unit(), 1, 2);
  const Vec r12 = leg_embed(qt.R, h.unit(), 0, 1);
  out.axioms.add("delta_tensor_id", tensor_apply({&h.coproduct_matrix(), &id}, qt.R) == h.mul3(r13, r23),
                 "(Delta (x) id)R != R13 R23");
  out.axioms.add("id_tensor_delta", tensor_apply({&id, &h.coproduct_matrix()}, qt.R) == h.mul3(r13, r12),
                 "(id (x) Delta)R != R13 R12");
  std::string bad;
  for (std::size_t i = 0; i < n && bad.empty(); ++i) {
    const Vec d = h.coproduct(i);
    if (h.mul2(qt.R, d) != h.mul2(flip(d, n, n), qt.R)) bad = detail::first_bad("R Delta = Delta^cop R", i);
  }
  out.axioms.add("intertwines_coproduct", bad.empty(), bad);
  out.axioms.add("invertible", h.mul2(qt.R, qt.R_inv) == one2 && h.mul2(qt.R_inv, qt.R) == one2,
                 "R (S (x) id)(R) != 1 (x) 1");
  out.triangular = h.mul2(flip(qt.R, n, n), qt.R) == one2;
  return out;
}

/// Coquasitriangular form r on H (x) H; r(i, j) = r(e_i (x) e_j).
struct CoQTStructure {
  HopfPtr H;
  Matrix r;
  Matrix r_inv;

  CoQTStructure(HopfPtr h, Matrix form) : H(std::move(h)), r(std::move(form)) {
    if (r.rows() != H->dim() || r.cols() != H->dim()) throw dimension_error("CoQTStructure: form must be dim x dim");
    r_inv = H->antipode().transpose() * r;  // r^-1(x, y) = r(S x, y)
  }

  Rational eval(const Vec& x, const Vec& y) const { return eval_form(r, x, y); }

  static Rational eval_form(const Matrix& m, const Vec& x, const Vec& y) {
    Rational s = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (sgn(x[i]) == 0) continue;
      for (std::size_t j = 0; j < y.size(); ++j)
        if (sgn(y[j]) != 0) s += x[i] * m(i, j) * y[j];
    }
    return s;
  }
};

namespace detail {

/// sum over Delta(x) = x1 (x) x2 of f(x1, x2) for basis indices.
template <class F>
void for_coproduct(const HopfAlgebra& h, const Vec& d, F f) {
  const std::size_t n = h.dim();
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q)
      if (sgn(d[p * n + q]) != 0) f(d[p * n + q], p, q);
}

/// Convolution of two bilinear forms on H: (a * b)(x, y) = a(x1, y1) b(x2, y2).
inline Matrix convolve_forms(const HopfAlgebra& h, const Matrix& a, const Matrix& b) {
  const std::size_t n = h.dim();
  Matrix out(n, n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      Rational s = 0;
      for_coproduct(h, h.coproduct(x), [&](const Rational& cx, std::size_t x1, std::size_t x2) {
        for_coproduct(h, h.coproduct(y), [&](const Rational& cy, std::size_t y1, std::size_t y2) {
          s += cx * cy * a(x1, y1) * b(x2, y2);
        });
      });
      out(x, y) = s;
    }
  return out;
}

}  // namespace detail

inline QTReport check_coquasitriangular(const CoQTStructure& cq) {
  const HopfAlgebra& h = *cq.H;
  const std::size_t n = h.dim();
  QTReport out;
  std::string bad_mult_left, bad_mult_right;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) {
        if (bad_mult_left.empty()) {
          // r(xy, z) = r(x, z1) r(y, z2)
          const Rational lhs = cq.eval(h.alg().product(x, y), h.basis(z));
          Rational rhs = 0;
          detail::for_coproduct(h, h.coproduct(z), [&](const Rational& c, std::size_t z1, std::size_t z2) {
            rhs += c * cq.r(x, z1) * cq.r(y, z2);
          });
          if (lhs != rhs) bad_mult_left = "r(xy,z) at " + std::to_string(x) + "," + std::to_string(y) + "," + std::to_string(z);
        }
        if (bad_mult_right.empty()) {
          // r(x, yz) = r(x1, z) r(x2, y)
          const Rational lhs = cq.eval(h.basis(x), h.alg().product(y, z));
          Rational rhs = 0;
          detail::for_coproduct(h, h.coproduct(x), [&](const Rational& c, std::size_t x1, std::size_t x2) {
            rhs += c * cq.r(x1, z) * cq.r(x2, y);
          });
          if (lhs != rhs) bad_mult_right = "r(x,yz) at " + std::to_string(x) + "," + std::to_string(y) + "," + std::to_string(z);
        }
      }
  out.axioms.add("multiplicative_left", bad_mult_left.empty(), bad_mult_left);
  out.axioms.add("multiplicative_right", bad_mult_right.empty(), bad_mult_right);
  std::string bad;
  for (std::size_t x = 0; x < n && bad.empty(); ++x)
    for (std::size_t y = 0; y < n && bad.empty(); ++y) {
      // r(x1, y1) x2 y2 = y1 x1 r(x2, y2)
      Vec lhs = zero_vec(n), rhs = zero_vec(n);
      detail::for_coproduct(h, h.coproduct(x), [&](const Rational& cx, std::size_t x1, std::size_t x2) {
        detail::for_coproduct(h, h.coproduct(y), [&](const Rational& cy, std::size_t y1, std::size_t y2) {
          axpy(lhs, cx * cy * cq.r(x1, y1), h.alg().product(x2, y2));
          axpy(rhs, cx * cy * cq.r(x2, y2), h.alg().product(y1, x1));
        });
      });
      if (lhs != rhs) bad = detail::first_bad("commutation rule", x, y);
    }
  out.axioms.add("intertwines_product", bad.empty(), bad);
  Matrix eps2(n, n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) eps2(x, y) = h.counit()[x] * h.counit()[y];
  out.axioms.add("convolution_invertible",
                 detail::convolve_forms(h, cq.r, cq.r_inv) == eps2 && detail::convolve_forms(h, cq.r_inv, cq.r) == eps2,
                 "r * r^-1 != eps (x) eps");
  out.triangular = cq.r_inv == cq.r.transpose();
  return out;
}

/// Linear map source -> target; column j is the image of source basis j.
struct HopfMorphism {
  HopfPtr source;
  HopfPtr target;
  Matrix matrix;

  Vec operator()(const Vec& x) const { return matrix * x; }
};

inline AxiomReport check_hopf_morphism(const HopfMorphism& f) {
  const HopfAlgebra& a = *f.source;
  const HopfAlgebra& b = *f.target;
  AxiomReport rep;
  if (f.matrix.rows() != b.dim() || f.matrix.cols() != a.dim()) {
    rep.add("shape", false, "matrix shape does not match source/target dimensions");
    return rep;
  }
  std::string bad;
  if (f(a.unit()) != b.unit()) bad = "f(1) != 1";
  for (std::size_t i = 0; i < a.dim() && bad.empty(); ++i)
    for (std::size_t j = 0; j < a.dim() && bad.empty(); ++j)
      if (f(a.alg().product(i, j)) != b.mul(f.matrix.col(i), f.matrix.col(j)))
        bad = detail::first_bad("f(xy) = f(x)f(y)", i, j);
  rep.add("algebra_map", bad.empty(), bad);
  bad.clear();
  for (std::size_t i = 0; i < a.dim() && bad.empty(); ++i) {
    if (tensor_apply({&f.matrix, &f.matrix}, a.coproduct(i)) != b.delta(f.matrix.col(i)))
      bad = detail::first_bad("(f (x) f)Delta = Delta f", i);
    else if (a.counit()[i] != b.eps(f.matrix.col(i)))
      bad = detail::first_bad("eps f = eps", i);
  }
  rep.add("coalgebra_map", bad.empty(), bad);
  rep.add("antipode", f.matrix * a.antipode() == b.antipode() * f.matrix, "f S != S f");
  return rep;
}

inline bool is_isomorphism(const HopfMorphism& f) {
  return f.matrix.is_square() && sgn(det(f.matrix)) != 0 && check_hopf_morphism(f).ok();
}

inline HopfMorphism compose(const HopfMorphism& g, const HopfMorphism& f) {
  if (f.target->dim() != g.source->dim()) throw dimension_error("compose: incompatible morphisms");
  return HopfMorphism{f.source, g.target, g.matrix * f.matrix};
}

/// (f (x) f)(R); the caller decides what to compare it with.
inline Vec push_qt(const HopfMorphism& f, const Vec& R) { return tensor_apply({&f.matrix, &f.matrix}, R); }
inline Vec push_qt(const HopfMorphism& f, const QTStructure& qt) { return push_qt(f, qt.R); }

/// H* on the dual basis: product = transpose of Delta, coproduct = transpose
/// of the product, antipode = S^T.
inline HopfPtr dual_hopf(const HopfAlgebra& h, std::string name = {}) {
  const std::size_t n = h.dim();
  std::vector<std::string> labels;
  for (const auto& l : h.labels()) labels.push_back("(" + l + ")*");
  std::vector<Vec> table(n * n, zero_vec(n));
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) table[i * n + j][k] = h.coproduct(k)[i * n + j];
  std::vector<Vec> coproduct(n, zero_vec(n * n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) coproduct[k][i * n + j] = h.alg().product(i, j)[k];
  StructureAlgebra alg(std::move(labels), h.counit(), std::move(table));
  return make_hopf(HopfAlgebra(name.empty() ? h.name() + "*" : std::move(name), std::move(alg), std::move(coproduct),
                               h.unit(), h.antipode().transpose(), h.antipode_inv().transpose()));
}

/// The canonical map H -> H** written on the double-dual basis (the identity
/// matrix); exposed for the double-dual check.
inline HopfMorphism double_dual_map(const HopfPtr& h, const HopfPtr& hdd) {
  return HopfMorphism{h, hdd, Matrix::identity(h->dim())};
}

struct DrinfeldDouble {
  HopfPtr D;
  QTStructure R;
  std::size_t base_dim;

  /// Index of f_i >< e_j.
  std::size_t index(std::size_t i, std::size_t j) const { return i * base_dim + j; }
  /// Coordinates of f >< 1 for f in H* (dual-basis coordinates).
  Vec dual_part(const Vec& f) const;
  /// Coordinates of eps >< h.
  Vec base_part(const Vec& h) const;

  Vec eps_coords;
  Vec unit_coords;
};

inline Vec DrinfeldDouble::dual_part(const Vec& f) const { return kron(f, unit_coords); }
inline Vec DrinfeldDouble::base_part(const Vec& h) const { return kron(eps_coords, h); }

/// D(H) = H^{*,cop} >< H on the basis f_i >< e_j (index i * dim + j) with
///   (f >< h)(f' >< h') = f f'(S^-1(h3) - h1) >< h2 h',
///   Delta(f >< h) = (f2 >< h1) (x) (f1 >< h2),
/// which is the multiplication under which a left-right Yetter-Drinfeld
/// module becomes a D(H)-module via (f >< 1).m = m0 f(m1).
/// Canonical R = sum_i (eps >< e_i) (x) (f_i >< 1).
inline DrinfeldDouble drinfeld_double(const HopfPtr& hp, std::string name = {}) {
  const HopfAlgebra& h = *hp;
  const std::size_t n = h.dim();
  const std::size_t N = n * n;
  if (!(h.antipode() * h.antipode_inv() == Matrix::identity(n)))
    throw std::domain_error("drinfeld_double: antipode is not invertible");

  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) labels.push_back("(" + h.labels()[i] + ")*><" + h.labels()[j]);

  // f_i f_m on the dual basis: (f_i f_m)(e_s) = Delta(e_s)[i, m].
  auto dual_mul = [&](std::size_t i, const Vec& g) {
    Vec out = zero_vec(n);
    for (std::size_t s = 0; s < n; ++s) {
      const Vec& d = h.coproduct(s);
      Rational v = 0;
      for (std::size_t m = 0; m < n; ++m)
        if (sgn(g[m]) != 0) v += g[m] * d[i * n + m];
      out[s] = v;
    }
    return out;
  };

  std::vector<Vec> table(N * N, zero_vec(N));
  for (std::size_t j = 0; j < n; ++j) {
    const Vec d2 = h.delta2(h.basis(j));
    for (std::size_t flat = 0; flat < d2.size(); ++flat) {
      if (sgn(d2[flat]) == 0) continue;
      const auto idx = split_index(flat, {n, n, n});
      const Vec left = h.S_inv(h.basis(idx[2]));
      const Vec& right = h.basis(idx[0]);
      // y -> S^-1(h3) y h1 for each basis y
      std::vector<Vec> conj(n);
      for (std::size_t m = 0; m < n; ++m) conj[m] = h.mul(h.mul(left, h.basis(m)), right);
      for (std::size_t k = 0; k < n; ++k) {
        Vec g = zero_vec(n);  // functional y -> f_k(S^-1(h3) y h1)
        for (std::size_t m = 0; m < n; ++m) g[m] = conj[m][k];
        if (is_zero(g)) continue;
        for (std::size_t i = 0; i < n; ++i) {
          const Vec fpart = dual_mul(i, g);
          if (is_zero(fpart)) continue;
          for (std::size_t l = 0; l < n; ++l) {
            const Vec hpart = h.alg().product(idx[1], l);
            axpy(table[(i * n + j) * N + (k * n + l)], d2[flat], kron(fpart, hpart));
          }
        }
      }
    }
  }

  Vec unit = kron(h.counit(), h.unit());
  StructureAlgebra alg(std::move(labels), unit, std::move(table));

  std::vector<Vec> coproduct(N, zero_vec(N * N));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        const Rational& c = h.alg().product(a, b)[i];  // Delta_{H*}(f_i) = sum [e_a e_b]_i f_a (x) f_b
        if (sgn(c) == 0) continue;
        for (std::size_t j = 0; j < n; ++j)
          detail::for_coproduct(h, h.coproduct(j), [&](const Rational& cj, std::size_t p, std::size_t q) {
            coproduct[i * n + j][(b * n + p) * N + (a * n + q)] += c * cj;
          });
      }

  Vec counit = zero_vec(N);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) counit[i * n + j] = h.unit()[i] * h.counit()[j];

  // S(f >< h) = (eps >< S(h)) (S*^-1(f) >< 1), with S*^-1(f) = f o S^-1.
  const Matrix dual_S_inv = h.antipode_inv().transpose();
  Matrix antipode(N, N);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Vec lhs = kron(h.counit(), h.S(h.basis(j)));
      const Vec rhs = kron(dual_S_inv.col(i), h.unit());
      antipode.set_col(i * n + j, alg.mul(lhs, rhs));
    }
  const Matrix antipode_inv = inverse(antipode);

  HopfPtr D = make_hopf(HopfAlgebra(name.empty() ? "D(" + h.name() + ")" : std::move(name), std::move(alg),
                                    std::move(coproduct), std::move(counit), antipode, antipode_inv));
  Vec R = zero_vec(N * N);
  for (std::size_t i = 0; i < n; ++i)
    axpy(R, 1, kron(kron(h.counit(), h.basis(i)), kron(unit_vec(n, i), h.unit())));
  return DrinfeldDouble{D, QTStructure(D, std::move(R)), n, h.counit(), h.unit()};
}

}  // namespace bq
