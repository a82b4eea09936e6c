#pragma once

#include <array>
#include <cstddef>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bq/matrix.hpp"

namespace bq {

/// Pass/fail per axiom family, with the first counterexample of each failure.
struct AxiomReport {
  struct Item {
    std::string family;
    bool passed = true;
    std::string detail;
  };
  std::vector<Item> items;

  bool ok() const {
    for (const auto& i : items)
      if (!i.passed) return false;
    return true;
  }
  bool passed(const std::string& family) const {
    for (const auto& i : items)
      if (i.family == family) return i.passed;
    throw std::out_of_range("AxiomReport: no family " + family);
  }
  void add(std::string family, bool passed, std::string detail = {}) {
    items.push_back({std::move(family), passed, std::move(detail)});
  }
  void append(const AxiomReport& other, const std::string& prefix = {}) {
    for (const auto& i : other.items) items.push_back({prefix + i.family, i.passed, i.detail});
  }
  std::string summary() const {
    std::ostringstream os;
    for (const auto& i : items)
      if (!i.passed) os << i.family << ": " << i.detail << "\n";
    return os.str();
  }
};

/// Finite-dimensional unital associative algebra given by structure
/// constants: table[i * dim + j] is the coefficient vector of e_i e_j.
class StructureAlgebra {
 public:
  StructureAlgebra() = default;
  StructureAlgebra(std::vector<std::string> labels, Vec unit, std::vector<Vec> table)
      : labels_(std::move(labels)), unit_(std::move(unit)), table_(std::move(table)) {
    const std::size_t n = labels_.size();
    if (n == 0) throw dimension_error("StructureAlgebra: dimension must be positive");
    if (unit_.size() != n) throw dimension_error("StructureAlgebra: unit length != dim");
    if (table_.size() != n * n) throw dimension_error("StructureAlgebra: table must have dim^2 entries");
    for (const auto& v : table_)
      if (v.size() != n) throw dimension_error("StructureAlgebra: product vector length != dim");
  }

  std::size_t dim() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const Vec& unit() const { return unit_; }
  const std::vector<Vec>& table() const { return table_; }
  const Vec& product(std::size_t i, std::size_t j) const { return table_[i * dim() + j]; }

  Vec basis(std::size_t i) const { return unit_vec(dim(), i); }

  Vec mul(const Vec& x, const Vec& y) const {
    const std::size_t n = dim();
    if (x.size() != n || y.size() != n) throw dimension_error("mul: element length != dim");
    Vec out = zero_vec(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (sgn(x[i]) == 0) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (sgn(y[j]) == 0) continue;
        axpy(out, x[i] * y[j], product(i, j));
      }
    }
    return out;
  }

  /// Matrix of c -> a c.
  Matrix left_mult(const Vec& a) const {
    std::vector<Vec> cols;
    for (std::size_t j = 0; j < dim(); ++j) cols.push_back(mul(a, basis(j)));
    return Matrix::from_columns(dim(), cols);
  }

  /// Matrix of c -> c a.
  Matrix right_mult(const Vec& a) const {
    std::vector<Vec> cols;
    for (std::size_t j = 0; j < dim(); ++j) cols.push_back(mul(basis(j), a));
    return Matrix::from_columns(dim(), cols);
  }

  std::size_t index_of(const std::string& label) const {
    for (std::size_t i = 0; i < labels_.size(); ++i)
      if (labels_[i] == label) return i;
    throw std::out_of_range("no basis element labelled '" + label + "'");
  }

  friend bool operator==(const StructureAlgebra& a, const StructureAlgebra& b) {
    return a.unit_ == b.unit_ && a.table_ == b.table_;
  }

 private:
  std::vector<std::string> labels_;
  Vec unit_;
  std::vector<Vec> table_;
};

/// Element bound to its parent algebra; products across parents are errors.
struct AlgebraElement {
  const StructureAlgebra* parent = nullptr;
  Vec coeffs;

  AlgebraElement(const StructureAlgebra& a, Vec c) : parent(&a), coeffs(std::move(c)) {
    if (coeffs.size() != a.dim()) throw dimension_error("AlgebraElement: length != dim");
  }

  friend bool operator==(const AlgebraElement& x, const AlgebraElement& y) {
    return x.parent == y.parent && x.coeffs == y.coeffs;
  }
};

inline AlgebraElement multiply(const AlgebraElement& x, const AlgebraElement& y) {
  if (x.parent != y.parent) throw std::invalid_argument("multiply: elements of different algebras");
  return AlgebraElement(*x.parent, x.parent->mul(x.coeffs, y.coeffs));
}

inline AlgebraElement operator*(const AlgebraElement& x, const AlgebraElement& y) { return multiply(x, y); }

struct AlgebraAxiomReport {
  std::vector<std::array<std::size_t, 3>> associativity;  // violated (i, j, l)
  std::vector<std::size_t> left_unit;                       // i with 1 e_i != e_i
  std::vector<std::size_t> right_unit;                      // i with e_i 1 != e_i
  bool ok() const { return associativity.empty() && left_unit.empty() && right_unit.empty(); }
};

inline AlgebraAxiomReport check_algebra_axioms(const StructureAlgebra& a) {
  AlgebraAxiomReport r;
  const std::size_t n = a.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Vec& ij = a.product(i, j);
      for (std::size_t l = 0; l < n; ++l) {
        if (a.mul(ij, a.basis(l)) != a.mul(a.basis(i), a.product(j, l))) r.associativity.push_back({i, j, l});
      }
    }
  for (std::size_t i = 0; i < n; ++i) {
    if (a.mul(a.unit(), a.basis(i)) != a.basis(i)) r.left_unit.push_back(i);
    if (a.mul(a.basis(i), a.unit()) != a.basis(i)) r.right_unit.push_back(i);
  }
  return r;
}

inline AxiomReport to_axiom_report(const AlgebraAxiomReport& r) {
  AxiomReport out;
  std::string detail;
  if (!r.associativity.empty()) {
    const auto& t = r.associativity.front();
    detail = "(e" + std::to_string(t[0]) + " e" + std::to_string(t[1]) + ") e" + std::to_string(t[2]) +
             " != e" + std::to_string(t[0]) + " (e" + std::to_string(t[1]) + " e" + std::to_string(t[2]) +
             "); " + std::to_string(r.associativity.size()) + " violations";
  }
  out.add("associativity", r.associativity.empty(), detail);
  out.add("unit", r.left_unit.empty() && r.right_unit.empty());
  return out;
}

inline StructureAlgebra opposite_algebra(const StructureAlgebra& a) {
  const std::size_t n = a.dim();
  std::vector<Vec> table(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) table[i * n + j] = a.product(j, i);
  return StructureAlgebra(a.labels(), a.unit(), std::move(table));
}

/// End(k^n) on the matrix-unit basis E_pq (index p * n + q), E_pq E_rs = d_qr E_ps.
/// As a linear map E_pq sends basis vector q to basis vector p.
inline StructureAlgebra endomorphism_algebra(std::size_t n) {
  if (n == 0) throw dimension_error("endomorphism_algebra: n must be >= 1");
  const std::size_t d = n * n;
  std::vector<std::string> labels;
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q) labels.push_back("E" + std::to_string(p + 1) + std::to_string(q + 1));
  Vec unit = zero_vec(d);
  for (std::size_t p = 0; p < n; ++p) unit[p * n + p] = 1;
  std::vector<Vec> table(d * d, zero_vec(d));
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q)
      for (std::size_t s = 0; s < n; ++s) table[(p * n + q) * d + (q * n + s)][p * n + s] = 1;
  return StructureAlgebra(std::move(labels), std::move(unit), std::move(table));
}

/// Coordinates of a linear map (as an n x n matrix) in the matrix-unit basis.
inline Vec matrix_to_vec(const Matrix& m) { return m.entries(); }

inline Matrix vec_to_matrix(const Vec& v, std::size_t n) {
  if (v.size() != n * n) throw dimension_error("vec_to_matrix: length != n^2");
  Matrix m(n, n);
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q) m(p, q) = v[p * n + q];
  return m;
}

/// Ordinary (unsigned) tensor product algebra, left-major basis.
inline StructureAlgebra tensor_algebra(const StructureAlgebra& a, const StructureAlgebra& b) {
  const std::size_t na = a.dim(), nb = b.dim(), d = na * nb;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < nb; ++j) labels.push_back(a.labels()[i] + "(x)" + b.labels()[j]);
  std::vector<Vec> table(d * d);
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < nb; ++j)
      for (std::size_t k = 0; k < na; ++k)
        for (std::size_t l = 0; l < nb; ++l)
          table[(i * nb + j) * d + (k * nb + l)] = kron(a.product(i, k), b.product(j, l));
  return StructureAlgebra(std::move(labels), kron(a.unit(), b.unit()), std::move(table));
}

/// Z2-grading by parity of a homogeneous basis.
struct Grading {
  std::vector<int> parity;

  static Grading trivial(std::size_t n) { return Grading{std::vector<int>(n, 0)}; }

  /// Parity of a nonzero vector supported on basis elements of one parity;
  /// -1 when the vector mixes parities.
  int parity_of(const Vec& v) const {
    int p = -1;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (sgn(v[i]) == 0) continue;
      if (p == -1) p = parity.at(i);
      else if (p != parity.at(i)) return -1;
    }
    return p == -1 ? 0 : p;
  }
};

class grading_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline bool grading_compatible(const StructureAlgebra& a, const Grading& g) {
  if (g.parity.size() != a.dim()) return false;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) {
      const Vec& p = a.product(i, j);
      if (is_zero(p)) continue;
      const int want = (g.parity[i] + g.parity[j]) % 2;
      for (std::size_t k = 0; k < a.dim(); ++k)
        if (sgn(p[k]) != 0 && g.parity[k] != want) return false;
    }
  return true;
}

namespace detail {

/// Basis of {z in span(support) : z e_i - sign(i) e_i z = 0 for all i}.
template <class SignFn>
std::vector<Vec> twisted_commutant(const StructureAlgebra& a, const std::vector<std::size_t>& support, SignFn sign) {
  const std::size_t n = a.dim();
  Matrix sys(n * n, support.size());
  for (std::size_t c = 0; c < support.size(); ++c) {
    const Vec z = a.basis(support[c]);
    for (std::size_t i = 0; i < n; ++i) {
      const Vec e = a.basis(i);
      const Vec diff = a.mul(z, e) - Rational(sign(support[c], i)) * a.mul(e, z);
      for (std::size_t k = 0; k < n; ++k) sys(i * n + k, c) = diff[k];
    }
  }
  std::vector<Vec> out;
  for (const auto& kv : kernel(sys)) {
    Vec z = zero_vec(n);
    for (std::size_t c = 0; c < support.size(); ++c) z[support[c]] = kv[c];
    out.push_back(std::move(z));
  }
  return out;
}

}  // namespace detail

inline std::vector<Vec> center(const StructureAlgebra& a) {
  std::vector<std::size_t> all(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) all[i] = i;
  return detail::twisted_commutant(a, all, [](std::size_t, std::size_t) { return 1; });
}

/// Graded center: homogeneous z with z a = (-1)^{|z||a|} a z; returned basis
/// lists even solutions first, then odd ones.
inline std::vector<Vec> super_center(const StructureAlgebra& a, const Grading& g) {
  if (!grading_compatible(a, g)) throw grading_error("super_center: grading is not compatible with multiplication");
  std::vector<Vec> out;
  for (int parity : {0, 1}) {
    std::vector<std::size_t> support;
    for (std::size_t i = 0; i < a.dim(); ++i)
      if (g.parity[i] == parity) support.push_back(i);
    if (support.empty()) continue;
    auto part = detail::twisted_commutant(a, support, [&](std::size_t zi, std::size_t ai) {
      return (g.parity[zi] * g.parity[ai]) % 2 == 1 ? -1 : 1;
    });
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

/// Matrix of A (x) A^op -> End(A), a (x) b -> (c -> a c b). Columns are
/// indexed by a * dim + b, rows by the coordinates of the image map,
/// (p * dim + q) = coefficient of e_q in the image of e_p.
inline Matrix sandwich_matrix(const StructureAlgebra& a) {
  const std::size_t n = a.dim();
  Matrix m(n * n, n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t p = 0; p < n; ++p) {
        const Vec img = a.mul(a.product(i, p), a.basis(j));
        for (std::size_t q = 0; q < n; ++q) m(p * n + q, i * n + j) = img[q];
      }
  return m;
}

inline bool is_central_simple(const StructureAlgebra& a) { return sgn(det(sandwich_matrix(a))) != 0; }

}  // namespace bq
