#pragma once

#include <cstddef>
#include <vector>

#include "bq/algebra.hpp"
#include "bq/matrix.hpp"

namespace bq {

/// Decodes a left-major flat index into per-factor indices.
inline std::vector<std::size_t> split_index(std::size_t flat, const std::vector<std::size_t>& dims) {
  std::vector<std::size_t> idx(dims.size());
  for (std::size_t k = dims.size(); k-- > 0;) {
    idx[k] = flat % dims[k];
    flat /= dims[k];
  }
  return idx;
}

inline std::size_t join_index(const std::vector<std::size_t>& idx, const std::vector<std::size_t>& dims) {
  std::size_t flat = 0;
  for (std::size_t k = 0; k < dims.size(); ++k) flat = flat * dims[k] + idx[k];
  return flat;
}

inline std::size_t product_of(const std::vector<std::size_t>& dims) {
  std::size_t p = 1;
  for (auto d : dims) p *= d;
  return p;
}

/// (f_1 (x) ... (x) f_k)(t) for t in V_1 (x) ... (x) V_k.
inline Vec tensor_apply(const std::vector<const Matrix*>& maps, const Vec& t) {
  std::vector<std::size_t> in_dims, out_dims;
  for (const auto* m : maps) {
    in_dims.push_back(m->cols());
    out_dims.push_back(m->rows());
  }
  if (t.size() != product_of(in_dims)) throw dimension_error("tensor_apply: length mismatch");
  Vec out = zero_vec(product_of(out_dims));
  for (std::size_t flat = 0; flat < t.size(); ++flat) {
    if (sgn(t[flat]) == 0) continue;
    const auto idx = split_index(flat, in_dims);
    Vec term{t[flat]};
    for (std::size_t k = 0; k < maps.size(); ++k) term = kron(term, maps[k]->col(idx[k]));
    axpy(out, 1, term);
  }
  return out;
}

/// Product in the tensor product algebra A_1 (x) ... (x) A_k.
inline Vec tensor_mul(const std::vector<const StructureAlgebra*>& algs, const Vec& x, const Vec& y) {
  std::vector<std::size_t> dims;
  for (const auto* a : algs) dims.push_back(a->dim());
  const std::size_t total = product_of(dims);
  if (x.size() != total || y.size() != total) throw dimension_error("tensor_mul: length mismatch");
  Vec out = zero_vec(total);
  std::vector<std::size_t> nz_y;
  for (std::size_t fy = 0; fy < total; ++fy)
    if (sgn(y[fy]) != 0) nz_y.push_back(fy);
  for (std::size_t fx = 0; fx < total; ++fx) {
    if (sgn(x[fx]) == 0) continue;
    const auto ix = split_index(fx, dims);
    for (std::size_t fy : nz_y) {
      const auto iy = split_index(fy, dims);
      Vec term{x[fx] * y[fy]};
      for (std::size_t k = 0; k < algs.size(); ++k) term = kron(term, algs[k]->product(ix[k], iy[k]));
      axpy(out, 1, term);
    }
  }
  return out;
}

/// Swaps the factors of t in V (x) W, returning an element of W (x) V.
inline Vec flip(const Vec& t, std::size_t dim_v, std::size_t dim_w) {
  if (t.size() != dim_v * dim_w) throw dimension_error("flip: length mismatch");
  Vec out = zero_vec(t.size());
  for (std::size_t i = 0; i < dim_v; ++i)
    for (std::size_t j = 0; j < dim_w; ++j) out[j * dim_v + i] = t[i * dim_w + j];
  return out;
}

/// Places the two factors of r in H (x) H at positions (first, second) of
/// H^{(x)3}, filling the remaining slot with `unit`.
inline Vec leg_embed(const Vec& r, const Vec& unit, std::size_t first, std::size_t second) {
  const std::size_t n = unit.size();
  if (r.size() != n * n) throw dimension_error("leg_embed: length mismatch");
  const std::vector<std::size_t> dims{n, n, n};
  Vec out = zero_vec(n * n * n);
  const std::size_t third = 3 - first - second;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (sgn(r[i * n + j]) == 0) continue;
      for (std::size_t u = 0; u < n; ++u) {
        if (sgn(unit[u]) == 0) continue;
        std::vector<std::size_t> idx(3);
        idx[first] = i;
        idx[second] = j;
        idx[third] = u;
        out[join_index(idx, dims)] += r[i * n + j] * unit[u];
      }
    }
  return out;
}

}  // namespace bq
