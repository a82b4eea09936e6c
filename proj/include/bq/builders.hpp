#pragma once

#include <bit>
#include <cstddef>
#include <string>
#include <vector>

#include "bq/hopf.hpp"

namespace bq {

namespace detail {

/// Sign of x_S x_T written in increasing order, or 0 when S and T overlap.
inline int merge_sign(unsigned s, unsigned t) {
  if ((s & t) != 0) return 0;
  int swaps = 0;
  for (unsigned j = 0; j < 32; ++j)
    if ((t >> j) & 1u) swaps += std::popcount(s >> (j + 1));
  return swaps % 2 == 0 ? 1 : -1;
}

inline std::string en_label(unsigned a, unsigned mask, std::size_t n) {
  if (n == 1) {
    if (mask == 0) return a ? "g" : "1";
    return a ? "gh" : "h";
  }
  std::string s = a ? "c" : "";
  for (std::size_t i = 0; i < n; ++i)
    if ((mask >> i) & 1u) s += "x" + std::to_string(i + 1);
  return s.empty() ? "1" : s;
}

}  // namespace detail

/// E(n): grouplike c, skew-primitives x_1..x_n with c^2 = 1, x_i^2 = 0,
/// x_i c = -c x_i, x_i x_j = -x_j x_i, Delta(x_i) = 1 (x) x_i + x_i (x) c.
/// Basis c^a x_S at index a + 2 * mask(S). E(1) is Sweedler's H4 on
/// {1, g, h, gh}; E(0) is kZ2.
inline HopfPtr en_hopf(std::size_t n, std::string name) {
  const std::size_t dim = std::size_t{2} << n;
  std::vector<std::string> labels;
  for (std::size_t k = 0; k < dim; ++k) labels.push_back(detail::en_label(k & 1u, static_cast<unsigned>(k >> 1), n));
  std::vector<Vec> table(dim * dim, zero_vec(dim));
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) {
      const unsigned a = i & 1u, b = j & 1u;
      const unsigned s = static_cast<unsigned>(i >> 1), t = static_cast<unsigned>(j >> 1);
      const int merge = detail::merge_sign(s, t);
      if (merge == 0) continue;
      const int sign = merge * ((b * std::popcount(s)) % 2 == 0 ? 1 : -1);
      table[i * dim + j][((a + b) & 1u) + 2 * (s | t)] = sign;
    }
  StructureAlgebra alg(labels, unit_vec(dim, 0), table);

  auto tensor_mul2 = [&](const Vec& x, const Vec& y) { return tensor_mul({&alg, &alg}, x, y); };
  const Vec dc = kron(unit_vec(dim, 1), unit_vec(dim, 1));
  std::vector<Vec> dx(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t xi = std::size_t{2} << i;
    dx[i] = kron(unit_vec(dim, 0), unit_vec(dim, xi)) + kron(unit_vec(dim, xi), unit_vec(dim, 1));
  }
  std::vector<Vec> coproduct(dim);
  Vec counit = zero_vec(dim);
  Matrix antipode(dim, dim);
  for (std::size_t k = 0; k < dim; ++k) {
    const unsigned a = k & 1u;
    const unsigned mask = static_cast<unsigned>(k >> 1);
    Vec d = a ? dc : kron(unit_vec(dim, 0), unit_vec(dim, 0));
    Vec sk = unit_vec(dim, 0);  // S(x_{i_m}) ... S(x_{i_1}), then times S(c)^a
    for (std::size_t i = 0; i < n; ++i)
      if ((mask >> i) & 1u) {
        d = tensor_mul2(d, dx[i]);
        sk = alg.mul(alg.mul(unit_vec(dim, 1), unit_vec(dim, std::size_t{2} << i)), sk);
      }
    if (a) sk = alg.mul(sk, unit_vec(dim, 1));
    coproduct[k] = d;
    counit[k] = mask == 0 ? 1 : 0;
    antipode.set_col(k, sk);
  }
  const Matrix antipode_inv = inverse(antipode);
  return make_hopf(HopfAlgebra(std::move(name), std::move(alg), std::move(coproduct), std::move(counit), antipode,
                               antipode_inv, std::size_t{1}));
}

inline HopfPtr kz2_hopf() { return en_hopf(0, "kZ2"); }
inline HopfPtr h4_hopf() { return en_hopf(1, "H4"); }
inline HopfPtr e2_hopf() { return en_hopf(2, "E2"); }

/// H4* on the dual basis {1*, g*, h*, (gh)*}; its grouplike 1* - g* sits
/// outside the basis, so no grouplike index is recorded.
inline HopfPtr h4_dual() { return dual_hopf(*h4_hopf(), "H4dual"); }

/// phi: H4 -> H4*, 1 -> 1*+g*, g -> 1*-g*, h -> h*+(gh)*, gh -> h*-(gh)*.
inline Matrix phi_matrix() {
  return Matrix{{1, 1, 0, 0}, {1, -1, 0, 0}, {0, 0, 1, 1}, {0, 0, 1, -1}};
}

inline HopfMorphism phi_morphism(const HopfPtr& h4, const HopfPtr& h4dual) {
  return HopfMorphism{h4, h4dual, phi_matrix()};
}

inline DrinfeldDouble dh4() { return drinfeld_double(h4_hopf(), "DH4"); }

}  // namespace bq
