#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace bq {

/// Exact scalar. mpq_class keeps values canonical (reduced, positive
/// denominator) after every arithmetic operation.
using Rational = mpq_class;
using Integer = mpz_class;

class parse_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Parses "p" or "p/q" (optional sign, decimal digits only).
inline Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto valid_int = [](std::string_view v, bool allow_sign) {
    if (v.empty()) return false;
    std::size_t i = 0;
    if (allow_sign && (v[0] == '-' || v[0] == '+')) i = 1;
    if (i == v.size()) return false;
    for (; i < v.size(); ++i)
      if (v[i] < '0' || v[i] > '9') return false;
    return true;
  };
  const auto slash = s.find('/');
  if (slash == std::string::npos) {
    if (!valid_int(s, true)) throw parse_error("not a rational: '" + s + "'");
  } else {
    if (!valid_int(std::string_view(s).substr(0, slash), true) ||
        !valid_int(std::string_view(s).substr(slash + 1), false))
      throw parse_error("not a rational: '" + s + "'");
  }
  if (!s.empty() && s[0] == '+') s.erase(0, 1);
  Rational q;
  if (q.set_str(s, 10) != 0) throw parse_error("not a rational: '" + s + "'");
  if (q.get_den() == 0) throw parse_error("zero denominator: '" + s + "'");
  q.canonicalize();
  return q;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

/// Returns the non-negative square root when q is the square of a rational.
inline std::optional<Rational> rational_sqrt(const Rational& q) {
  if (sgn(q) < 0) return std::nullopt;
  if (sgn(q) == 0) return Rational(0);
  const Integer& num = q.get_num();
  const Integer& den = q.get_den();
  if (mpz_perfect_square_p(num.get_mpz_t()) == 0 || mpz_perfect_square_p(den.get_mpz_t()) == 0)
    return std::nullopt;
  Integer rn, rd;
  mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
  Rational root(rn, rd);
  root.canonicalize();
  return root;
}

/// Yes-with-root only for strictly positive squares.
inline std::optional<Rational> rational_is_square(const Rational& q) {
  if (sgn(q) <= 0) return std::nullopt;
  return rational_sqrt(q);
}

/// Squarefree integer representing the class of a nonzero rational modulo
/// squares: p/q ~ p*q ~ sign * (squarefree kernel of |p*q|).
inline Integer squarefree_class(const Rational& q) {
  if (sgn(q) == 0) throw std::invalid_argument("squarefree_class of zero");
  Integer n = q.get_num() * q.get_den();
  const int sign = sgn(n);
  n = abs(n);
  Integer result = 1;
  for (Integer p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e % 2 == 1) result *= p;
  }
  result *= n;
  return sign * result;
}

}  // namespace bq
