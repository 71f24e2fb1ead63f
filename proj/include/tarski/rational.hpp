#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace tarski {

using Rational = mpq_class;
using Integer = mpz_class;

inline std::string to_string(const Rational& q) { return q.get_str(); }

inline bool is_perfect_square(const Integer& n) {
  return sgn(n) >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

inline Integer isqrt_floor(const Integer& n) {
  Integer r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

/// Splits n > 0 as s^2 * m. Square factors with a prime divisor above the
/// trial-division bound stay inside m; callers may not assume m is fully
/// squarefree, only that the identity n = s^2 * m holds.
inline std::pair<Integer, Integer> extract_square_part(Integer n) {
  Integer s = 1;
  Integer m = 1;
  for (unsigned long p = 2; p <= 1000; p = (p == 2 ? 3 : p + 2)) {
    if (cmp(n, p * p) < 0) break;
    unsigned long e = 0;
    while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
      ++e;
    }
    for (unsigned long i = 0; i + 1 < e; i += 2) s *= p;
    if (e % 2 == 1) m *= p;
  }
  if (is_perfect_square(n)) {
    s *= isqrt_floor(n);
  } else {
    m *= n;
  }
  return {s, m};
}

/// Parses "p/q" or "p" with an optional leading minus sign.
inline Rational parse_rational_text(std::string_view text) {
  const auto bad = [&] {
    throw std::invalid_argument("bad rational literal: '" + std::string(text) + "'");
  };
  std::string_view s = text;
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  if (s.empty()) bad();
  std::string num;
  std::string den = "1";
  auto slash = s.find('/');
  if (slash == std::string_view::npos) {
    num = std::string(s);
  } else {
    num = std::string(s.substr(0, slash));
    den = std::string(s.substr(slash + 1));
  }
  auto digits = [](std::string_view t) {
    if (!t.empty() && t.front() == '-') t.remove_prefix(1);
    if (t.empty()) return false;
    for (char ch : t)
      if (ch < '0' || ch > '9') return false;
    return true;
  };
  if (!digits(num) || !digits(den)) bad();
  Integer n(num), d(den);
  if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  Rational q(n, d);
  q.canonicalize();
  return q;
}

}  // namespace tarski
