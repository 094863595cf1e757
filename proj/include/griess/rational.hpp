#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace griess {

using Integer = mpz_class;
using Rational = mpq_class;

// Parses "p", "-p", "p/q" or a decimal-free mixed form like "47/2".
inline Rational parse_rational(const std::string& text) {
  std::string s;
  for (char ch : text)
    if (ch != ' ' && ch != '+') s.push_back(ch);
  if (s.empty()) throw std::invalid_argument("empty rational");
  auto slash = s.find('/');
  auto digits_ok = [](const std::string& t, bool allow_sign) {
    if (t.empty()) return false;
    std::size_t i = 0;
    if (allow_sign && t[0] == '-') i = 1;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') return false;
    return true;
  };
  Rational r;
  if (slash == std::string::npos) {
    if (!digits_ok(s, true)) throw std::invalid_argument("invalid rational: " + text);
    r = Rational(Integer(s), 1);
  } else {
    std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    if (!digits_ok(num, true) || !digits_ok(den, false))
      throw std::invalid_argument("invalid rational: " + text);
    Integer q(den);
    if (q == 0) throw std::invalid_argument("zero denominator: " + text);
    r = Rational(Integer(num), q);
  }
  r.canonicalize();
  return r;
}

inline std::string to_string(const Rational& r) {
  Rational t = r;
  t.canonicalize();
  if (t.get_den() == 1) return t.get_num().get_str();
  return t.get_num().get_str() + "/" + t.get_den().get_str();
}

// Canonical p/q; the raw two-argument mpq constructor does not reduce.
inline Rational frac(long p, long q) {
  Rational r(p, q);
  r.canonicalize();
  return r;
}

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

// Generalized binomial coefficient binom(x, k) for integer x and k >= 0.
inline Rational binom(long x, long k) {
  if (k < 0) return 0;
  Rational r = 1;
  for (long i = 0; i < k; ++i) r = r * Rational(x - i) / Rational(i + 1);
  return r;
}

inline Integer factorial(long n) {
  Integer r = 1;
  for (long i = 2; i <= n; ++i) r *= i;
  return r;
}

inline Rational rpow(const Rational& base, long e) {
  Rational r = 1;
  for (long i = 0; i < e; ++i) r *= base;
  return r;
}

}  // namespace griess
