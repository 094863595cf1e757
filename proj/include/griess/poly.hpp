#pragma once

#include "griess/rational.hpp"

#include <algorithm>
#include <compare>
#include <map>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace griess {

// Exponent pair for c^i d^j.
struct Mono {
  int c = 0;
  int d = 0;
  int degree() const { return c + d; }
  bool operator==(const Mono&) const = default;
};

// Degree-lexicographic with c > d; "greater" monomials sort first.
struct MonoOrder {
  bool operator()(const Mono& a, const Mono& b) const {
    if (a.degree() != b.degree()) return a.degree() > b.degree();
    return a.c > b.c;
  }
};

// Polynomial in c and d over the rationals.
class Poly {
 public:
  using Terms = std::map<Mono, Rational, MonoOrder>;

  Poly() = default;
  Poly(long v) { if (v != 0) terms_[Mono{}] = v; }
  Poly(const Rational& v) { if (v != 0) terms_[Mono{}] = v; }

  static Poly c() { return monomial(1, 1, 0); }
  static Poly d() { return monomial(1, 0, 1); }
  static Poly monomial(const Rational& coeff, int ec, int ed) {
    Poly p;
    if (coeff != 0) p.terms_[Mono{ec, ed}] = coeff;
    return p;
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Mono{});
  }
  Rational constant_value() const {
    auto it = terms_.find(Mono{});
    return it == terms_.end() ? Rational(0) : it->second;
  }
  bool is_one() const { return is_constant() && constant_value() == 1; }
  bool free_of_d() const { return deg_d() <= 0; }

  int total_degree() const { return terms_.empty() ? -1 : terms_.begin()->first.degree(); }
  int deg_c() const {
    int m = -1;
    for (auto& [k, v] : terms_) m = std::max(m, k.c);
    return m;
  }
  int deg_d() const {
    int m = -1;
    for (auto& [k, v] : terms_) m = std::max(m, k.d);
    return m;
  }
  Mono leading_mono() const { return terms_.begin()->first; }
  const Rational& leading_coeff() const { return terms_.begin()->second; }

  Poly operator-() const {
    Poly r = *this;
    for (auto& [k, v] : r.terms_) v = -v;
    return r;
  }
  Poly& operator+=(const Poly& o) {
    for (auto& [k, v] : o.terms_) add_term(k, v);
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    for (auto& [k, v] : o.terms_) add_term(k, -v);
    return *this;
  }
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b) {
    Poly r;
    for (auto& [ka, va] : a.terms_)
      for (auto& [kb, vb] : b.terms_) r.add_term(Mono{ka.c + kb.c, ka.d + kb.d}, va * vb);
    return r;
  }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  Poly scaled(const Rational& s) const {
    if (s == 0) return Poly();
    Poly r = *this;
    for (auto& [k, v] : r.terms_) v *= s;
    return r;
  }
  bool operator==(const Poly& o) const { return terms_ == o.terms_; }

  Poly pow(int e) const {
    Poly r(1);
    for (int i = 0; i < e; ++i) r *= *this;
    return r;
  }

  Rational eval(const Rational& c0, const Rational& d0) const {
    Rational s = 0;
    for (auto& [k, v] : terms_) s += v * rpow(c0, k.c) * rpow(d0, k.d);
    return s;
  }
  // Substitutes c = c0 and keeps d.
  Poly eval_c(const Rational& c0) const {
    Poly r;
    for (auto& [k, v] : terms_) r.add_term(Mono{0, k.d}, v * rpow(c0, k.c));
    return r;
  }
  // Substitutes d = d0 and keeps c.
  Poly eval_d(const Rational& d0) const {
    Poly r;
    for (auto& [k, v] : terms_) r.add_term(Mono{k.c, 0}, v * rpow(d0, k.d));
    return r;
  }

  // Coefficient of d^j as a polynomial in c.
  Poly coeff_d(int j) const {
    Poly r;
    for (auto& [k, v] : terms_)
      if (k.d == j) r.add_term(Mono{k.c, 0}, v);
    return r;
  }
  // Coefficient of c^j as a polynomial in d.
  Poly coeff_c(int j) const {
    Poly r;
    for (auto& [k, v] : terms_)
      if (k.c == j) r.add_term(Mono{0, k.d}, v);
    return r;
  }
  Poly times_d_power(int j) const {
    Poly r;
    for (auto& [k, v] : terms_) r.terms_[Mono{k.c, k.d + j}] = v;
    return r;
  }

  Poly derivative_c() const {
    Poly r;
    for (auto& [k, v] : terms_)
      if (k.c > 0) r.add_term(Mono{k.c - 1, k.d}, v * k.c);
    return r;
  }

  // Gcd of numerators over lcm of denominators, sign of the leading coefficient.
  Rational content() const {
    if (terms_.empty()) return 0;
    Integer g = 0, l = 1;
    for (auto& [k, v] : terms_) {
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_num().get_mpz_t());
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den().get_mpz_t());
    }
    Rational r(g, l);
    r.canonicalize();
    if (leading_coeff() < 0) r = -r;
    return r;
  }
  // Integer coefficients, coprime, positive leading coefficient.
  Poly primitive() const {
    if (terms_.empty()) return *this;
    return scaled(1 / content());
  }
  Poly monic() const {
    if (terms_.empty()) return *this;
    return scaled(1 / leading_coeff());
  }

  std::string to_string() const;

 private:
  void add_term(const Mono& k, const Rational& v) {
    if (v == 0) return;
    auto [it, inserted] = terms_.emplace(k, v);
    if (!inserted) {
      it->second += v;
      if (it->second == 0) terms_.erase(it);
    }
  }
  Terms terms_;
  friend struct PolyDivision;
};

// Division of p by q using the degree-lex leading term; returns quotient and remainder.
struct PolyDivision {
  static std::pair<Poly, Poly> divide(const Poly& p, const Poly& q) {
    if (q.is_zero()) throw std::domain_error("polynomial division by zero");
    Poly quot, rem, work = p;
    const Mono lm = q.leading_mono();
    const Rational lc = q.leading_coeff();
    while (!work.is_zero()) {
      Mono m = work.leading_mono();
      if (m.c >= lm.c && m.d >= lm.d) {
        Poly t = Poly::monomial(work.leading_coeff() / lc, m.c - lm.c, m.d - lm.d);
        quot += t;
        work -= t * q;
      } else {
        Poly t = Poly::monomial(work.leading_coeff(), m.c, m.d);
        rem += t;
        work -= t;
      }
    }
    return {quot, rem};
  }
};

// Exact division; throws if q does not divide p.
inline Poly divexact(const Poly& p, const Poly& q) {
  auto [quot, rem] = PolyDivision::divide(p, q);
  if (!rem.is_zero()) throw std::domain_error("inexact polynomial division");
  return quot;
}

inline bool divides(const Poly& q, const Poly& p) {
  return PolyDivision::divide(p, q).second.is_zero();
}

namespace detail {

// Monic gcd of polynomials in c alone, by Euclid over Q.
inline Poly gcd_c(Poly a, Poly b) {
  while (!b.is_zero()) {
    // Remainder in one variable: divide by leading term repeatedly.
    Poly r = PolyDivision::divide(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

// Pseudo-remainder of a by b, both viewed in Q[c][d].
inline Poly prem_d(Poly a, const Poly& b) {
  int db = b.deg_d();
  Poly lb = b.coeff_d(db);
  while (!a.is_zero() && a.deg_d() >= db) {
    int da = a.deg_d();
    Poly la = a.coeff_d(da);
    a = lb * a - (la * b).times_d_power(da - db);
  }
  return a;
}

inline Poly content_d(const Poly& p) {
  Poly g;
  for (int j = 0; j <= p.deg_d(); ++j) {
    Poly cj = p.coeff_d(j);
    if (!cj.is_zero()) g = g.is_zero() ? cj.monic() : gcd_c(g, cj);
    if (g.is_one()) break;
  }
  return g;
}

inline Poly primpart_d(const Poly& p) {
  if (p.is_zero()) return p;
  return divexact(p, content_d(p));
}

}  // namespace detail

// Gcd in Q[c,d], normalized to integer coefficients with positive leading coefficient.
inline Poly gcd(const Poly& a, const Poly& b) {
  if (a.is_zero()) return b.primitive();
  if (b.is_zero()) return a.primitive();
  if (a.is_constant() || b.is_constant()) return Poly(1);
  if (a.free_of_d() && b.free_of_d()) return detail::gcd_c(a, b).primitive();
  Poly ca = detail::content_d(a), cb = detail::content_d(b);
  Poly cont = detail::gcd_c(ca, cb);
  Poly pa = divexact(a, ca), pb = divexact(b, cb);
  if (pa.deg_d() < pb.deg_d()) std::swap(pa, pb);
  while (!pb.is_zero() && pb.deg_d() > 0) {
    Poly r = detail::prem_d(pa, pb);
    pa = std::move(pb);
    pb = r.is_zero() ? r : detail::primpart_d(r);
  }
  Poly g = pb.is_zero() ? pa : Poly(1);
  return (cont * g).primitive();
}

inline std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto& [k, v] : terms_) {
    Rational a = abs(v);
    bool neg = v < 0;
    if (first) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    first = false;
    std::string var;
    if (k.c > 0) var += k.c == 1 ? "c" : "c^" + std::to_string(k.c);
    if (k.d > 0) {
      if (!var.empty()) var += "*";
      var += k.d == 1 ? "d" : "d^" + std::to_string(k.d);
    }
    if (var.empty()) {
      out += griess::to_string(a);
    } else if (a == 1) {
      out += var;
    } else {
      out += griess::to_string(a) + "*" + var;
    }
  }
  return out;
}

inline std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.to_string(); }

// Squarefree part of a polynomial in c (radical up to a constant).
inline Poly radical_c(const Poly& p) {
  if (p.is_zero() || p.is_constant()) return Poly(1);
  Poly g = gcd(p, p.derivative_c());
  return divexact(p, g).primitive();
}

}  // namespace griess
