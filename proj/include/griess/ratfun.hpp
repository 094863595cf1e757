#pragma once

#include "griess/poly.hpp"

#include <cctype>
#include <stdexcept>
#include <string>

namespace griess {

// Element of Q(c, d), kept reduced with a primitive denominator whose
// leading coefficient is positive.
class RatFun {
 public:
  RatFun() : den_(1) {}
  RatFun(long v) : num_(v), den_(1) {}
  RatFun(const Rational& v) : num_(v), den_(1) {}
  RatFun(const Poly& p) : num_(p), den_(1) {}
  RatFun(const Poly& n, const Poly& d) : num_(n), den_(d) {
    if (den_.is_zero()) throw std::domain_error("division by zero rational function");
    normalize();
  }

  static RatFun c() { return RatFun(Poly::c()); }
  static RatFun d() { return RatFun(Poly::d()); }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_one(); }
  bool is_constant() const { return den_.is_one() && num_.is_constant(); }
  Rational constant_value() const { return num_.constant_value(); }

  RatFun operator-() const {
    RatFun r = *this;
    r.num_ = -r.num_;
    return r;
  }
  friend RatFun operator+(const RatFun& a, const RatFun& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.den_ == b.den_) return make(a.num_ + b.num_, a.den_);
    if (a.den_.is_one()) return make(a.num_ * b.den_ + b.num_, b.den_);
    if (b.den_.is_one()) return make(a.num_ + b.num_ * a.den_, a.den_);
    Poly g = gcd(a.den_, b.den_);
    if (g.is_one()) return make(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    Poly ca = divexact(b.den_, g), cb = divexact(a.den_, g);
    return make(a.num_ * ca + b.num_ * cb, a.den_ * ca);
  }
  friend RatFun operator-(const RatFun& a, const RatFun& b) { return a + (-b); }
  friend RatFun operator*(const RatFun& a, const RatFun& b) {
    if (a.is_zero() || b.is_zero()) return RatFun();
    if (a.den_.is_one() && b.den_.is_one()) return RatFun(a.num_ * b.num_);
    if (a.is_constant()) return b.scaled(a.constant_value());
    if (b.is_constant()) return a.scaled(b.constant_value());
    // Cross-cancel before multiplying to keep the operands small.
    Poly g1 = gcd(a.num_, b.den_), g2 = gcd(b.num_, a.den_);
    Poly n = divexact(a.num_, g1) * divexact(b.num_, g2);
    Poly d = divexact(a.den_, g2) * divexact(b.den_, g1);
    RatFun r;
    r.num_ = std::move(n);
    r.den_ = std::move(d);
    r.fix_sign();
    return r;
  }
  friend RatFun operator/(const RatFun& a, const RatFun& b) {
    if (b.is_zero()) throw std::domain_error("division by zero rational function");
    return a * b.inverse();
  }
  RatFun& operator+=(const RatFun& o) { return *this = *this + o; }
  RatFun& operator-=(const RatFun& o) { return *this = *this - o; }
  RatFun& operator*=(const RatFun& o) { return *this = *this * o; }
  RatFun& operator/=(const RatFun& o) { return *this = *this / o; }
  bool operator==(const RatFun& o) const { return num_ == o.num_ && den_ == o.den_; }

  RatFun inverse() const {
    if (is_zero()) throw std::domain_error("division by zero rational function");
    RatFun r;
    r.num_ = den_;
    r.den_ = num_;
    r.fix_sign();
    return r;
  }
  RatFun scaled(const Rational& s) const {
    if (s == 0) return RatFun();
    RatFun r = *this;
    r.num_ = r.num_.scaled(s);
    return r;
  }
  RatFun pow(int e) const {
    RatFun r(1);
    for (int i = 0; i < e; ++i) r *= *this;
    return r;
  }

  Rational eval(const Rational& c0, const Rational& d0) const {
    Rational dv = den_.eval(c0, d0);
    if (dv == 0) throw std::domain_error("evaluation at a zero of the denominator");
    return num_.eval(c0, d0) / dv;
  }
  RatFun eval_c(const Rational& c0) const {
    return RatFun(num_.eval_c(c0), den_.eval_c(c0));
  }
  RatFun eval_d(const Rational& d0) const {
    return RatFun(num_.eval_d(d0), den_.eval_d(d0));
  }
  // Substitutes d by a rational function of c.
  RatFun subst_d(const RatFun& dval) const {
    auto sub = [&](const Poly& p) {
      RatFun acc;
      RatFun dp(1);
      for (int j = 0; j <= p.deg_d(); ++j) {
        Poly cj = p.coeff_d(j);
        if (!cj.is_zero()) acc += RatFun(cj) * dp;
        dp *= dval;
      }
      return acc;
    };
    return sub(num_) / sub(den_);
  }

  std::string to_string() const {
    if (den_.is_one()) return num_.to_string();
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
  }

 private:
  static RatFun make(const Poly& n, const Poly& d) { return RatFun(n, d); }

  void fix_sign() {
    Rational s = den_.content();
    if (s != 1) {
      den_ = den_.scaled(1 / s);
      num_ = num_.scaled(1 / s);
    }
  }
  void normalize() {
    if (num_.is_zero()) {
      den_ = Poly(1);
      return;
    }
    if (!den_.is_constant()) {
      Poly g = gcd(num_, den_);
      if (!g.is_one()) {
        num_ = divexact(num_, g);
        den_ = divexact(den_, g);
      }
    }
    fix_sign();
  }

  Poly num_;
  Poly den_;
};

// Recursive-descent reader for expressions in c and d with integer
// literals, + - * / ^, parentheses and implicit multiplication.
class ExprParser {
 public:
  explicit ExprParser(std::string text) : s_(std::move(text)) {}

  RatFun parse() {
    RatFun r = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected trailing input");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw std::invalid_argument("cannot parse '" + s_ + "' at " + std::to_string(pos_) + ": " + why);
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  char peek() {
    skip();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  RatFun expr() {
    RatFun r;
    char ch = peek();
    if (ch == '-' || ch == '+') {
      ++pos_;
      r = ch == '-' ? -term() : term();
    } else {
      r = term();
    }
    for (;;) {
      ch = peek();
      if (ch == '+') {
        ++pos_;
        r += term();
      } else if (ch == '-') {
        ++pos_;
        r -= term();
      } else {
        return r;
      }
    }
  }
  RatFun term() {
    RatFun r = power();
    for (;;) {
      char ch = peek();
      if (ch == '*') {
        ++pos_;
        r *= power();
      } else if (ch == '/') {
        ++pos_;
        r /= power();
      } else if (std::isdigit(static_cast<unsigned char>(ch)) || ch == 'c' || ch == 'd' || ch == '(') {
        r *= power();
      } else {
        return r;
      }
    }
  }
  RatFun power() {
    RatFun base = atom();
    if (peek() == '^') {
      ++pos_;
      skip();
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent");
      base = base.pow(std::stoi(s_.substr(start, pos_ - start)));
    }
    return base;
  }
  RatFun atom() {
    char ch = peek();
    if (ch == '(') {
      ++pos_;
      RatFun r = expr();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return r;
    }
    if (ch == 'c') {
      ++pos_;
      return RatFun::c();
    }
    if (ch == 'd') {
      ++pos_;
      return RatFun::d();
    }
    if (ch == '-') {
      ++pos_;
      return -atom();
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return RatFun(Rational(Integer(s_.substr(start, pos_ - start))));
    }
    fail("unexpected character");
  }

  std::string s_;
  std::size_t pos_ = 0;
};

inline std::ostream& operator<<(std::ostream& os, const RatFun& r) { return os << r.to_string(); }

inline RatFun parse_ratfun(const std::string& text) { return ExprParser(text).parse(); }

}  // namespace griess
