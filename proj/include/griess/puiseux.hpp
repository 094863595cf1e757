#pragma once

#include "griess/rational.hpp"

#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace griess {

// Truncated series sum_k coeff(k) q^(k/N). A missing cutoff means the
// series is exact (a finite sum); otherwise every exponent >= cutoff is unknown.
class PuiseuxSeries {
 public:
  static constexpr long kDefaultDenominator = 48;

  PuiseuxSeries() = default;
  explicit PuiseuxSeries(long denom) : n_(denom) {
    if (denom <= 0) throw std::invalid_argument("exponent denominator must be positive");
  }

  static PuiseuxSeries constant(const Rational& v, long denom = kDefaultDenominator) {
    PuiseuxSeries s(denom);
    s.set(0, v);
    return s;
  }
  // coeff * q^exponent, with exponent a multiple of 1/denom.
  static PuiseuxSeries monomial(const Rational& coeff, const Rational& exponent,
                                long denom = kDefaultDenominator) {
    PuiseuxSeries s(denom);
    s.set(s.index_of(exponent), coeff);
    return s;
  }
  // Builds an integer-exponent series from coefficients c[0], c[1], ... valid below `cutoff`.
  static PuiseuxSeries from_coefficients(const std::vector<Rational>& coeffs,
                                         std::optional<Rational> cutoff,
                                         long denom = kDefaultDenominator) {
    PuiseuxSeries s(denom);
    for (std::size_t i = 0; i < coeffs.size(); ++i) s.set(static_cast<long>(i) * denom, coeffs[i]);
    s.cutoff_ = cutoff;
    s.prune();
    return s;
  }

  long denominator() const { return n_; }
  const std::optional<Rational>& cutoff() const { return cutoff_; }
  bool exact() const { return !cutoff_.has_value(); }
  const std::map<long, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  PuiseuxSeries& truncate(const Rational& cut) {
    if (!cutoff_ || cut < *cutoff_) cutoff_ = cut;
    prune();
    return *this;
  }
  PuiseuxSeries truncated(const Rational& cut) const {
    PuiseuxSeries r = *this;
    r.truncate(cut);
    return r;
  }

  // Coefficient of q^exponent; asking beyond the cutoff is an error.
  Rational coeff(const Rational& exponent) const {
    if (cutoff_ && exponent >= *cutoff_)
      throw std::out_of_range("coefficient of q^" + griess::to_string(exponent) +
                              " lies outside the validity range (cutoff " + griess::to_string(*cutoff_) + ")");
    Rational scaled = exponent * n_;
    if (scaled.get_den() != 1) return 0;
    auto it = terms_.find(scaled.get_num().get_si());
    return it == terms_.end() ? Rational(0) : it->second;
  }

  // Lowest exponent carrying a nonzero coefficient; for a zero series, the cutoff.
  Rational valuation() const {
    if (!terms_.empty()) return frac(terms_.begin()->first, n_);
    if (cutoff_) return *cutoff_;
    throw std::domain_error("valuation of the exact zero series");
  }

  PuiseuxSeries rescaled(long denom) const {
    if (denom % n_ != 0) throw std::invalid_argument("exponent denominators only rescale upward");
    PuiseuxSeries r(denom);
    long f = denom / n_;
    for (auto& [k, v] : terms_) r.terms_[k * f] = v;
    r.cutoff_ = cutoff_;
    return r;
  }

  PuiseuxSeries operator-() const {
    PuiseuxSeries r = *this;
    for (auto& [k, v] : r.terms_) v = -v;
    return r;
  }
  friend PuiseuxSeries operator+(const PuiseuxSeries& a, const PuiseuxSeries& b) {
    long l = std::lcm(a.n_, b.n_);
    PuiseuxSeries r = a.rescaled(l);
    PuiseuxSeries bb = b.rescaled(l);
    for (auto& [k, v] : bb.terms_) r.add(k, v);
    r.cutoff_ = min_cut(a.cutoff_, b.cutoff_);
    r.prune();
    return r;
  }
  friend PuiseuxSeries operator-(const PuiseuxSeries& a, const PuiseuxSeries& b) { return a + (-b); }
  friend PuiseuxSeries operator*(const PuiseuxSeries& a, const PuiseuxSeries& b) {
    long l = std::lcm(a.n_, b.n_);
    if ((a.exact() && a.is_zero()) || (b.exact() && b.is_zero())) return PuiseuxSeries(l);
    PuiseuxSeries aa = a.rescaled(l), bb = b.rescaled(l);
    PuiseuxSeries r(l);
    std::optional<Rational> cut;
    if (aa.cutoff_) cut = min_cut(cut, *aa.cutoff_ + bb.valuation());
    if (bb.cutoff_) cut = min_cut(cut, *bb.cutoff_ + aa.valuation());
    std::optional<long> kcut;
    if (cut) kcut = ceil_index(*cut, l);
    for (auto& [ka, va] : aa.terms_)
      for (auto& [kb, vb] : bb.terms_) {
        if (kcut && ka + kb >= *kcut) break;
        r.add(ka + kb, va * vb);
      }
    r.cutoff_ = cut;
    r.prune();
    return r;
  }
  friend PuiseuxSeries operator/(const PuiseuxSeries& a, const PuiseuxSeries& b) { return a * b.inverse(); }
  PuiseuxSeries& operator+=(const PuiseuxSeries& o) { return *this = *this + o; }
  PuiseuxSeries& operator-=(const PuiseuxSeries& o) { return *this = *this - o; }
  PuiseuxSeries& operator*=(const PuiseuxSeries& o) { return *this = *this * o; }

  PuiseuxSeries scaled(const Rational& s) const {
    PuiseuxSeries r = *this;
    for (auto& [k, v] : r.terms_) v *= s;
    r.prune();
    return r;
  }

  // Multiplicative inverse; the lowest term must be known and invertible.
  PuiseuxSeries inverse() const {
    if (terms_.empty()) throw std::domain_error("division by a series with zero lowest coefficient");
    if (exact() && terms_.size() > 1)
      throw std::domain_error("inverse of a non-monomial exact series needs a cutoff");
    long k0 = terms_.begin()->first;
    Rational b0 = terms_.begin()->second;
    PuiseuxSeries r(n_);
    if (exact()) {
      r.terms_[-k0] = 1 / b0;
      return r;
    }
    // Relative precision in units of 1/N.
    long rel = ceil_index(*cutoff_, n_) - k0;
    std::vector<Rational> inv(static_cast<std::size_t>(rel));
    for (long k = 0; k < rel; ++k) {
      Rational s = k == 0 ? Rational(1) : Rational(0);
      for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it) {
        long j = it->first - k0;
        if (j > k) break;
        s -= it->second * inv[static_cast<std::size_t>(k - j)];
      }
      inv[static_cast<std::size_t>(k)] = s / b0;
    }
    for (long k = 0; k < rel; ++k)
      if (inv[static_cast<std::size_t>(k)] != 0) r.terms_[k - k0] = inv[static_cast<std::size_t>(k)];
    r.cutoff_ = *cutoff_ - 2 * frac(k0, n_);
    return r;
  }

  // q d/dq: multiplies the coefficient of q^(k/N) by k/N.
  PuiseuxSeries qdq() const {
    PuiseuxSeries r = *this;
    for (auto& [k, v] : r.terms_) v *= frac(k, n_);
    r.prune();
    return r;
  }

  // Multiplies by q^exponent.
  PuiseuxSeries shifted(const Rational& exponent) const {
    const Rational& e = exponent;
    long l = std::lcm(n_, e.get_den().get_si());
    PuiseuxSeries r = rescaled(l);
    PuiseuxSeries out(l);
    Rational scaled = e * l;
    long shift = scaled.get_num().get_si();
    for (auto& [k, v] : r.terms_) out.terms_[k + shift] = v;
    if (cutoff_) out.cutoff_ = *cutoff_ + e;
    return out;
  }

  // Series compare on the common validity range.
  bool equals(const PuiseuxSeries& o) const {
    PuiseuxSeries diff = *this - o;
    return diff.is_zero();
  }

  std::string to_string(std::size_t max_terms = 12) const {
    std::string out;
    std::size_t n = 0;
    for (auto& [k, v] : terms_) {
      if (n++ == max_terms) break;
      if (!out.empty()) out += " + ";
      out += "(" + griess::to_string(v) + ")q^(" + griess::to_string(frac(k, n_)) + ")";
    }
    if (out.empty()) out = "0";
    if (cutoff_) out += " + O(q^(" + griess::to_string(*cutoff_) + "))";
    return out;
  }

 private:
  long index_of(const Rational& exponent) const {
    Rational scaled = exponent * n_;
    if (scaled.get_den() != 1)
      throw std::invalid_argument("exponent " + griess::to_string(exponent) + " not a multiple of 1/" +
                                  std::to_string(n_));
    return scaled.get_num().get_si();
  }
  // Smallest integer k with k/N >= cut.
  static long ceil_index(const Rational& cut, long n) {
    Rational s = cut * n;
    Integer q;
    mpz_cdiv_q(q.get_mpz_t(), s.get_num().get_mpz_t(), s.get_den().get_mpz_t());
    return q.get_si();
  }
  static std::optional<Rational> min_cut(const std::optional<Rational>& a, const std::optional<Rational>& b) {
    if (!a) return b;
    if (!b) return a;
    return *a < *b ? a : b;
  }
  void set(long k, const Rational& v) {
    if (v != 0) terms_[k] = v;
  }
  void add(long k, const Rational& v) {
    if (v == 0) return;
    auto [it, inserted] = terms_.emplace(k, v);
    if (!inserted) {
      it->second += v;
      if (it->second == 0) terms_.erase(it);
    }
  }
  void prune() {
    for (auto it = terms_.begin(); it != terms_.end();) {
      if (it->second == 0 || (cutoff_ && frac(it->first, n_) >= *cutoff_))
        it = terms_.erase(it);
      else
        ++it;
    }
  }

  long n_ = kDefaultDenominator;
  std::map<long, Rational> terms_;
  std::optional<Rational> cutoff_;
};

}  // namespace griess
