#pragma once

#include <json.hpp>

#include <array>
#include <cstdlib>
#include <string>

#include "linalg.hpp"
#include "puiseux.hpp"
#include "ratfun.hpp"

namespace griess {

// Series below are valid for exponents < order.
inline int default_order() {
  if (const char* env = std::getenv("GRIESS_TRACE_ORDER")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 3 && v <= 400) return static_cast<int>(v);
    throw std::invalid_argument(std::string("GRIESS_TRACE_ORDER must be an integer in [3, 400], got '") + env + "'");
  }
  return 12;
}

// From t/(e^t - 1), so B_1 = -1/2.
inline Rational bernoulli(int m) {
  if (m < 0) throw std::invalid_argument("Bernoulli index must be nonnegative");
  std::vector<Rational> b(m + 1);
  for (int n = 0; n <= m; ++n) {
    Rational s = 0;
    for (int k = 0; k < n; ++k) s += binom(n + 1, k) * b[k];
    b[n] = n == 0 ? Rational(1) : -s / (n + 1);
  }
  return b[m];
}

inline Integer divisor_power_sum(long n, int power) {
  Integer s = 0;
  for (long d = 1; d * d <= n; ++d) {
    if (n % d) continue;
    Integer a, b;
    mpz_ui_pow_ui(a.get_mpz_t(), d, power);
    s += a;
    if (d != n / d) {
      mpz_ui_pow_ui(b.get_mpz_t(), n / d, power);
      s += b;
    }
  }
  return s;
}

// Constant term -B_2k/(2k)!; the classical series with leading 1 is E_2k divided by it.
inline Rational eisenstein_constant(int weight) { return -bernoulli(weight) / Rational(factorial(weight)); }

inline PuiseuxSeries eisenstein(int weight, int order) {
  if (weight < 2 || weight % 2) throw std::invalid_argument("Eisenstein weight must be even and at least 2");
  if (order < 1) throw std::invalid_argument("order must be positive");
  std::vector<Rational> c(order);
  c[0] = eisenstein_constant(weight);
  Rational scale = Rational(2) / Rational(factorial(weight - 1));
  for (long n = 1; n < order; ++n) c[n] = scale * Rational(divisor_power_sum(n, weight - 1));
  return PuiseuxSeries::from_coefficients(c, Rational(order));
}

inline PuiseuxSeries classical_eisenstein(int weight, int order) {
  return eisenstein(weight, order).scaled(1 / eisenstein_constant(weight));
}

// prod_{k >= 0} (1 + sign q^(k + shift)) truncated below the order.
inline PuiseuxSeries infinite_product(const Rational& shift, int sign, int order) {
  auto r = PuiseuxSeries::constant(1).truncated(order);
  for (Rational e = shift; e < order; e += 1) {
    auto factor = PuiseuxSeries::constant(1) + PuiseuxSeries::monomial(sign, e);
    r = r * factor.truncated(order);
  }
  return r;
}

struct IsingCharacters {
  PuiseuxSeries chi0, chi_half, chi_sixteenth;

  const PuiseuxSeries& operator[](int i) const {
    return i == 0 ? chi0 : i == 1 ? chi_half : chi_sixteenth;
  }
};

inline const std::array<Rational, 3>& ising_weights() {
  static const std::array<Rational, 3> h{Rational(0), frac(1, 2), frac(1, 16)};
  return h;
}

inline IsingCharacters ising_characters(int order) {
  if (order < 1) throw std::invalid_argument("order must be positive");
  auto plus = infinite_product(frac(1, 2), 1, order), minus = infinite_product(frac(1, 2), -1, order);
  IsingCharacters x;
  x.chi0 = (plus + minus).scaled(frac(1, 2));
  x.chi_half = (plus - minus).scaled(frac(1, 2));
  x.chi_sixteenth = infinite_product(1, 1, order).shifted(frac(1, 16)).truncated(order);
  return x;
}

struct CharacterBundle {
  PuiseuxSeries ch;
  std::string source;
};

// q (j - 744) = E4^3 / prod (1 - q^n)^24 - 744 q, with E4 normalized classically.
inline CharacterBundle moonshine_character(int order) {
  if (order < 2) throw std::invalid_argument("order must be at least 2");
  auto e4 = classical_eisenstein(4, order);
  auto eta24 = infinite_product(1, -1, order);
  auto p = eta24;
  for (int i = 1; i < 24; ++i) p = p * eta24;
  auto ch = e4 * e4 * e4 / p - PuiseuxSeries::monomial(744, 1);
  return {ch.truncated(order), "builtin-moonshine"};
}

// {"offset": "h - c/24", "coeffs": ["1", "0", ...]}: offset 0 gives the
// q^L0 normalization that the trace functions expect.
inline CharacterBundle ingest_character(const std::string& json_text) {
  auto j = nlohmann::json::parse(json_text);
  Rational offset = parse_rational(j.value("offset", std::string("0")));
  std::vector<Rational> coeffs;
  for (auto& x : j.at("coeffs")) {
    coeffs.push_back(x.is_string() ? parse_rational(x.get<std::string>()) : Rational(x.get<long>()));
    if (coeffs.back() < 0 || coeffs.back().get_den() != 1)
      throw std::invalid_argument("character coefficients must be nonnegative integers");
  }
  if (coeffs.empty() || coeffs[0] != 1) throw std::invalid_argument("character must start with 1");
  auto s = PuiseuxSeries::from_coefficients(coeffs, Rational(static_cast<long>(coeffs.size())));
  return {s.shifted(offset), "ingested"};
}

// The three rows of the bracket operations on weight-two vectors, as
// coefficients of a_(-1)b, a_(0)b, a_(1)b, a_(3)b.
inline const std::array<std::array<Rational, 4>, 3>& zhu_bracket_table() {
  static const std::array<std::array<Rational, 4>, 3> t{{
      {Rational(1), frac(3, 2), frac(5, 12), frac(11, 720)},  // a_[-1]b
      {Rational(0), Rational(0), Rational(1), frac(-1, 6)},  // a_[1]b
      {Rational(0), Rational(0), Rational(0), Rational(1)},  // a_[3]b
  }};
  return t;
}

// (a|w), (b|w), (a|b); for m = 1 only the first is used.
struct PairingData {
  Rational a_omega, b_omega, ab;
};

inline PuiseuxSeries series_constant(const Rational& v) { return PuiseuxSeries::constant(v); }

// Number of integer-exponent coefficients a truncated series determines.
inline int series_order(const PuiseuxSeries& s) {
  if (!s.cutoff()) return default_order();
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), s.cutoff()->get_num_mpz_t(), s.cutoff()->get_den_mpz_t());
  return static_cast<int>(q.get_si());
}

namespace qseries_detail {

// The last coefficient is mix / (scale (5c+22)). The correct scale is 144;
// 360 is kept reachable for negative tests, and is contradicted by the
// degree-3 expansion, the bracket reduction and the 2A specialization.
inline PuiseuxSeries second_trace(const PairingData& p, const Rational& c, const PuiseuxSeries& ch, const Rational& scale) {
  int order = series_order(ch);
  auto e2 = eisenstein(2, order), e4 = eisenstein(4, order);
  auto dch = ch.qdq();
  Rational ww = p.a_omega * p.b_omega;
  Rational den = c * (5 * c + 22);
  Rational mix = c * p.ab - 2 * ww;
  auto first = dch.qdq().scaled((44 * p.ab + 20 * ww) / den);
  auto second = (series_constant(11) + e2.scaled(60)) * dch.scaled(-mix / (3 * den));
  auto third = (series_constant(11) + e2.scaled(120) - e4.scaled(720)) * ch.scaled(mix / (scale * (5 * c + 22)));
  return first + second + third;
}

}  // namespace qseries_detail

// Tr o(a) q^L0 and Tr o(a) o(b) q^L0 for a class S^2, resp. S^4, algebra.
inline PuiseuxSeries trace_function(int m, const PairingData& p, const Rational& c, const PuiseuxSeries& ch) {
  if (c == 0 || c == frac(-22, 5)) throw std::domain_error("central charge 0 or -22/5");
  if (m == 1) return ch.qdq().scaled(2 * p.a_omega / c);
  if (m != 2) throw std::invalid_argument("trace functions are available for m = 1, 2");
  return qseries_detail::second_trace(p, c, ch, 144);
}

// Tr o([2,2]) q^L0 for [2,2] = L_-2 L_-2 1.
inline PuiseuxSeries vacuum_22_trace(const Rational& c, const PuiseuxSeries& ch) {
  int order = series_order(ch);
  auto e2 = eisenstein(2, order), e4 = eisenstein(4, order);
  auto dch = ch.qdq();
  return dch.qdq() + (series_constant(frac(13, 6)) + e2.scaled(2)) * dch -
         (series_constant(11 * c / 1440) + e2.scaled(c / 12) - e4.scaled(c / 2)) * ch;
}

// Second trace function assembled from the bracket reduction: the products
// a_[n]b are projected onto the vacuum module and each zero-mode trace is
// replaced by its expression through the character.
inline PuiseuxSeries trace_function_by_brackets(const PairingData& p, const Rational& c, const PuiseuxSeries& ch) {
  int order = series_order(ch);
  auto e2 = eisenstein(2, order), e4 = eisenstein(4, order);
  auto dch = ch.qdq();
  Rational ww = p.a_omega * p.b_omega, den = c * (5 * c + 22);
  // Zero-mode traces of the vacuum-module vectors 1, [2], [3], [4], [2,2].
  auto t1 = ch, t2 = dch, t3 = dch.scaled(-2), t4 = dch.scaled(3), t22 = vacuum_22_trace(c, ch);
  auto s = t1.scaled(frac(11, 720) * p.ab) + t2.scaled(5 * p.ab / (3 * c)) + t3.scaled(3 * p.ab / c) +
           t4.scaled((6 * c * p.ab - 12 * ww) / den) + t22.scaled((44 * p.ab + 20 * ww) / den);
  s -= e2 * t2.scaled(4 * p.ab / c);
  s += e2 * t1.scaled(p.ab / 6);
  s -= e4 * t1.scaled(p.ab);
  return s;
}

// Direct trace of o([2,2]) = L_0^2 + 2 L_0 + 2 sum_{m>=1} L_-m L_m on each graded
// piece, using only the Virasoro relations and the graded dimensions:
// Tr_{V_N} L_-m L_m = Tr_{V_{N-m}} (L_-m L_m + 2m L_0 + c(m^3 - m)/12).
inline std::vector<Rational> vacuum_22_trace_direct(const Rational& c, const std::vector<Rational>& dims) {
  const long top = static_cast<long>(dims.size());
  std::vector<Rational> out(top);
  // t[m][N] = Tr_{V_N} L_-m L_m
  std::vector<std::vector<Rational>> t(top + 1, std::vector<Rational>(top, 0));
  for (long m = 1; m < top; ++m)
    for (long n = m; n < top; ++n)
      t[m][n] = t[m][n - m] + (Rational(2 * m * (n - m)) + c * Rational(m * m * m - m) / 12) * dims[n - m];
  for (long n = 0; n < top; ++n) {
    Rational s = Rational(n * n + 2 * n) * dims[n];
    for (long m = 1; m <= n; ++m) s += 2 * t[m][n];
    out[n] = s;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Degree-by-degree form of the second trace function: the coefficient of
// q^n as a combination of dim V^k. Encoded as a function of d with dim V^k
// standing for d^k, which is faithful because the expression is linear in
// the graded dimensions.

struct DegreeTrace {
  RatFun ab, ww;  // coefficients of (a|b) and (a|w)(b|w)

  // Value for given graded dimensions (dims[k] = dim V^k).
  Rational evaluate(const Rational& c, const std::vector<Rational>& dims, const PairingData& p) const {
    auto part = [&](const RatFun& f) -> Rational {
      Rational den = f.den().eval(c, 0), s = 0;
      for (std::size_t k = 0; k < dims.size(); ++k) s += f.num().coeff_d(static_cast<int>(k)).eval(c, 0) * (k ? dims[k] : 1);
      return s / den;
    };
    return part(ab) * p.ab + part(ww) * p.a_omega * p.b_omega;
  }
};

inline DegreeTrace degree_trace_from_character(int n, const Rational& scale = 144) {
  if (n < 0) throw std::invalid_argument("degree must be nonnegative");
  auto c = RatFun::c();
  RatFun den = c * (c.scaled(5) + RatFun(22));
  auto e2 = eisenstein(2, n + 1), e4 = eisenstein(4, n + 1);
  auto dim = [](int k) { return k == 0 ? RatFun(1) : RatFun::d().pow(k); };
  DegreeTrace r;
  for (int k = 0; k <= n; ++k) {
    if (k == 1) continue;  // V^1 = 0
    Rational delta = k == n ? 1 : 0;
    Rational e2k = e2.coeff(n - k), e4k = e4.coeff(n - k);
    Rational second = Rational(k) * (11 * delta + 60 * e2k);
    Rational third = 11 * delta + 120 * e2k - 720 * e4k;
    // (a|b) part: 44/den k^2 - c/(3 den) second + c/(144(5c+22)) third
    RatFun ab = RatFun(Rational(44 * k * k) * delta) / den - c.scaled(second) / den.scaled(3) +
                c.scaled(third) / (c.scaled(5) + RatFun(22)).scaled(scale);
    RatFun ww = RatFun(Rational(20 * k * k) * delta) / den + RatFun(2 * second) / den.scaled(3) -
                RatFun(2 * third) / (c.scaled(5) + RatFun(22)).scaled(scale);
    r.ab = r.ab + ab * dim(k);
    r.ww = r.ww + ww * dim(k);
  }
  return r;
}

// The displayed degree-3 and degree-4 formulas, with dim V^k written Vk.
inline DegreeTrace printed_degree_trace(int n) {
  static const std::map<int, std::pair<const char*, const char*>> rows{
      {3,
       {"-2(20c^2+40c V2+(3c-198)V3)/(c(5c+22))", "16(5c+10 V2+12 V3)/(c(5c+22))"}},
      {4,
       {"-2(55c^2+98c V2+60c V3+(4c-352)V4)/(c(5c+22))", "4(55c+(5c+120) V2+60 V3+84V4)/(c(5c+22))"}}};
  auto it = rows.find(n);
  if (it == rows.end()) throw std::invalid_argument("no displayed formula for degree " + std::to_string(n));
  auto encode = [](std::string s) {
    for (std::string::size_type p; (p = s.find('V')) != std::string::npos;) s.replace(p, 2, std::string("(d^") + s[p + 1] + ")");
    return parse_ratfun(s);
  };
  return {encode(it->second.first), encode(it->second.second)};
}

inline bool degree_trace_identity(int n) {
  auto a = degree_trace_from_character(n), b = printed_degree_trace(n);
  return a.ab == b.ab && a.ww == b.ww;
}

// ---------------------------------------------------------------------------
// Branching of V into modules of the Virasoro algebra of an Ising idempotent e
// and the resulting McKay-Thompson series of the associated involution.

struct McKayThompson {
  std::array<PuiseuxSeries, 3> z;  // z_0, z_1/2, z_1/16
  PuiseuxSeries t2a;
};

// The rows are the traces of 1, o(e), o(e)^2 with (e|e) = (e|w) = 1/4, c = 24.
inline McKayThompson mckay_thompson_2A(int order) {
  if (order < 3) throw std::invalid_argument("order must be at least 3");
  auto ch = moonshine_character(order).ch;
  const Rational c = 24, t = frac(1, 4);
  std::array<PuiseuxSeries, 3> rhs{ch, trace_function(1, {t, t, t}, c, ch), trace_function(2, {t, t, t}, c, ch)};
  auto chi = ising_characters(order + 1);
  const auto& h = ising_weights();
  // basis[r][i] = q^{-h_i} (q d/dq)^r chi_i, an integer-exponent series starting at h_i^r.
  std::array<std::array<PuiseuxSeries, 3>, 3> basis;
  for (int i = 0; i < 3; ++i) {
    auto x = chi[i];
    for (int r = 0; r < 3; ++r) {
      basis[r][i] = x.shifted(-h[i]).truncated(order);
      x = x.qdq();
    }
  }
  std::array<std::vector<Rational>, 3> z;
  for (auto& v : z) v.assign(order, 0);
  Matrix<Rational> lead(3, std::vector<Rational>(3));
  for (int r = 0; r < 3; ++r)
    for (int i = 0; i < 3; ++i) lead[r][i] = basis[r][i].coeff(0);
  Matrix<Rational> inv;
  try {
    inv = inverse_field(lead);
  } catch (const std::runtime_error&) {
    throw std::domain_error("singular system in degree 0");
  }
  for (long n = 0; n < order; ++n) {
    std::array<Rational, 3> residual;
    for (int r = 0; r < 3; ++r) {
      Rational s = rhs[r].coeff(n);
      for (int i = 0; i < 3; ++i)
        for (long j = 0; j < n; ++j) s -= z[i][j] * basis[r][i].coeff(n - j);
      residual[r] = s;
    }
    for (int i = 0; i < 3; ++i) {
      Rational x = 0;
      for (int r = 0; r < 3; ++r) x += inv[i][r] * residual[r];
      if (x < 0 || x.get_den() != 1)
        throw std::domain_error("multiplicity of h = " + to_string(h[i]) + " in degree " + std::to_string(n) +
                                " is " + to_string(x) + ", not a nonnegative integer");
      z[i][n] = x;
    }
  }
  McKayThompson out;
  for (int i = 0; i < 3; ++i) out.z[i] = PuiseuxSeries::from_coefficients(z[i], Rational(order));
  out.t2a = (out.z[0] * basis[0][0] + out.z[1] * basis[0][1] - out.z[2] * basis[0][2]).shifted(-1);
  return out;
}

}  // namespace griess
