#pragma once

#include "griess/trace_tables.hpp"

#include <optional>

namespace griess {

// A candidate (rank, dimension of B) with an optional eigenvalue spectrum of
// R_e on B: eigenvalue -> multiplicity.
struct CDPair {
  Rational c;
  Rational d;
  std::map<Rational, Rational> spectrum;

  bool operator==(const CDPair& o) const { return c == o.c && d == o.d && spectrum == o.spectrum; }
};

// d as a function of c forced by a proper idempotent in class S^6.
inline RatFun proper_s6_function() {
  static const RatFun f = parse_ratfun("(70c^2+955c+2388)c/(2(c^2-55c+748))");
  return f;
}

// Same, from class S^8.
inline RatFun proper_s8_function() {
  static const RatFun f = parse_ratfun(
      "(5250c^5+155250c^4+1369715c^3+3507098c^2+1497768c)/(125c^4-4770c^3-23382c^2+1561868c+1032240)");
  return f;
}

namespace constraints_detail {

inline Rational eval_c(const RatFun& f, const Rational& c) {
  if (f.den().eval(c, 0) == 0) throw std::domain_error("constraint denominator vanishes at c = " + to_string(c));
  return f.eval(c, 0);
}

inline bool kac_nonzero(int n, const Rational& c) { return kac_polynomial(n).expanded().eval(c, 0) != 0; }

// Integer coefficients a_0..a_n of a univariate polynomial in c, scaled to be primitive.
inline std::vector<mpz_class> integer_coefficients(const Poly& p) {
  if (!p.free_of_d()) throw std::invalid_argument("polynomial must not involve d");
  int n = p.deg_c();
  std::vector<Rational> q(n + 1);
  for (auto& [mono, v] : p.terms()) q[mono.c] = v;
  mpz_class l = 1;
  for (auto& x : q) l = lcm(l, mpz_class(x.get_den()));
  std::vector<mpz_class> a;
  mpz_class g = 0;
  for (auto& x : q) {
    mpz_class v = x.get_num() * (l / x.get_den());
    a.push_back(v);
    g = gcd(g, v);
  }
  for (auto& v : a) v /= g;
  return a;
}

inline std::vector<mpz_class> divisors(mpz_class n) {
  n = abs(n);
  std::vector<std::pair<mpz_class, int>> primes;
  for (mpz_class p = 2; p * p <= n; ++p) {
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e) primes.emplace_back(p, e);
  }
  if (n > 1) primes.emplace_back(n, 1);
  std::vector<mpz_class> r{1};
  for (auto& [p, e] : primes) {
    std::size_t base = r.size();
    mpz_class pk = 1;
    for (int k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) r.push_back(r[i] * pk);
    }
  }
  return r;
}

}  // namespace constraints_detail

inline Rational proper_constraint_s6(const Rational& c) {
  if (!constraints_detail::kac_nonzero(6, c)) throw std::domain_error("D_6 vanishes at c = " + to_string(c));
  return constraints_detail::eval_c(proper_s6_function(), c);
}

inline Rational proper_constraint_s8(const Rational& c) { return constraints_detail::eval_c(proper_s8_function(), c); }

// All rational roots of a polynomial in c, ascending, without multiplicity.
inline std::vector<Rational> rational_roots(const Poly& p) {
  using namespace constraints_detail;
  if (p.is_zero()) throw std::invalid_argument("zero polynomial has every root");
  auto a = integer_coefficients(p);
  std::vector<Rational> roots;
  std::size_t low = 0;
  while (a[low] == 0) ++low;
  if (low > 0) roots.push_back(0);
  std::vector<mpz_class> b(a.begin() + low, a.end());
  if (b.size() > 1) {
    auto value_sign = [&](const mpz_class& num, const mpz_class& den) {
      // den^n p(num/den), Horner in integers
      mpz_class acc = 0, dpow = 1;
      std::vector<mpz_class> dp(b.size());
      for (std::size_t i = 0; i < b.size(); ++i) {
        dp[i] = dpow;
        dpow *= den;
      }
      for (std::size_t i = b.size(); i-- > 0;) acc = acc * num + b[i] * dp[b.size() - 1 - i];
      return acc == 0;
    };
    for (auto& num : divisors(b.front()))
      for (auto& den : divisors(b.back())) {
        if (gcd(num, den) != 1) continue;
        for (int s : {1, -1})
          if (value_sign(s * num, den)) roots.push_back(Rational(s * num, den));
      }
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

struct CommonSolutions {
  Poly eliminant;                     // numerator of s6(c) - s8(c)
  std::vector<Rational> candidates;   // its rational roots
  std::vector<Rational> kac_allowed;  // those with D_6(c) != 0
  std::vector<CDPair> solutions;      // those with d > 0
};

// Both constraints must hold for a proper idempotent in class S^8.
inline CommonSolutions solve_proper_constraints() {
  CommonSolutions r;
  RatFun diff = proper_s6_function() - proper_s8_function();
  r.eliminant = diff.num();
  r.candidates = rational_roots(r.eliminant);
  for (auto& c : r.candidates) {
    if (!constraints_detail::kac_nonzero(6, c)) continue;
    r.kac_allowed.push_back(c);
    Rational d = proper_constraint_s6(c);
    if (d > 0) r.solutions.push_back({c, d, {}});
  }
  return r;
}

// Dimensions x_h of the eigenspaces of R_e with eigenvalue h, from the total
// dimension and the power traces Tr R_e^k. The eigenvalue 2 (on e itself) has
// multiplicity one and is accounted for separately.
struct MomentProblem {
  std::vector<Rational> eigenvalues;
  Rational total;                 // d
  std::vector<Rational> moments;  // Tr R_e^k for k = 1..K
  bool use_total = true;
};

// Unique solution if the system determines all unknowns; the consistency of
// every equation, including redundant ones, is checked.
inline std::optional<std::map<Rational, Rational>> solve_moments(const MomentProblem& p) {
  std::vector<std::vector<Rational>> rows;
  std::vector<Rational> rhs;
  if (p.use_total) {
    rows.emplace_back(p.eigenvalues.size(), Rational(1));
    rhs.push_back(p.total - 1);
  }
  Rational two_k = 1;
  for (std::size_t k = 1; k <= p.moments.size(); ++k) {
    two_k *= 2;
    std::vector<Rational> row;
    for (auto& h : p.eigenvalues) {
      Rational hk = 1;
      for (std::size_t j = 0; j < k; ++j) hk *= h;
      row.push_back(hk);
    }
    rows.push_back(row);
    rhs.push_back(p.moments[k - 1] - two_k);
  }
  auto sol = solve_affine(rows, rhs);
  if (!sol || !sol->kernel.empty()) return std::nullopt;
  std::map<Rational, Rational> r;
  for (std::size_t i = 0; i < p.eigenvalues.size(); ++i) r[p.eigenvalues[i]] = sol->particular[i];
  return r;
}

inline bool nonnegative_integers(const std::map<Rational, Rational>& s) {
  for (auto& [h, x] : s)
    if (x < 0 || x.get_den() != 1) return false;
  return true;
}

// Tr R_e^k, k = 1..K, for an idempotent with (e|e) = (e|w) = t at (c, d).
inline std::vector<Rational> idempotent_traces(int K, const Rational& t, const Rational& c, const Rational& d) {
  std::vector<Rational> r;
  for (int m = 1; m <= K; ++m) {
    auto coeff = idempotent_moment(m);
    Rational s = 0, tk = 1;
    for (int k = 0; k < m; ++k) s += coeff[k].eval(c, d) * (tk *= t);
    r.push_back(s);
  }
  return r;
}

// Relation between c and d forced by an idempotent of central charge 1/2
// whose R_e spectrum lies in {0, 1/2, 2} (resp. {0, 1/2, 1/16, 2}), from the
// power traces Tr R_e^k for the given k. Needs one more trace than unknown
// multiplicities; returned as the primitive numerator of the determinant that
// must vanish.
inline Poly ising_relation(const std::vector<int>& powers, bool with_sixteenth) {
  std::vector<Rational> hs{frac(1, 2)};
  if (with_sixteenth) hs.push_back(frac(1, 16));
  if (powers.size() != hs.size() + 1) throw std::invalid_argument("need one more trace than unknowns");
  auto power = [](const Rational& x, int k) {
    Rational r = 1;
    for (int j = 0; j < k; ++j) r *= x;
    return r;
  };
  // Row k: sum_h h^k x_h + 2^k - Tr R_e^k = 0.
  Matrix<RatFun> m;
  for (int k : powers) {
    auto coeff = idempotent_moment(k);
    RatFun tr;
    for (int j = 0; j < k; ++j) tr += coeff[j].scaled(power(frac(1, 4), j + 1));
    std::vector<RatFun> row;
    for (auto& h : hs) row.push_back(RatFun(power(h, k)));
    row.push_back(RatFun(power(2, k)) - tr);
    m.push_back(row);
  }
  Poly common(1);
  for (auto& row : m)
    for (auto& x : row) common = common * divexact(x.den(), gcd(common, x.den()));
  Matrix<Poly> mp;
  for (auto& row : m) {
    std::vector<Poly> pr;
    for (auto& x : row) pr.push_back(divexact(x.num() * common, x.den()));
    mp.push_back(pr);
  }
  return detail::primpart_d(bareiss_determinant(mp)).primitive();
}

// Relation between c and d for an idempotent without 1/16 eigenvectors in
// class S^4: d(22 - 2c) = c(10c + 37).
inline RatFun ising_no_sixteenth_s4() {
  static const RatFun f = parse_ratfun("c(10c+37)/(22-2c)");
  return f;
}

enum class CDTable { ProperS6, IsingNoSixteenth, IsingWithSixteenth };

struct TableScan {
  std::vector<CDPair> rows;
  Rational scanned_to;       // largest c examined
  Rational certified_bound;  // no row can have c beyond this
  bool complete() const { return scanned_to >= certified_bound; }
};

// Past this c, the tail of s6 lies strictly between 1/2 and 1 above the
// half-integer 35c + 2402, so no integral d is possible.
inline Rational proper_s6_tail_bound() {
  // s6(c) = 35c + 2402 + r(c) with 1/2 < r(c) < 1 iff c > 3594140/214303 and
  // c^2 - 214358c + 3594888 > 0; the quadratic increases past its vertex.
  auto q = [](const mpz_class& c) -> mpz_class { return c * c - 214358 * c + 3594888; };
  mpz_class c = 107179;
  while (q(c) <= 0) ++c;
  return Rational(c);
}

inline RatFun proper_s6_tail() {
  static const RatFun f = parse_ratfun("(c^2+214248c-3593392)/(2(c^2-55c+748))");
  return f;
}

inline std::map<Rational, Rational> ising_spectrum(const Rational& c, const Rational& d, bool with_sixteenth) {
  MomentProblem p;
  p.eigenvalues = {0, frac(1, 2)};
  if (with_sixteenth) p.eigenvalues.push_back(frac(1, 16));
  p.total = d;
  p.moments = idempotent_traces(2, frac(1, 4), c, d);
  auto s = solve_moments(p);
  if (!s) throw std::logic_error("moment system is singular");
  return *s;
}

// Positive half-integer c up to the limit, for the requested table.
inline TableScan enumerate_table(CDTable which, std::optional<Rational> limit = std::nullopt) {
  TableScan scan;
  scan.certified_bound = which == CDTable::IsingNoSixteenth ? Rational(11) : proper_s6_tail_bound();
  Rational lim = limit.value_or(scan.certified_bound);
  if (lim < (which == CDTable::IsingNoSixteenth ? Rational(21, 2) : Rational(1496)))
    throw std::invalid_argument("scan limit is below the largest known row");
  mpz_class kmax = (2 * lim.get_num()) / lim.get_den();
  scan.scanned_to = Rational(kmax, 2);
  if (which == CDTable::IsingNoSixteenth) {
    for (mpz_class k = 1; k <= kmax && k < 22; ++k) {
      Rational c(k, 2);
      c.canonicalize();
      if (!constraints_detail::kac_nonzero(4, c)) continue;
      Rational d = ising_no_sixteenth_s4().eval(c, 0);
      if (d <= 0 || d.get_den() != 1) continue;
      MomentProblem p{{0, frac(1, 2)}, d, idempotent_traces(2, frac(1, 4), c, d), true};
      auto s = solve_moments(p);
      if (s && nonnegative_integers(*s)) scan.rows.push_back({c, d, *s});
    }
    return scan;
  }
  // s6 at c = k/2 is (70k^2 + 1910k + 9552) k / (4 (k^2 - 110k + 2992)).
  for (mpz_class k = 1; k <= kmax; ++k) {
    mpz_class num = (70 * k * k + 1910 * k + 9552) * k;
    mpz_class den = 4 * (k * k - 110 * k + 2992);
    if (den <= 0 || num % den != 0) continue;
    Rational c(k, 2);
    c.canonicalize();
    if (!constraints_detail::kac_nonzero(6, c)) continue;
    Rational d(num / den);
    if (which == CDTable::ProperS6) {
      scan.rows.push_back({c, d, {}});
      continue;
    }
    if (d < 2) continue;
    auto s = ising_spectrum(c, d, true);
    if (nonnegative_integers(s) && s.at(frac(1, 16)) > 0) scan.rows.push_back({c, d, s});
  }
  return scan;
}

}  // namespace griess
