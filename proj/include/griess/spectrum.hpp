#pragma once

#include <json.hpp>

#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include "constraints.hpp"

namespace griess {

// Eigenspace dimensions of R_e on B, keyed by eigenvalue.
using Spectrum = std::map<Rational, Rational>;

struct SpectrumProblem {
  std::vector<Rational> weights;  // unknown eigenvalues
  Spectrum fixed{{2, 1}};         // known dimensions, not among the unknowns
  Rational central_charge;        // b = 2(e|e)
  int num_moments = 5;
  Rational c = 24;
  Rational total = 196884;
};

// A phase k/n on an eigenspace means the automorphism acts by exp(2 pi i k/n).
// A split eigenspace is a sum of two halves of equal dimension, acted on by
// the phase and its conjugate.
struct PhaseAssignment {
  struct Entry {
    Rational exponent;
    bool split = false;
  };
  std::map<Rational, Entry> entries;

  Entry at(const Rational& h) const {
    auto it = entries.find(h);
    return it == entries.end() ? Entry{} : it->second;
  }
  PhaseAssignment power(long k) const {
    PhaseAssignment r = *this;
    for (auto& [h, e] : r.entries) {
      e.exponent *= k;
      e.exponent -= Rational(e.exponent.get_num() / e.exponent.get_den());
      if (e.exponent < 0) e.exponent += 1;
    }
    return r;
  }
  long order() const {
    mpz_class n = 1;
    for (auto& [h, e] : entries) mpz_lcm(n.get_mpz_t(), n.get_mpz_t(), e.exponent.get_den_mpz_t());
    return n.get_si();
  }
};

class spectrum_error : public std::runtime_error {
 public:
  spectrum_error(const std::string& what, std::vector<Spectrum> found = {})
      : std::runtime_error(what), solutions(std::move(found)) {}
  std::vector<Spectrum> solutions;
};

// ---------------------------------------------------------------------------
// Exact arithmetic in Q(zeta_n), as polynomials modulo the cyclotomic polynomial.

class Cyclotomic {
 public:
  explicit Cyclotomic(long n) : n_(n), modulus_(cyclotomic_polynomial(n)), coeffs_(modulus_.size() - 1) {}

  static std::vector<Rational> cyclotomic_polynomial(long n) {
    if (n < 1) throw std::invalid_argument("cyclotomic order must be positive");
    // x^n - 1 divided by the cyclotomic polynomials of the proper divisors.
    std::vector<Rational> p(n + 1, 0);
    p[0] = -1;
    p[n] = 1;
    for (long d = 1; d < n; ++d) {
      if (n % d) continue;
      auto q = cyclotomic_polynomial(d);
      std::vector<Rational> quot(p.size() - q.size() + 1, 0);
      for (std::size_t i = quot.size(); i-- > 0;) {
        quot[i] = p[i + q.size() - 1] / q.back();
        for (std::size_t j = 0; j < q.size(); ++j) p[i + j] -= quot[i] * q[j];
      }
      p = quot;
    }
    return p;
  }

  // this += coefficient * zeta^k
  void add_root_power(long k, const Rational& coefficient) {
    k %= n_;
    if (k < 0) k += n_;
    std::vector<Rational> x(std::max<std::size_t>(k + 1, coeffs_.size()), 0);
    x[k] = coefficient;
    std::size_t deg = modulus_.size() - 1;
    for (std::size_t i = x.size(); i-- > deg;) {
      if (x[i] == 0) continue;
      Rational lead = x[i];
      for (std::size_t j = 0; j <= deg; ++j) x[i - deg + j] -= lead * modulus_[j];
    }
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += x[i];
  }

  bool is_rational() const {
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
      if (coeffs_[i] != 0) return false;
    return true;
  }
  Rational rational_part() const { return coeffs_.empty() ? Rational(0) : coeffs_[0]; }
  long order() const { return n_; }

 private:
  long n_;
  std::vector<Rational> modulus_;
  std::vector<Rational> coeffs_;
};

inline Rational automorphism_trace(const Spectrum& dims, const PhaseAssignment& phases) {
  long n = phases.order();
  Cyclotomic sum(n);
  for (auto& [h, x] : dims) {
    auto e = phases.at(h);
    mpz_class k = e.exponent.get_num() * (n / e.exponent.get_den());
    if (e.split) {
      if (x.get_den() != 1 || x.get_num() % 2 != 0) throw std::domain_error("split eigenspace of odd dimension");
      sum.add_root_power(k.get_si(), x / 2);
      sum.add_root_power(-k.get_si(), x / 2);
    } else {
      sum.add_root_power(k.get_si(), x);
    }
  }
  if (!sum.is_rational()) throw std::domain_error("automorphism trace is not rational");
  return sum.rational_part();
}

// Character values of the 196883-dimensional Monster representation on the
// classes of order at most 5. The trace on B adds 1 for w.
inline std::optional<std::string> identify_class(long order, const Rational& trace_on_B) {
  static const std::vector<std::tuple<long, const char*, long>> table{
      {1, "1A", 196883}, {2, "2A", 4371}, {2, "2B", 275},  {3, "3A", 782}, {3, "3B", 53}, {3, "3C", -1},
      {4, "4A", 275},    {4, "4B", 51},   {4, "4C", 19},   {4, "4D", -13}, {5, "5A", 133}, {5, "5B", 8}};
  for (auto& [o, name, chi] : table)
    if (o == order && trace_on_B == chi + 1) return std::string(name);
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Moment systems.

inline Rational power_of(const Rational& h, int k) {
  Rational r = 1;
  for (int i = 0; i < k; ++i) r *= h;
  return r;
}

// Tr R_e^k - sum_h h^k d(h) for k = 0..K, where the k = 0 entry uses d.
inline std::vector<Rational> moment_residuals(const Spectrum& dims, const Rational& b, int K, const Rational& c = 24,
                                              const Rational& d = 196884) {
  auto traces = idempotent_traces(K, b / 2, c, d);
  traces.insert(traces.begin(), d);
  std::vector<Rational> r;
  for (int k = 0; k <= K; ++k) {
    Rational s = traces[k];
    for (auto& [h, x] : dims) s -= power_of(h, k) * x;
    r.push_back(s);
  }
  return r;
}

namespace spectrum_detail {

inline std::vector<mpz_class> primitive_integer(const std::vector<Rational>& v) {
  mpz_class l = 1, g = 0;
  for (auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  std::vector<mpz_class> r;
  for (auto& x : v) {
    mpz_class y = x.get_num() * (l / x.get_den());
    r.push_back(y);
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), y.get_mpz_t());
  }
  for (auto& y : r) y /= g;
  return r;
}

inline mpz_class floor_of(const Rational& x) {
  mpz_class f;
  mpz_fdiv_q(f.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return f;
}

inline mpz_class ceil_of(const Rational& x) {
  mpz_class f;
  mpz_cdiv_q(f.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return f;
}

// Nonnegative integer points on the line p + t v.
inline std::vector<std::vector<Rational>> lattice_points(const std::vector<Rational>& p, const std::vector<Rational>& kernel) {
  auto v = primitive_integer(kernel);
  std::optional<Rational> lo, hi;
  for (std::size_t j = 0; j < v.size(); ++j) {
    if (v[j] == 0) continue;
    Rational bound = -p[j] / Rational(v[j]);
    if (v[j] > 0 && (!lo || bound > *lo)) lo = bound;
    if (v[j] < 0 && (!hi || bound < *hi)) hi = bound;
  }
  if (!lo || !hi) throw spectrum_error("nonnegative solutions are unbounded");
  std::vector<std::vector<Rational>> found;
  if (*lo > *hi) return found;
  // Step through integer values of the coordinate with the smallest slope.
  std::size_t i = 0;
  for (std::size_t j = 0; j < v.size(); ++j)
    if (v[j] != 0 && (v[i] == 0 || abs(v[j]) < abs(v[i]))) i = j;
  Rational a = p[i] + Rational(v[i]) * *lo, b = p[i] + Rational(v[i]) * *hi;
  if (a > b) std::swap(a, b);
  for (mpz_class m = ceil_of(a); m <= floor_of(b); ++m) {
    Rational t = (Rational(m) - p[i]) / Rational(v[i]);
    std::vector<Rational> x;
    bool ok = true;
    for (std::size_t j = 0; j < v.size() && ok; ++j) {
      x.push_back(p[j] + t * Rational(v[j]));
      ok = x.back() >= 0 && x.back().get_den() == 1;
    }
    if (ok) found.push_back(std::move(x));
  }
  return found;
}

inline std::vector<std::vector<Rational>> integer_solutions(const Matrix<Rational>& a, const std::vector<Rational>& rhs) {
  auto sol = solve_affine(a, rhs);
  if (!sol) return {};
  if (sol->kernel.empty()) {
    for (auto& x : sol->particular)
      if (x < 0 || x.get_den() != 1) return {};
    return {sol->particular};
  }
  if (sol->kernel.size() > 1)
    throw spectrum_error("solution space has dimension " + std::to_string(sol->kernel.size()) +
                         "; enumeration supports a single free direction");
  return lattice_points(sol->particular, sol->kernel[0]);
}

}  // namespace spectrum_detail

inline Spectrum solve_spectrum(const SpectrumProblem& p) {
  std::set<Rational> seen(p.weights.begin(), p.weights.end());
  if (seen.size() != p.weights.size()) throw std::invalid_argument("weights must be distinct");
  for (auto& [h, x] : p.fixed)
    if (seen.count(h)) throw std::invalid_argument("a fixed weight is also unknown");
  if (p.central_charge == 0) throw std::invalid_argument("central charge of e must be nonzero");
  if (p.num_moments < 1 || p.num_moments > 5) throw std::invalid_argument("between 1 and 5 moments are available");

  auto traces = idempotent_traces(p.num_moments, p.central_charge / 2, p.c, p.total);
  traces.insert(traces.begin(), p.total);
  Matrix<Rational> a;
  std::vector<Rational> rhs;
  for (int k = 0; k <= p.num_moments; ++k) {
    std::vector<Rational> row;
    for (auto& h : p.weights) row.push_back(power_of(h, k));
    Rational r = traces[k];
    for (auto& [h, x] : p.fixed) r -= power_of(h, k) * x;
    a.push_back(std::move(row));
    rhs.push_back(r);
  }
  auto points = spectrum_detail::integer_solutions(a, rhs);
  std::vector<Spectrum> found;
  for (auto& x : points) {
    Spectrum s = p.fixed;
    for (std::size_t i = 0; i < x.size(); ++i) s[p.weights[i]] = x[i];
    found.push_back(std::move(s));
  }
  if (found.empty()) throw spectrum_error("no nonnegative integer solution");
  if (found.size() > 1) throw spectrum_error(std::to_string(found.size()) + " nonnegative integer solutions", found);
  return found[0];
}

// ---------------------------------------------------------------------------
// Two orthogonal idempotents e1, e2 of the same central charge with e1 e2 = 0.

using Cell = std::pair<Rational, Rational>;

struct JointSpectrum {
  std::map<Cell, Rational> cells;
  Spectrum collapsed;  // spectrum of e1 + e2
};

inline AlgebraModel orthogonal_pair_model(const Rational& b) {
  Rational t = b / 2;
  AlgebraModel a;
  a.mult = {{{2, 0}, {0, 0}}, {{0, 0}, {0, 2}}};
  a.form = {{t, 0}, {0, t}};
  a.omega_form = {t, t};
  a.symbol[1] = {1, 0};
  a.symbol[2] = {0, 1};
  return a;
}

// Tr R_e1^j R_e2^k.
inline Rational mixed_trace(int j, int k, const AlgebraModel& model, const Rational& c, const Rational& d) {
  if (j + k == 0) return d;
  std::vector<int> args(j, 1);
  args.insert(args.end(), k, 2);
  return evaluate_trace(args, model, c, d);
}

// The cells with an eigenvalue 2 are known: e_i itself spans them.
inline JointSpectrum solve_joint_spectrum(const SpectrumProblem& component, int max_degree = 5) {
  if (max_degree < 4 || max_degree > 5) throw std::invalid_argument("joint solve needs total degree 4 or 5");
  auto model = orthogonal_pair_model(component.central_charge);
  const auto& w = component.weights;
  std::vector<Cell> unknown;
  for (auto& h1 : w)
    for (auto& h2 : w) unknown.emplace_back(h1, h2);
  std::map<Cell, Rational> fixed{{{2, 0}, 1}, {{0, 2}, 1}};

  Matrix<Rational> a;
  std::vector<Rational> rhs;
  for (int j = 0; j <= max_degree; ++j)
    for (int k = 0; j + k <= max_degree; ++k) {
      std::vector<Rational> row;
      for (auto& [h1, h2] : unknown) row.push_back(power_of(h1, j) * power_of(h2, k));
      Rational r = mixed_trace(j, k, model, component.c, component.total);
      for (auto& [cell, x] : fixed) r -= power_of(cell.first, j) * power_of(cell.second, k) * x;
      a.push_back(std::move(row));
      rhs.push_back(r);
    }
  auto points = spectrum_detail::integer_solutions(a, rhs);
  if (points.empty()) throw spectrum_error("no nonnegative integer solution");
  if (points.size() > 1) throw spectrum_error(std::to_string(points.size()) + " nonnegative integer solutions");
  JointSpectrum r;
  r.cells = fixed;
  for (std::size_t i = 0; i < unknown.size(); ++i) r.cells[unknown[i]] = points[0][i];
  for (auto& [cell, x] : r.cells) r.collapsed[cell.first + cell.second] += x;
  return r;
}

// Product of the two component automorphisms; the cells of one collapsed
// eigenvalue must carry the same phase.
inline PhaseAssignment collapse_phases(const JointSpectrum& js, const PhaseAssignment& component) {
  PhaseAssignment r;
  for (auto& [cell, x] : js.cells) {
    auto a = component.at(cell.first), b = component.at(cell.second);
    if (a.split || b.split) throw std::invalid_argument("split phases do not combine cell by cell");
    Rational e = a.exponent + b.exponent;
    if (e >= 1) e -= 1;
    Rational h = cell.first + cell.second;
    auto [it, inserted] = r.entries.emplace(h, PhaseAssignment::Entry{e, false});
    if (!inserted && it->second.exponent != e && x != 0)
      throw std::domain_error("cells of eigenvalue " + to_string(h) + " carry different phases");
  }
  return r;
}

// ---------------------------------------------------------------------------
// Records of the subalgebras, one per known embedding.

struct SubVOARecord {
  std::string name, title;
  Rational central_charge;
  std::vector<Rational> weights;
  PhaseAssignment phases;
  Spectrum fixed;
  Spectrum listed;  // dimensions given without a derivation (verify only)
  int num_moments = 5;
  std::string expected_class, square_class, joint_of;
  bool conjectural = false;

  SpectrumProblem problem() const {
    SpectrumProblem p;
    p.weights = weights;
    p.fixed = fixed;
    p.central_charge = central_charge;
    p.num_moments = num_moments;
    return p;
  }
};

inline const char* subvoa_records_json() {
  return
#include "data/subvoa_records.json.inc"
      ;
}

inline std::vector<SubVOARecord> parse_subvoa_records(const std::string& text) {
  std::vector<SubVOARecord> out;
  auto spectrum_of = [](const nlohmann::json& j) {
    Spectrum s;
    for (auto& [k, v] : j.items()) s[parse_rational(k)] = Rational(v.get<long>());
    return s;
  };
  for (auto& j : nlohmann::json::parse(text)) {
    SubVOARecord r;
    r.name = j.at("name");
    r.title = j.value("title", r.name);
    r.expected_class = j.value("expected_class", "");
    r.square_class = j.value("square_class", "");
    r.conjectural = j.value("conjectural", false);
    r.joint_of = j.value("joint_of", "");
    if (r.joint_of.empty()) {
      r.central_charge = parse_rational(j.at("central_charge"));
      r.num_moments = j.value("num_moments", 5);
      for (auto& s : j.at("weights")) {
        Rational h = parse_rational(s.at("h"));
        r.weights.push_back(h);
        if (s.contains("phase")) r.phases.entries[h] = {parse_rational(s.at("phase")), s.value("split", false)};
      }
      r.fixed = spectrum_of(j.value("fixed", nlohmann::json::object()));
      r.listed = spectrum_of(j.value("listed", nlohmann::json::object()));
    }
    out.push_back(std::move(r));
  }
  return out;
}

inline const std::vector<SubVOARecord>& subvoa_records() {
  static const auto records = parse_subvoa_records(subvoa_records_json());
  return records;
}

inline const SubVOARecord& subvoa_record(const std::string& name) {
  for (auto& r : subvoa_records())
    if (r.name == name) return r;
  throw std::invalid_argument("unknown subalgebra '" + name + "'");
}

struct SubVOAReport {
  std::string name, title;
  Spectrum dims;
  std::map<Cell, Rational> cells;  // joint records only
  std::vector<Rational> residuals;
  Rational trace;
  std::optional<Rational> square_trace;
  long order = 1;
  std::optional<std::string> identified, square_identified;
  std::string expected_class, square_class;
  bool verify_only = false;

  bool consistent() const {
    for (auto& r : residuals)
      if (r != 0) return false;
    return identified && *identified == expected_class && (square_class.empty() || square_identified == square_class);
  }
};

inline SubVOAReport analyze_subvoa(const std::string& name) {
  const auto& rec = subvoa_record(name);
  SubVOAReport r;
  r.name = rec.name;
  r.title = rec.title;
  r.expected_class = rec.expected_class;
  r.square_class = rec.square_class;
  PhaseAssignment phases;
  Rational b;
  if (!rec.joint_of.empty()) {
    const auto& comp = subvoa_record(rec.joint_of);
    auto js = solve_joint_spectrum(comp.problem());
    r.cells = js.cells;
    r.dims = js.collapsed;
    phases = collapse_phases(js, comp.phases);
    b = 2 * comp.central_charge;
  } else {
    b = rec.central_charge;
    r.verify_only = rec.conjectural;
    if (rec.conjectural) {
      r.dims = rec.fixed;
      r.dims.insert(rec.listed.begin(), rec.listed.end());
    } else {
      r.dims = solve_spectrum(rec.problem());
    }
    phases = rec.phases;
  }
  r.residuals = moment_residuals(r.dims, b, 5);
  r.trace = automorphism_trace(r.dims, phases);
  r.order = phases.order();
  r.identified = identify_class(r.order, r.trace);
  if (!rec.square_class.empty()) {
    auto sq = phases.power(2);
    r.square_trace = automorphism_trace(r.dims, sq);
    r.square_identified = identify_class(sq.order(), *r.square_trace);
  }
  return r;
}

}  // namespace griess
