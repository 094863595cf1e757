#include "griess/spectrum.hpp"

#include <gtest/gtest.h>

#include <complex>

using namespace griess;

namespace {

// Floating point trace of the phase-weighted sum, independent of the
// cyclotomic reduction.
double numeric_trace(const Spectrum& dims, const PhaseAssignment& phases) {
  std::complex<double> s = 0;
  for (auto& [h, x] : dims) {
    auto e = phases.at(h);
    double angle = 2 * M_PI * e.exponent.get_d();
    auto z = std::polar(1.0, angle);
    s += e.split ? x.get_d() / 2 * (z + std::conj(z)) : x.get_d() * z;
  }
  EXPECT_NEAR(s.imag(), 0, 1e-6);
  return s.real();
}

// Power sums of the spectrum compared against the trace formula evaluated on
// a one-dimensional algebra spanned by the idempotent.
void expect_moments(const Spectrum& dims, const Rational& b) {
  AlgebraModel a;
  a.mult = {{{2}}};
  a.form = {{b / 2}};
  a.omega_form = {b / 2};
  a.symbol[1] = {1};
  Rational total = 0;
  for (auto& [h, x] : dims) total += x;
  EXPECT_EQ(total, 196884);
  for (int k = 1; k <= 5; ++k) {
    Rational s = 0;
    for (auto& [h, x] : dims) s += power_of(h, k) * x;
    EXPECT_EQ(s, evaluate_trace(std::vector<int>(k, 1), a, 24, 196884)) << "k=" << k;
  }
}

Spectrum spectrum(std::initializer_list<std::pair<Rational, long>> l) {
  Spectrum s;
  for (auto& [h, x] : l) s[h] = x;
  return s;
}

}  // namespace

TEST(Cyclotomic, Polynomials) {
  EXPECT_EQ(Cyclotomic::cyclotomic_polynomial(1), (std::vector<Rational>{-1, 1}));
  EXPECT_EQ(Cyclotomic::cyclotomic_polynomial(4), (std::vector<Rational>{1, 0, 1}));
  EXPECT_EQ(Cyclotomic::cyclotomic_polynomial(5), (std::vector<Rational>{1, 1, 1, 1, 1}));
  EXPECT_EQ(Cyclotomic::cyclotomic_polynomial(6), (std::vector<Rational>{1, -1, 1}));
}

TEST(Cyclotomic, RealCombinations) {
  Cyclotomic z(5);
  for (int k = 0; k < 5; ++k) z.add_root_power(k, 1);
  EXPECT_TRUE(z.is_rational());
  EXPECT_EQ(z.rational_part(), 0);
  Cyclotomic w(3);
  w.add_root_power(1, 1);
  EXPECT_FALSE(w.is_rational());
  w.add_root_power(-1, 1);
  EXPECT_EQ(w.rational_part(), -1);
}

TEST(Spectrum, Ising) {
  const auto& rec = subvoa_record("ising");
  auto s = solve_spectrum(rec.problem());
  EXPECT_EQ(s, spectrum({{0, 96256}, {frac(1, 16), 96256}, {frac(1, 2), 4371}, {2, 1}}));
  expect_moments(s, frac(1, 2));
  EXPECT_EQ(automorphism_trace(s, rec.phases), 4372);
}

TEST(Spectrum, Minimal710) {
  const auto& rec = subvoa_record("m710");
  auto s = solve_spectrum(rec.problem());
  EXPECT_EQ(s, spectrum({{0, 51054}, {frac(3, 80), 91392}, {frac(1, 10), 47634}, {frac(7, 16), 4864},
                         {frac(3, 5), 1938}, {frac(3, 2), 1}, {2, 1}}));
  expect_moments(s, frac(7, 10));
  EXPECT_EQ(automorphism_trace(s, rec.phases), 4372);
}

TEST(Spectrum, W3) {
  const auto& rec = subvoa_record("w3");
  auto s = solve_spectrum(rec.problem());
  EXPECT_EQ(s, spectrum({{0, 57478}, {frac(1, 15), 129168}, {frac(2, 5), 8671}, {frac(2, 3), 1566}, {2, 1}}));
  expect_moments(s, frac(4, 5));
  EXPECT_EQ(automorphism_trace(s, rec.phases), 783);
  EXPECT_NEAR(numeric_trace(s, rec.phases), 783, 1e-6);
}

// Six equations for seven unknowns: the integer points on the solution line
// are enumerated and exactly one is nonnegative.
TEST(Spectrum, W4DeficientSystem) {
  const auto& rec = subvoa_record("w4");
  auto s = solve_spectrum(rec.problem());
  EXPECT_EQ(s, spectrum({{0, 38226}, {frac(1, 16), 94208}, {frac(1, 12), 48600}, {frac(1, 3), 11178},
                         {frac(9, 16), 4096}, {frac(3, 4), 552}, {1, 23}, {2, 1}}));
  expect_moments(s, 1);
  EXPECT_EQ(automorphism_trace(s, rec.phases), 276);
  EXPECT_EQ(automorphism_trace(s, rec.phases.power(2)), 276);
  EXPECT_EQ(rec.phases.power(2).order(), 2);
  EXPECT_NEAR(numeric_trace(s, rec.phases), 276, 1e-6);
}

TEST(Spectrum, W5ListedDimensionsOnly) {
  const auto& rec = subvoa_record("w5");
  EXPECT_TRUE(rec.conjectural);
  // Too many sectors for the moments: the solution space is not a line.
  EXPECT_THROW(solve_spectrum(rec.problem()), spectrum_error);
  auto r = analyze_subvoa("w5");
  EXPECT_TRUE(r.verify_only);
  expect_moments(r.dims, frac(8, 7));
  EXPECT_EQ(r.trace, 134);
  // Exchanging the roles of zeta and zeta^2 gives the same trace.
  EXPECT_EQ(automorphism_trace(r.dims, rec.phases.power(2)), 134);
  EXPECT_NEAR(numeric_trace(r.dims, rec.phases), 134, 1e-6);
}

TEST(Spectrum, JointIsing) {
  auto js = solve_joint_spectrum(subvoa_record("ising").problem());
  Rational z = 0, s = frac(1, 16), h = frac(1, 2);
  std::map<Cell, Rational> expect{{{z, z}, 46851}, {{z, s}, 47104}, {{s, z}, 47104}, {{s, s}, 47104},
                                  {{h, z}, 2300},  {{z, h}, 2300},  {{h, s}, 2048},  {{s, h}, 2048},
                                  {{h, h}, 23},    {{2, z}, 1},     {{z, 2}, 1}};
  EXPECT_EQ(js.cells, expect);
  EXPECT_EQ(js.collapsed, spectrum({{0, 46851}, {frac(1, 16), 94208}, {frac(1, 8), 47104}, {frac(1, 2), 4600},
                                    {frac(9, 16), 4096}, {1, 23}, {2, 2}}));
  expect_moments(js.collapsed, 1);
  // Marginals give back the single-idempotent spectrum.
  Spectrum marginal;
  for (auto& [cell, x] : js.cells) marginal[cell.first] += x;
  EXPECT_EQ(marginal, solve_spectrum(subvoa_record("ising").problem()));
}

TEST(Spectrum, JointIsingMixedMoments) {
  auto js = solve_joint_spectrum(subvoa_record("ising").problem());
  auto sum = [&](int j, int k) {
    Rational t = 0;
    for (auto& [cell, x] : js.cells) t += power_of(cell.first, j) * power_of(cell.second, k) * x;
    return t;
  };
  EXPECT_EQ(sum(1, 1), frac(1271, 4));
  EXPECT_EQ(sum(2, 1), frac(403, 8));
  EXPECT_EQ(sum(2, 2), frac(197, 32));
}

TEST(Spectrum, ClassIdentification) {
  std::map<std::string, std::pair<Rational, std::string>> expect{
      {"ising", {4372, "2A"}}, {"ising2", {276, "2B"}}, {"m710", {4372, "2A"}},
      {"w3", {783, "3A"}},     {"w4", {276, "4A"}},     {"w5", {134, "5A"}}};
  for (auto& rec : subvoa_records()) {
    auto r = analyze_subvoa(rec.name);
    EXPECT_EQ(r.trace, expect.at(rec.name).first) << rec.name;
    EXPECT_EQ(r.identified.value_or(""), expect.at(rec.name).second) << rec.name;
    EXPECT_EQ(r.expected_class, expect.at(rec.name).second) << rec.name;
    EXPECT_TRUE(r.consistent()) << rec.name;
  }
  auto w4 = analyze_subvoa("w4");
  EXPECT_EQ(w4.square_identified.value_or(""), "2B");
}

TEST(Spectrum, SplitSectorsMustPairUp) {
  PhaseAssignment p;
  p.entries[frac(1, 15)] = {frac(1, 3), false};
  EXPECT_THROW(automorphism_trace(spectrum({{frac(1, 15), 6}}), p), std::domain_error);
  p.entries[frac(1, 15)].split = true;
  EXPECT_THROW(automorphism_trace(spectrum({{frac(1, 15), 5}}), p), std::domain_error);
  EXPECT_EQ(automorphism_trace(spectrum({{frac(1, 15), 6}}), p), -3);
}

TEST(Spectrum, LatticePointsOnALine) {
  // x + y = 3 with x, y >= 0.
  auto pts = spectrum_detail::lattice_points({3, 0}, {-1, 1});
  EXPECT_EQ(pts.size(), 4u);
  // x = 1/2 + t, y = 3 - t has no integer points.
  EXPECT_TRUE(spectrum_detail::lattice_points({frac(1, 2), 3}, {2, -2}).empty());
  EXPECT_THROW(spectrum_detail::lattice_points({0, 0}, {1, 1}), spectrum_error);
}

TEST(Spectrum, RejectsBadInput) {
  SpectrumProblem p = subvoa_record("ising").problem();
  p.weights.push_back(0);
  EXPECT_THROW(solve_spectrum(p), std::invalid_argument);
  p = subvoa_record("ising").problem();
  p.weights.push_back(2);
  EXPECT_THROW(solve_spectrum(p), std::invalid_argument);
  EXPECT_THROW(subvoa_record("e8"), std::invalid_argument);
}
