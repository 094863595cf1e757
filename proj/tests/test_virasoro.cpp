#include "griess/virasoro.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace griess;

namespace {

// Coefficients of prod_{k>=2} 1/(1-q^k), computed independently of the enumerator.
std::vector<long> partition_counts(int nmax) {
  std::vector<long> a(nmax + 1, 0);
  a[0] = 1;
  for (int k = 2; k <= nmax; ++k)
    for (int n = k; n <= nmax; ++n) a[n] += a[n - k];
  return a;
}

ModuleVector<Poly> basis_vector(const Partition& p) { return {{p, Poly(1)}}; }

}  // namespace

TEST(Partitions, SmallCases) {
  EXPECT_EQ(partitions(4), (std::vector<Partition>{{4}, {2, 2}}));
  EXPECT_TRUE(partitions(1).empty());
  EXPECT_EQ(partitions(0), (std::vector<Partition>{{}}));
  std::vector<Partition> eight = {{8}, {6, 2}, {5, 3}, {4, 4}, {4, 2, 2}, {3, 3, 2}, {2, 2, 2, 2}};
  EXPECT_EQ(partitions(8), eight);
}

TEST(Partitions, CountsMatchGeneratingFunction) {
  auto expect = partition_counts(12);
  std::vector<long> listed = {1, 0, 1, 1, 2, 2, 4, 4, 7, 8, 12};
  for (int n = 0; n <= 10; ++n) EXPECT_EQ(expect[n], listed[n]);
  for (int n = 0; n <= 12; ++n) EXPECT_EQ(static_cast<long>(partitions(n).size()), expect[n]) << n;
}

TEST(VirasoroAction, LoweringOnVacuumStates) {
  auto& vac = VirasoroModule::vacuum();
  auto r = vac.act_L(2, basis_vector({2}));
  ASSERT_EQ(r.size(), 1u);
  EXPECT_EQ(r.begin()->first, Partition{});
  EXPECT_EQ(r.begin()->second, Poly::c().scaled(Rational(1, 2)));
  EXPECT_TRUE(vac.act_L(1, basis_vector({2})).empty());
  EXPECT_TRUE(vac.act_L(-1, basis_vector({})).empty());
  // L_{-1} L_{-2} 1 = L_{-3} 1
  auto s = vac.act_L(-1, basis_vector({2}));
  EXPECT_EQ(s, (ModuleVector<Poly>{{{3}, Poly(1)}}));
  EXPECT_EQ(vac.act_L(0, basis_vector({4, 2})), (ModuleVector<Poly>{{{4, 2}, Poly(6)}}));
}

TEST(VirasoroAction, CommutatorRelationOnRandomBasisVectors) {
  auto& vac = VirasoroModule::vacuum();
  std::mt19937 rng(2024);
  std::uniform_int_distribution<int> mode(-4, 4), level(0, 8);
  for (int trial = 0; trial < 60; ++trial) {
    int m = mode(rng), n = mode(rng), w = level(rng);
    auto basis = partitions(w);
    if (basis.empty()) continue;
    auto p = basis[std::uniform_int_distribution<std::size_t>(0, basis.size() - 1)(rng)];
    auto v = basis_vector(p);
    auto lhs = combine(vac.act_L(m, vac.act_L(n, v)), vac.act_L(n, vac.act_L(m, v)), Poly(-1));
    auto rhs = scaled(vac.act_L(m + n, v), Poly(m - n));
    if (m + n == 0) add_to(rhs, p, Poly::c().scaled(frac(m * m * m - m, 12)));
    EXPECT_EQ(lhs, rhs) << "m=" << m << " n=" << n << " v=" << to_string(p);
  }
}

TEST(VirasoroAction, OutputIsHomogeneous) {
  auto& vac = VirasoroModule::vacuum();
  for (int m = -3; m <= 3; ++m)
    for (auto& p : partitions(7))
      for (auto& [q, k] : vac.act_basis(m, p)) EXPECT_EQ(weight(q), 7 - m);
}

TEST(GramMatrix, LowLevels) {
  auto& vac = VirasoroModule::vacuum();
  auto g0 = vac.gram_matrix(0);
  ASSERT_EQ(g0.size(), 1u);
  EXPECT_EQ(g0[0][0], Poly(1));
  auto g2 = vac.gram_matrix(2);
  EXPECT_EQ(g2[0][0], Poly::c().scaled(Rational(1, 2)));
  // ([4]|[4]) = 5c, ([4]|[2,2]) = 3c, ([2,2]|[2,2]) = c^2/2 + 4c
  auto g4 = vac.gram_matrix(4);
  EXPECT_EQ(g4[0][0], Poly::c().scaled(5));
  EXPECT_EQ(g4[0][1], Poly::c().scaled(3));
  EXPECT_EQ(g4[1][1], parse_ratfun("c^2/2 + 4c").num());
  EXPECT_TRUE(divides(parse_ratfun("c(5c+22)").num(), bareiss_determinant(g4)));
}

TEST(GramMatrix, SymmetricAndNonsingularAtMoonshinePoint) {
  auto& vac = VirasoroModule::vacuum();
  for (int n = 0; n <= 10; ++n) {
    auto g = vac.gram_matrix(n);
    for (std::size_t i = 0; i < g.size(); ++i)
      for (std::size_t j = 0; j < g.size(); ++j) EXPECT_EQ(g[i][j], g[j][i]);
    if (n == 1) continue;
    EXPECT_NE(bareiss_determinant(g).eval(24, 0), 0) << n;
  }
}

TEST(KacFactors, StoredFactorsMatchGramDeterminant) {
  for (int n : {2, 4, 6, 8, 10}) {
    auto r = kac_factor_check(n);
    EXPECT_TRUE(r.ok) << "n=" << n << " det radical " << r.radical_det << " stored " << r.radical_stored;
  }
  EXPECT_THROW(kac_factor_check(5), std::invalid_argument);
}

TEST(KacFactors, DetectsWrongFactor) {
  // A spurious factor is not a divisor of det.
  Poly det = gram_determinant(6);
  EXPECT_FALSE(divides(parse_ratfun("3c+46").num(), det));
  EXPECT_TRUE(divides(parse_ratfun("7c+68").num(), det));
}

// On the top level of M(c,h), o(u) acts by the Zhu-algebra image of u:
// o([2]) = h, o([3]) = -2h, o([4]) = 3h, o([2,2]) = h^2 + 2h.
TEST(ZeroModes, TopLevelEigenvaluesFollowZhuAlgebra) {
  for (Rational h : {Rational(2), Rational(7, 3), Rational(-1, 5)}) {
    VirasoroModule verma(h, 1);
    auto eig = [&](const Partition& u) {
      auto v = verma.zero_mode(u, {});
      if (v.empty()) return Poly();
      EXPECT_EQ(v.size(), 1u);
      EXPECT_EQ(v.begin()->first, Partition{});
      return v.begin()->second;
    };
    EXPECT_EQ(eig({2}), Poly(h));
    EXPECT_EQ(eig({3}), Poly(-2 * h));
    EXPECT_EQ(eig({4}), Poly(3 * h));
    EXPECT_EQ(eig({2, 2}), Poly(h * h + 2 * h));
  }
}

TEST(ZeroModes, OmegaZeroModeIsL0) {
  VirasoroModule verma(Rational(3, 2), 1);
  for (int level = 0; level <= 4; ++level)
    for (auto& p : verma.basis(level))
      EXPECT_EQ(verma.zero_mode({2}, p), (ModuleVector<Poly>{{p, Poly(Rational(3, 2) + level)}}));
}

TEST(ZeroModes, PreserveLevel) {
  auto& vac = VirasoroModule::vacuum();
  for (auto& u : partitions(6))
    for (auto& p : partitions(4))
      for (auto& [q, k] : vac.zero_mode(u, p)) EXPECT_EQ(weight(q), 4);
}

// (L_{-1}u)_(n) = -n u_(n-1), with L_{-1}[2] = [3].
TEST(ZeroModes, TranslationCovariance) {
  VirasoroModule verma(Rational(5, 4), 1);
  for (auto& p : verma.basis(2)) {
    ModuleVector<Poly> v{{p, Poly(1)}};
    for (int n = 0; n <= 4; ++n) {
      auto lhs = verma.mode({3}, n, v);
      auto rhs = scaled(verma.mode({2}, n - 1, v), Poly(-n));
      EXPECT_EQ(lhs, rhs) << "n=" << n;
    }
  }
}
