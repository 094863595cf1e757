#pragma once

#include "griess/virasoro.hpp"

#include <map>
#include <stdexcept>
#include <vector>

namespace griess {

using CasimirVector = ModuleVector<RatFun>;

struct CasimirElement {
  int n = 0;
  CasimirVector vector;
};

namespace casimir_detail {

inline const CasimirVector& lookup(const std::map<int, CasimirElement>& known, int k) {
  static const CasimirVector zero;
  if (k < 0 || k == 1) return zero;
  auto it = known.find(k);
  if (it == known.end()) throw std::invalid_argument("Casimir element of degree " + std::to_string(k) + " missing");
  return it->second.vector;
}

}  // namespace casimir_detail

inline CasimirElement casimir_zero() { return {0, CasimirVector{{Partition{}, RatFun::d()}}}; }

// Right side of L_m kappa_k = (m+k-2) kappa_{k-m} + [m=2] L_{-k+2} 1 + [m=k-2] (m^3-m)/6 [2].
inline CasimirVector relation_rhs(int m, int k, const std::map<int, CasimirElement>& known) {
  CasimirVector r;
  if (m + k - 2 != 0 && k - m >= 0) {
    for (auto& [p, c] : casimir_detail::lookup(known, k - m)) add_to(r, p, c.scaled(m + k - 2));
  }
  if (m == 2 && k - 2 >= 2) add_to(r, Partition{k - 2}, RatFun(1));
  if (m == k - 2) add_to(r, Partition{2}, RatFun(frac(m * m * m - m, 6)));
  return r;
}

// Unique weight-n vector obeying the m = 1, 2 relations, solved fraction-free over Q[c].
inline CasimirElement solve_casimir(int n, const std::map<int, CasimirElement>& known) {
  if (n < 2 || n > 10) throw std::invalid_argument("Casimir elements are solved for 2 <= n <= 10");
  auto& vac = VirasoroModule::vacuum();
  auto cols = vac.basis(n);
  Matrix<Poly> a;
  std::vector<RatFun> b;
  for (int m : {1, 2}) {
    auto rhs = relation_rhs(m, n, known);
    for (auto& row : vac.basis(n - m)) {
      std::vector<Poly> line;
      for (auto& col : cols) {
        auto& img = vac.act_basis(m, col);
        auto it = img.find(row);
        line.push_back(it == img.end() ? Poly() : it->second);
      }
      a.push_back(std::move(line));
      auto it = rhs.find(row);
      b.push_back(it == rhs.end() ? RatFun() : it->second);
    }
  }
  auto sol = solve_fraction_free(a, b);
  CasimirElement k{n, {}};
  for (std::size_t j = 0; j < cols.size(); ++j) add_to(k.vector, cols[j], sol.x[j]);
  return k;
}

// kappa_0 .. kappa_nmax, each solved from the lower ones.
inline std::map<int, CasimirElement> casimir_chain(int nmax) {
  std::map<int, CasimirElement> known;
  known[0] = casimir_zero();
  known[1] = CasimirElement{1, {}};
  for (int n = 2; n <= nmax; ++n) known[n] = solve_casimir(n, known);
  return known;
}

inline const std::map<int, CasimirElement>& casimir_table() {
  static const std::map<int, CasimirElement> table = casimir_chain(10);
  return table;
}

// Residual L_m kappa_n - rhs; empty when the relation holds.
inline CasimirVector relation_residual(int m, int n, const std::map<int, CasimirElement>& known) {
  auto lhs = VirasoroModule::vacuum().act_L(m, casimir_detail::lookup(known, n));
  return combine(lhs, relation_rhs(m, n, known), RatFun(-1));
}

inline ModuleVector<Rational> specialize(const CasimirVector& v, const Rational& c0, const Rational& d0) {
  ModuleVector<Rational> r;
  for (auto& [p, coef] : v) add_to(r, p, coef.eval(c0, d0));
  return r;
}

inline std::string format_rational_vector(const ModuleVector<Rational>& v) {
  return format_vector<Rational>(v, [](const Rational& x) {
    std::string s = to_string(x);
    return x.get_den() == 1 ? s : "(" + s + ")";
  });
}

inline std::string format_ratfun_vector(const CasimirVector& v) {
  return format_vector<RatFun>(v, [](const RatFun& x) { return "(" + x.to_string() + ")"; });
}

}  // namespace griess
