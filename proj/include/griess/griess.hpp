#pragma once

#include "griess/casimir.hpp"
#include "griess/modes.hpp"

namespace griess {

using InvVector = ModuleVector<InvPoly>;

// Trace over B of the zero mode of u in V_w. B splits into Cw plus d-1
// primaries; o(u) acts on each primary by its top eigenvalue in M(c,2).
inline RatFun trace_on_B(const Partition& u) {
  static VirasoroModule primary(2, 1);
  auto top = primary.zero_mode(u, {});
  Poly lambda = top.count({}) ? top.at({}) : Poly();
  auto on_w = VirasoroModule::vacuum().zero_mode(u, {2});
  Poly mu = on_w.count({2}) ? on_w.at({2}) : Poly();
  return (RatFun::d() - RatFun(1)) * RatFun(lambda) + RatFun(mu);
}

inline InvPoly trace_on_B(const InvVector& u) {
  InvPoly r;
  for (auto& [p, coef] : u) r += coef.scaled(trace_on_B(p));
  return r;
}

class GriessCalculus {
 public:
  ModeEngine& engine() { return engine_; }

  // eta(v)_p = (1 | L_p v) for p in P_n.
  std::vector<InvPoly> eta(const Word& v, int n) {
    std::vector<InvPoly> r;
    for (auto& p : partitions(n)) r.push_back(engine_.pair_with_partition(p, v));
    return r;
  }

  // Component of v in V_w: the u with (p|u) = eta(v)_p for all p in P_n.
  InvVector delta_project(const Word& v, int n) {
    auto basis = partitions(n);
    auto e = eta(v, n);
    auto& ginv = gram_inverse(n);
    InvVector r;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      InvPoly s;
      for (std::size_t j = 0; j < basis.size(); ++j) s += e[j].scaled(ginv[i][j]);
      if (!s.is_zero()) r[basis[i]] = s;
    }
    return r;
  }

  // (kappa|v) for a vector of V_w with scalar coefficients.
  InvPoly pair_with(const CasimirVector& k, const Word& v) {
    InvPoly r;
    for (auto& [p, coef] : k) r += engine_.pair_with_partition(p, v).scaled(coef);
    return r;
  }

  // Tr R_a (m = 1) or Tr R_a R_b (m = 2) on symbols a = 1, b = 2 through
  // projection to V_w and the traces of Virasoro zero modes on B.
  InvPoly derive_by_projection(int m) {
    if (m == 1) return trace_on_B(delta_project(state(1), 2));
    if (m != 2) throw std::invalid_argument("derivation implemented for m = 1, 2");
    // a_(1) b_(1) = (a_(-1)b)_(3) + 2(a_(0)b)_(2) + (a_(1)b)_(1) - a_(-1)b_(3) - b_(-1)a_(3) on B;
    // the last two terms have trace (a|b) each.
    InvPoly r = trace_on_B(delta_project(apply_mode(1, -1, state(2)), 4));
    r += trace_on_B(delta_project(apply_mode(1, 0, state(2)), 3)).scaled(RatFun(2));
    r += trace_on_B(delta_project(apply_mode(1, 1, state(2)), 2));
    r -= inv::pair(1, 2).scaled(RatFun(2));
    return r;
  }

  // Same traces through the Casimir elements: Tr R_a = (kappa_2|a),
  // Tr R_a R_b = -2(a|b) + (kappa_4|a_(-1)b) - (kappa_2|a_(1)b).
  InvPoly derive_by_casimir(int m) {
    auto& k = casimir_table();
    if (m == 1) return pair_with(k.at(2).vector, state(1));
    if (m != 2) throw std::invalid_argument("derivation implemented for m = 1, 2");
    InvPoly r = inv::pair(1, 2).scaled(RatFun(-2));
    r += pair_with(k.at(4).vector, apply_mode(1, -1, state(2)));
    r -= pair_with(k.at(2).vector, apply_mode(1, 1, state(2)));
    return r;
  }

 private:
  const Matrix<RatFun>& gram_inverse(int n) {
    auto it = ginv_.find(n);
    if (it != ginv_.end()) return it->second;
    auto g = VirasoroModule::vacuum().gram_matrix(n);
    Matrix<RatFun> gr(g.size(), std::vector<RatFun>(g.size()));
    for (std::size_t i = 0; i < g.size(); ++i)
      for (std::size_t j = 0; j < g.size(); ++j) gr[i][j] = RatFun(g[i][j]);
    return ginv_.emplace(n, inverse_field(gr)).first->second;
  }

  ModeEngine engine_;
  std::map<int, Matrix<RatFun>> ginv_;
};

}  // namespace griess
