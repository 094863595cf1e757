#pragma once

#include "griess/linalg.hpp"
#include "griess/ratfun.hpp"

#include <functional>
#include <map>
#include <numeric>
#include <string>
#include <tuple>
#include <vector>

namespace griess {

// Nonincreasing list of parts; [m1,...,mk] stands for L_{-m1}...L_{-mk} applied
// to the highest weight vector.
using Partition = std::vector<int>;

// Descending lexicographic: [8] < [6,2] < [5,3] in iteration order.
struct PartitionOrder {
  bool operator()(const Partition& a, const Partition& b) const { return a > b; }
};

template <class T>
using ModuleVector = std::map<Partition, T, PartitionOrder>;

inline int weight(const Partition& p) { return std::accumulate(p.begin(), p.end(), 0); }

inline std::string to_string(const Partition& p) {
  std::string s = "[";
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + std::to_string(p[i]);
  return s + "]";
}

// All partitions of n into parts >= min_part, in descending lexicographic order.
inline std::vector<Partition> partitions(int n, int min_part = 2) {
  std::vector<Partition> out;
  Partition cur;
  std::function<void(int, int)> rec = [&](int rest, int maxp) {
    if (rest == 0) {
      out.push_back(cur);
      return;
    }
    for (int p = std::min(rest, maxp); p >= min_part; --p) {
      cur.push_back(p);
      rec(rest - p, p);
      cur.pop_back();
    }
  };
  if (n >= 0) rec(n, n);
  return out;
}

template <class T>
void add_to(ModuleVector<T>& v, const Partition& p, const T& coef) {
  if (detail::is_zero(coef)) return;
  auto [it, inserted] = v.emplace(p, coef);
  if (!inserted) {
    it->second = it->second + coef;
    if (detail::is_zero(it->second)) v.erase(it);
  }
}

template <class T>
ModuleVector<T> scaled(const ModuleVector<T>& v, const T& s) {
  ModuleVector<T> r;
  for (auto& [p, c] : v) add_to(r, p, c * s);
  return r;
}

template <class T>
ModuleVector<T> combine(const ModuleVector<T>& a, const ModuleVector<T>& b, const T& sb) {
  ModuleVector<T> r = a;
  for (auto& [p, c] : b) add_to(r, p, c * sb);
  return r;
}

// Highest weight module over the Virasoro algebra with formal central charge c
// and highest weight h0. Parts below min_part annihilate the highest weight
// vector directly (min_part = 2, h0 = 0 gives the vacuum quotient
// M(c,0)/M(c,1); min_part = 1 gives a Verma module).
class VirasoroModule {
 public:
  VirasoroModule(Rational h0, int min_part) : h0_(std::move(h0)), min_part_(min_part) {}

  static VirasoroModule& vacuum() {
    static VirasoroModule m(0, 2);
    return m;
  }

  const Rational& lowest_weight() const { return h0_; }
  int min_part() const { return min_part_; }
  std::vector<Partition> basis(int level) const { return partitions(level, min_part_); }

  // L_m applied to a basis vector, coefficients polynomial in c.
  const ModuleVector<Poly>& act_basis(int m, const Partition& p) {
    auto key = std::make_pair(m, p);
    auto it = act_cache_.find(key);
    if (it != act_cache_.end()) return it->second;
    ModuleVector<Poly> r = compute_act(m, p);
    return act_cache_.emplace(std::move(key), std::move(r)).first->second;
  }

  template <class T>
  ModuleVector<T> act_L(int m, const ModuleVector<T>& v) {
    ModuleVector<T> r;
    for (auto& [p, coef] : v)
      for (auto& [q, k] : act_basis(m, p)) add_to(r, q, coef * T(k));
    return r;
  }

  // Contravariant form on level n, normalized by (v|v) = 1 on the highest weight vector.
  Matrix<Poly> gram_matrix(int n) {
    auto b = basis(n);
    Matrix<Poly> g(b.size(), std::vector<Poly>(b.size()));
    for (std::size_t i = 0; i < b.size(); ++i)
      for (std::size_t j = 0; j < b.size(); ++j) g[i][j] = pairing(b[i], b[j]);
    return g;
  }

  // (p|q) = vacuum coefficient of L_{pk}...L_{p1} q.
  Poly pairing(const Partition& p, const Partition& q) {
    if (weight(p) != weight(q)) return Poly();
    ModuleVector<Poly> v{{q, Poly(1)}};
    for (int part : p) v = act_L(part, v);
    auto it = v.find(Partition{});
    return it == v.end() ? Poly() : it->second;
  }

  // The mode u_(n) of a vacuum-module state u = [m1,...,mk], acting on this module.
  ModuleVector<Poly> mode(const Partition& u, int n, const ModuleVector<Poly>& v) {
    ModuleVector<Poly> r;
    for (auto& [p, coef] : v)
      for (auto& [q, k] : mode_basis(u, n, p)) add_to(r, q, coef * k);
    return r;
  }

  // Zero mode o(u) = u_(wt u - 1) on a basis vector.
  ModuleVector<Poly> zero_mode(const Partition& u, const Partition& p) {
    return mode_basis(u, weight(u) - 1, p);
  }

  // Trace of o(u) on the level-n subspace.
  Poly zero_mode_trace(const Partition& u, int level) {
    Poly t;
    for (auto& p : basis(level)) {
      auto v = zero_mode(u, p);
      auto it = v.find(p);
      if (it != v.end()) t += it->second;
    }
    return t;
  }

 private:
  ModuleVector<Poly> compute_act(int m, const Partition& p) {
    ModuleVector<Poly> r;
    if (m == 0) {
      add_to(r, p, Poly(h0_ + weight(p)));
      return r;
    }
    if (p.empty()) {
      if (m < 0 && -m >= min_part_) add_to(r, Partition{-m}, Poly(1));
      return r;
    }
    const int p0 = p[0];
    Partition rest(p.begin() + 1, p.end());
    if (m < 0 && -m >= p0) {
      Partition q{-m};
      q.insert(q.end(), p.begin(), p.end());
      add_to(r, q, Poly(1));
      return r;
    }
    // L_m L_{-p0} X = L_{-p0} L_m X + (m + p0) L_{m-p0} X + central term.
    ModuleVector<Poly> inner = act_L(m, ModuleVector<Poly>{{rest, Poly(1)}});
    for (auto& [q, k] : inner)
      for (auto& [q2, k2] : act_basis(-p0, q)) add_to(r, q2, k * k2);
    if (m + p0 != 0) {
      for (auto& [q, k] : act_basis(m - p0, rest)) add_to(r, q, k.scaled(m + p0));
    }
    if (m == p0) {
      Rational central = Rational(m * m * m - m) / 12;
      add_to(r, rest, Poly::c().scaled(central));
    }
    return r;
  }

  const ModuleVector<Poly>& mode_basis(const Partition& u, int n, const Partition& p) {
    auto key = std::make_tuple(u, n, p);
    auto it = mode_cache_.find(key);
    if (it != mode_cache_.end()) return it->second;
    ModuleVector<Poly> r = compute_mode(u, n, p);
    return mode_cache_.emplace(std::move(key), std::move(r)).first->second;
  }

  // Iterate of (a_(q) b)_(n) = sum_i (-1)^i binom(q,i) [a_(q-i) b_(n+i) - (-1)^q b_(q+n-i) a_(i)]
  // with a = omega, q = 1 - m, and omega_(j) = L_{j-1}.
  ModuleVector<Poly> compute_mode(const Partition& u, int n, const Partition& p) {
    ModuleVector<Poly> r;
    const int wt_v = weight(p);  // level above h0
    if (u.empty()) {
      if (n == -1) add_to(r, p, Poly(1));
      return r;
    }
    const int m = u[0];
    Partition w(u.begin() + 1, u.end());
    const int wt_w = weight(w);
    const int q = 1 - m;
    const ModuleVector<Poly> v{{p, Poly(1)}};
    for (int i = 0;; ++i) {
      // Level reached after w_(n+i): wt_v + wt_w - (n+i) - 1.
      bool first = wt_v + wt_w - (n + i) - 1 >= 0;
      bool second = i - 1 <= wt_v;
      if (!first && !second) break;
      Rational b = binom(q, i) * ((i % 2) ? -1 : 1);
      if (b == 0) continue;
      if (first) {
        auto inner = mode(w, n + i, v);
        auto lifted = act_L(-m - i, inner);
        for (auto& [pp, k] : lifted) add_to(r, pp, k.scaled(b));
      }
      if (second) {
        auto shifted = act_L(i - 1, v);
        if (!shifted.empty()) {
          auto inner = mode(w, q + n - i, shifted);
          Rational sgn = (q % 2 == 0) ? 1 : -1;
          for (auto& [pp, k] : inner) add_to(r, pp, k.scaled(-b * sgn));
        }
      }
    }
    return r;
  }

  Rational h0_;
  int min_part_;
  std::map<std::pair<int, Partition>, ModuleVector<Poly>> act_cache_;
  std::map<std::tuple<Partition, int, Partition>, ModuleVector<Poly>> mode_cache_;
};

// Stored normalized Kac factors D_n(c) for even n = 2..10, as (constant, linear factors).
struct KacPolynomial {
  Rational constant;
  std::vector<Poly> factors;
  Poly expanded() const {
    Poly p(constant);
    for (auto& f : factors) p *= f;
    return p;
  }
};

inline KacPolynomial kac_polynomial(int n) {
  auto lin = [](long a, long b) { return Poly::c().scaled(a) + Poly(b); };
  switch (n) {
    case 2: return {1, {lin(1, 0)}};
    case 4: return {1, {lin(1, 0), lin(5, 22)}};
    case 6: return {1, {lin(1, 0), lin(2, -1), lin(5, 22), lin(7, 68)}};
    case 8: return {1, {lin(1, 0), lin(2, -1), lin(3, 46), lin(5, 3), lin(5, 22), lin(7, 68)}};
    case 10:
      return {10, {lin(1, 0), lin(2, -1), lin(3, 46), lin(5, 3), lin(5, 22), lin(7, 68), lin(11, 232)}};
    default: throw std::invalid_argument("Kac polynomial stored only for even n in 2..10");
  }
}

inline Poly gram_determinant(int n) {
  return bareiss_determinant(VirasoroModule::vacuum().gram_matrix(n));
}

struct KacCheck {
  bool ok = false;
  Poly determinant;
  Poly radical_det;
  Poly radical_stored;
};

// Every stored factor divides det(Gram) and the radicals agree up to a constant.
inline KacCheck kac_factor_check(int n) {
  if (n % 2 != 0 || n < 2 || n > 10) throw std::invalid_argument("kac check needs even n in 2..10");
  KacCheck r;
  r.determinant = gram_determinant(n);
  auto stored = kac_polynomial(n);
  r.radical_det = radical_c(r.determinant);
  r.radical_stored = radical_c(stored.expanded());
  bool divides_all = true;
  for (auto& f : stored.factors) divides_all = divides_all && divides(f, r.determinant);
  r.ok = divides_all && r.radical_det == r.radical_stored;
  return r;
}

template <class T>
std::string format_vector(const ModuleVector<T>& v, const std::function<std::string(const T&)>& fmt) {
  if (v.empty()) return "0";
  std::string s;
  for (auto& [p, c] : v) {
    if (!s.empty()) s += " + ";
    s += fmt(c) + "·" + to_string(p);
  }
  return s;
}

}  // namespace griess
