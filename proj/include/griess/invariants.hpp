#pragma once

#include "griess/ratfun.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <string>
#include <tuple>
#include <vector>

namespace griess {

// Symbols are small integers; 0 is the conformal vector, 1.. are generic
// weight-2 elements of the Griess algebra.
constexpr int kOmega = 0;

inline std::string symbol_name(int s) { return s == kOmega ? "w" : "a" + std::to_string(s); }

// Irreducible invariant forms. Argument layouts:
//   Pair (x|y), Trip (x|y|z), PP (xy|zu) as {x,y,z,u}, Pen (xy|z|uv) as {x,y,z,u,v},
//   Quin (x1,...,x5) totally antisymmetric.
enum class FactorKind { Pair, Trip, PP, Pen, Quin };

struct Factor {
  FactorKind kind;
  std::vector<int> args;

  bool operator<(const Factor& o) const { return std::tie(kind, args) < std::tie(o.kind, o.args); }
  bool operator==(const Factor& o) const { return kind == o.kind && args == o.args; }

  std::string to_string(const std::function<std::string(int)>& name = symbol_name) const {
    auto a = [&](std::size_t i) { return name(args[i]); };
    switch (kind) {
      case FactorKind::Pair: return "(" + a(0) + "|" + a(1) + ")";
      case FactorKind::Trip: return "(" + a(0) + "|" + a(1) + "|" + a(2) + ")";
      case FactorKind::PP: return "(" + a(0) + a(1) + "|" + a(2) + a(3) + ")";
      case FactorKind::Pen: return "(" + a(0) + a(1) + "|" + a(2) + "|" + a(3) + a(4) + ")";
      case FactorKind::Quin: return "(" + a(0) + "," + a(1) + "," + a(2) + "," + a(3) + "," + a(4) + ")";
    }
    return "?";
  }
};

using InvMonomial = std::vector<Factor>;  // sorted

// Polynomial in invariant factors with coefficients in Q(c, d).
class InvPoly {
 public:
  using Terms = std::map<InvMonomial, RatFun>;

  InvPoly() = default;
  InvPoly(long v) : InvPoly(RatFun(v)) {}
  InvPoly(const RatFun& v) {
    if (!v.is_zero()) terms_[{}] = v;
  }
  static InvPoly factor(const Factor& f) {
    InvPoly p;
    p.terms_[{f}] = RatFun(1);
    return p;
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  RatFun coefficient(const InvMonomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? RatFun() : it->second;
  }
  // Scalar part if the polynomial has no factors.
  bool is_scalar() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty()); }
  RatFun scalar() const { return coefficient({}); }

  InvPoly operator-() const { return scaled(RatFun(-1)); }
  friend InvPoly operator+(InvPoly a, const InvPoly& b) {
    for (auto& [m, v] : b.terms_) a.add(m, v);
    return a;
  }
  friend InvPoly operator-(const InvPoly& a, const InvPoly& b) { return a + (-b); }
  friend InvPoly operator*(const InvPoly& a, const InvPoly& b) {
    InvPoly r;
    for (auto& [ma, va] : a.terms_)
      for (auto& [mb, vb] : b.terms_) {
        InvMonomial m = ma;
        m.insert(m.end(), mb.begin(), mb.end());
        std::sort(m.begin(), m.end());
        r.add(m, va * vb);
      }
    return r;
  }
  InvPoly& operator+=(const InvPoly& o) {
    for (auto& [m, v] : o.terms_) add(m, v);
    return *this;
  }
  InvPoly& operator-=(const InvPoly& o) { return *this += -o; }
  InvPoly& operator*=(const InvPoly& o) { return *this = *this * o; }
  bool operator==(const InvPoly& o) const { return terms_ == o.terms_; }

  InvPoly scaled(const RatFun& s) const {
    InvPoly r;
    if (s.is_zero()) return r;
    for (auto& [m, v] : terms_) r.terms_[m] = v * s;
    return r;
  }

  // Replaces every factor by a polynomial and multiplies out.
  InvPoly map_factors(const std::function<InvPoly(const Factor&)>& f) const {
    InvPoly r;
    std::map<Factor, InvPoly> cache;
    for (auto& [m, v] : terms_) {
      InvPoly prod(v);
      for (auto& fac : m) {
        auto it = cache.find(fac);
        if (it == cache.end()) it = cache.emplace(fac, f(fac)).first;
        prod *= it->second;
      }
      r += prod;
    }
    return r;
  }

  // Full evaluation given a value for each factor.
  RatFun evaluate(const std::function<RatFun(const Factor&)>& f) const {
    RatFun r;
    for (auto& [m, v] : terms_) {
      RatFun prod = v;
      for (auto& fac : m) prod *= f(fac);
      r += prod;
    }
    return r;
  }

  InvPoly eval_cd(const Rational& c0, const Rational& d0) const {
    InvPoly r;
    for (auto& [m, v] : terms_) r.add(m, RatFun(v.eval(c0, d0)));
    return r;
  }

  std::string to_string(const std::function<std::string(int)>& name = symbol_name) const {
    if (terms_.empty()) return "0";
    std::string s;
    for (auto& [m, v] : terms_) {
      if (!s.empty()) s += " + ";
      s += "(" + v.to_string() + ")";
      for (auto& f : m) s += f.to_string(name);
    }
    return s;
  }

 private:
  void add(const InvMonomial& m, const RatFun& v) {
    if (v.is_zero()) return;
    auto [it, inserted] = terms_.emplace(m, v);
    if (!inserted) {
      it->second += v;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
  Terms terms_;
};

inline std::ostream& operator<<(std::ostream& os, const InvPoly& p) { return os << p.to_string(); }

// Factor constructors. Each canonicalizes its arguments and eliminates the
// conformal vector using w x = 2x and (w|w) = c/2.
namespace inv {

inline InvPoly pair(int x, int y) {
  if (x == kOmega && y == kOmega) return InvPoly(RatFun::c().scaled(Rational(1, 2)));
  return InvPoly::factor({FactorKind::Pair, {std::min(x, y), std::max(x, y)}});
}

inline InvPoly trip(int x, int y, int z) {
  std::vector<int> a{x, y, z};
  std::sort(a.begin(), a.end());
  if (a[0] == kOmega) return pair(a[1], a[2]).scaled(RatFun(2));
  return InvPoly::factor({FactorKind::Trip, a});
}

inline std::pair<int, int> sorted_pair(int x, int y) { return {std::min(x, y), std::max(x, y)}; }

// (xy|zu)
inline InvPoly pp(int x, int y, int z, int u) {
  if (x == kOmega || y == kOmega) return trip(x == kOmega ? y : x, z, u).scaled(RatFun(2));
  if (z == kOmega || u == kOmega) return trip(z == kOmega ? u : z, x, y).scaled(RatFun(2));
  auto p = sorted_pair(x, y), q = sorted_pair(z, u);
  if (q < p) std::swap(p, q);
  return InvPoly::factor({FactorKind::PP, {p.first, p.second, q.first, q.second}});
}

// (xy|z|uv) = (xy|z(uv))
inline InvPoly pen(int x, int y, int z, int u, int v) {
  if (z == kOmega) return pp(x, y, u, v).scaled(RatFun(2));
  if (x == kOmega || y == kOmega) return pp(x == kOmega ? y : x, z, u, v).scaled(RatFun(2));
  if (u == kOmega || v == kOmega) return pp(u == kOmega ? v : u, z, x, y).scaled(RatFun(2));
  auto p = sorted_pair(x, y), q = sorted_pair(u, v);
  if (q < p) std::swap(p, q);
  return InvPoly::factor({FactorKind::Pen, {p.first, p.second, z, q.first, q.second}});
}

// Totally antisymmetric; the conformal vector is kept as an argument and
// reduced by the mode engine where needed.
inline InvPoly quin(std::vector<int> a) {
  int sign = 1;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j + 1 < a.size() - i; ++j)
      if (a[j] > a[j + 1]) {
        std::swap(a[j], a[j + 1]);
        sign = -sign;
      }
  for (std::size_t i = 0; i + 1 < a.size(); ++i)
    if (a[i] == a[i + 1]) return InvPoly();
  return InvPoly::factor({FactorKind::Quin, a}).scaled(RatFun(sign));
}

// Rebuilds a factor after renaming its symbols.
inline InvPoly rebuild(const Factor& f, const std::function<int(int)>& s) {
  auto& a = f.args;
  switch (f.kind) {
    case FactorKind::Pair: return pair(s(a[0]), s(a[1]));
    case FactorKind::Trip: return trip(s(a[0]), s(a[1]), s(a[2]));
    case FactorKind::PP: return pp(s(a[0]), s(a[1]), s(a[2]), s(a[3]));
    case FactorKind::Pen: return pen(s(a[0]), s(a[1]), s(a[2]), s(a[3]), s(a[4]));
    case FactorKind::Quin: return quin({s(a[0]), s(a[1]), s(a[2]), s(a[3]), s(a[4])});
  }
  return InvPoly();
}

inline InvPoly substitute(const InvPoly& p, const std::function<int(int)>& s) {
  return p.map_factors([&](const Factor& f) { return rebuild(f, s); });
}

inline InvPoly substitute(const InvPoly& p, const std::map<int, int>& s) {
  return substitute(p, [&](int x) {
    auto it = s.find(x);
    return it == s.end() ? x : it->second;
  });
}

}  // namespace inv

}  // namespace griess
