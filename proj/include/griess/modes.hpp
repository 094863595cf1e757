#pragma once

#include "griess/invariants.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace griess {

// An element of the Griess algebra built from symbols by the product x_(1)y.
// Leaves are symbols >= 1; the conformal vector only appears as a bare leaf.
struct Tree {
  int leaf = -1;
  std::vector<Tree> kids;  // empty, or two sorted subtrees

  static Tree atom(int s) { return Tree{s, {}}; }
  bool is_atom() const { return kids.empty(); }
  bool is_omega() const { return is_atom() && leaf == kOmega; }
  int leaves() const { return is_atom() ? 1 : kids[0].leaves() + kids[1].leaves(); }

  bool operator<(const Tree& o) const {
    if (is_atom() != o.is_atom()) return is_atom();
    if (is_atom()) return leaf < o.leaf;
    return kids < o.kids;
  }
  bool operator==(const Tree& o) const { return leaf == o.leaf && kids == o.kids; }

  std::string key() const {
    if (is_atom()) return std::to_string(leaf);
    return "(" + kids[0].key() + "*" + kids[1].key() + ")";
  }
};

inline Tree product(const Tree& a, const Tree& b) {
  if (a.is_omega() || b.is_omega()) throw std::logic_error("product with the conformal vector must be reduced first");
  Tree t;
  t.kids = {a, b};
  if (t.kids[1] < t.kids[0]) std::swap(t.kids[0], t.kids[1]);
  return t;
}

// Invariant form (T|U) of two product trees, reduced to the irreducible factors.
inline InvPoly pair_trees(const Tree& t, const Tree& u) {
  if (t.is_omega() || u.is_omega()) {
    const Tree& x = t.is_omega() ? u : t;
    if (x.is_atom()) return inv::pair(x.leaf, kOmega);
    return pair_trees(x.kids[0], x.kids[1]).scaled(RatFun(2));  // (yz|w) = (y|zw) = 2(y|z)
  }
  const Tree& a = t.leaves() <= u.leaves() ? t : u;
  const Tree& b = t.leaves() <= u.leaves() ? u : t;
  auto split = [](const Tree& x) -> std::pair<const Tree&, const Tree&> {
    // smaller subtree first
    if (x.kids[1].leaves() < x.kids[0].leaves()) return {x.kids[1], x.kids[0]};
    return {x.kids[0], x.kids[1]};
  };
  switch (a.leaves() + b.leaves()) {
    case 2: return inv::pair(a.leaf, b.leaf);
    case 3: return inv::trip(a.leaf, b.kids[0].leaf, b.kids[1].leaf);
    case 4:
      if (a.is_atom()) {
        auto [y, zw] = split(b);  // (x|y(zw)) = (xy|zw)
        return inv::pp(a.leaf, y.leaf, zw.kids[0].leaf, zw.kids[1].leaf);
      }
      return inv::pp(a.kids[0].leaf, a.kids[1].leaf, b.kids[0].leaf, b.kids[1].leaf);
    case 5:
      if (a.is_atom()) {
        auto [p, q] = split(b);
        if (p.leaves() == 2)  // (x|(ab)(cd)) = (ab|x|cd)
          return inv::pen(p.kids[0].leaf, p.kids[1].leaf, a.leaf, q.kids[0].leaf, q.kids[1].leaf);
        // (x|((ab)c)d) = (ab|c|dx)
        auto [cc, ab] = split(q);
        return inv::pen(ab.kids[0].leaf, ab.kids[1].leaf, cc.leaf, p.leaf, a.leaf);
      } else {
        // (xy|(ab)c) = (ab|c|xy)
        auto [cc, ab] = split(b);
        return inv::pen(ab.kids[0].leaf, ab.kids[1].leaf, cc.leaf, a.kids[0].leaf, a.kids[1].leaf);
      }
    default: throw std::invalid_argument("invariant form of more than five symbols: " + t.key() + "|" + u.key());
  }
}

// A word of operators applied right to left to a base state: ops[0] acts last.
struct Op {
  bool is_L = false;
  int n = 0;   // L_n, or x_(n)
  Tree x;      // unused for L
};

struct Word {
  std::vector<Op> ops;
  std::optional<Tree> base;  // nullopt is the vacuum

  std::string key() const {
    std::string s;
    for (auto& o : ops) s += o.is_L ? "L" + std::to_string(o.n) + " " : o.x.key() + "_" + std::to_string(o.n) + " ";
    return s + "@" + (base ? base->key() : "1");
  }
};

// Builders; the conformal vector is turned into Virasoro operators on entry
// (w_(n) = L_{n-1}, w = L_{-2} 1).
inline Word vacuum_word() { return {}; }
inline Word state(const Tree& t) {
  Word w;
  if (t.is_omega())
    w.ops.push_back({true, -2, {}});
  else
    w.base = t;
  return w;
}
inline Word state(int s) { return state(Tree::atom(s)); }
inline Word apply_L(int m, Word w) {
  w.ops.insert(w.ops.begin(), Op{true, m, {}});
  return w;
}
inline Word apply_mode(const Tree& x, int n, Word w) {
  if (x.is_omega()) return apply_L(n - 1, std::move(w));
  w.ops.insert(w.ops.begin(), Op{false, n, x});
  return w;
}
inline Word apply_mode(int s, int n, Word w) { return apply_mode(Tree::atom(s), n, std::move(w)); }

// Vacuum expectation (1|word) of a word of weight zero, reduced with the
// Borcherds identity, the Virasoro relations and V^0 = C1, V^1 = 0.
class ModeEngine {
 public:
  InvPoly expect(const Word& w) {
    std::string k = w.key();
    auto it = memo_.find(k);
    if (it != memo_.end()) return it->second;
    InvPoly r = compute(w);
    memo_.emplace(std::move(k), r);
    return r;
  }

  // (L_{-p1}...L_{-pk} 1 | v) = (1 | L_pk ... L_p1 v)
  InvPoly pair_with_partition(const std::vector<int>& p, const Word& v) {
    Word w = v;
    for (int part : p) w = apply_L(part, std::move(w));
    return expect(w);
  }

  // (x1,...,x5) = (1/5!) sum_sigma sgn(sigma) (1 | x_s1(3) x_s2(2) x_s3(1) x_s4(0) x_s5)
  InvPoly quinary(const std::vector<Tree>& x) {
    std::vector<int> idx{0, 1, 2, 3, 4};
    InvPoly r;
    do {
      int sign = 1;
      for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j)
          if (idx[i] > idx[j]) sign = -sign;
      Word w = state(x[idx[4]]);
      w = apply_mode(x[idx[3]], 0, w);
      w = apply_mode(x[idx[2]], 1, w);
      w = apply_mode(x[idx[1]], 2, w);
      w = apply_mode(x[idx[0]], 3, w);
      r += expect(w).scaled(RatFun(sign));
    } while (std::next_permutation(idx.begin(), idx.end()));
    return r.scaled(RatFun(Rational(1, 120)));
  }

 private:
  static int op_shift(const Op& o) { return o.is_L ? -o.n : 1 - o.n; }

  static Word slice(const Word& w, std::size_t from, std::size_t to, bool keep_base) {
    Word r;
    r.ops.assign(w.ops.begin() + from, w.ops.begin() + to);
    if (keep_base) r.base = w.base;
    return r;
  }
  static Word replace(const Word& w, std::size_t i, std::size_t len, std::vector<Op> with) {
    Word r = w;
    r.ops.erase(r.ops.begin() + i, r.ops.begin() + i + len);
    r.ops.insert(r.ops.begin() + i, with.begin(), with.end());
    return r;
  }
  static InvPoly omega_pair(const Tree& x) { return pair_trees(x, Tree::atom(kOmega)); }

  InvPoly compute(const Word& w) {
    const std::size_t k = w.ops.size();
    // wt[i] = weight of the state after ops[i..k); wt[k] = base weight.
    std::vector<int> wt(k + 1);
    wt[k] = w.base ? 2 : 0;
    for (std::size_t i = k; i-- > 0;) wt[i] = wt[i + 1] + op_shift(w.ops[i]);
    if (wt[0] != 0) return InvPoly();
    if (k == 0) return InvPoly(1);
    for (std::size_t i = 1; i <= k; ++i) {
      if (wt[i] < 0 || wt[i] == 1) return InvPoly();
      if (wt[i] == 0 && i < k) return expect(slice(w, 0, i, false)) * expect(slice(w, i, k, true));
    }

    for (std::size_t i = 0; i < k; ++i)
      if (w.ops[i].is_L && w.ops[i].n == 0) return expect(replace(w, i, 1, {})).scaled(RatFun(wt[i + 1]));

    // Annihilators move right.
    for (std::size_t i = k; i-- > 0;) {
      const Op& o = w.ops[i];
      if (!o.is_L || o.n < 1) continue;
      const int m = o.n;
      if (i + 1 == k) {
        if (!w.base || m != 2) return InvPoly();
        return omega_pair(*w.base) * expect(slice(w, 0, i, false));
      }
      const Op& nx = w.ops[i + 1];
      InvPoly r = expect(replace(w, i, 2, {nx, o}));
      if (nx.is_L) {
        int kk = nx.n;
        if (m != kk) r += expect(replace(w, i, 2, {Op{true, m + kk, {}}})).scaled(RatFun(m - kk));
        if (m + kk == 0)
          r += expect(replace(w, i, 2, {})).scaled(RatFun::c().scaled(frac(m * m * m - m, 12)));
      } else {
        int n = nx.n;
        if (m - n + 1 != 0) r += expect(replace(w, i, 2, {Op{false, m + n, nx.x}})).scaled(RatFun(m - n + 1));
        Rational b = binom(m + 1, 3);
        if (m + n == 1 && b != 0) r += (omega_pair(nx.x) * expect(replace(w, i, 2, {}))).scaled(RatFun(b));
      }
      return r;
    }

    // Creators move left, where they are killed by the vacuum.
    for (std::size_t i = 0; i < k; ++i) {
      const Op& o = w.ops[i];
      if (!o.is_L) continue;
      if (i == 0) return InvPoly();
      const Op& pv = w.ops[i - 1];
      const int m = o.n, n = pv.n;
      // x_(n) L_m = L_m x_(n) - [L_m, x_(n)]
      InvPoly r = expect(replace(w, i - 1, 2, {o, pv}));
      if (m - n + 1 != 0) r -= expect(replace(w, i - 1, 2, {Op{false, m + n, pv.x}})).scaled(RatFun(m - n + 1));
      Rational b = binom(m + 1, 3);
      if (m + n == 1 && b != 0) r -= (omega_pair(pv.x) * expect(replace(w, i - 1, 2, {}))).scaled(RatFun(b));
      return r;
    }

    // Only symbol modes remain; act on the base.
    const Op& last = w.ops[k - 1];
    if (!w.base) {
      if (last.n >= 0) return InvPoly();
      Word r = slice(w, 0, k - 1, false);
      r.base = last.x;
      int j = -1 - last.n;  // x_(-1-j) 1 = L_{-1}^j x / j!
      for (int t = 0; t < j; ++t) r.ops.push_back(Op{true, -1, {}});
      return expect(r).scaled(RatFun(Rational(1) / Rational(factorial(j))));
    }
    const Tree& base = *w.base;
    if (last.n >= 4 || last.n == 2) return InvPoly();
    if (last.n == 3) return pair_trees(last.x, base) * expect(slice(w, 0, k - 1, false));
    if (last.n == 1) {
      Word r = slice(w, 0, k - 1, false);
      r.base = product(last.x, base);
      return expect(r);
    }
    return stuck(w);
  }

  // The rightmost mode has index <= 0, so use the invariant form on the leftmost one:
  // (1|y_(p) R) = (y_(2-p) 1 | R).
  InvPoly stuck(const Word& w) {
    const Op& y = w.ops[0];
    const int p = y.n;
    if (p <= 2) return InvPoly();
    if (p >= 4) {
      std::vector<Op> ops{Op{false, 3, y.x}};
      for (int t = 0; t < p - 3; ++t) ops.push_back(Op{true, 1, {}});
      Word r = replace(w, 0, 1, ops);
      return expect(r).scaled(RatFun(Rational(1) / Rational(factorial(p - 3))));
    }
    // p == 3: (y | z_(q) R'')
    if (w.ops.size() < 2) throw std::logic_error("stuck word without a second mode: " + w.key());
    const Op& z = w.ops[1];
    const int q = z.n;
    if (q == 1) return expect(replace(w, 0, 2, {Op{false, 3, product(z.x, y.x)}}));
    if (q == 0 || q <= -2) return InvPoly();
    if (q == -1) return pair_trees(z.x, y.x) * expect(slice(w, 2, w.ops.size(), true));
    if (q == 2 && w.ops.size() == 3 && w.ops[2].n == 0 && w.base) {
      // (y | z_(2) u_(0) v) = (yz|uv) + (yu|zv) - (yv|zu)
      const Tree &a = y.x, &b = z.x, &u = w.ops[2].x, &v = *w.base;
      return pair_trees(product(a, b), product(u, v)) + pair_trees(product(a, u), product(b, v)) -
             pair_trees(product(a, v), product(b, u));
    }
    throw std::runtime_error("non-terminating pattern in mode reduction: " + w.key());
  }

  std::map<std::string, InvPoly> memo_;
};

}  // namespace griess
