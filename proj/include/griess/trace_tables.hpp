#pragma once

#include "griess/griess.hpp"

#include <cstdint>
#include <set>
#include <string_view>

namespace griess {

// Coefficient tables for Tr|_B R_{a1} ... R_{am}, m = 1..5. Each entry is the
// numerator of a coefficient over D_{2m}; the invariant it multiplies is named
// by its label (see trace_shape). Entries are kept exactly as printed, with a
// checksum, and a separate layer of corrections is applied on request.

enum class Layer { Verbatim, Corrected };

inline std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  return h;
}

struct TableRow {
  int m;
  const char* label;
  const char* text;
  std::uint64_t checksum;
};

inline const std::vector<TableRow>& printed_rows() {
  static const std::vector<TableRow> rows{
    {1, "w", "4d", 0x07ee3407b4b11465ULL},
    {2, "pair", "-2(5c^2-88d+2cd)", 0xaa1460c910498a70ULL},
    {2, "ww", "4(5c+22d)", 0xb21ec619380caaddULL},
    {3, "trip", "-3c^2(70c^2+769c-340)+2d(4c^3-445c^2+12236c-5984)", 0xec7fb253c7d78be1ULL},
    {3, "cyc", "4c(70c^2+1017c-340)-8d(32c^2-1419c+748)", 0x843672ca60d76015ULL},
    {3, "www", "5952c(d-1)", 0xb53e48643929da8eULL},
    {4, "A1", "-c(2100c^5+53650c^4+304049c^3-980942c^2-1641936c+229152)+(2455c^4-193958c^3+4032472c^2+539488c-1651584)d", 0x46581c18a3a69360ULL},
    {4, "A2", "-c(1050c^5+30965c^4+279826c^3+609848c^2-271248c-150144)-c(60c^4-4929c^3+96248c^2+258428c-56304)d", 0xec906cedafbd6a4dULL},
    {4, "A3", "-c(1050c^5+31085c^4+270928c^3+726848c^2+1748472c-79008)+c(60c^4-3969c^3+20752c^2+1761292c+127440)d", 0x0a4c31f8be15a2c0ULL},
    {4, "B", "4c(1050c^4+30905c^3+289750c^2+281168c-4d(120c^4-14853c^3+424928c^2+11132c-206448))", 0x4166cf3b43fc4147ULL},
    {4, "C", "8c(d-1)(120c^3-9437c^2+187858c+22968)", 0x0c2b1dd4f7d7e3adULL},
    {4, "D", "-192c(d-1)(100c^2-4297c-2852)(d-1)", 0x6948bbd2654e0a82ULL},
    {4, "E", "15744c(30c+47)", 0x55c365873526b4c2ULL},
    {5, "A12345", "-5c(46200c^6+2154600c^5+31531073c^4+123663366c^3-560461448c^2-1390398720c-168205824)-5d(100c^6-2405c^5-1037398c^4+70463896c^3-1249353984c^2+60544768c+766334976)", 0x22bc38ae06174f20ULL},
    {5, "A12435", "c(1500c^5-161985c^4+5500754c^3-19601928c^2-1338547904c-3497905152)(d-1)", 0xfb5925f3d0ebaa75ULL},
    {5, "A12534", "c(-1500c^5+147745c^4-3380778c^3-83375368c^2+2968841472c+3711048192)(d-1)", 0xbeba35126f55ccb7ULL},
    {5, "A13245", "-c(115500c^6+5849050c^5+102135165c^4+720684894c^3+1549368552c^2-664210624c+4461754368)+cd(300c^5-81505c^4+5253294c^3-87363968c^2-611758944c+4940713728)", 0x22052c04f3662bf3ULL},
    {5, "A13425", "c(500c^5-29035c^4+518574c^3-15730088c^2+553755136c-3442893312)(d-1)", 0x3605bd7e55f5e6a3ULL},
    {5, "A13524", "c(-500c^5+14795c^4+1601402c^3-87247208c^2+1076538432c+3656036352)(d-1)", 0xd92b69317ae5ef06ULL},
    {5, "A14235", "-c(115500c^6+5848050c^5+102268115c^4+715702714c^3+1553240392c^2+1228092416c+4516766208)-cd(700c^5-51445c^4-271114c^3+83492128c^2-1280544096c-4995725568)", 0xd6a370033c785ab9ULL},
    {5, "A14325", "c(-500c^5+82955c^4-5023222c^3+122369272c^2-861258816c-1610972160)(d-1)", 0x2c66102570ce498fULL},
    {5, "A14523", "c(500c^5-118155c^4+6583582c^3-91119048c^2-815764608c+3601024512)(d-1)", 0x9f5035c90b454361ULL},
    {5, "A15234", "-c(115500c^6+5847050c^5+102401065c^4+710720534c^3+1557112232c^2+3120395456c+4571778048)-cd(1700c^5-184395c^4+4711066c^3+79620288c^2-3172847136c-5050737408)", 0xdf310a0f8f5ebe38ULL},
    {5, "A15324", "c(500c^5-49995c^4-41042c^3+118497432c^2-2753561856c-1665984000)(d-1)", 0xd7d75e45e07afc46ULL},
    {5, "A15423", "c(-500c^5+103915c^4-4463606c^3-11858248c^2+2446058176c-3387881472)(d-1)", 0xc4867356b84820f7ULL},
    {5, "A23145", "-3c(100c^5-21675c^4+907054c^3+11023128c^2-806389760c+1100745216)(d-1)", 0xf4f526d4624e192fULL},
    {5, "A24135", "c(700c^5-67925c^4+2261018c^3-36941224c^2+526866240c-3357247488)(d-1)", 0x156ad148c00bf885ULL},
    {5, "A25134", "c(1700c^5-200875c^4+7243198c^3-40813064c^2-1365436800c-3412259328)(d-1)", 0x0c35e674fde4c541ULL},
    {5, "B1", "4c(115500c^5+5848250c^4+101927925c^3+740910478c^2+1067413032c+217343424)+4d(500c^5+288745c^4-25478878c^3+569319488c^2-269795104c-478959360)", 0xc9a08c8462b82a97ULL},
    {5, "B2", "-4c(8100c^4-616655c^3+8745246c^2+142937384c-614801472)(d-1)", 0x1984720c2f51c8c8ULL},
    {5, "B3", "4c(8100c^4-482575c^3-1572066c^2+339056296c-368532288)(d-1)", 0xd20e052024a82b9cULL},
    {5, "C", "-8c(1780c^4-264997c^3+12872162c^2-203786696c-26642880)(d-1)", 0xc8ee96c0ed8a185dULL},
    {5, "D", "64c(3620c^3-510813c^2+15237868c+4458096)(d-1)", 0xc0c85348c2236614ULL},
    {5, "E", "256c(2095c^3-161208c^2+3064358c+3847956)(d-1)", 0x792bc6e749180aabULL},
    {5, "F", "-3840c(3000c^2-125177c-223532)(d-1)", 0xa428b23147a6c175ULL},
    {5, "G", "333312c(90c+259)(d-1)", 0x2c001489833b4d66ULL},
    {5, "H", "-(c/12)(100c^5-13295c^4+498218c^3-387184c^2-189230304c-5501184)(d-1)", 0xeef823ff95f38a44ULL},
  };
  return rows;
}

struct Correction {
  int m;
  const char* label;
  const char* text;
  const char* reason;
};

// Each correction is forced by the moonshine values of the same coefficient and
// by the reduction a_m -> w, which must return twice the (m-1)-table.
inline const std::vector<Correction>& corrections() {
  static const std::vector<Correction> rows{
      {4, "B",
       "4(c(1050c^4+30905c^3+289750c^2+281168c-23952)+d(120c^4-14853c^3+424928c^2+11132c-206448))",
       "printed form is not linear in d and misses the constant term"},
      {4, "D", "-192c(d-1)(100c^2-4297c-2852)", "printed form carries a duplicated factor (d-1)"},
      {4, "E", "15744c(30c+47)(d-1)", "printed form drops the factor (d-1)"},
      {5, "G", "3333120c(90c+259)(d-1)", "printed constant is too small by a factor 10"},
      {5, "H", "-20c(100c^5-13295c^4+498218c^3-387184c^2-189230304c-5501184)(d-1)",
       "printed prefactor -c/12 is wrong; -20c matches all checks"},
  };
  return rows;
}

namespace trace_detail {

inline std::vector<int> symbols(int m) {
  std::vector<int> s(m);
  for (int i = 0; i < m; ++i) s[i] = i + 1;
  return s;
}

// Sum of the distinct monomials f(pi) over all permutations pi of 1..m, or
// over the cyclic shifts only.
inline InvPoly orbit_sum(int m, bool cyclic, const std::function<InvPoly(const std::vector<int>&)>& f) {
  std::set<InvMonomial> seen;
  auto visit = [&](const std::vector<int>& b) {
    auto p = f(b);
    if (p.terms().size() != 1 || !p.terms().begin()->second.is_constant() ||
        p.terms().begin()->second.constant_value() != 1)
      throw std::logic_error("orbit generator must give a single monic monomial");
    seen.insert(p.terms().begin()->first);
  };
  auto b = symbols(m);
  if (cyclic) {
    for (int k = 0; k < m; ++k) {
      visit(b);
      std::rotate(b.begin(), b.begin() + 1, b.end());
    }
  } else {
    do visit(b);
    while (std::next_permutation(b.begin(), b.end()));
  }
  InvPoly r;
  for (auto& mono : seen) {
    InvPoly t(1);
    for (auto& fac : mono) t *= InvPoly::factor(fac);
    r += t;
  }
  return r;
}

inline InvPoly w(int x) { return inv::pair(x, kOmega); }

}  // namespace trace_detail

// Invariant multiplying the coefficient with the given label, on symbols 1..m.
inline InvPoly trace_shape(int m, const std::string& label) {
  using namespace trace_detail;
  using B = const std::vector<int>&;
  auto sym = [m](auto f) { return orbit_sum(m, false, f); };
  auto cyc = [m](auto f) { return orbit_sum(m, true, f); };
  auto all_w = [m] {
    InvPoly r(1);
    for (int i = 1; i <= m; ++i) r *= w(i);
    return r;
  };
  switch (m) {
    case 1:
      if (label == "w") return w(1);
      break;
    case 2:
      if (label == "pair") return inv::pair(1, 2);
      if (label == "ww") return all_w();
      break;
    case 3:
      if (label == "trip") return inv::trip(1, 2, 3);
      if (label == "cyc") return cyc([](B b) { return inv::pair(b[0], b[1]) * w(b[2]); });
      if (label == "www") return all_w();
      break;
    case 4:
      if (label == "A1") return inv::pp(1, 2, 3, 4);
      if (label == "A2") return inv::pp(1, 3, 2, 4);
      if (label == "A3") return inv::pp(1, 4, 3, 2);
      if (label == "B") return sym([](B b) { return inv::trip(b[0], b[1], b[2]) * w(b[3]); });
      if (label == "C") return sym([](B b) { return inv::pair(b[0], b[1]) * inv::pair(b[2], b[3]); });
      if (label == "D") return sym([](B b) { return inv::pair(b[0], b[1]) * w(b[2]) * w(b[3]); });
      if (label == "E") return all_w();
      break;
    case 5:
      if (label.size() == 6 && label[0] == 'A') {
        std::vector<int> i;
        for (std::size_t k = 1; k < 6; ++k) i.push_back(label[k] - '0');
        return inv::pen(i[0], i[1], i[2], i[3], i[4]);
      }
      if (label == "B1") return cyc([](B b) { return inv::pp(b[0], b[1], b[2], b[3]) * w(b[4]); });
      if (label == "B2") return cyc([](B b) { return inv::pp(b[0], b[2], b[1], b[3]) * w(b[4]); });
      if (label == "B3") return cyc([](B b) { return inv::pp(b[0], b[3], b[1], b[2]) * w(b[4]); });
      if (label == "C") return sym([](B b) { return inv::trip(b[0], b[1], b[2]) * inv::pair(b[3], b[4]); });
      if (label == "D") return sym([](B b) { return inv::trip(b[0], b[1], b[2]) * w(b[3]) * w(b[4]); });
      if (label == "E")
        return sym([](B b) { return inv::pair(b[0], b[1]) * inv::pair(b[2], b[3]) * w(b[4]); });
      if (label == "F") return sym([](B b) { return inv::pair(b[0], b[1]) * w(b[2]) * w(b[3]) * w(b[4]); });
      if (label == "G") return all_w();
      if (label == "H") return inv::quin({1, 2, 3, 4, 5});
      break;
  }
  throw std::invalid_argument("unknown coefficient label " + label + " for m = " + std::to_string(m));
}

struct TraceEntry {
  std::string label;
  Poly numerator;
  bool corrected = false;
};

struct TraceFormula {
  int m = 0;
  Layer layer = Layer::Corrected;
  Poly denominator;
  std::vector<TraceEntry> entries;

  RatFun coefficient(const std::string& label) const {
    for (auto& e : entries)
      if (e.label == label) return RatFun(e.numerator, denominator);
    throw std::invalid_argument("no coefficient " + label);
  }

  InvPoly expand() const {
    InvPoly r;
    for (auto& e : entries) r += trace_shape(m, e.label).scaled(RatFun(e.numerator, denominator));
    return r;
  }
};

inline bool rows_intact() {
  for (auto& r : printed_rows())
    if (fnv1a(r.text) != r.checksum) return false;
  return true;
}

inline TraceFormula build_trace_formula(int m, Layer layer) {
  if (m < 1 || m > 5) throw std::invalid_argument("trace formulas are tabulated for 1 <= m <= 5");
  TraceFormula f;
  f.m = m;
  f.layer = layer;
  f.denominator = kac_polynomial(2 * m).expanded();
  for (auto& r : printed_rows()) {
    if (r.m != m) continue;
    if (fnv1a(r.text) != r.checksum) throw std::runtime_error(std::string("table row altered: ") + r.label);
    TraceEntry e{r.label, {}, false};
    std::string text = r.text;
    if (layer == Layer::Corrected)
      for (auto& c : corrections())
        if (c.m == m && e.label == c.label) {
          text = c.text;
          e.corrected = true;
        }
    RatFun v = parse_ratfun(text);
    if (!v.is_polynomial()) throw std::logic_error("table numerator is not a polynomial");
    e.numerator = v.num();
    f.entries.push_back(std::move(e));
  }
  return f;
}

inline const TraceFormula& stored_trace_formula(int m, Layer layer = Layer::Corrected) {
  static std::map<std::pair<int, Layer>, TraceFormula> cache;
  auto key = std::make_pair(m, layer);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, build_trace_formula(m, layer)).first;
  return it->second;
}

// Tr|_B R_{a1}...R_{am} as an invariant polynomial; m = 0 gives dim B = d.
inline InvPoly trace_polynomial(int m, Layer layer = Layer::Corrected) {
  if (m == 0) return InvPoly(RatFun::d());
  return stored_trace_formula(m, layer).expand();
}

// Values of the coefficients at a point, keyed by label.
inline std::vector<std::pair<std::string, Rational>> evaluate_coefficients(int m, const Rational& c0, const Rational& d0,
                                                                           Layer layer = Layer::Corrected) {
  auto& f = stored_trace_formula(m, layer);
  std::vector<std::pair<std::string, Rational>> r;
  for (auto& e : f.entries) r.emplace_back(e.label, RatFun(e.numerator, f.denominator).eval(c0, d0));
  return r;
}

// For an idempotent e with (e|e) = t: every factor on e and w is a multiple
// of t. Returns the coefficients of t^1..t^m.
inline std::vector<RatFun> idempotent_moment(int m, Layer layer = Layer::Corrected) {
  auto p = inv::substitute(trace_polynomial(m, layer), [](int s) { return s == kOmega ? kOmega : 1; });
  const Factor t{FactorKind::Pair, {1, 1}};
  auto q = p.map_factors([&](const Factor& f) {
    auto tt = InvPoly::factor(t);
    switch (f.kind) {
      case FactorKind::Pair: return tt;
      case FactorKind::Trip: return tt.scaled(RatFun(2));
      case FactorKind::PP: return tt.scaled(RatFun(4));
      case FactorKind::Pen: return tt.scaled(RatFun(8));
      case FactorKind::Quin: return InvPoly();
    }
    return InvPoly();
  });
  std::vector<RatFun> r(m);
  for (auto& [mono, v] : q.terms()) {
    if (mono.empty() || mono.size() > static_cast<std::size_t>(m))
      throw std::logic_error("unexpected degree in idempotent specialization");
    r[mono.size() - 1] = v;
  }
  return r;
}

// A finite commutative algebra with an invariant form, used to evaluate the
// trace formulas on concrete elements. Vectors are coordinates in the basis.
struct AlgebraModel {
  using Vec = std::vector<Rational>;
  std::vector<std::vector<Vec>> mult;    // mult[i][j] = e_i e_j
  std::vector<std::vector<Rational>> form;
  std::vector<Rational> omega_form;      // (e_i|w)
  std::map<int, Vec> symbol;             // symbol -> element

  Vec product(const Vec& x, const Vec& y) const {
    Vec r(x.size());
    for (std::size_t i = 0; i < x.size(); ++i)
      for (std::size_t j = 0; j < y.size(); ++j)
        if (x[i] != 0 && y[j] != 0)
          for (std::size_t k = 0; k < r.size(); ++k) r[k] += x[i] * y[j] * mult[i][j][k];
    return r;
  }
  Rational pairing(const Vec& x, const Vec& y) const {
    Rational s = 0;
    for (std::size_t i = 0; i < x.size(); ++i)
      for (std::size_t j = 0; j < y.size(); ++j) s += x[i] * y[j] * form[i][j];
    return s;
  }
  Rational with_omega(const Vec& x) const {
    Rational s = 0;
    for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * omega_form[i];
    return s;
  }

  Rational factor_value(const Factor& f) const {
    auto v = [&](int i) -> const Vec& { return symbol.at(f.args[i]); };
    switch (f.kind) {
      case FactorKind::Pair:
        if (f.args[0] == kOmega) return with_omega(v(1));
        return pairing(v(0), v(1));
      case FactorKind::Trip: return pairing(v(0), product(v(1), v(2)));
      case FactorKind::PP: return pairing(product(v(0), v(1)), product(v(2), v(3)));
      case FactorKind::Pen: return pairing(product(v(0), v(1)), product(v(2), product(v(3), v(4))));
      case FactorKind::Quin: break;
    }
    throw std::invalid_argument("quinary invariant is not determined by the algebra model");
  }
};

// Tr|_B R_{x1}...R_{xm} for symbols bound in the model, at (c0, d0).
inline Rational evaluate_trace(const std::vector<int>& args, const AlgebraModel& model, const Rational& c0,
                               const Rational& d0, Layer layer = Layer::Corrected) {
  int m = static_cast<int>(args.size());
  auto p = inv::substitute(trace_polynomial(m, layer).eval_cd(c0, d0), [&](int s) {
    return s == kOmega ? kOmega : args.at(s - 1);
  });
  return p.evaluate([&](const Factor& f) { return RatFun(model.factor_value(f)); }).eval(c0, d0);
}

// Setting a_m = w must give twice the (m-1)-trace since R_w = 2 on B.
// Quinary factors that pick up w are evaluated by the mode engine.
inline InvPoly omega_reduction_residual(int m, ModeEngine& engine, Layer layer = Layer::Corrected) {
  auto p = inv::substitute(trace_polynomial(m, layer), [m](int s) { return s == m ? kOmega : s; });
  p = p.map_factors([&](const Factor& f) {
    if (f.kind == FactorKind::Quin && std::count(f.args.begin(), f.args.end(), kOmega)) {
      std::vector<Tree> t;
      for (int a : f.args) t.push_back(Tree::atom(a));
      return engine.quinary(t);
    }
    return InvPoly::factor(f);
  });
  return p - trace_polynomial(m - 1, layer).scaled(RatFun(2));
}

// Change under the cyclic shift a_i -> a_{i+1}; zero iff the formula is
// invariant under cyclic rotation of the trace.
inline InvPoly cyclic_defect(int m, Layer layer = Layer::Corrected) {
  auto p = trace_polynomial(m, layer);
  return inv::substitute(p, [m](int s) { return s == kOmega ? kOmega : s % m + 1; }) - p;
}

// Cyclic invariance at m = 4 forces A1 = A3; solved for d as a function of c.
inline RatFun cyclicity_constraint(Layer layer = Layer::Verbatim) {
  auto& f = stored_trace_formula(4, layer);
  Poly diff = f.coefficient("A1").num() * f.coefficient("A3").den() -
              f.coefficient("A3").num() * f.coefficient("A1").den();
  if (diff.deg_d() != 1) throw std::logic_error("A1 - A3 is expected to be linear in d");
  return RatFun(-diff.coeff_d(0), diff.coeff_d(1));
}

}  // namespace griess
