// griess-trace: command-line front end for the trace-formula library.
//
// Exit status: 0 on success, 1 when a validator or reproduction check fails,
// 2 on bad input (unknown subcommand, malformed rational, guard violation).

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "griess/reproduce.hpp"

using namespace griess;
using Json = nlohmann::ordered_json;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Rational rational_flag(const std::string& name, const std::string& text) {
  try {
    return parse_rational(text);
  } catch (const std::exception&) {
    throw UsageError("--" + name + ": not a rational number: '" + text + "'");
  }
}

std::string str(const Rational& r) { return to_string(r); }

Json partition_json(const Partition& p) {
  Json j = Json::array();
  for (int x : p) j.push_back(x);
  return j;
}

Json series_json(const PuiseuxSeries& s) {
  Json terms = Json::array();
  for (auto& [k, v] : s.terms()) terms.push_back({{"exponent", str(frac(k, s.denominator()))}, {"coeff", str(v)}});
  Json j{{"terms", terms}};
  j["cutoff"] = s.cutoff() ? Json(str(*s.cutoff())) : Json(nullptr);
  return j;
}

std::string series_text(const PuiseuxSeries& s) {
  std::string out;
  for (auto& [k, v] : s.terms()) {
    if (!out.empty()) out += " + ";
    out += "(" + str(v) + ")q^" + str(frac(k, s.denominator()));
  }
  if (out.empty()) out = "0";
  if (s.cutoff()) out += " + O(q^" + str(*s.cutoff()) + ")";
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Optional (c, d): both or neither.
struct Point {
  std::string c, d;
  bool given() const { return !c.empty() || !d.empty(); }
  std::pair<Rational, Rational> values() const {
    if (c.empty() || d.empty()) throw UsageError("--c and --d must be given together");
    return {rational_flag("c", c), rational_flag("d", d)};
  }
};

void add_point(CLI::App* cmd, Point& p) {
  cmd->add_option("--c", p.c, "central charge");
  cmd->add_option("--d", p.d, "dimension of the Griess algebra");
}

struct Output {
  std::string format = "text";
  void emit(const Json& j, const std::string& text) const {
    if (format == "json")
      std::cout << j.dump(2) << "\n";
    else
      std::cout << text;
  }
};

int cmd_casimir(int n, const Point& pt, const Output& out) {
  if (n < 0 || n > 10) throw UsageError("--n must lie in 0..10");
  const auto& v = casimir_table().at(n).vector;
  Json terms = Json::array();
  std::string text;
  if (pt.given()) {
    auto [c, d] = pt.values();
    auto s = specialize(v, c, d);
    for (auto& [p, x] : s) terms.push_back({{"partition", partition_json(p)}, {"coeff", str(x)}});
    text = format_rational_vector(s);
  } else {
    for (auto& [p, x] : v) terms.push_back({{"partition", partition_json(p)}, {"coeff", x.to_string()}});
    text = format_ratfun_vector(v);
  }
  out.emit({{"n", n}, {"terms", terms}}, text + "\n");
  return 0;
}

int cmd_kac_check(const std::vector<int>& ns, const Output& out) {
  Json rows = Json::array();
  std::string text;
  bool ok = true;
  for (int n : ns) {
    if (n < 2 || n > 10 || n % 2) throw UsageError("--n must be even in 2..10");
    auto r = kac_factor_check(n);
    ok = ok && r.ok;
    rows.push_back({{"n", n}, {"ok", r.ok}, {"radical", r.radical_det.to_string()}});
    text += "D" + std::to_string(n) + " " + (r.ok ? "ok" : "MISMATCH") + "  radical " + r.radical_det.to_string() + "\n";
  }
  out.emit(rows, text);
  return ok ? 0 : 1;
}

int cmd_trace_formula(int m, const Point& pt, bool validate, const std::string& layer_name, const Output& out) {
  if (m < 1 || m > 5) throw UsageError("--m must lie in 1..5");
  Layer layer = layer_name == "verbatim" ? Layer::Verbatim : Layer::Corrected;
  const auto& f = stored_trace_formula(m, layer);
  Json coeffs = Json::array();
  std::string text;
  std::optional<std::pair<Rational, Rational>> at;
  if (pt.given()) at = pt.values();
  for (auto& e : f.entries) {
    RatFun v(e.numerator, f.denominator);
    std::string s = at ? str(v.eval(at->first, at->second)) : v.to_string();
    coeffs.push_back({{"label", e.label}, {"value", s}, {"corrected", e.corrected}});
    text += e.label + "\t" + s + (e.corrected ? "\t(corrected)" : "") + "\n";
  }
  Json j{{"m", m}, {"layer", layer_name}, {"coefficients", coeffs}};
  bool ok = true;
  if (validate) {
    ModeEngine engine;
    bool omega = omega_reduction_residual(m, engine, layer).is_zero();
    bool cyclic = cyclic_defect(m, layer).eval_cd(24, 196884).is_zero();
    auto moments = idempotent_moment(m, layer);
    Json mj = Json::array();
    for (auto& x : moments) mj.push_back(str(x.eval(24, 196884)));
    j["validation"] = {{"omega_reduction", omega}, {"cyclic_at_moonshine", cyclic}, {"idempotent_moment_at_moonshine", mj}};
    text += std::string("omega reduction: ") + (omega ? "ok" : "FAIL") + "\n";
    text += std::string("cyclic invariance at (24, 196884): ") + (cyclic ? "ok" : "FAIL") + "\n";
    ok = omega && cyclic;
  }
  out.emit(j, text);
  return ok ? 0 : 1;
}

int cmd_derive(int m, const std::string& route, const Output& out) {
  if (m != 1 && m != 2) throw UsageError("--m must be 1 or 2");
  GriessCalculus g;
  Json j{{"m", m}};
  std::string text;
  bool ok = true;
  std::optional<InvPoly> first;
  for (auto r : {"projection", "casimir"}) {
    if (route != "both" && route != r) continue;
    auto p = std::string(r) == "projection" ? g.derive_by_projection(m) : g.derive_by_casimir(m);
    j[r] = p.to_string();
    text += std::string(r) + ": " + p.to_string() + "\n";
    if (first) ok = *first == p;
    first = p;
  }
  if (route == "both") {
    j["agree"] = ok;
    text += std::string("routes ") + (ok ? "agree" : "DISAGREE") + "\n";
  }
  out.emit(j, text);
  return ok ? 0 : 1;
}

int cmd_idempotent_moments(const std::string& t_text, const Point& pt, const Output& out) {
  Rational t = rational_flag("t", t_text);
  Rational c = 24, d = 196884;
  if (pt.given()) std::tie(c, d) = pt.values();
  Json rows = Json::array();
  std::string text;
  for (int m = 1; m <= 5; ++m) {
    Rational s = 0, tk = 1;
    for (auto& x : idempotent_moment(m)) s += x.eval(c, d) * (tk *= t);
    rows.push_back({{"m", m}, {"trace", str(s)}});
    text += "Tr R_e^" + std::to_string(m) + " = " + str(s) + "\n";
  }
  out.emit({{"t", str(t)}, {"c", str(c)}, {"d", str(d)}, {"moments", rows}}, text);
  return 0;
}

int cmd_cd_table(const std::string& which, const std::string& limit, const Output& out) {
  static const std::map<std::string, CDTable> names{{"proper-s6", CDTable::ProperS6},
                                                    {"ising-no-sixteenth", CDTable::IsingNoSixteenth},
                                                    {"ising-sixteenth", CDTable::IsingWithSixteenth}};
  auto it = names.find(which);
  if (it == names.end()) throw UsageError("--which must be proper-s6, ising-no-sixteenth or ising-sixteenth");
  std::optional<Rational> lim;
  if (!limit.empty()) lim = rational_flag("limit", limit);
  TableScan scan;
  try {
    scan = enumerate_table(it->second, lim);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  std::vector<Rational> cols;
  if (it->second == CDTable::IsingNoSixteenth) cols = {0, frac(1, 2)};
  if (it->second == CDTable::IsingWithSixteenth) cols = {0, frac(1, 2), frac(1, 16)};
  Json rows = Json::array();
  std::string csv = "c,d";
  for (auto& h : cols) csv += ",d(" + str(h) + ")";
  csv += "\n";
  for (auto& r : scan.rows) {
    Json row{{"c", str(r.c)}, {"d", str(r.d)}};
    csv += str(r.c) + "," + str(r.d);
    for (auto& h : cols) {
      auto x = r.spectrum.count(h) ? r.spectrum.at(h) : Rational(0);
      row["d(" + str(h) + ")"] = str(x);
      csv += "," + str(x);
    }
    rows.push_back(row);
    csv += "\n";
  }
  Json j{{"table", which}, {"rows", rows}, {"scanned_to", str(scan.scanned_to)},
         {"certified_bound", str(scan.certified_bound)}, {"complete", scan.complete()}};
  if (out.format == "json")
    out.emit(j, "");
  else if (out.format == "csv")
    std::cout << csv;
  else
    std::cout << csv << scan.rows.size() << " rows; scanned to c = " << str(scan.scanned_to)
              << (scan.complete() ? " (complete)" : " (incomplete: below the certified bound " + str(scan.certified_bound) + ")")
              << "\n";
  return 0;
}

int cmd_theorem2(const Output& out) {
  auto r = solve_proper_constraints();
  auto list = [](const std::vector<Rational>& v) {
    Json j = Json::array();
    for (auto& x : v) j.push_back(str(x));
    return j;
  };
  Json sols = Json::array();
  std::string text = "eliminant: " + r.eliminant.to_string() + "\ncandidates:";
  for (auto& c : r.candidates) text += " " + str(c);
  text += "\nD6 nonzero:";
  for (auto& c : r.kac_allowed) text += " " + str(c);
  text += "\nsolutions:";
  for (auto& s : r.solutions) {
    sols.push_back({{"c", str(s.c)}, {"d", str(s.d)}});
    text += " (" + str(s.c) + ", " + str(s.d) + ")";
  }
  out.emit({{"eliminant", r.eliminant.to_string()}, {"candidates", list(r.candidates)},
            {"kac_allowed", list(r.kac_allowed)}, {"solutions", sols}},
           text + "\n");
  return 0;
}

int cmd_spectrum(const std::string& name, const Output& out) {
  SubVOAReport r;
  try {
    r = analyze_subvoa(name);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  Json dims = Json::object();
  std::string text = r.title + (r.verify_only ? " (listed dimensions, verified only)" : "") + "\n";
  for (auto& [h, x] : r.dims) {
    dims[str(h)] = str(x);
    text += "  d(" + str(h) + ") = " + str(x) + "\n";
  }
  Json j{{"subvoa", r.name}, {"title", r.title}, {"dims", dims}};
  if (!r.cells.empty()) {
    Json cells = Json::array();
    text += "joint eigenspaces:\n";
    for (auto& [cell, x] : r.cells) {
      cells.push_back({{"h1", str(cell.first)}, {"h2", str(cell.second)}, {"dim", str(x)}});
      text += "  d(" + str(cell.first) + ", " + str(cell.second) + ") = " + str(x) + "\n";
    }
    j["cells"] = cells;
  }
  Json res = Json::array();
  for (auto& x : r.residuals) res.push_back(str(x));
  j["moment_residuals"] = res;
  j["order"] = r.order;
  j["trace"] = str(r.trace);
  j["class"] = r.identified ? Json(*r.identified) : Json(nullptr);
  text += "trace " + str(r.trace) + " (" + r.identified.value_or("unidentified") + ")\n";
  if (r.square_trace) {
    j["square_trace"] = str(*r.square_trace);
    j["square_class"] = r.square_identified ? Json(*r.square_identified) : Json(nullptr);
    text += "square: trace " + str(*r.square_trace) + " (" + r.square_identified.value_or("unidentified") + ")\n";
  }
  j["consistent"] = r.consistent();
  out.emit(j, text);
  return r.consistent() ? 0 : 1;
}

int cmd_eisenstein(int weight, int order, bool classical, const Output& out) {
  if (weight < 2 || weight % 2) throw UsageError("--weight must be even and at least 2");
  auto s = classical ? classical_eisenstein(weight, order) : eisenstein(weight, order);
  out.emit({{"weight", weight}, {"normalization", classical ? "classical" : "displayed"}, {"series", series_json(s)}},
           series_text(s) + "\n");
  return 0;
}

CharacterBundle load_character(const std::string& input, int order) {
  if (input.empty()) return moonshine_character(order);
  try {
    return ingest_character(read_file(input));
  } catch (const UsageError&) {
    throw;
  } catch (const std::exception& e) {
    throw UsageError("character file " + input + ": " + e.what());
  }
}

int cmd_moonshine_character(int order, const std::string& input, const Output& out) {
  auto b = load_character(input, order);
  out.emit({{"source", b.source}, {"series", series_json(b.ch)}}, series_text(b.ch) + "\n");
  return 0;
}

int cmd_trace_function(int m, const std::string& aw, const std::string& bw, const std::string& ab, const std::string& c_text,
                       int order, const std::string& input, const Output& out) {
  if (m != 1 && m != 2) throw UsageError("--m must be 1 or 2");
  PairingData p{rational_flag("a-omega", aw), rational_flag("b-omega", bw), rational_flag("ab", ab)};
  Rational c = rational_flag("c", c_text);
  auto b = load_character(input, order);
  PuiseuxSeries s;
  try {
    s = trace_function(m, p, c, b.ch);
  } catch (const std::domain_error& e) {
    throw UsageError(e.what());
  }
  out.emit({{"m", m}, {"c", str(c)}, {"source", b.source}, {"series", series_json(s)}}, series_text(s) + "\n");
  return 0;
}

int cmd_mckay_thompson(int order, const Output& out) {
  McKayThompson mt;
  try {
    mt = mckay_thompson_2A(order);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const char* names[] = {"z_0", "z_1/2", "z_1/16"};
  Json j = Json::object();
  std::string text;
  for (int i = 0; i < 3; ++i) {
    j[names[i]] = series_json(mt.z[i]);
    text += std::string(names[i]) + " = " + series_text(mt.z[i]) + "\n";
  }
  j["T_2A"] = series_json(mt.t2a);
  text += "T_2A = " + series_text(mt.t2a) + "\n";
  out.emit(j, text);
  return 0;
}

int cmd_reproduce_all(const std::vector<int>& only, const Output& out) {
  for (int k : only)
    if (k < 1 || k > 8) throw UsageError("--criterion must lie in 1..8");
  auto r = reproduce_all({only.begin(), only.end()});
  Json checks = Json::array();
  std::string text;
  for (auto& c : r.checks) {
    checks.push_back({{"criterion", c.criterion}, {"id", c.id}, {"pass", c.pass}, {"hard", c.hard}, {"detail", c.detail}});
    text += std::string(c.pass ? "PASS" : (c.hard ? "FAIL" : "SOFT-FAIL")) + "  " + c.id + "  " + c.detail + "\n";
  }
  Json summary = Json::object();
  for (auto& [k, title] : criterion_titles()) {
    if (!only.empty() && std::find(only.begin(), only.end(), k) == only.end()) continue;
    bool pass = r.criterion_passed(k);
    summary[std::to_string(k)] = {{"title", title}, {"pass", pass}};
    text += "criterion " + std::to_string(k) + ": " + (pass ? "PASS" : "FAIL") + "  " + title + "\n";
  }
  out.emit({{"checks", checks}, {"criteria", summary}, {"all_passed", r.all_passed()}}, text);
  return r.all_passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact trace formulas for Griess algebras of vertex operator algebras"};
  app.require_subcommand(1);
  app.fallthrough();
  Output out;
  app.add_option("--format", out.format, "output format")->check(CLI::IsMember({"text", "json", "csv"}));

  int n = 4, m = 2, weight = 4, order = 0;
  std::vector<int> ns{2, 4, 6, 8, 10}, criteria;
  Point pt;
  bool validate = false, classical = false;
  std::string layer = "corrected", route = "both", t_text = "1/4", which, limit, subvoa, input;
  std::string aw = "1/4", bw = "1/4", ab = "1/4", c_text = "24";

  auto* casimir = app.add_subcommand("casimir", "Casimir element of degree n in the vacuum Verma module");
  casimir->add_option("--n", n)->required();
  add_point(casimir, pt);

  auto* kac = app.add_subcommand("kac-check", "stored Kac factors against Gram determinants");
  kac->add_option("--n", ns, "even levels in 2..10");

  auto* tf = app.add_subcommand("trace-formula", "stored m-fold trace formula");
  tf->add_option("--m", m)->required();
  add_point(tf, pt);
  tf->add_flag("--validate", validate, "run the omega-reduction and cyclicity validators");
  tf->add_option("--layer", layer)->check(CLI::IsMember({"corrected", "verbatim"}));

  auto* derive = app.add_subcommand("derive", "derive the one- and two-fold trace formulas");
  derive->add_option("--m", m)->required();
  derive->add_option("--route", route)->check(CLI::IsMember({"both", "projection", "casimir"}));

  auto* moments = app.add_subcommand("idempotent-moments", "Tr R_e^m for an idempotent with (e|e) = t");
  moments->add_option("--t", t_text);
  add_point(moments, pt);

  auto* cd = app.add_subcommand("cd-table", "admissible (c, d) pairs");
  cd->add_option("--which", which)->required();
  cd->add_option("--limit", limit, "largest central charge to scan");

  app.add_subcommand("theorem2", "common solutions of the two proper-idempotent constraints");

  auto* spec = app.add_subcommand("spectrum", "eigenspace dimensions and automorphism trace for a sub-VOA");
  spec->add_option("--subvoa", subvoa)->required();

  auto* eis = app.add_subcommand("eisenstein", "Eisenstein series");
  eis->add_option("--weight", weight);
  eis->add_option("--order", order);
  eis->add_flag("--classical", classical, "normalize the constant term to 1");

  auto* mc = app.add_subcommand("moonshine-character", "graded dimension of the moonshine module");
  mc->add_option("--order", order);
  mc->add_option("--input", input, "character file to ingest instead");

  auto* trf = app.add_subcommand("trace-function", "Tr o(a) q^L0 (m = 1) or Tr o(a)o(b) q^L0 (m = 2)");
  trf->add_option("--m", m)->required();
  trf->add_option("--a-omega", aw);
  trf->add_option("--b-omega", bw);
  trf->add_option("--ab", ab);
  trf->add_option("--c", c_text);
  trf->add_option("--order", order);
  trf->add_option("--input", input);

  auto* mt = app.add_subcommand("mckay-thompson", "Ising branching and the 2A McKay-Thompson series");
  mt->add_option("--order", order);

  auto* rep = app.add_subcommand("reproduce-all", "run every acceptance check and print the manifest");
  rep->add_option("--criterion", criteria, "restrict to these criteria");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (argc > 1 && argv[1][0] != '-' && app.get_subcommand_no_throw(argv[1]) == nullptr) {
      std::cerr << "error: unknown subcommand '" << argv[1] << "'\n";
      return 2;
    }
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (order == 0) order = default_order();
    if (order < 3 || order > 400) throw UsageError("--order must lie in 3..400");
    auto* sub = app.get_subcommands().front();
    std::string name = sub->get_name();
    if (out.format == "csv" && name != "cd-table") throw UsageError("csv output is only available for cd-table");
    if (name == "casimir") return cmd_casimir(n, pt, out);
    if (name == "kac-check") return cmd_kac_check(ns, out);
    if (name == "trace-formula") return cmd_trace_formula(m, pt, validate, layer, out);
    if (name == "derive") return cmd_derive(m, route, out);
    if (name == "idempotent-moments") return cmd_idempotent_moments(t_text, pt, out);
    if (name == "cd-table") return cmd_cd_table(which, limit, out);
    if (name == "theorem2") return cmd_theorem2(out);
    if (name == "spectrum") return cmd_spectrum(subvoa, out);
    if (name == "eisenstein") return cmd_eisenstein(weight, order, classical, out);
    if (name == "moonshine-character") return cmd_moonshine_character(order, input, out);
    if (name == "trace-function") return cmd_trace_function(m, aw, bw, ab, c_text, order, input, out);
    if (name == "mckay-thompson") return cmd_mckay_thompson(order, out);
    if (name == "reproduce-all") return cmd_reproduce_all(criteria, out);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
