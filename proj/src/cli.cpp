#include "cgk/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "cgk/cgcalc.hpp"
#include "cgk/cover.hpp"
#include "cgk/diagram.hpp"
#include "cgk/error.hpp"
#include "cgk/knotspec.hpp"
#include "cgk/metab.hpp"
#include "cgk/seifert.hpp"
#include "cgk/su2sig.hpp"

namespace cgk::cli {

using nlohmann::json;

namespace {

struct Options {
  std::string command;
  std::string knot, diagram, t, mode = "auto";
  long a = 0, n = 1, i = 0, j = 0, q = -1;
  int d = 0;
  i64 p = 0;
  std::size_t grid = 0;
  std::optional<std::size_t> budget;
  bool json_out = false, timing = false, any = false;
};

std::size_t effective_budget(const Options& o) {
  if (o.budget) return *o.budget;
  if (const char* env = std::getenv("CGK_BUDGET")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
    fail(ErrorKind::InvalidInput, "CGK_BUDGET must be a positive integer");
  }
  return kDefaultBudget;
}

json int_json(const Int& x) {
  if (x.fits_slong_p()) return x.get_si();
  return x.get_str();
}

json rat_json(const Rat& r) {
  if (r.get_den() == 1) return int_json(r.get_num());
  return r.get_str();
}

json rows_json(const std::vector<ModRow>& rows) {
  json a = json::array();
  for (const auto& r : rows) a.push_back(r);
  return a;
}

Rat parse_t(const std::string& s) {
  Rat t;
  if (s.empty() || t.set_str(s, 10) != 0) fail(ErrorKind::InvalidInput, "t must be a rational p/q, got '" + s + "'");
  t.canonicalize();
  require(t > 0 && t < 1, ErrorKind::InvalidInput, "t must lie in (0, 1)");
  return t;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::InvalidInput, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json need_knot(const Options& o) {
  require(!o.knot.empty(), ErrorKind::InvalidInput, o.command + " needs --knot");
  return load_spec(o.knot);
}

// Degree and prime recorded by the first infected summand, unless given.
std::pair<int, i64> cover_params(const KnotModel& m, const Options& o) {
  int d = o.d;
  i64 p = o.p;
  for (const auto& s : m.summands)
    if (!s.infections.empty()) {
      if (d == 0) d = s.degree;
      if (p == 0) p = s.prime;
      break;
    }
  require(d >= 2 && p >= 2, ErrorKind::InvalidInput, o.command + " needs --d and --p");
  return {d, p};
}

std::vector<ModRow> nonzero_span(const std::vector<ModRow>& basis, std::size_t n, i64 p, std::size_t budget,
                                 bool leading_one_only) {
  double size = 1;
  for (std::size_t i = 0; i < basis.size(); ++i) size *= static_cast<double>(p);
  require(size <= static_cast<double>(budget), ErrorKind::BudgetExceeded, "character span exceeds the budget");
  std::vector<ModRow> out;
  std::vector<i64> c(basis.size(), 0);
  for (;;) {
    std::size_t k = 0;
    while (k < c.size() && c[k] == p - 1) c[k++] = 0;
    if (k == c.size()) break;
    ++c[k];
    ModRow v(n, 0);
    for (std::size_t b = 0; b < basis.size(); ++b)
      for (std::size_t e = 0; e < n; ++e) v[e] = mod_norm(v[e] + mul_mod(c[b], basis[b][e], p), p);
    auto lead = std::find_if(v.begin(), v.end(), [](i64 x) { return x != 0; });
    if (leading_one_only && (lead == v.end() || *lead != 1)) continue;
    out.push_back(std::move(v));
  }
  std::sort(out.begin(), out.end());
  return out;
}

json disc_json(const DiscExpr& e) {
  json f = json::array();
  for (const auto& [key, m] : e.factors) f.push_back({{"poly", key.first}, {"shift", key.second}, {"mult", m}});
  json r = json::object();
  for (const auto& [tok, m] : e.residual) r[tok] = m;
  return {{"expr", e.str()}, {"factors", f}, {"residual", r}};
}

json sigma_json(const SigmaReport& rep) {
  json cases = json::array();
  for (const auto& c : rep.cases) {
    json all = json::array();
    for (const auto& [chi, g] : c.all) all.push_back({{"chi", chi}, {"coefficient", rat_json(g.coefficient)}});
    cases.push_back({{"generators", rows_json(c.metabolizer.generators)},
                     {"order", c.metabolizer.order},
                     {"char_dim", c.char_dim},
                     {"character", c.character},
                     {"coefficient", rat_json(c.growth.coefficient)},
                     {"obstructed", c.obstructed},
                     {"characters", all}});
  }
  return {{"d", rep.d},
          {"p", rep.p},
          {"metabolizers", rep.cases.size()},
          {"cases", cases},
          {"all_characters_nonzero", rep.all_characters_nonzero},
          {"verdict", rep.not_cg_slice ? "not cg-slice" : "no obstruction"},
          {"notes", rep.notes}};
}

// --------------------------------------------------------------- commands

json cmd_alexander(const Options& o, json& notes) {
  IntMatrix v = build_matrix(need_knot(o));
  RatLaurent f = alexander(v).normalized();
  FoxMilnorResult fm = fox_milnor(v);
  json factors = json::array();
  for (const auto& [z, m] : fm.factors.factors)
    factors.push_back({{"factor", RatLaurent(to_qpoly(z)).str()}, {"mult", m}});
  notes.push_back("Alexander polynomial det(V - t V^T), normalized to minimal exponent 0 and positive leading term");
  return {{"alexander", f.str()},
          {"genus", v.rows() / 2},
          {"symmetric", f.symmetric()},
          {"fox_milnor", {{"passes", fm.passes}, {"factors", factors}, {"notes", fm.notes}}}};
}

json cmd_signature(const Options& o, json& notes) {
  SignatureFunction sf(build_matrix(need_knot(o)));
  notes.push_back("Levine-Tristram signature of the Seifert form at e^{2 pi i t}");
  if (!o.t.empty()) {
    Rat t = parse_t(o.t);
    return {{"t", rat_json(t)}, {"signature", sf.at(t)}};
  }
  const std::size_t grid = o.grid ? o.grid : 20;
  json samples = json::array();
  for (std::size_t k = 1; k < grid; ++k) {
    Rat t(static_cast<long>(k), static_cast<long>(grid));
    t.canonicalize();
    if (sf.singular_at(t))
      samples.push_back({{"t", rat_json(t)}, {"singular", true}});
    else
      samples.push_back({{"t", rat_json(t)}, {"signature", sf.at(t)}});
  }
  return {{"grid", grid}, {"samples", samples}};
}

json cmd_cover(const Options& o, json& notes) {
  const int d = o.d ? o.d : 2;
  CoverHomology h = branched_cover(build_matrix(need_knot(o)), d);
  json inv = json::array();
  for (const auto& x : h.invariant_factors) inv.push_back(int_json(x));
  notes.push_back("H_1 of the d-fold cyclic branched cover from the block presentation");
  return {{"degree", d}, {"invariant_factors", inv}, {"order", int_json(h.order)}, {"deck", rows_json(h.deck)}};
}

json cmd_linking(const Options& o, json& notes) {
  const int d = o.d ? o.d : 2;
  LinkingForm l = linking_form(build_matrix(need_knot(o)), d);
  json gram = json::array();
  for (std::size_t a = 0; a < l.rank(); ++a) {
    json row = json::array();
    for (std::size_t b = 0; b < l.rank(); ++b) row.push_back(rat_json(l.value(a, b)));
    gram.push_back(row);
  }
  json out{{"degree", d},
           {"factors", l.factors},
           {"exponent", l.exponent},
           {"gram", gram},
           {"deck", rows_json(l.deck)},
           {"nonsingular", is_nonsingular(l)}};
  if (o.p) {
    CharSpace cs = char_space(l, o.p);
    json eig = json::array();
    for (const auto& e : cs.eigen) eig.push_back({{"lambda", e.lambda}, {"basis", rows_json(e.basis)}});
    out["characters"] = {{"p", o.p}, {"coords", cs.coords}, {"diagonalizable", cs.diagonalizable}, {"eigen", eig}};
  }
  notes.push_back("linking form -Q^{-1} mod Z on the cokernel of the block presentation");
  return out;
}

json cmd_metabolizers(const Options& o, json& notes) {
  const int d = o.d ? o.d : 2;
  LinkingForm l = linking_form(build_matrix(need_knot(o)), d);
  auto mets = enumerate_metabolizers(l, !o.any, effective_budget(o));
  json list = json::array();
  for (const auto& m : mets) list.push_back({{"generators", rows_json(m.generators)}, {"order", m.order}});
  notes.push_back(o.any ? "all metabolizers" : "deck-invariant metabolizers");
  return {{"degree", d}, {"factors", l.factors}, {"count", mets.size()}, {"metabolizers", list}};
}

json cmd_cg_sigma(const Options& o, json& notes) {
  KnotModel m = build(need_knot(o));
  auto [d, p] = cover_params(m, o);
  notes.push_back("sigma_b growth coefficient: one Levine-Tristram term per infection, at the value on the chosen lift");
  return sigma_json(cg_sigma(m, d, p, effective_budget(o)));
}

json cmd_cg_delta(const Options& o, json& notes) {
  KnotModel m = build(need_knot(o));
  auto [d, p] = cover_params(m, o);
  const std::size_t budget = effective_budget(o);
  CharacterModel cm(m, d, p);
  auto mets = enumerate_metabolizers(cm.form(), true, budget);
  json cases = json::array();
  bool all = !mets.empty();
  for (const auto& a : mets) {
    CharSpace vc = vanishing_chars(cm.form(), a, p);
    json chars = json::array();
    bool obstructed = false;
    for (const auto& chi : nonzero_span(vc.basis, vc.ambient(), p, budget, true)) {
      DiscExpr e = cm.delta(chi);
      NormVerdict v = norm_test(e, cm.genericity());
      obstructed = obstructed || v == NormVerdict::NotNorm;
      chars.push_back({{"chi", chi}, {"delta", disc_json(e)}, {"verdict", verdict_name(v)}});
    }
    all = all && obstructed;
    cases.push_back({{"generators", rows_json(a.generators)}, {"characters", chars}, {"obstructed", obstructed}});
  }
  notes.push_back("discriminants are formal: residual tokens times shifted Alexander factors");
  notes.push_back("residual tokens are assumed coprime to the Alexander factors");
  return {{"d", d}, {"p", p}, {"metabolizers", mets.size()}, {"cases", cases},
          {"verdict", all ? "not slice" : "no obstruction"}};
}

json cmd_twisted_double(const Options& o, json& notes) {
  require(o.a != 0, ErrorKind::InvalidInput, "obstruct-twisted-double needs --a");
  const std::size_t budget = effective_budget(o);
  if (o.n > 1) {
    notes.push_back("n-fold sum: every nontrivial character of the sum is checked");
    json r = sigma_json(twisted_double_sum(o.a, static_cast<int>(o.n), budget));
    r["a"] = o.a;
    r["n"] = o.n;
    return r;
  }
  TwistedDoubleReport rep = twisted_double_obstruction(o.a, budget);
  json by = json::array();
  for (const auto& [j, g] : rep.by_value) by.push_back({{"j", j}, {"coefficient", rat_json(g.coefficient)}});
  json r = sigma_json(rep.sigma);
  r["a"] = rep.a;
  r["by_value"] = by;
  r["all_positive"] = rep.all_positive;
  for (const auto& s : rep.notes) notes.push_back(s);
  notes.push_back("positivity of sigma_{j/p}(T(-a,a+1)) is what makes the coefficient nonzero");
  return r;
}

json cmd_order2(const Options& o, json& notes) {
  json r = sigma_json(order_two_obstruction(static_cast<int>(o.i), static_cast<int>(o.j), effective_budget(o)));
  r["i"] = o.i;
  r["j"] = o.j;
  notes.push_back("lift values (1, 2) on the two bands are the modeled order-two pattern");
  return r;
}

json cmd_mutant_sum(const Options& o, json& notes) {
  std::vector<json> comps;
  std::vector<int> eps;
  if (!o.knot.empty()) {
    json in = load_spec(o.knot);
    require(in.contains("companions") && in["companions"].is_array(), ErrorKind::InvalidInput,
            "mutant-sum input needs a companions list");
    for (const auto& c : in["companions"]) comps.push_back(c);
    if (in.contains("eps"))
      for (const auto& e : in["eps"]) eps.push_back(e.get<int>());
    else
      eps.assign(comps.size(), 1);
  } else {
    require(o.n >= 1, ErrorKind::InvalidInput, "--n must be positive");
    json generic{{"kind", "matrix"}, {"matrix", {{3, 1}, {0, 1}}}};
    comps.assign(static_cast<std::size_t>(o.n), generic);
    eps.assign(comps.size(), 1);
    notes.push_back("default companion: genus one knot with Alexander polynomial 3t^2-5t+3");
  }
  MutantMode mode = MutantMode::Auto;
  if (o.mode == "enumerate")
    mode = MutantMode::Enumerate;
  else if (o.mode == "abstract")
    mode = MutantMode::Abstract;
  else
    require(o.mode == "auto", ErrorKind::InvalidInput, "--mode must be auto, enumerate or abstract");
  MutantReport rep = mutant_sum_obstruction(comps, eps, effective_budget(o), mode);
  json cases = json::array();
  std::map<std::string, int> branches;
  for (const auto& c : rep.cases) {
    ++branches[c.branch];
    cases.push_back({{"source", c.source},
                     {"generators", rows_json(c.generators)},
                     {"span2", rows_json(c.span2)},
                     {"span4", rows_json(c.span4)},
                     {"branch", c.branch},
                     {"a", c.a},
                     {"b", c.b},
                     {"delta", disc_json(c.delta)},
                     {"verdict", verdict_name(c.verdict)},
                     {"admissible", c.admissible},
                     {"character_admissible", c.character_admissible}});
  }
  for (const auto& s : rep.notes) notes.push_back(s);
  json comps_json = json::array();
  for (const auto& c : comps) comps_json.push_back(c);
  return {{"companions", comps_json},
          {"eps", rep.eps},
          {"mode", rep.mode},
          {"metabolizers", rep.metabolizers},
          {"branches", branches},
          {"cases", cases},
          {"all_not_norm", rep.all_not_norm},
          {"verdict", rep.all_not_norm ? "not slice" : "no obstruction"}};
}

json cmd_su2(const Options& o, json& notes) {
  require(o.a >= 1, ErrorKind::InvalidInput, "su2 needs --a");
  json arcs = json::array();
  for (const auto& r : rep_arcs(o.a))
    arcs.push_back({{"m", r.m}, {"n", r.n}, {"lo", rat_json(r.lo)}, {"hi", rat_json(r.hi)}});
  json out{{"a", o.a}, {"arcs", arcs}};
  if (!o.t.empty()) {
    Rat t = parse_t(o.t);
    out["t"] = rat_json(t);
    out["count_signature"] = count_signature(o.a, t);
  }
  if (o.a >= 2) {
    HeraldReport h = verify_herald(o.a, o.grid ? o.grid : 100);
    out["herald"] = {{"lo", rat_json(h.lo)},         {"hi", rat_json(h.hi)},
                     {"samples", h.samples},         {"skipped", h.skipped},
                     {"min_count", h.min_count},     {"all_positive", h.all_positive},
                     {"chain_reach", rat_json(h.chain_reach)}, {"chain_covers_half", h.chain_covers_half},
                     {"covered", h.covered}};
  }
  notes.push_back("signature of the (-a, a+1) torus knot as twice the number of SU(2) arcs over the trace 2cos(pi t)");
  return out;
}

json cmd_labelings(const Options& o, json& notes) {
  require(!o.diagram.empty(), ErrorKind::InvalidInput, "labelings needs --diagram");
  std::string text = o.diagram.find('X') != std::string::npos || o.diagram == "PD[]" ? o.diagram : read_file(o.diagram);
  Diagram dg = parse_pd(text);
  MetacyclicGroup g{o.d ? o.d : 2, o.p ? o.p : 3, o.q};
  LabelingSpace ls = labeling_space(dg, g, effective_budget(o));
  notes.push_back("labels b_k = q^e b_j + (1 - q^e) b_i with i the overstrand and e the crossing sign");
  return {{"group", {{"d", g.d}, {"n", g.n}, {"q", g.q}}},
          {"arcs", dg.arcs},
          {"crossings", dg.crossings.size()},
          {"size", int_json(ls.size)},
          {"module", ls.module},
          {"mod_translation", ls.mod_translation},
          {"classes_mod_translation", int_json(ls.classes_mod_translation)},
          {"classes_up_to_scaling", ls.classes_up_to_scaling}};
}

struct Parsed {
  std::unique_ptr<CLI::App> app;
  Options opts;
};

void setup(Parsed& p) {
  p.app = std::make_unique<CLI::App>("exact knot concordance invariants", "cgk");
  CLI::App& app = *p.app;
  Options& o = p.opts;
  app.require_subcommand(1);
  const std::vector<std::pair<std::string, std::string>> commands = {
      {"alexander", "Alexander polynomial and Fox-Milnor check"},
      {"signature", "Levine-Tristram signature at e^{2 pi i t}"},
      {"cover", "homology of the d-fold branched cover"},
      {"linking", "linking form on the cover"},
      {"metabolizers", "metabolizers of the linking form"},
      {"cg-sigma", "sigma_b growth for characters vanishing on each metabolizer"},
      {"cg-delta", "discriminant of a character and its norm verdict"},
      {"obstruct-twisted-double", "obstruction for the twisted double K_a"},
      {"obstruct-order2", "obstruction for K_{T_i} # K_{T_j}"},
      {"obstruct-mutant-sum", "discriminant obstruction for sums of mutants"},
      {"su2", "SU(2) arc count against the matrix signature"},
      {"labelings", "metacyclic labelings of a PD diagram"}};
  for (const auto& [name, help] : commands) {
    CLI::App* s = app.add_subcommand(name, help);
    s->add_option("--knot", o.knot, "knot spec file or inline JSON");
    s->add_option("--diagram", o.diagram, "PD code file or inline code");
    s->add_option("--t", o.t, "rational t in (0,1), e.g. 2/5");
    s->add_option("--a", o.a, "family parameter");
    s->add_option("--n", o.n, "number of summands");
    s->add_option("--i", o.i, "torus multiplicity of the first summand");
    s->add_option("--j", o.j, "torus multiplicity of the second summand");
    s->add_option("--q", o.q, "metacyclic twist");
    s->add_option("--d", o.d, "cover degree");
    s->add_option("--p", o.p, "prime (or label modulus for labelings)");
    s->add_option("--grid", o.grid, "sample count");
    s->add_option("--budget", o.budget, "enumeration budget");
    s->add_option("--mode", o.mode, "auto, enumerate or abstract");
    s->add_flag("--any", o.any, "include non-invariant metabolizers");
    s->add_flag("--json", o.json_out, "print the JSON report");
    s->add_flag("--timing", o.timing, "add wall time to the report");
  }
}

void parse_into(Parsed& p, const std::vector<std::string>& args) {
  std::vector<std::string> rev(args.rbegin(), args.rend());
  p.app->parse(rev);
  for (const auto* s : p.app->get_subcommands()) p.opts.command = s->get_name();
}

json dispatch(const Options& o, json& notes) {
  const std::string& c = o.command;
  if (c == "alexander") return cmd_alexander(o, notes);
  if (c == "signature") return cmd_signature(o, notes);
  if (c == "cover") return cmd_cover(o, notes);
  if (c == "linking") return cmd_linking(o, notes);
  if (c == "metabolizers") return cmd_metabolizers(o, notes);
  if (c == "cg-sigma") return cmd_cg_sigma(o, notes);
  if (c == "cg-delta") return cmd_cg_delta(o, notes);
  if (c == "obstruct-twisted-double") return cmd_twisted_double(o, notes);
  if (c == "obstruct-order2") return cmd_order2(o, notes);
  if (c == "obstruct-mutant-sum") return cmd_mutant_sum(o, notes);
  if (c == "su2") return cmd_su2(o, notes);
  if (c == "labelings") return cmd_labelings(o, notes);
  fail(ErrorKind::InvalidInput, "unknown command " + c);
}

json build_report(const Options& o) {
  auto start = std::chrono::steady_clock::now();
  json notes = json::array();
  json input = json::object();
  if (!o.knot.empty()) input["knot"] = load_spec(o.knot);
  if (!o.diagram.empty()) input["diagram"] = o.diagram;
  if (!o.t.empty()) input["t"] = o.t;
  for (auto [k, v] : {std::pair<const char*, long>{"a", o.a}, {"i", o.i}, {"j", o.j}, {"d", o.d}, {"p", o.p}})
    if (v) input[k] = v;
  if (o.grid) input["grid"] = o.grid;
  json result = dispatch(o, notes);
  json rep{{"command", o.command}, {"input", input}, {"result", result}, {"notes", notes}};
  if (o.timing)
    rep["timing_ms"] = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

void render(const json& rep, std::ostream& out) {
  out << "command: " << rep["command"].get<std::string>() << "\n";
  for (const auto& [k, v] : rep["result"].items()) {
    std::string s = v.is_string() ? v.get<std::string>() : v.dump();
    if (s.size() > 200) s = s.substr(0, 197) + "...";
    out << k << ": " << s << "\n";
  }
  for (const auto& n : rep["notes"]) out << "note: " << n.get<std::string>() << "\n";
}

}  // namespace

json load_spec(const std::string& path_or_json) {
  std::string text = path_or_json;
  auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos || text[first] != '{') text = read_file(path_or_json);
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    fail(ErrorKind::ParseError, std::string("knot spec: ") + e.what());
  }
  if (j.is_object() && j.contains("knot") && !j.contains("kind")) return j["knot"];
  return j;
}

json report(const std::vector<std::string>& args) {
  Parsed p;
  setup(p);
  parse_into(p, args);
  return build_report(p.opts);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Parsed p;
  setup(p);
  try {
    parse_into(p, args);
  } catch (const CLI::CallForHelp&) {
    out << p.app->help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "cgk: " << e.what() << "\n";
    return kPrecondition;
  }
  try {
    json rep = build_report(p.opts);
    if (p.opts.json_out)
      out << rep.dump(2) << "\n";
    else
      render(rep, out);
    return kOk;
  } catch (const Error& e) {
    err << "cgk: " << error_kind_name(e.kind()) << ": " << e.what() << "\n";
    return e.kind() == ErrorKind::BudgetExceeded ? kBudget : kPrecondition;
  } catch (const json::exception& e) {
    err << "cgk: InvalidInput: " << e.what() << "\n";
    return kPrecondition;
  }
}

}  // namespace cgk::cli
