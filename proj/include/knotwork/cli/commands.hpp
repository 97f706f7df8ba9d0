#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "knotwork/grope/magnus.hpp"
#include "knotwork/jacobi/relations.hpp"
#include "knotwork/knot/knot_table.hpp"
#include "knotwork/knot/rho.hpp"

#ifndef KNOTWORK_VERSION
#define KNOTWORK_VERSION "0.0.0"
#endif

namespace knotwork::cli {

using nlohmann::json;

struct CommandResult {
  int exit_code = 0;
  std::string out;
  std::string err;
};

struct GlobalOptions {
  bool json_out = false;
  bool csv_out = false;
  std::string precision = "1e-6";
  int digits = 12;
  int max_degree = -1;
  long long seed = 0;
};

struct KnotSpec {
  std::string braid, seifert, file, name;
};

namespace detail {

inline json integer_json(const Integer& x) {
  if (x >= std::numeric_limits<long long>::min() && x <= std::numeric_limits<long long>::max())
    return static_cast<long long>(x);
  return x.str();
}

inline std::string one_line(std::string s) {
  for (char& c : s)
    if (c == '\n' || c == '\r') c = ' ';
  while (!s.empty() && s.back() == ' ') s.pop_back();
  return s;
}

inline std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

inline json report(const std::string& command, json input, json results, json warnings = json::array()) {
  return {{"tool", "knotwork"},
          {"version", KNOTWORK_VERSION},
          {"command", command},
          {"input", std::move(input)},
          {"results", std::move(results)},
          {"warnings", std::move(warnings)}};
}

struct LoadedKnot {
  std::string name;
  SeifertMatrix v;
  json echo;
};

inline LoadedKnot load_knot(const KnotSpec& k) {
  int given = !k.braid.empty() + !k.seifert.empty() + !k.file.empty();
  if (given != 1) throw ParseError("give exactly one of --braid, --seifert, --file");
  if (!k.braid.empty()) {
    BraidWord b = parse_braid(k.braid);
    if (!closure_is_knot(b)) throw PreconditionError("closure is a link");
    return {"braid", seifert_matrix_from_braid(b), {{"braid", b.str()}}};
  }
  if (!k.seifert.empty()) {
    json j;
    try {
      j = json::parse(k.seifert);
    } catch (const json::parse_error& e) {
      throw ParseError(std::string("seifert matrix: ") + e.what());
    }
    KnotTableEntry e = knot_entry_from_json(json{{"name", "seifert"}, {"seifert", j}});
    return {"seifert", e.seifert_matrix(), {{"seifert", j}}};
  }
  auto entries = load_knot_table(k.file);
  const KnotTableEntry* pick = nullptr;
  if (!k.name.empty()) {
    for (const auto& e : entries)
      if (e.name == k.name) pick = &e;
    if (!pick) throw PreconditionError("no entry named '" + k.name + "' in " + k.file);
  } else if (entries.size() == 1) {
    pick = &entries.front();
  } else {
    throw PreconditionError("table has " + std::to_string(entries.size()) + " entries; choose one with --name");
  }
  return {pick->name, pick->seifert_matrix(), {{"file", k.file}, {"name", pick->name}}};
}

inline json coefficients_json(const LaurentPoly& p) {
  json arr = json::array();
  for (int e = p.min_exp(); e <= p.max_exp(); ++e) arr.push_back({e, integer_json(p.coeff(e))});
  return arr;
}

inline json invariants_json(const SeifertMatrix& v, std::optional<int> claimed_genus) {
  LaurentPoly delta = alexander_polynomial(v);
  ObstructionResult fib = fibered_obstruction(v, claimed_genus);
  json fibj = {{"passes", fib.passes}};
  if (!fib.passes) fibj["reason"] = fib.reason;
  return {{"alexander", delta.str()},
          {"alexander_coefficients", coefficients_json(delta)},
          {"d0", delta.span()},
          {"determinant", integer_json(determinant(v))},
          {"arf", arf(v)},
          {"signature_minus_one", v.size() == 0 ? 0 : levine_tristram(v, Rational(1, 2))},
          {"fibered_obstruction", fibj},
          {"fox_milnor", fox_milnor_test(delta)},
          {"surface_genus", v.genus()}};
}

inline std::string angle_text(const std::optional<AlgebraicAngle>& a, bool at_one, int digits) {
  if (!a) return to_decimal(Rational(at_one ? 1 : 0), digits, true);
  return a->describe(digits);
}

inline json arcs_json(const std::vector<RhoArc>& arcs, int digits) {
  json out = json::array();
  for (const auto& a : arcs)
    out.push_back({{"sigma", a.sigma}, {"theta_lo", angle_text(a.lo, false, digits)},
                   {"theta_hi", angle_text(a.hi, true, digits)}});
  return out;
}

inline std::string arcs_csv(const SignatureStepFunction& sf, int digits) {
  std::ostringstream o;
  o << "# jump minimal polynomials in x = 2cos(2 pi theta):";
  if (sf.jumps.empty()) o << " none";
  for (std::size_t k = 0; k < sf.jumps.size(); ++k)
    o << (k ? "; " : " ") << sf.jumps[k].minimal_poly().str("x");
  o << "\n"
    << "theta_lo,theta_hi,sigma\n";
  for (const auto& a : step_arcs(sf))
    o << angle_text(a.lo, false, digits) << "," << angle_text(a.hi, true, digits) << "," << a.sigma << "\n";
  return o.str();
}

inline json grope_json_arg(const std::string& arg) {
  std::string text = arg;
  auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos || text[first] != '{') text = read_file(arg);
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("grope JSON: ") + e.what());
  }
}

inline json height_json(const std::optional<grope::Height>& h) { return h ? json(h->str()) : json(nullptr); }

}  // namespace detail

/// Runs one command line (args excludes the program name).
inline CommandResult run(const std::vector<std::string>& args) {
  std::ostringstream out;
  CommandResult res;
  GlobalOptions g;
  KnotSpec knot;
  std::optional<int> claimed_genus;
  std::string grading = "grope", bracket_text, word_text, grope_arg, table_path;
  int bdim_max = 3, cutoff = 8, genus = 1;
  double height = 1;
  bool no_strut = false, tadpoles = false;

  CLI::App app{"knotwork: knot invariants, diagram dimensions and grope arithmetic", "knotwork"};
  app.set_version_flag("--version", KNOTWORK_VERSION);
  app.require_subcommand(1);
  app.fallthrough();
  auto* fmt = app.add_option_group("format");
  fmt->add_flag("--json", g.json_out, "JSON output");
  fmt->add_flag("--csv", g.csv_out, "CSV output");
  fmt->require_option(0, 1);
  app.add_option("--precision", g.precision, "Enclosure width for rho0 (rational or decimal)");
  app.add_option("--digits", g.digits, "Decimal digits when rendering angles and intervals")->check(CLI::Range(1, 60));
  app.add_option("--max-degree", g.max_degree, "Degree budget for diagram dimensions");
  app.add_option("--seed", g.seed, "Seed for randomized checks; accepted for script compatibility");

  auto add_knot = [&](CLI::App* sub) {
    sub->add_option("--braid", knot.braid, "Braid word, e.g. \"n=2; 1 1 1\"");
    sub->add_option("--seifert", knot.seifert, "Seifert matrix as JSON rows");
    sub->add_option("--file", knot.file, "Knot table (JSON or CSV)");
    sub->add_option("--name", knot.name, "Entry to use from --file");
  };

  auto* inv = app.add_subcommand("invariants", "Classical invariants of one knot");
  add_knot(inv);
  inv->add_option("--genus", claimed_genus, "Claimed knot genus for the fiberedness check");
  auto* rho = app.add_subcommand("rho", "rho0 = integral of the signature function");
  add_knot(rho);
  auto* sig = app.add_subcommand("sigfn", "Levine-Tristram signature step function");
  add_knot(sig);
  auto* bdim = app.add_subcommand("bdim", "Dimensions of the diagram space");
  bdim->add_option("--grading", grading, "grope or vassiliev")->check(CLI::IsMember({"grope", "vassiliev"}));
  bdim->add_option("--max", bdim_max, "Largest degree");
  bdim->add_flag("--no-strut", no_strut, "Leave the strut out of Vassiliev degree 1");
  bdim->add_flag("--tadpoles", tadpoles, "Keep tadpole diagrams as generators");
  auto* gr = app.add_subcommand("grope", "Grope class and height queries");
  gr->require_subcommand(1);
  gr->fallthrough();
  auto* gr_class = gr->add_subcommand("class", "Class of a grope given as JSON (text or file)");
  gr_class->add_option("grope", grope_arg)->required();
  auto* gr_height = gr->add_subcommand("height", "Symmetric height of a grope, if any");
  gr_height->add_option("grope", grope_arg)->required();
  auto* gr_bracket = gr->add_subcommand("from-bracket", "Grope realising a commutator");
  gr_bracket->add_option("bracket", bracket_text)->required();
  auto* gr_sym = gr->add_subcommand("symmetric", "Symmetric grope of a given height");
  gr_sym->add_option("--height", height)->required();
  gr_sym->add_option("--genus", genus);
  auto* mag = app.add_subcommand("magnus", "Lower central series depth via the Magnus expansion");
  mag->add_option("word", word_text, "Free word, e.g. \"x y x^-1 y^-1\"");
  mag->add_option("--bracket", bracket_text, "Expand a commutator instead of a word");
  mag->add_option("--cutoff", cutoff, "Truncation degree (<= 8)");
  auto* tab = app.add_subcommand("table", "Invariants for every knot in a table");
  tab->add_option("file", table_path)->required();

  std::vector<std::string> argv_store{"knotwork"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : argv_store) argv.push_back(s.data());

  try {
    try {
      app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
      res.out = app.help();
      return res;
    } catch (const CLI::CallForAllHelp&) {
      res.out = app.help("", CLI::AppFormatMode::All);
      return res;
    } catch (const CLI::CallForVersion&) {
      res.out = std::string(KNOTWORK_VERSION) + "\n";
      return res;
    } catch (const CLI::ParseError& e) {
      throw ParseError(e.what());
    }
    bool csv = g.csv_out;
    auto emit = [&](const json& j) { out << j.dump(2) << "\n"; };

    if (inv->parsed()) {
      auto k = detail::load_knot(knot);
      json r = detail::invariants_json(k.v, claimed_genus);
      if (csv) {
        out << "alexander,d0,determinant,arf,signature_minus_one,fibered_obstruction,fox_milnor\n";
        out << detail::csv_quote(r["alexander"]) << "," << r["d0"] << "," << r["determinant"] << "," << r["arf"] << ","
            << r["signature_minus_one"] << "," << (r["fibered_obstruction"]["passes"].get<bool>() ? "passes" : "fails")
            << "," << (r["fox_milnor"].get<bool>() ? "true" : "false") << "\n";
      } else {
        json echo = k.echo;
        if (claimed_genus) echo["genus"] = *claimed_genus;
        emit(detail::report("invariants", echo, r));
      }
    } else if (rho->parsed()) {
      auto k = detail::load_knot(knot);
      Rational p = parse_rational(g.precision);
      if (p <= 0) throw PreconditionError("precision must be positive");
      RhoResult r = rho0(k.v, p);
      if (csv) {
        out << detail::arcs_csv(signature_function(k.v), g.digits);
      } else {
        json results = {{"rho0",
                         {{"lo", to_decimal(r.value.lo(), g.digits, true)},
                          {"hi", to_decimal(r.value.hi(), g.digits, false)}}},
                        {"arcs", detail::arcs_json(r.exact_form, g.digits)},
                        {"measure", r.measure},
                        {"precision", g.precision}};
        json echo = k.echo;
        echo["precision"] = g.precision;
        emit(detail::report("rho", echo, results));
      }
    } else if (sig->parsed()) {
      auto k = detail::load_knot(knot);
      SignatureStepFunction sf = signature_function(k.v);
      if (csv) {
        out << detail::arcs_csv(sf, g.digits);
      } else {
        json jumps = json::array();
        for (const auto& a : sf.jumps)
          jumps.push_back({{"theta", a.describe(g.digits)},
                           {"minimal_polynomial", a.minimal_poly().str("x")},
                           {"root_index", a.root_index()},
                           {"upper", a.upper()}});
        json results = {{"jumps", jumps},
                        {"arcs", detail::arcs_json(step_arcs(sf), g.digits)},
                        {"identically_zero", sf.identically_zero()}};
        emit(detail::report("sigfn", k.echo, results));
      }
    } else if (bdim->parsed()) {
      jacobi::JacobiOptions opt;
      opt.include_strut = !no_strut;
      opt.allow_tadpoles = tadpoles;
      if (g.max_degree >= 0) opt.grope_budget = opt.vassiliev_budget = g.max_degree;
      bool grope_grading = grading == "grope";
      int budget = grope_grading ? opt.grope_budget : opt.vassiliev_budget;
      if (bdim_max > budget)
        throw PreconditionError("--max " + std::to_string(bdim_max) + " exceeds the degree budget " +
                                std::to_string(budget) + " (raise with --max-degree)");
      std::vector<jacobi::DimensionRow> rows;
      for (int d = grope_grading ? 2 : 1; d <= bdim_max; ++d)
        rows.push_back(grope_grading ? jacobi::dim_Bg_row(d, opt) : jacobi::dim_B_by_vassiliev_row(d, opt));
      if (g.json_out) {
        json jr = json::array();
        for (const auto& r : rows)
          jr.push_back({{"grading", r.grading},
                        {"degree", r.degree},
                        {"num_diagrams", r.num_diagrams},
                        {"num_relations", r.num_relations},
                        {"dimension", r.dimension}});
        emit(detail::report("bdim", {{"grading", grading}, {"max", bdim_max}, {"strut", !no_strut}}, {{"rows", jr}}));
      } else {
        out << "grading,degree,num_diagrams,num_relations,dimension\n";
        for (const auto& r : rows)
          out << r.grading << "," << r.degree << "," << r.num_diagrams << "," << r.num_relations << "," << r.dimension
              << "\n";
      }
    } else if (gr->parsed()) {
      json results, echo;
      if (gr_class->parsed() || gr_height->parsed()) {
        json j = detail::grope_json_arg(grope_arg);
        grope::GropeTree t = grope::grope_from_json(j);
        echo = {{"grope", j}};
        if (gr_class->parsed())
          results = {{"class", grope::class_of(t)}};
        else
          results = {{"height", detail::height_json(grope::height_of(t))},
                     {"convention", grope::kHalfHeightConvention}};
      } else if (gr_bracket->parsed()) {
        grope::Bracket b = grope::parse_bracket(bracket_text);
        grope::GropeTree t = grope::bracket_to_grope(b);
        echo = {{"bracket", b.str()}};
        results = {{"tree", grope::to_json(t)},
                   {"class", grope::class_of(t)},
                   {"height", detail::height_json(grope::height_of(t))},
                   {"weight", grope::weight(b)},
                   {"derived_depth", grope::derived_depth(b)}};
      } else {
        grope::Height h = grope::Height::from_double(height);
        grope::GropeTree t = grope::symmetric_grope(h, genus);
        echo = {{"height", h.str()}, {"genus", genus}};
        results = {{"tree", grope::to_json(t)},
                   {"class", grope::class_of(t)},
                   {"height", h.str()},
                   {"convention", grope::kHalfHeightConvention}};
      }
      std::string sub;
      for (auto* s : gr->get_subcommands()) sub = s->get_name();
      if (csv) {
        out << "key,value\n";
        for (const auto& [key, val] : results.items())
          if (!val.is_object()) out << key << "," << detail::csv_quote(val.is_string() ? val.get<std::string>() : val.dump()) << "\n";
      } else {
        emit(detail::report("grope " + sub, echo, results));
      }
    } else if (mag->parsed()) {
      grope::FreeWord w;
      std::string alphabet;
      json echo = {{"cutoff", cutoff}};
      if (!bracket_text.empty()) {
        if (!word_text.empty()) throw ParseError("give a word or --bracket, not both");
        grope::Bracket b = grope::parse_bracket(bracket_text);
        alphabet = grope::bracket_alphabet(b);
        w = grope::bracket_word(b, alphabet);
        echo["bracket"] = b.str();
      } else {
        w = grope::parse_free_word(word_text, &alphabet);
        echo["word"] = word_text;
      }
      grope::MagnusDepth d = grope::magnus_depth(w, cutoff);
      json results = {{"depth", d.at_least ? json(d.str()) : json(d.depth)},
                      {"at_least", d.at_least},
                      {"reduced_word", w.str(alphabet)},
                      {"rank", w.rank}};
      if (csv)
        out << "depth,at_least\n" << d.depth << "," << (d.at_least ? "true" : "false") << "\n";
      else
        emit(detail::report("magnus", echo, results));
    } else if (tab->parsed()) {
      auto entries = load_knot_table(table_path);
      json rows = json::array(), warnings = json::array();
      if (csv) out << "name,alexander,d0,determinant,arf,signature_minus_one,fibered_obstruction,fox_milnor\n";
      for (const auto& e : entries) {
        SeifertMatrix v = e.seifert_matrix();
        json r = detail::invariants_json(v, std::nullopt);
        for (const auto& [key, val] : e.expected.items()) {
          if (!r.contains(key)) {
            warnings.push_back(e.name + ": no computed value for expected key '" + key + "'");
          } else if (r[key] != val) {
            warnings.push_back(e.name + ": " + key + " expected " + val.dump() + ", computed " + r[key].dump());
          }
        }
        if (csv) {
          out << detail::csv_quote(e.name) << "," << detail::csv_quote(r["alexander"]) << "," << r["d0"] << ","
              << r["determinant"] << "," << r["arf"] << "," << r["signature_minus_one"] << ","
              << (r["fibered_obstruction"]["passes"].get<bool>() ? "passes" : "fails") << ","
              << (r["fox_milnor"].get<bool>() ? "true" : "false") << "\n";
        }
        r["name"] = e.name;
        rows.push_back(std::move(r));
      }
      if (!csv) emit(detail::report("table", {{"file", table_path}}, {{"knots", rows}}, warnings));
    }
  } catch (const Error& e) {
    res.exit_code = static_cast<int>(e.kind());
    res.err = std::string("error: ") + kind_name(e.kind()) + ": " + detail::one_line(e.what()) + "\n";
    return res;
  } catch (const std::exception& e) {
    res.exit_code = static_cast<int>(ErrorKind::precondition);
    res.err = std::string("error: precondition: ") + detail::one_line(e.what()) + "\n";
    return res;
  }
  res.out = out.str();
  return res;
}

}  // namespace knotwork::cli
