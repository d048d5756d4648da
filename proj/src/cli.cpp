#include "jlint/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <sstream>

#include "jlint/corpus.hpp"
#include "jlint/error.hpp"
#include "jlint/integrality.hpp"
#include "jlint/jones.hpp"
#include "jlint/phi.hpp"

namespace jlint {

namespace {

struct RunConfig {
  std::string input;
  std::string corpus;
  std::size_t order = 40;
  std::string format = "text";
  std::string link_class;  // empty: infer
  std::string convention = "auto";
  std::size_t n = 3;
  std::size_t gsl_power = 1;
  std::string which;
  std::string corpus_name;
};

LinkDiagram load_diagram(const RunConfig& cfg) {
  if (!cfg.corpus.empty() && !cfg.input.empty())
    throw Error(ErrorCode::ParseError, "give either a PD file or --corpus, not both");
  LinkDiagram d;
  if (!cfg.corpus.empty()) {
    d = builtin_corpus(cfg.corpus);
  } else if (!cfg.input.empty()) {
    std::ifstream in(cfg.input);
    if (!in) throw Error(ErrorCode::ParseError, "cannot read '" + cfg.input + "'");
    std::ostringstream text;
    text << in.rdbuf();
    d = LinkDiagram::parse(text.str());
  } else {
    throw Error(ErrorCode::ParseError, "no input: give a PD file or --corpus NAME");
  }
  LinkDiagram result = d;
  for (std::size_t i = 1; i < cfg.gsl_power; ++i) result = disjoint_union(result, d);
  return result;
}

ConventionBundle resolve_convention(const RunConfig& cfg) {
  if (cfg.convention == "plain") return ConventionBundle{false};
  if (cfg.convention == "invert") return ConventionBundle{true};
  return calibrated_convention();
}

void require_brunnian(const LinkDiagram& d, bool declared) {
  if (!is_algebraically_split(d))
    throw Error(ErrorCode::ClassUnsupported, "link is not algebraically split (nonzero linking number)");
  if (d.component_count() <= 3) {
    if (!proper_sublinks_look_trivial(d))
      throw Error(ErrorCode::ClassUnsupported, "a proper sublink is not trivial, so the link is not Brunnian");
  } else if (!declared) {
    throw Error(ErrorCode::ClassUnsupported,
                "Brunnian-ness is only checked up to 3 components; pass --class brunnian to assert it");
  }
}

PhiResult compute_phi(const LinkDiagram& d, const RunConfig& cfg, ConventionBundle conv) {
  const auto& cls = cfg.link_class;
  if (cls == "knot") return phi_knot(d, conv);
  if (cls == "brunnian") {
    if (d.component_count() < 2) throw Error(ErrorCode::NotMultiComponent, "a Brunnian link needs 2+ components");
    require_brunnian(d, true);
    return phi_brunnian(d, conv);
  }
  if (d.component_count() == 0) return phi_trivial(0);
  if (cls.empty() && d.component_count() == 1) return phi_knot(d, conv);

  const auto pieces = split_components(d);
  if (cls == "gsl" || pieces.size() > 1) {
    for (const auto& piece : pieces)
      if (piece.component_count() > 1) require_brunnian(piece, cls == "gsl");
    return phi_gsl(pieces, conv);
  }
  require_brunnian(d, false);
  return phi_brunnian(d, conv);
}

void print_series_csv(const SeriesAtOne& s, std::ostream& out) {
  out << "index,value,v2,v3\n";
  for (std::size_t i = 0; i <= s.order(); ++i)
    out << i << ',' << s[i] << ',' << padic_valuation(s[i], 2) << ',' << padic_valuation(s[i], 3) << '\n';
}

void print_series_text(const SeriesAtOne& s, std::ostream& out) {
  for (std::size_t i = 0; i <= s.order(); ++i) out << (i ? "," : "") << s[i];
  out << '\n';
}

int cmd_jones(const RunConfig& cfg, std::ostream& out) {
  const auto d = load_diagram(cfg);
  const auto conv = resolve_convention(cfg);
  const auto v = jones_reduced(d, conv);
  if (cfg.format == "json")
    out << nlohmann::json{{"jones", v.to_string()}, {"invert_t", conv.invert_t}}.dump() << '\n';
  else
    out << v.to_string() << '\n';
  return kExitPass;
}

int cmd_phi(const RunConfig& cfg, std::ostream& out) {
  const auto d = load_diagram(cfg);
  const auto phi = compute_phi(d, cfg, resolve_convention(cfg));
  if (cfg.format == "json") {
    out << nlohmann::json{{"phi", phi.to_string()},
                          {"num", phi.num.to_string()},
                          {"den", phi.den.to_string()},
                          {"mu", phi.mu},
                          {"class", std::string(to_string(phi.link_class))}}
               .dump()
        << '\n';
  } else if (cfg.format == "csv") {
    print_series_csv(phi_series(phi, cfg.order), out);
  } else {
    out << phi.to_string() << '\n';
  }
  return kExitPass;
}

int cmd_expand(const RunConfig& cfg, std::ostream& out) {
  const auto d = load_diagram(cfg);
  const auto series = phi_series(compute_phi(d, cfg, resolve_convention(cfg)), cfg.order);
  if (cfg.format == "json")
    out << series.to_json().dump() << '\n';
  else if (cfg.format == "csv")
    print_series_csv(series, out);
  else
    print_series_text(series, out);
  return kExitPass;
}

void print_report_text(const ValuationReport& r, std::ostream& out) {
  out << "claim: " << r.claim << '\n';
  for (const auto& e : r.entries) {
    out << "i=" << e.i << "  a=" << e.a << "  v2=" << e.v2 << "  v3=" << e.v3 << "  bound: " << e.bound.description
        << "  " << (e.pass ? "pass" : "FAIL");
    if (e.flag) out << "  [" << *e.flag << ']';
    out << '\n';
  }
  for (const auto& a : r.anomalies) out << "anomaly: " << a << '\n';
  out << "verdict: " << to_string(r.verdict) << '\n';
}

int emit_report(const ValuationReport& r, const SeriesAtOne& s, const RunConfig& cfg, std::ostream& out) {
  if (cfg.format == "json")
    out << r.to_json().dump() << '\n';
  else if (cfg.format == "csv")
    print_series_csv(s, out);
  else
    print_report_text(r, out);
  return r.verdict == Verdict::Pass ? kExitPass : kExitMathFlag;
}

int cmd_check(const RunConfig& cfg, std::ostream& out) {
  const auto d = load_diagram(cfg);
  const auto conv = resolve_convention(cfg);
  const auto mu = d.component_count();

  if (cfg.which == "prop1") {
    std::size_t knots = 0;
    for (const auto& piece : split_components(d)) {
      if (piece.component_count() != 1)
        throw Error(ErrorCode::ClassUnsupported, "prop1 applies to split unions of knots");
      if (!piece.is_crossing_free()) ++knots;
    }
    const auto series = phi_series(compute_phi(d, cfg, conv), cfg.order);
    return emit_report(check_prop1(series, knots), series, cfg, out);
  }

  const auto series = phi_series(compute_phi(d, cfg, conv), cfg.order);
  if (cfg.which == "prop2") return emit_report(check_prop2(series), series, cfg, out);

  if (cfg.which == "eq1") {
    const bool holds = check_eq1_vanishing(series, mu);
    if (cfg.format == "json")
      out << nlohmann::json{{"claim", "eq1"}, {"mu", mu}, {"holds", holds}}.dump() << '\n';
    else if (cfg.format == "csv")
      print_series_csv(series, out);
    else
      out << "eq1: a_0.." << "a_" << mu << " all zero: " << (holds ? "true" : "false") << '\n';
    return holds ? kExitPass : kExitMathFlag;
  }

  const auto r = check_conjecture41(series, mu, cfg.n);
  if (cfg.format == "json")
    out << nlohmann::json{{"claim", "conj41"}, {"n", cfg.n}, {"mu", mu}, {"value", r.value.to_string()},
                          {"in_6Z", r.in_6z}}
               .dump()
        << '\n';
  else if (cfg.format == "csv")
    print_series_csv(series, out);
  else
    out << "n!*phi_n = " << r.value << " (n=" << cfg.n << ", mu=" << mu << "); in 6Z: " << (r.in_6z ? "true" : "false")
        << '\n';
  return r.in_6z ? kExitPass : kExitMathFlag;
}

int cmd_corpus_list(const RunConfig& cfg, std::ostream& out) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& e : corpus_entries()) {
    const auto d = LinkDiagram::parse(e.pd);
    const auto cls = std::string(to_string(classify(d)));
    if (cfg.format == "json")
      rows.push_back({{"name", e.name}, {"mu", d.component_count()}, {"crossings", d.crossing_count()}, {"class", cls}});
    else
      out << e.name << "  mu=" << d.component_count() << "  crossings=" << d.crossing_count() << "  class=" << cls
          << "  " << e.description << '\n';
  }
  if (cfg.format == "json") out << rows.dump() << '\n';
  return kExitPass;
}

int cmd_corpus_show(const RunConfig& cfg, std::ostream& out) {
  const auto& e = corpus_entry(cfg.corpus_name);
  const auto d = LinkDiagram::parse(e.pd);
  const auto cls = std::string(to_string(classify(d)));
  if (cfg.format == "json") {
    out << nlohmann::json{{"name", e.name}, {"mu", d.component_count()}, {"crossings", d.crossing_count()},
                          {"class", cls}, {"pd", e.pd}}
               .dump()
        << '\n';
  } else {
    out << "# " << e.name << ": " << e.description << '\n'
        << "# mu=" << d.component_count() << " crossings=" << d.crossing_count() << " class=" << cls << '\n'
        << e.pd;
  }
  return kExitPass;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact averaged Jones polynomials and their Taylor coefficients at t=1", "jlint"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_common = [&cfg](CLI::App* sub) {
    sub->add_option("file", cfg.input, "PD file");
    sub->add_option("--corpus", cfg.corpus, "built-in diagram name");
    sub->add_option("--order", cfg.order, "series truncation order")->check(CLI::NonNegativeNumber);
    sub->add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"text", "json", "csv"}));
    sub->add_option("--class", cfg.link_class, "link class")->check(CLI::IsMember({"knot", "brunnian", "gsl"}));
    sub->add_option("--convention", cfg.convention, "Jones convention")
        ->check(CLI::IsMember({"auto", "plain", "invert"}));
    sub->add_option("-n", cfg.n, "index n for conj41")->check(CLI::NonNegativeNumber);
    sub->add_option("--gsl-power", cfg.gsl_power, "use the split union of K copies")->check(CLI::PositiveNumber);
  };

  auto* jones = app.add_subcommand("jones", "Jones polynomial of a diagram");
  auto* phi = app.add_subcommand("phi", "averaged Jones polynomial as an exact rational function");
  auto* expand = app.add_subcommand("expand", "Taylor coefficients of Phi at t=1");
  auto* check = app.add_subcommand("check", "integrality checks: eq1, prop1, prop2, conj41");
  check->add_option("which", cfg.which, "which check")
      ->required()
      ->check(CLI::IsMember({"eq1", "prop1", "prop2", "conj41"}));
  for (auto* sub : {jones, phi, expand, check}) add_common(sub);

  auto* corpus = app.add_subcommand("corpus", "built-in diagrams");
  corpus->require_subcommand(1);
  auto* list = corpus->add_subcommand("list", "list built-in diagrams");
  auto* show = corpus->add_subcommand("show", "print one built-in diagram");
  show->add_option("name", cfg.corpus_name)->required();
  for (auto* sub : {list, show})
    sub->add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"text", "json", "csv"}));

  std::vector<const char*> argv{"jlint"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitInputError;
  }

  try {
    if (*jones) return cmd_jones(cfg, out);
    if (*phi) return cmd_phi(cfg, out);
    if (*expand) return cmd_expand(cfg, out);
    if (*check) return cmd_check(cfg, out);
    if (*list) return cmd_corpus_list(cfg, out);
    if (*show) return cmd_corpus_show(cfg, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }
  return kExitInputError;
}

}  // namespace jlint
