#include "toroidal/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cctype>
#include <fstream>
#include <sstream>
#include <iostream>
#include <thread>

namespace toroidal {

TypeParams RunConfig::validate() const {
  TypeParams p;
  try {
    p = TypeParams::make(type, m, n);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
  if (oracle.elementary_window.emax < 0 || oracle.elementary_window.zmax < 0 ||
      oracle.composite_window.emax < 0 || oracle.composite_window.zmax < 0)
    throw ParseError("window bounds must be non-negative");
  if (oracle.elementary_kmax < 0 || oracle.composite_kmax < 0) throw ParseError("kmax must be non-negative");
  if (serre_depth_cap < 0) throw ParseError("serre depth cap must be non-negative");
  if (threads == 0) throw ParseError("threads must be positive");
  return p;
}

namespace {

std::string trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return std::string(s);
}

Scalar parse_coefficient(std::string text, std::string_view whole) {
  text = trim(text);
  if (!text.empty() && text.back() == '*') text = trim(text.substr(0, text.size() - 1));
  if (text.empty()) return Scalar(1);
  if (text.front() == '(' && text.back() == ')') text = text.substr(1, text.size() - 2);
  try {
    return Scalar::parse(text);
  } catch (const ParseError&) {
    throw ParseError("bad coefficient '" + text + "' in '" + std::string(whole) + "'");
  }
}

}  // namespace

LocalField parse_local_field(const GeneratorSet& gens, std::string_view text) {
  LocalField out;
  bool any = false;
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  while (true) {
    skip();
    if (pos == text.size()) break;
    int sign = 1;
    if (text[pos] == '+' || text[pos] == '-') {
      sign = text[pos] == '-' ? -1 : 1;
      ++pos;
    } else if (any) {
      throw ParseError("expected '+' or '-' at '" + std::string(text.substr(pos)) + "'");
    }
    std::string coef;
    int depth = 0;
    while (pos < text.size()) {
      char c = text[pos];
      if (c == '(') ++depth;
      if (c == ')') --depth;
      if (depth == 0 && (c == ':' || ((c == '+' || c == '-') && !trim(coef).empty()))) break;
      coef += c;
      ++pos;
    }
    Scalar c = Scalar(sign) * parse_coefficient(coef, text);
    if (pos < text.size() && text[pos] == ':') {
      auto close = text.find(':', pos + 1);
      if (close == std::string_view::npos) throw ParseError("unterminated ':' in '" + std::string(text) + "'");
      std::istringstream body{std::string(text.substr(pos + 1, close - pos - 1))};
      std::string u, v, extra;
      body >> u >> v;
      if (u.empty() || v.empty() || (body >> extra))
        throw ParseError("expected two symbols in ':" + body.str() + ":'");
      out += LocalField::product(c, gens.parse_symbol(u), gens.parse_symbol(v));
      pos = close + 1;
    } else {
      out += LocalField::constant(c);
    }
    any = true;
  }
  if (!any) throw ParseError("empty field expression");
  return out;
}

namespace {

struct Outcome {
  std::string text;
  bool failed = false;
};

void add_common(CLI::App* sub, RunConfig& cfg, std::string& type_text, std::string& model_text,
                std::string& ghost_text, std::string& format_text) {
  sub->add_option("--type", type_text, "A, B, C or D")->required();
  sub->add_option("--m", cfg.m, "first rank parameter");
  sub->add_option("--n", cfg.n, "second rank parameter");
  sub->add_option("--beta-model", model_text, "combination or identified");
  sub->add_option("--ghost-norm", ghost_text, "<e,e> for type B");
  sub->add_option("--format", format_text, "json or text");
  sub->add_option("--out", cfg.out, "write the report to this file");
  sub->add_option("--threads", cfg.threads, "worker threads");
}

void add_oracle(CLI::App* sub, RunConfig& cfg, std::string& ordering_text) {
  auto& o = cfg.oracle;
  sub->add_option("--emax", o.elementary_window.emax, "energy bound of the elementary window");
  sub->add_option("--zmax", o.elementary_window.zmax, "zero-mode bound of the elementary window");
  sub->add_option("--kmax", o.elementary_kmax, "|k|,|l| bound for elementary relations");
  sub->add_option("--composite-emax", o.composite_window.emax, "energy bound of the composite window");
  sub->add_option("--composite-zmax", o.composite_window.zmax, "zero-mode bound of the composite window");
  sub->add_option("--composite-kmax", o.composite_kmax, "|k|,|l| bound for composite relations");
  sub->add_flag("--serre", o.serre, "also probe the Serre templates");
  sub->add_option("--ordering", ordering_text, "fock-adapted or mode-split (default: calibrate)");
}

}  // namespace

int dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Free-field realizations of toroidal Lie superalgebras"};
  app.require_subcommand(1);
  RunConfig cfg;
  cfg.threads = std::max(1u, std::thread::hardware_concurrency());
  std::string type_text, model_text = "combination", ghost_text = "-2", format_text, ordering_text;
  std::string emit = "all", field_a, field_b;

  auto* rootdata = app.add_subcommand("rootdata", "simple roots, Cartan matrix, positive roots, errata");
  add_common(rootdata, cfg, type_text, model_text, ghost_text, format_text);
  rootdata->add_option("--emit", emit, "all, roots, cartan, positive or errata");

  auto* bracket = app.add_subcommand("bracket", "OPE bracket of two quadratic fields");
  add_common(bracket, cfg, type_text, model_text, ghost_text, format_text);
  bracket->add_option("a", field_a, "first field, e.g. ':del_m e:'")->required();
  bracket->add_option("b", field_b, "second field")->required();

  auto* verify_cmd = app.add_subcommand("verify", "full relation suite for one instance");
  add_common(verify_cmd, cfg, type_text, model_text, ghost_text, format_text);
  verify_cmd->add_option("--serre-depth-cap", cfg.serre_depth_cap, "skip Serre templates deeper than this");

  auto* fock_cmd = app.add_subcommand("fock-verify", "operator-level check on the Fock module");
  add_common(fock_cmd, cfg, type_text, model_text, ghost_text, format_text);
  add_oracle(fock_cmd, cfg, ordering_text);

  auto* audit = app.add_subcommand("audit", "appendix cross-check, relation suite and oracle");
  add_common(audit, cfg, type_text, model_text, ghost_text, format_text);
  add_oracle(audit, cfg, ordering_text);
  audit->add_option("--serre-depth-cap", cfg.serre_depth_cap, "skip Serre templates deeper than this");

  std::vector<std::string> args;
  for (int i = argc - 1; i >= 1; --i) args.emplace_back(argv[i]);
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 1;
  }

  Outcome result;
  try {
    cfg.type = parse_super_type(type_text);
    cfg.beta_model = parse_beta_model(model_text);
    cfg.ghost_norm = Scalar::parse(ghost_text);
    if (!ordering_text.empty()) cfg.oracle.ordering = parse_ordering(ordering_text);
    const bool is_bracket = bracket->parsed();
    cfg.format = format_text.empty() ? (is_bracket ? Format::Text : Format::Json) : parse_format(format_text);
    TypeParams params = cfg.validate();

    if (rootdata->parsed()) {
      result.text = render_rootdata(build_root_datum(params), emit, cfg.format);
    } else if (is_bracket) {
      GeneratorSet gens(params, cfg.beta_model, cfg.ghost_norm);
      LocalField a = parse_local_field(gens, field_a);
      LocalField b = parse_local_field(gens, field_b);
      DistributionExpr d = bracket_quadratic(a, b, gens.table());
      if (cfg.format == Format::Text) {
        result.text = d.str() + "\n";
      } else {
        nlohmann::ordered_json j{{"a", a.str()}, {"b", b.str()}, {"bracket", d.str()}};
        result.text = j.dump(2) + "\n";
      }
    } else if (verify_cmd->parsed()) {
      auto run = run_verification(params, cfg.beta_model, cfg.ghost_norm, cfg.threads, cfg.serre_depth_cap);
      result = {render_verification(run, cfg.format), run.failed()};
    } else if (fock_cmd->parsed()) {
      auto run = run_oracle(params, cfg.beta_model, cfg.oracle, cfg.ghost_norm, cfg.threads);
      result = {render_oracle(run, cfg.format), run.failed()};
    } else if (audit->parsed()) {
      auto datum = build_root_datum(params);
      auto run = run_verification(params, cfg.beta_model, cfg.ghost_norm, cfg.threads, cfg.serre_depth_cap);
      auto oracle = run_oracle(params, cfg.beta_model, cfg.oracle, cfg.ghost_norm, cfg.threads);
      bool failed = run.failed() || oracle.failed() || !unexplained_mismatches(datum).empty();
      result = {render_audit(datum, run, oracle, cfg.format), failed};
    }
  } catch (const ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 1;
  } catch (const LevelInconsistent& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  if (cfg.out.empty()) {
    out << result.text;
  } else {
    std::ofstream f(cfg.out);
    if (!f) {
      err << "usage error: cannot write '" << cfg.out << "'\n";
      return 1;
    }
    f << result.text;
  }
  return result.failed ? 2 : 0;
}

}  // namespace toroidal
