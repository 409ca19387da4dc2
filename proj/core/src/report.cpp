#include "toroidal/report.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>

namespace toroidal {

using nlohmann::ordered_json;

Format parse_format(std::string_view s) {
  if (s == "json") return Format::Json;
  if (s == "text") return Format::Text;
  throw ParseError("unknown format '" + std::string(s) + "'");
}

bool VerificationRun::failed() const {
  return tower.status == CheckStatus::Fail ||
         std::any_of(checks.begin(), checks.end(),
                     [](const RelationCheck& c) { return c.status == CheckStatus::Fail; });
}

VerificationRun run_verification(const TypeParams& params, BetaModel model, const Scalar& ghost_norm,
                                 unsigned threads, int serre_depth_cap) {
  VerificationRun run;
  run.params = params;
  run.model = model;
  run.ghost_norm = ghost_norm;
  auto fa = realize_fields(params, model, ghost_norm);
  run.level = extract_level(fa);
  auto suite = relation_suite(fa.datum);
  if (serre_depth_cap > 0)
    std::erase_if(suite, [&](const RelationTemplate& t) {
      return (t.kind == RelationKind::Double || t.kind == RelationKind::Folded) && t.depth > serre_depth_cap;
    });
  run.checks = verify(fa, suite, run.level, threads);
  run.tower = central_tower(fa, threads);
  return run;
}

bool OracleRun::failed() const {
  auto bad = [](const OracleReport& r) { return r.status == OracleStatus::Fail; };
  return !disagreements.empty() || symbolic_level != fock_level ||
         std::any_of(elementary.begin(), elementary.end(), bad) ||
         std::any_of(composite.begin(), composite.end(), bad);
}

namespace {

bool basic_relation(const RelationTemplate& t) {
  return t.kind == RelationKind::AlphaAlpha || t.kind == RelationKind::AlphaX ||
         t.kind == RelationKind::XX;
}

std::string base_id(const std::string& id) { return id.substr(0, id.find('@')); }

std::vector<std::string> find_disagreements(const std::vector<RelationCheck>& symbolic,
                                            const std::vector<OracleReport>& reports) {
  std::vector<std::string> out;
  for (const auto& r : reports) {
    auto id = base_id(r.id);
    auto it = std::find_if(symbolic.begin(), symbolic.end(),
                           [&](const RelationCheck& c) { return c.id == id; });
    if (it != symbolic.end() && !agrees(it->status, r.status)) out.push_back(r.id);
  }
  return out;
}

}  // namespace

OracleRun run_oracle(const TypeParams& params, BetaModel model, const OracleConfig& config,
                     const Scalar& ghost_norm, unsigned threads) {
  OracleRun run;
  run.params = params;
  run.model = model;
  run.config = config;
  auto fa = realize_fields(params, model, ghost_norm);
  run.symbolic_level = extract_level(fa);
  std::vector<RelationTemplate> templates;
  for (const auto& t : relation_suite(fa.datum))
    if (config.serre || basic_relation(t)) templates.push_back(t);
  auto symbolic = verify(fa, templates, run.symbolic_level, threads);

  std::vector<Ordering> candidates;
  if (config.ordering)
    candidates = {*config.ordering};
  else
    candidates = {Ordering::FockAdapted, Ordering::ModeSplit};
  bool chosen = false;
  for (Ordering o : candidates) {
    FockSpace space(fa.gens, o);
    auto reports = composite_checks(space, fa, templates, run.symbolic_level, config.composite_kmax,
                                    config.composite_window, threads);
    auto dis = find_disagreements(symbolic, reports);
    run.calibration.emplace_back(o, dis.empty());
    if (!chosen && (dis.empty() || o == candidates.back())) {
      chosen = true;
      run.ordering = o;
      run.composite = std::move(reports);
      run.disagreements = std::move(dis);
    }
  }
  FockSpace space(fa.gens, run.ordering);
  run.fock_level = fock_level(space, fa);
  run.elementary = elementary_checks(space, config.elementary_kmax, config.elementary_window, threads);
  return run;
}

namespace {

std::string twice_text(int twice) {
  if (twice % 2 == 0) return std::to_string(twice / 2);
  return std::to_string(twice) + "/2";
}

ordered_json header(const TypeParams& p) {
  ordered_json j;
  j["schema_version"] = kReportSchemaVersion;
  j["type"] = to_string(p.type);
  j["m"] = p.m;
  j["n"] = p.n;
  j["label"] = p.label();
  return j;
}

ordered_json cartan_json(const std::vector<std::vector<Scalar>>& a) {
  ordered_json rows = ordered_json::array();
  for (const auto& row : a) {
    ordered_json r = ordered_json::array();
    for (const auto& x : row) r.push_back(x.str());
    rows.push_back(r);
  }
  return rows;
}

ordered_json erratum_json(const Erratum& e) {
  ordered_json j;
  j["id"] = e.id;
  j["location"] = e.location;
  j["printed"] = e.printed;
  j["adopted"] = e.adopted;
  j["forcing_check"] = e.forcing_check;
  return j;
}

ordered_json errata_json(const TypeParams& p) {
  ordered_json out = ordered_json::array();
  for (const auto& e : errata_for(p.type)) {
    if (!e.instances.empty()) {
      bool here = std::any_of(e.instances.begin(), e.instances.end(), [&](const CartanInstance& c) {
        return c.type == p.type && c.m == p.m && c.n == p.n;
      });
      if (!here) continue;
    }
    out.push_back(erratum_json(e));
  }
  return out;
}

ordered_json mismatches_json(const RootDatum& datum) {
  ordered_json out = ordered_json::array();
  auto unexplained = unexplained_mismatches(datum);
  for (const auto& mm : appendix_crosscheck(datum)) {
    ordered_json j;
    j["i"] = mm.i;
    j["j"] = mm.j;
    j["computed"] = mm.computed.str();
    j["printed"] = mm.printed.str();
    j["forcing"] = "(alpha_" + std::to_string(mm.i) + "|alpha_" + std::to_string(mm.j) + ")/d_" +
                   std::to_string(mm.i) + " = " + inner(datum, mm.i, mm.j).str() + "/" +
                   datum.d[mm.i].str();
    j["in_ledger"] = std::none_of(unexplained.begin(), unexplained.end(), [&](const CartanMismatch& u) {
      return u.i == mm.i && u.j == mm.j;
    });
    out.push_back(j);
  }
  return out;
}

ordered_json rootdata_json(const RootDatum& datum, std::string_view emit) {
  const bool all = emit == "all";
  if (!all && emit != "roots" && emit != "cartan" && emit != "positive" && emit != "errata")
    throw ParseError("unknown --emit value '" + std::string(emit) + "'");
  ordered_json j = header(datum.params);
  if (all || emit == "roots") {
    ordered_json roots = ordered_json::array();
    for (int i = 0; i < datum.size(); ++i) {
      ordered_json r;
      r["index"] = i;
      r["root"] = datum.simple_roots[i].str();
      r["parity"] = bit(datum.parities[i]) ? "odd" : "even";
      r["d"] = datum.d[i].str();
      roots.push_back(r);
    }
    j["simple_roots"] = roots;
    j["cbar"] = datum.cbar.str();
    j["beta"] = datum.beta.str();
    j["theta"] = datum.theta.str();
    j["theta_coeffs"] = datum.theta_coeffs;
  }
  if (all || emit == "cartan") j["cartan"] = cartan_json(datum.cartan);
  if (all || emit == "positive") {
    ordered_json pos = ordered_json::array();
    for (const auto& v : positive_roots(datum)) pos.push_back(v.str());
    j["positive_roots"] = pos;
    j["superalgebra_dimension"] = superalgebra_dimension(datum.params);
  }
  if (all || emit == "errata") {
    j["appendix_cartan"] = cartan_json(appendix_cartan(datum.params));
    j["appendix_mismatches"] = mismatches_json(datum);
    j["errata"] = errata_json(datum.params);
  }
  return j;
}

ordered_json verification_json(const VerificationRun& run) {
  ordered_json j = header(run.params);
  j["beta_model"] = to_string(run.model);
  j["ghost_norm"] = run.ghost_norm.str();
  j["level"] = run.level.str();
  int counts[3] = {0, 0, 0};
  ordered_json checks = ordered_json::array();
  for (const auto& c : run.checks) {
    ++counts[static_cast<int>(c.status)];
    ordered_json x;
    x["id"] = c.id;
    x["status"] = to_string(c.status);
    x["residual_rendered"] = c.residual.str();
    checks.push_back(x);
  }
  j["summary"] = {{"exact", counts[0]}, {"mod-null", counts[1]}, {"fail", counts[2]}};
  j["checks"] = checks;
  ordered_json tower;
  tower["cbar_img"] = run.tower.cbar_img.str();
  tower["status"] = to_string(run.tower.status);
  ordered_json tchecks = ordered_json::array();
  for (const auto& c : run.tower.checks) {
    ordered_json x;
    x["id"] = c.id;
    x["status"] = to_string(c.status);
    x["residual_rendered"] = c.residual.str();
    tchecks.push_back(x);
  }
  tower["checks"] = tchecks;
  j["central_tower"] = tower;
  j["errata"] = errata_json(run.params);
  return j;
}

ordered_json oracle_report_json(const OracleReport& r) {
  ordered_json x;
  x["id"] = r.id;
  x["k"] = twice_text(r.twice_k);
  x["l"] = twice_text(r.twice_l);
  x["window"] = {{"emax", r.window.emax}, {"zmax", r.window.zmax}, {"states", r.states}};
  x["ordering"] = to_string(r.ordering);
  x["status"] = to_string(r.status);
  x["worst_residual"] = r.worst_residual;
  return x;
}

ordered_json oracle_json(const OracleRun& run) {
  ordered_json j = header(run.params);
  j["beta_model"] = to_string(run.model);
  j["ordering"] = to_string(run.ordering);
  ordered_json cal = ordered_json::array();
  for (const auto& [o, ok] : run.calibration) cal.push_back({{"ordering", to_string(o)}, {"agrees", ok}});
  j["calibration"] = cal;
  j["symbolic_level"] = run.symbolic_level.str();
  j["fock_level"] = run.fock_level.str();
  auto summarize = [](const std::vector<OracleReport>& rs) {
    int counts[3] = {0, 0, 0};
    for (const auto& r : rs) ++counts[static_cast<int>(r.status)];
    return ordered_json{{"exact", counts[0]}, {"mod-null-action", counts[1]}, {"fail", counts[2]}};
  };
  ordered_json el = ordered_json::array();
  for (const auto& r : run.elementary) el.push_back(oracle_report_json(r));
  ordered_json co = ordered_json::array();
  for (const auto& r : run.composite) co.push_back(oracle_report_json(r));
  j["elementary_summary"] = summarize(run.elementary);
  j["composite_summary"] = summarize(run.composite);
  j["disagreements"] = run.disagreements;
  j["elementary"] = el;
  j["composite"] = co;
  return j;
}

// Text view derived from the JSON document: scalars as `key: value`, arrays
// of objects one line each.
void text_lines(const ordered_json& j, const std::string& indent, std::ostringstream& os) {
  for (const auto& [key, v] : j.items()) {
    if (v.is_object()) {
      os << indent << key << ":\n";
      text_lines(v, indent + "  ", os);
    } else if (v.is_array() && !v.empty() && v.front().is_object()) {
      os << indent << key << ":\n";
      for (const auto& item : v) {
        os << indent << "  -";
        for (const auto& [k2, v2] : item.items()) {
          if (v2.is_string() && v2.get<std::string>().empty()) continue;
          os << ' ' << k2 << '=' << (v2.is_string() ? v2.get<std::string>() : v2.dump());
        }
        os << '\n';
      }
    } else if (v.is_array() && !v.empty() && v.front().is_array()) {
      os << indent << key << ":\n";
      for (const auto& row : v) {
        os << indent << " ";
        for (const auto& x : row) os << ' ' << (x.is_string() ? x.get<std::string>() : x.dump());
        os << '\n';
      }
    } else {
      os << indent << key << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << '\n';
    }
  }
}

std::string render(const ordered_json& j, Format f) {
  if (f == Format::Json) return j.dump(2) + "\n";
  std::ostringstream os;
  text_lines(j, "", os);
  return os.str();
}

}  // namespace

std::string render_rootdata(const RootDatum& datum, std::string_view emit, Format f) {
  return render(rootdata_json(datum, emit), f);
}

std::string render_verification(const VerificationRun& run, Format f) {
  return render(verification_json(run), f);
}

std::string render_oracle(const OracleRun& run, Format f) { return render(oracle_json(run), f); }

std::string render_audit(const RootDatum& datum, const VerificationRun& run, const OracleRun& oracle,
                         Format f) {
  ordered_json j = header(datum.params);
  j["rootdata"] = rootdata_json(datum, "errata");
  j["verification"] = verification_json(run);
  j["oracle"] = oracle_json(oracle);
  j["failed"] = run.failed() || oracle.failed();
  return render(j, f);
}

}  // namespace toroidal
