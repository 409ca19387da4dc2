#pragma once

#include "toroidal/errata.hpp"
#include "toroidal/fock.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace toroidal {

inline constexpr int kReportSchemaVersion = 1;

enum class Format { Json, Text };
Format parse_format(std::string_view s);

/// Symbolic verification of one instance: level, full relation suite, central tower.
struct VerificationRun {
  TypeParams params;
  BetaModel model = BetaModel::Combination;
  Scalar ghost_norm = Scalar(-2);
  Scalar level;
  std::vector<RelationCheck> checks;
  CentralTower tower;

  bool failed() const;
};

/// `serre_depth_cap` > 0 drops Serre templates nesting more than that many x_i.
VerificationRun run_verification(const TypeParams& params, BetaModel model,
                                 const Scalar& ghost_norm = Scalar(-2), unsigned threads = 1,
                                 int serre_depth_cap = 0);

struct OracleConfig {
  WindowSpec elementary_window{4, 2};
  int elementary_kmax = 3;
  WindowSpec composite_window{2, 1};
  int composite_kmax = 2;
  bool serre = false;  // also probe the Serre templates
  std::optional<Ordering> ordering;  // unset: calibrate
};

/// Operator-level check of one instance against the symbolic verifier.
struct OracleRun {
  TypeParams params;
  BetaModel model = BetaModel::Combination;
  OracleConfig config;
  Ordering ordering = Ordering::FockAdapted;
  // Calibration: for each ordering tried, whether every composite report agreed.
  std::vector<std::pair<Ordering, bool>> calibration;
  Scalar symbolic_level;
  Scalar fock_level;
  std::vector<OracleReport> elementary;
  std::vector<OracleReport> composite;
  std::vector<std::string> disagreements;  // composite ids whose status is weaker than the symbolic one

  bool failed() const;
};

OracleRun run_oracle(const TypeParams& params, BetaModel model, const OracleConfig& config,
                     const Scalar& ghost_norm = Scalar(-2), unsigned threads = 1);

/// `emit` is one of all, roots, cartan, positive, errata.
std::string render_rootdata(const RootDatum& datum, std::string_view emit, Format f);
std::string render_verification(const VerificationRun& run, Format f);
std::string render_oracle(const OracleRun& run, Format f);
std::string render_audit(const RootDatum& datum, const VerificationRun& run, const OracleRun& oracle,
                         Format f);

}  // namespace toroidal
