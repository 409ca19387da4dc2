#pragma once

#include "toroidal/report.hpp"

#include <iosfwd>
#include <string>

namespace toroidal {

/// Parameters shared by every subcommand. Defaults reproduce the acceptance runs.
struct RunConfig {
  SuperType type = SuperType::A;
  int m = 1;
  int n = 1;
  BetaModel beta_model = BetaModel::Combination;
  std::optional<Ordering> ordering;
  Scalar ghost_norm = Scalar(-2);
  OracleConfig oracle;
  int serre_depth_cap = 0;
  std::string out;
  Format format = Format::Json;
  unsigned threads = 1;

  /// Throws ParseError naming the offending value.
  TypeParams validate() const;
};

/// Sum of `[coef] :u v:` terms (or a bare constant) over the symbols of `gens`.
LocalField parse_local_field(const GeneratorSet& gens, std::string_view text);

/// Exit code: 0 when nothing fails, 2 when a check fails, 1 on usage errors.
int dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace toroidal
