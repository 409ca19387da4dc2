#pragma once

#include "toroidal/root_datum.hpp"
#include "toroidal/wick.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace toroidal {

/// x_i^±(z), α_i(z) for 0 <= i <= r as quadratic free fields.
struct FieldAssignment {
  RootDatum datum;
  GeneratorSet gens;
  std::vector<LocalField> xp;
  std::vector<LocalField> xm;
  std::vector<LocalField> alpha;

  const LocalField& x(int i, int sign) const { return sign > 0 ? xp.at(i) : xm.at(i); }
};

FieldAssignment realize_fields(const TypeParams& params, BetaModel model,
                               const Scalar& ghost_norm = Scalar(-2));

enum class RelationKind { AlphaAlpha, AlphaX, XX, SelfBracket, Vanishing, Double, Folded };

/// One instance of the generating-series relations 2')-5').
struct RelationTemplate {
  std::string id;
  RelationKind kind = RelationKind::AlphaAlpha;
  int i = 0;
  int j = 0;
  int sign = 1;   // ± for 3') and 5')
  int depth = 1;  // number of x_i factors in a Serre bracket
};

std::vector<RelationTemplate> relation_suite(const RootDatum& datum);

enum class CheckStatus { Exact, ModNull, Fail };
std::string to_string(CheckStatus s);

struct RelationCheck {
  std::string id;
  DistributionExpr lhs;
  DistributionExpr rhs;
  DistributionExpr residual;
  CheckStatus status = CheckStatus::Exact;
};

/// Field terms all contain c̄ or c̄* and no term carries a central part.
bool in_null_ideal(const DistributionExpr& d);
CheckStatus classify(const DistributionExpr& residual);

DistributionExpr relation_lhs(const FieldAssignment& fa, const RelationTemplate& t);
/// Right-hand side with 𝒦 replaced by `level`.
DistributionExpr relation_rhs(const FieldAssignment& fa, const RelationTemplate& t,
                              const Scalar& level);

class LevelInconsistent : public std::runtime_error {
public:
  LevelInconsistent(std::string first, std::string second, const Scalar& a, const Scalar& b);
  std::string first;
  std::string second;
};

/// The unique 𝒦 matching every ∂_wδ coefficient of relations 2') and 4').
Scalar extract_level(const FieldAssignment& fa);

/// Runs every template; `threads` <= 1 runs inline. Output order equals suite order.
std::vector<RelationCheck> verify(const FieldAssignment& fa,
                                  const std::vector<RelationTemplate>& suite, const Scalar& level,
                                  unsigned threads = 1);

struct CentralTower {
  LocalField cbar_img;
  std::vector<RelationCheck> checks;  // [c̄_img, x_j^±], [c̄_img, α_j]
  CheckStatus status = CheckStatus::Exact;
};

CentralTower central_tower(const FieldAssignment& fa, unsigned threads = 1);

}  // namespace toroidal
