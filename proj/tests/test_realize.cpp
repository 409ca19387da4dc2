#include "support.hpp"

#include <doctest.h>

using namespace toroidal;

namespace {

std::size_t suite_size_oracle(const RootDatum& R) {
  const std::size_t n = static_cast<std::size_t>(R.size());
  std::size_t odd_nonisotropic = 0;
  for (int i = 0; i < R.size(); ++i)
    if (R.parities[i] == Parity::Odd && !inner(R, i, i).is_zero()) ++odd_nonisotropic;
  // 2', 3'±, 4' over all ordered pairs; 5'± self brackets and one Serre per i != j.
  return 4 * n * n + 2 * (n - odd_nonisotropic) + 2 * n * (n - 1);
}

bool involves_zero_and_one(const std::string& id, bool with_two) {
  for (const char* pair : {"(0,1)", "(1,0)", "(0,2)", "(2,0)"}) {
    if (!with_two && std::string(pair).find('2') != std::string::npos) continue;
    if (id.ends_with(pair)) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("parities of the realized generators") {
  for (const auto& p : support::suite_instances())
    for (BetaModel model : {BetaModel::Combination, BetaModel::Identified}) {
      CAPTURE(p.label());
      auto fa = realize_fields(p, model);
      for (int i = 0; i < fa.datum.size(); ++i) {
        CHECK(fa.xp[i].parity() == fa.datum.parities[i]);
        CHECK(fa.xm[i].parity() == fa.datum.parities[i]);
        CHECK(fa.alpha[i].parity() == Parity::Even);
        CHECK(fa.xp[i].has_fields());
        CHECK(fa.xm[i].has_fields());
      }
    }
}

TEST_CASE("relation suite over the acceptance instances") {
  for (const auto& p : support::suite_instances())
    for (BetaModel model : {BetaModel::Combination, BetaModel::Identified}) {
      CAPTURE(p.label());
      CAPTURE(to_string(model));
      auto fa = realize_fields(p, model);
      Scalar level = extract_level(fa);
      CHECK(level == Scalar(p.type == SuperType::C ? 1 : -1));
      auto suite = relation_suite(fa.datum);
      CHECK(suite.size() == suite_size_oracle(fa.datum));
      auto checks = verify(fa, suite, level, 4);
      REQUIRE(checks.size() == suite.size());
      for (std::size_t k = 0; k < checks.size(); ++k) {
        CAPTURE(checks[k].id);
        CHECK(checks[k].id == suite[k].id);
        CHECK(checks[k].status != CheckStatus::Fail);
        CHECK(checks[k].residual == checks[k].lhs - checks[k].rhs);
        CHECK(checks[k].status == classify(checks[k].residual));
        if (model == BetaModel::Identified) {
          CHECK(checks[k].status == CheckStatus::Exact);
        } else if (checks[k].status == CheckStatus::ModNull) {
          // Only brackets that pair α_0 with its neighbours see c̄.
          CHECK(involves_zero_and_one(checks[k].id, p.type == SuperType::C));
        }
      }
      auto tower = central_tower(fa, 2);
      CHECK(tower.status != CheckStatus::Fail);
      if (model == BetaModel::Identified) CHECK(tower.cbar_img.is_zero());
    }
}

TEST_CASE("documented mod-null residual") {
  auto fa = realize_fields(TypeParams::make(SuperType::A, 2, 1), BetaModel::Combination);
  RelationTemplate t{"3'+(0,1)", RelationKind::AlphaX, 0, 1, 1, 0};
  auto res = relation_lhs(fa, t) - relation_rhs(fa, t, Scalar(-1));
  DistributionExpr want({"z", "w"});
  want.add({0}, LocalField::monomial(Scalar::i(), fa.gens.cbar(), fa.gens.eps(2, true)));
  CHECK(res == want);
  CHECK(classify(res) == CheckStatus::ModNull);
  CHECK(in_null_ideal(res));
  CHECK_FALSE(in_null_ideal(Scalar(-1) * want + want + bracket_elementary(fa.gens.eps(1), fa.gens.eps(1, true),
                                                                          fa.gens.table())));
}

TEST_CASE("null ideal classification") {
  GeneratorSet g(TypeParams::make(SuperType::B, 1, 1), BetaModel::Combination);
  DistributionExpr zero({"z", "w"});
  CHECK(classify(zero) == CheckStatus::Exact);
  DistributionExpr central({"z", "w"});
  central.add({1}, LocalField::constant(Scalar(2)));
  CHECK(classify(central) == CheckStatus::Fail);
  DistributionExpr nul({"z", "w"});
  nul.add({0}, LocalField::monomial(Scalar(1), g.cbar(true), g.del(1)));
  CHECK(classify(nul) == CheckStatus::ModNull);
  nul.add({0}, LocalField::monomial(Scalar(1), g.eps(1), g.del(1)));
  CHECK(classify(nul) == CheckStatus::Fail);
}

TEST_CASE("displayed double bracket in type A") {
  for (auto [m, n] : {std::pair{2, 1}, std::pair{1, 2}}) {
    auto fa = realize_fields(TypeParams::make(SuperType::A, m, n), BetaModel::Combination);
    const auto& t = fa.gens.table();
    auto inner_br = bracket_quadratic(fa.xp[0], fa.xp[1], t, "z2", "w");
    // √-1·√-1 = -1 times ⟨ε_1*,ε_1⟩ = 1.
    DistributionExpr want({"z2", "w"});
    want.add({0}, Scalar(-1) * normal_order(fa.gens.del(n + 1), fa.gens.eps(2, true)));
    CHECK(inner_br == want);
    CHECK(bracket_nested(fa.xp[0], "z1", inner_br, t).is_zero());
  }
}

TEST_CASE("displayed folded bracket in type B") {
  for (auto [m, n] : {std::pair{2, 1}, std::pair{2, 2}}) {
    auto fa = realize_fields(TypeParams::make(SuperType::B, m, n), BetaModel::Combination);
    const auto& g = fa.gens;
    const auto& t = g.table();
    const int r = fa.datum.r;
    CHECK(fa.xp[r] == normal_order(g.del(m), g.ghost()));
    CHECK(fa.xp[r - 1] == normal_order(g.del(m - 1), g.del(m, true)));
    auto d1 = bracket_quadratic(fa.xp[r], fa.xp[r - 1], t, "z3", "w");
    auto d2 = bracket_nested(fa.xp[r], "z2", d1, t);
    // ⟨e,e⟩ = -2 survives as the coefficient of the depth-two term.
    DistributionExpr want({"z2", "z3", "w"});
    want.add({0, 0}, Scalar(2) * normal_order(g.del(m), g.del(m - 1)));
    CHECK(d2 == want);
    CHECK(bracket_nested(fa.xp[r], "z1", d2, t).is_zero());
  }
}

TEST_CASE("level extraction") {
  CHECK_THROWS_AS(extract_level(realize_fields(TypeParams::make(SuperType::B, 1, 1), BetaModel::Combination, Scalar(3))),
                  LevelInconsistent);
  try {
    extract_level(realize_fields(TypeParams::make(SuperType::B, 1, 1), BetaModel::Combination, Scalar(1)));
    FAIL("expected LevelInconsistent");
  } catch (const LevelInconsistent& e) {
    CHECK_FALSE(e.first.empty());
    CHECK_FALSE(e.second.empty());
    CHECK(e.first != e.second);
  }
  // With the wrong level the 2' diagonal acquires a central residual.
  auto fa = realize_fields(TypeParams::make(SuperType::D, 2, 1), BetaModel::Identified);
  RelationTemplate t{"2'(3,3)", RelationKind::AlphaAlpha, 3, 3, 1, 0};
  REQUIRE_FALSE(inner(fa.datum, 3, 3).is_zero());
  auto checks = verify(fa, {t}, Scalar(1));
  CHECK(checks.front().status == CheckStatus::Fail);
}

TEST_CASE("thread count does not change results") {
  auto fa = realize_fields(TypeParams::make(SuperType::C, 0, 2), BetaModel::Combination);
  auto suite = relation_suite(fa.datum);
  auto one = verify(fa, suite, extract_level(fa), 1);
  auto many = verify(fa, suite, extract_level(fa), 7);
  REQUIRE(one.size() == many.size());
  for (std::size_t k = 0; k < one.size(); ++k) {
    CHECK(one[k].id == many[k].id);
    CHECK(one[k].residual == many[k].residual);
  }
}
