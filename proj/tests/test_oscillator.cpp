#include "support.hpp"

#include <doctest.h>

#include <set>

using namespace toroidal;

TEST_CASE("documented pairings") {
  GeneratorSet a(TypeParams::make(SuperType::A, 1, 1), BetaModel::Combination);
  const auto& t = a.table();
  CHECK(t(a.eps(1), a.eps(1, true)) == Scalar(-1));
  CHECK(t(a.eps(1, true), a.eps(1)) == Scalar(1));
  CHECK(t(a.del(1), a.del(1, true)) == Scalar(-1));
  CHECK(t(a.del(1, true), a.del(1)) == Scalar(-1));
  CHECK(t(a.eps(1), a.eps(2, true)).is_zero());
  CHECK(t(a.eps(1), a.eps(1)).is_zero());

  GeneratorSet b(TypeParams::make(SuperType::B, 1, 1), BetaModel::Combination);
  CHECK(b.table()(b.ghost(), b.ghost()) == Scalar(-2));
  GeneratorSet b3(TypeParams::make(SuperType::B, 1, 1), BetaModel::Combination, Scalar(3));
  CHECK(b3.table()(b3.ghost(), b3.ghost()) == Scalar(3));

  for (BetaModel model : {BetaModel::Combination, BetaModel::Identified}) {
    GeneratorSet g(TypeParams::make(SuperType::B, 0, 2), model);
    CHECK(g.pairing(g.beta(true), g.expand(SymbolKind::Eps, 1, false)) == Scalar(1));
    CHECK(g.pairing(g.beta(true), g.beta(false)) == Scalar(1));
    // c̄ is null: it pairs to zero with everything, β included.
    for (const auto& s : g.symbols()) {
      SymbolSum one{{Scalar(1), s}};
      CHECK(g.pairing(g.cbar_sum(true), one).is_zero());
      CHECK(g.pairing(one, g.cbar_sum(false)).is_zero());
    }
  }
}

TEST_CASE("generator lists") {
  GeneratorSet a(TypeParams::make(SuperType::A, 2, 1), BetaModel::Combination);
  CHECK(a.eps_count() == 3);
  CHECK(a.del_count() == 2);
  // ε_i, δ_j and c̄, each with a starred partner.
  CHECK(a.symbols().size() == 2u * (3 + 2 + 1));
  CHECK_FALSE(a.has_ghost());

  GeneratorSet b(TypeParams::make(SuperType::B, 2, 1), BetaModel::Identified);
  CHECK(b.has_ghost());
  CHECK(b.symbols().size() == 2u * (b.eps_count() + b.del_count()) + 1);
  CHECK_THROWS_AS(b.cbar(), std::logic_error);
  CHECK(b.cbar_sum().empty());

  for (const auto& p : support::suite_instances())
    for (BetaModel model : {BetaModel::Combination, BetaModel::Identified}) {
      GeneratorSet g(p, model);
      std::set<FieldSymbol> seen(g.symbols().begin(), g.symbols().end());
      CHECK(seen.size() == g.symbols().size());
      for (const auto& s : g.symbols()) {
        CHECK(g.contains(s));
        CHECK(s.parity == g.parity(s.kind));
      }
    }
}

TEST_CASE("pairing is super-antisymmetric and parity preserving") {
  for (const auto& p : support::suite_instances())
    for (BetaModel model : {BetaModel::Combination, BetaModel::Identified}) {
      CAPTURE(p.label());
      GeneratorSet g(p, model);
      const auto& t = g.table();
      for (const auto& u : g.symbols())
        for (const auto& v : g.symbols()) {
          Scalar uv = t(u, v);
          CHECK(uv == -Scalar(koszul(bit(u.parity), bit(v.parity))) * t(v, u));
          if (u.parity != v.parity) CHECK(uv.is_zero());
        }
    }
}

TEST_CASE("parse_symbol") {
  GeneratorSet g(TypeParams::make(SuperType::B, 1, 2), BetaModel::Combination);
  auto e1 = g.parse_symbol("eps1*");
  REQUIRE(e1.size() == 1);
  CHECK(e1[0].second == g.eps(1, true));
  auto beta = g.parse_symbol("beta");
  REQUIRE(beta.size() == 2);
  CHECK(beta[1].first == Scalar::rational(-1, 2));
  CHECK(g.parse_symbol("cbar*").front().second == g.cbar(true));
  CHECK(g.parse_symbol("e").front().second == g.ghost());
  CHECK_THROWS_AS(g.parse_symbol("eps9"), ParseError);
  CHECK_THROWS_AS(g.parse_symbol("e*"), ParseError);
  CHECK_THROWS_AS(g.parse_symbol("gamma"), ParseError);
  CHECK(parse_beta_model("identified") == BetaModel::Identified);
  CHECK_THROWS_AS(parse_beta_model("other"), ParseError);
}
