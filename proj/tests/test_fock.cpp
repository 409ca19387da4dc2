#include "support.hpp"

#include <doctest.h>

using namespace toroidal;

namespace {

FockSpace space(SuperType t, int m, int n, BetaModel model, Ordering o = Ordering::FockAdapted) {
  return FockSpace(GeneratorSet(TypeParams::make(t, m, n), model), o);
}

// Applies op to every window state and checks op(v) = c·v for a single c.
bool acts_as_scalar(const ModeOperator& op, const std::vector<FockState>& states, Scalar& c) {
  bool first = true;
  for (const auto& s : states) {
    FockVector v = FockVector::basis(s);
    FockVector img = op(v);
    if (first) {
      auto it = img.terms().find(s);
      c = it == img.terms().end() ? Scalar(0) : it->second;
      first = false;
    }
    if (!(img == c * v)) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("zero modes") {
  auto sp = space(SuperType::B, 1, 1, BetaModel::Combination);
  const auto& g = sp.gens();
  Mode e0{sp.symbol_index(g.ghost()), 0};
  CHECK(sp.is_klein(e0));
  for (const auto& s : sp.window(2, 1)) {
    FockVector v = FockVector::basis(s);
    CHECK(sp.apply(e0, sp.apply(e0, v)) == Scalar(-1) * v);
  }
  Mode d0{sp.symbol_index(g.del(1, true)), 0};
  CHECK(sp.is_creator(d0));
  CHECK_FALSE(sp.apply(d0, FockSpace::vacuum()).is_zero());
  CHECK(sp.apply(d0, sp.apply(d0, FockSpace::vacuum())).is_zero());
  Mode u0{sp.symbol_index(g.del(1)), 0};
  CHECK_FALSE(sp.is_creator(u0));
  CHECK(sp.apply(u0, FockSpace::vacuum()).is_zero());
}

TEST_CASE("elementary brackets follow the pairing") {
  auto sp = space(SuperType::A, 1, 1, BetaModel::Identified);
  const auto& g = sp.gens();
  auto br = supercommutator(sp.elementary(g.eps(1), 1), sp.elementary(g.eps(1, true), -1));
  Scalar c;
  CHECK(acts_as_scalar(br, sp.window(3, 2), c));
  CHECK(c == g.table()(g.eps(1), g.eps(1, true)));
  CHECK(c == Scalar(-1));

  // The elementary oracle over a small window, with a deterministic result.
  auto one = elementary_checks(sp, 2, {2, 1}, 1);
  auto many = elementary_checks(sp, 2, {2, 1}, 5);
  REQUIRE(one.size() == many.size());
  CHECK(one.size() == sp.symbols().size() * sp.symbols().size());
  for (std::size_t k = 0; k < one.size(); ++k) {
    CHECK(one[k].status == OracleStatus::Exact);
    CHECK(one[k].id == many[k].id);
    CHECK(one[k].states == many[k].states);
    CHECK(one[k].worst_residual == many[k].worst_residual);
  }
}

TEST_CASE("window bounds") {
  auto sp = space(SuperType::B, 0, 1, BetaModel::Combination);
  CHECK(sp.window(0, 0).size() == 1);
  auto small = sp.window(1, 1);
  auto big = sp.window(2, 2);
  for (const auto& s : big) {
    CHECK(sp.energy(s) <= 2);
    CHECK(sp.zero_degree(s) <= 2);
  }
  for (const auto& s : small) CHECK(std::find(big.begin(), big.end(), s) != big.end());
  CHECK(small.size() < big.size());
}

TEST_CASE("composite modes are locally finite") {
  auto sp = space(SuperType::A, 1, 1, BetaModel::Combination);
  const auto& g = sp.gens();
  LocalField f = normal_order(g.del(1), g.del(1, true));
  for (int k = -4; k <= 4; ++k) {
    FockVector v = sp.apply_composite(f, 2 * k, FockSpace::vacuum());
    CHECK(v.terms().size() < 100);
    for (const auto& [s, c] : v.terms()) CHECK(sp.energy(s) <= std::max(0, -k) + 1);
  }
}

TEST_CASE("orderings differ by a central shift") {
  for (auto [t, m, n] : {std::tuple{SuperType::A, 1, 1}, std::tuple{SuperType::B, 0, 1}}) {
    GeneratorSet g(TypeParams::make(t, m, n), BetaModel::Combination);
    FockSpace fa(g, Ordering::FockAdapted);
    FockSpace ms(g, Ordering::ModeSplit);
    auto states = fa.window(2, 1);
    support::Rng rng(3);
    for (int trial = 0; trial < 20; ++trial) {
      LocalField f = support::random_field(rng, g, Parity::Even);
      f = f - LocalField::constant(f.central());
      if (half_integer_modes(f)) continue;
      for (int k = -1; k <= 1; ++k) {
        auto diff = fa.composite(f, 2 * k) - ms.composite(f, 2 * k);
        Scalar c;
        CHECK(acts_as_scalar(diff, states, c));
        if (k != 0) CHECK(c.is_zero());
      }
    }
  }
}

TEST_CASE("level read from the Fock module") {
  for (auto [t, m, n] : {std::tuple{SuperType::A, 1, 1}, std::tuple{SuperType::B, 0, 1},
                         std::tuple{SuperType::C, 0, 1}, std::tuple{SuperType::D, 2, 1}}) {
    auto fa = realize_fields(TypeParams::make(t, m, n), BetaModel::Combination);
    FockSpace sp(fa.gens, Ordering::FockAdapted);
    CHECK(fock_level(sp, fa) == extract_level(fa));
  }
  // [A_i(1), A_j(-1)] = 𝒦(α_i|α_j)·identity with 𝒦 = -1.
  auto fa = realize_fields(TypeParams::make(SuperType::B, 1, 1), BetaModel::Identified);
  FockSpace sp(fa.gens, Ordering::FockAdapted);
  auto states = sp.window(2, 1);
  for (int i = 0; i < fa.datum.size(); ++i)
    for (int j = 0; j < fa.datum.size(); ++j) {
      auto br = supercommutator(sp.composite(fa.alpha[i], 2), sp.composite(fa.alpha[j], -2));
      Scalar c;
      CHECK(acts_as_scalar(br, states, c));
      CHECK(c == Scalar(-1) * inner(fa.datum, i, j));
    }
}

TEST_CASE("documented 4' relation on the vacuum") {
  auto fa = realize_fields(TypeParams::make(SuperType::B, 0, 1), BetaModel::Combination);
  REQUIRE(inner(fa.datum, 0, 0) == Scalar(4));
  for (Ordering o : {Ordering::FockAdapted, Ordering::ModeSplit}) {
    FockSpace sp(fa.gens, o);
    RelationTemplate t{"4'(0,0)", RelationKind::XX, 0, 0, 1, 0};
    FockVector vac = FockSpace::vacuum();
    FockVector lhs = relation_lhs_op(sp, fa, t, 2, -2)(vac);
    FockVector lhs_direct = supercommutator(sp.composite(fa.xp[0], 2), sp.composite(fa.xm[0], -2))(vac);
    CHECK(lhs == lhs_direct);
    FockVector rhs = Scalar::rational(-1, 2) * (sp.apply_composite(fa.alpha[0], 0, vac) + Scalar(-1) * vac);
    CHECK(relation_rhs_op(sp, fa, t, 2, -2, Scalar(-1))(vac) == rhs);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("identity checks report failures") {
  auto sp = space(SuperType::A, 1, 1, BetaModel::Identified);
  const auto& g = sp.gens();
  auto states = sp.window(1, 1);
  auto op = sp.elementary(g.eps(1, true), -1);
  auto ok = check_identity(sp, "same", op, op, states);
  CHECK(ok.status == OracleStatus::Exact);
  CHECK(ok.states == states.size());
  auto bad = check_identity(sp, "off", op, ModeOperator::scalar(Scalar(0)), states);
  CHECK(bad.status == OracleStatus::Fail);
  CHECK_FALSE(bad.worst_residual.empty());
  CHECK(agrees(CheckStatus::Exact, OracleStatus::Exact));
  CHECK_FALSE(agrees(CheckStatus::Exact, OracleStatus::ModNullAction));
  CHECK(agrees(CheckStatus::ModNull, OracleStatus::ModNullAction));
  CHECK_FALSE(agrees(CheckStatus::ModNull, OracleStatus::Fail));
}

TEST_CASE("folded depth-three Serre template on the window") {
  auto fa = realize_fields(TypeParams::make(SuperType::B, 0, 2), BetaModel::Identified);
  FockSpace sp(fa.gens, Ordering::FockAdapted);
  std::vector<RelationTemplate> deep;
  for (const auto& t : relation_suite(fa.datum))
    if (t.kind == RelationKind::Folded && t.depth == 3) deep.push_back(t);
  REQUIRE(deep.size() == 4);
  auto reports = composite_checks(sp, fa, deep, extract_level(fa), 1, {2, 1}, 4);
  CHECK(reports.size() == deep.size() * 9);
  for (const auto& r : reports) {
    CAPTURE(r.id);
    CHECK(r.status == OracleStatus::Exact);
  }
}

TEST_CASE("parse_ordering") {
  CHECK(parse_ordering("fock-adapted") == Ordering::FockAdapted);
  CHECK(parse_ordering("mode-split") == Ordering::ModeSplit);
  CHECK(to_string(Ordering::ModeSplit) == "mode-split");
  CHECK_THROWS_AS(parse_ordering("split"), ParseError);
}
