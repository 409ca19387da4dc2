#pragma once

// Shared generators and independent oracles for the unit tests and the
// acceptance runner.

#include "toroidal/fock.hpp"

#include <random>
#include <string>
#include <tuple>
#include <vector>

namespace support {

using namespace toroidal;

inline std::vector<TypeParams> suite_instances() {
  return {TypeParams::make(SuperType::A, 1, 2), TypeParams::make(SuperType::A, 2, 1),
          TypeParams::make(SuperType::B, 0, 1), TypeParams::make(SuperType::B, 0, 2),
          TypeParams::make(SuperType::B, 1, 1), TypeParams::make(SuperType::B, 2, 1),
          TypeParams::make(SuperType::C, 0, 1), TypeParams::make(SuperType::C, 0, 2),
          TypeParams::make(SuperType::C, 0, 3), TypeParams::make(SuperType::D, 2, 1),
          TypeParams::make(SuperType::D, 2, 2)};
}

struct Rng {
  std::mt19937_64 eng;
  explicit Rng(std::uint64_t seed) : eng(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(eng); }
  bool coin() { return uniform(0, 1) == 1; }
  template <class T>
  const T& pick(const std::vector<T>& v) {
    return v[static_cast<std::size_t>(uniform(0, static_cast<int>(v.size()) - 1))];
  }
  Scalar scalar() {
    static const std::vector<Scalar> pool = {Scalar(1),  Scalar(-1), Scalar(2), Scalar::rational(1, 2),
                                             Scalar::rational(-3, 4), Scalar::i(), -Scalar::i(),
                                             Scalar(mpq_class(1, 3), mpq_class(2))};
    return pick(pool);
  }
  TypeParams instance() {
    static const std::vector<TypeParams> pool = {
        TypeParams::make(SuperType::A, 1, 1), TypeParams::make(SuperType::A, 2, 1),
        TypeParams::make(SuperType::B, 0, 2), TypeParams::make(SuperType::B, 1, 1),
        TypeParams::make(SuperType::B, 2, 1), TypeParams::make(SuperType::C, 0, 2),
        TypeParams::make(SuperType::D, 2, 1)};
    return pick(pool);
  }
};

inline std::vector<FieldSymbol> symbols_of(const GeneratorSet& g, Parity p, bool allow_ghost) {
  std::vector<FieldSymbol> out;
  for (const auto& s : g.symbols())
    if (s.parity == p && (allow_ghost || s.kind != SymbolKind::Ghost)) out.push_back(s);
  return out;
}

/// Random homogeneous quadratic field with 1..3 monomials and a random central part.
inline LocalField random_field(Rng& rng, const GeneratorSet& g, Parity parity) {
  const auto& sy = g.symbols();
  LocalField f(parity);
  const int terms = rng.uniform(1, 3);
  for (int t = 0; t < terms; ++t) {
    for (int attempt = 0; attempt < 50; ++attempt) {
      const auto& u = rng.pick(sy);
      const auto& v = rng.pick(sy);
      if ((u.parity + v.parity) != parity) continue;
      f += LocalField::monomial(rng.scalar(), u, v);
      break;
    }
  }
  if (parity == Parity::Even && rng.coin()) f.add_central(rng.scalar());
  return f;
}

/// The six printed case formulas for [:r1 r2:(z), :r3 r4:(w)], transcribed
/// term by term; returns (coefficient of δ(z-w), coefficient of ∂_wδ(z-w)).
struct PrintedCase {
  int number = 0;
  LocalField single;
  Scalar dbl;
};

inline PrintedCase printed_case(int number, const FieldSymbol& r1, const FieldSymbol& r2,
                                const FieldSymbol& r3, const FieldSymbol& r4, const PairingTable& t) {
  auto p = [&](const FieldSymbol& a, const FieldSymbol& b) { return t(a, b); };
  auto mono = [](const Scalar& c, const FieldSymbol& a, const FieldSymbol& b) {
    return LocalField::monomial(c, a, b);
  };
  PrintedCase out;
  out.number = number;
  switch (number) {
    case 1:
      out.single = mono(p(r1, r4), r2, r3) + mono(p(r1, r3), r2, r4) + mono(p(r2, r3), r1, r4) +
                   mono(p(r2, r4), r1, r3);
      out.dbl = p(r1, r4) * p(r2, r3) + p(r1, r3) * p(r2, r4);
      break;
    case 2:
      out.single = LocalField(r1.parity + r2.parity + r3.parity + r4.parity);
      break;
    case 3:
      out.single = mono(p(r1, r4), r2, r3) - mono(p(r1, r3), r2, r4) + mono(p(r2, r3), r1, r4) -
                   mono(p(r2, r4), r1, r3);
      out.dbl = p(r1, r4) * p(r2, r3) - p(r1, r3) * p(r2, r4);
      break;
    case 4:
      out.single = mono(p(r1, r3), r2, r4) + mono(p(r2, r4), r1, r3);
      out.dbl = p(r1, r3) * p(r2, r4);
      break;
    case 5:
      out.single = mono(p(r1, r3), r2, r4) + mono(p(r2, r3), r1, r4);
      break;
    case 6:
      out.single = Scalar(-1) * mono(p(r1, r4), r2, r3) + mono(p(r1, r3), r2, r4) -
                   mono(p(r2, r3), r1, r4) + mono(p(r2, r4), r1, r3);
      out.dbl = p(r1, r3) * p(r2, r4) - p(r1, r4) * p(r2, r3);
      break;
  }
  return out;
}

/// Draws r1..r4 with the parity pattern of the given case. Partners are biased
/// toward duals so that contractions are usually nonzero.
struct CaseDraw {
  GeneratorSet gens;
  FieldSymbol r[4];
};

inline FieldSymbol dual_or_random(Rng& rng, const GeneratorSet& g, const FieldSymbol& s,
                                  const std::vector<FieldSymbol>& pool) {
  if (rng.uniform(0, 2) > 0) {
    std::vector<FieldSymbol> paired;
    for (const auto& c : pool)
      if (!g.table()(s, c).is_zero() || !g.table()(c, s).is_zero()) paired.push_back(c);
    if (!paired.empty()) return rng.pick(paired);
  }
  return rng.pick(pool);
}

inline CaseDraw draw_case(Rng& rng, int number) {
  while (true) {
    TypeParams p = rng.instance();
    GeneratorSet g(p, rng.coin() ? BetaModel::Combination : BetaModel::Identified);
    auto even = symbols_of(g, Parity::Even, false);
    auto odd = symbols_of(g, Parity::Odd, false);
    auto odd_e = symbols_of(g, Parity::Odd, true);
    if (even.empty() || odd.empty()) continue;
    CaseDraw d{g, {}};
    FieldSymbol* r = d.r;
    switch (number) {
      case 1:
        r[0] = rng.pick(even); r[1] = rng.pick(even);
        r[2] = dual_or_random(rng, g, r[0], even); r[3] = dual_or_random(rng, g, r[1], even);
        break;
      case 2:
        r[0] = rng.pick(even); r[1] = rng.pick(even); r[2] = rng.pick(odd); r[3] = rng.pick(odd_e);
        break;
      case 3:
        r[0] = rng.pick(odd); r[1] = rng.pick(odd_e);
        r[2] = dual_or_random(rng, g, r[0], odd); r[3] = dual_or_random(rng, g, r[1], odd_e);
        break;
      case 4:
        r[0] = rng.pick(even); r[1] = rng.pick(odd_e);
        r[2] = dual_or_random(rng, g, r[0], even); r[3] = dual_or_random(rng, g, r[1], odd_e);
        break;
      case 5:
        r[0] = rng.pick(even); r[1] = rng.pick(even);
        r[2] = dual_or_random(rng, g, r[rng.uniform(0, 1)], even); r[3] = rng.pick(odd_e);
        break;
      case 6:
        r[0] = rng.pick(odd); r[1] = rng.pick(odd);
        r[2] = rng.pick(even); r[3] = dual_or_random(rng, g, r[rng.uniform(0, 1)], odd_e);
        break;
    }
    return d;
  }
}

/// True when bracket_quadratic agrees with the printed case on this draw.
inline bool wick_matches_printed(const CaseDraw& d, int number) {
  const auto& t = d.gens.table();
  LocalField a = LocalField::monomial(Scalar(1), d.r[0], d.r[1]);
  LocalField b = LocalField::monomial(Scalar(1), d.r[2], d.r[3]);
  // monomial() keeps the value of :r1 r2: while storing it canonically.
  PrintedCase want = printed_case(number, d.r[0], d.r[1], d.r[2], d.r[3], t);
  DistributionExpr got = bracket_quadratic(a, b, t);
  DistributionExpr expected({"z", "w"});
  expected.add({0}, want.single);
  expected.add({1}, LocalField::constant(want.dbl));
  return got == expected;
}

}  // namespace support
