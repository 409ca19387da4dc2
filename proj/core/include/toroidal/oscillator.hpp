#pragma once

#include "toroidal/root_datum.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace toroidal {

// Declaration order is the canonical order used for normal-ordered monomials.
enum class SymbolKind { Eps, Del, Beta, Cbar, Ghost };

struct FieldSymbol {
  SymbolKind kind = SymbolKind::Eps;
  int index = 0;  // 0 for beta, cbar, e
  bool starred = false;
  Parity parity = Parity::Even;

  friend auto operator<=>(const FieldSymbol&, const FieldSymbol&) = default;
  std::string str() const;    // ε_1*, δ_2, β, c̄, e
  std::string ascii() const;  // eps1*, del2, beta, cbar, e
};

/// Sparse table of ⟨u,v⟩; absent entries are zero.
class PairingTable {
public:
  void set(const FieldSymbol& u, const FieldSymbol& v, const Scalar& value);
  Scalar operator()(const FieldSymbol& u, const FieldSymbol& v) const;
  const std::map<std::pair<FieldSymbol, FieldSymbol>, Scalar>& entries() const { return entries_; }

private:
  std::map<std::pair<FieldSymbol, FieldSymbol>, Scalar> entries_;
};

enum class BetaModel { Combination, Identified };

std::string to_string(BetaModel b);
BetaModel parse_beta_model(std::string_view s);

/// A formal linear combination of base symbols; β and c̄ resolve to these.
using SymbolSum = std::vector<std::pair<Scalar, FieldSymbol>>;

/// Oscillator generators of one realization together with their pairing.
///
/// β is never a base oscillator: it expands to ε_1 - c̄ (A), ε_1 - c̄/2 (B, D)
/// or δ_1 - c̄ (C) in the combination model and to ε_1 (δ_1 for C) in the
/// identified model, where c̄ is zero.
class GeneratorSet {
public:
  GeneratorSet(const TypeParams& params, BetaModel model, Scalar ghost_norm = Scalar(-2));

  const TypeParams& params() const { return params_; }
  BetaModel model() const { return model_; }
  const Scalar& ghost_norm() const { return ghost_norm_; }
  bool has_ghost() const { return params_.type == SuperType::B; }
  int eps_count() const { return eps_count_; }
  int del_count() const { return del_count_; }

  Parity parity(SymbolKind kind) const;

  FieldSymbol eps(int i, bool star = false) const;
  FieldSymbol del(int j, bool star = false) const;
  FieldSymbol cbar(bool star = false) const;  // throws std::logic_error in the identified model
  FieldSymbol ghost() const;

  SymbolSum beta(bool star = false) const;
  SymbolSum cbar_sum(bool star = false) const;  // empty in the identified model
  SymbolSum expand(SymbolKind kind, int index, bool star) const;

  /// Base oscillators: unstarred ones first, then starred, then e.
  const std::vector<FieldSymbol>& symbols() const { return symbols_; }
  bool contains(const FieldSymbol& s) const;

  /// ⟨u,v⟩ on base symbols; throws std::out_of_range for foreign symbols.
  Scalar pairing(const FieldSymbol& u, const FieldSymbol& v) const;
  /// Bilinear extension over symbol sums.
  Scalar pairing(const SymbolSum& u, const SymbolSum& v) const;
  const PairingTable& table() const { return table_; }

  /// Parses eps<i>, del<j>, beta, cbar, e with optional trailing `*`. Indices
  /// may be written `_3`, `_m`, `_n+1`, `m-1`; throws ParseError.
  SymbolSum parse_symbol(std::string_view text) const;

private:
  Scalar form(const FieldSymbol& a, const FieldSymbol& b) const;

  TypeParams params_;
  BetaModel model_;
  Scalar ghost_norm_;
  int eps_count_ = 0;
  int del_count_ = 0;
  std::vector<FieldSymbol> symbols_;
  PairingTable table_;
};

}  // namespace toroidal
