#pragma once

#include "toroidal/oscillator.hpp"

#include <map>
#include <optional>
#include <string>

namespace toroidal {

/// :uv: with left <= right in FieldSymbol order.
struct QuadraticMonomial {
  FieldSymbol left;
  FieldSymbol right;

  friend auto operator<=>(const QuadraticMonomial&, const QuadraticMonomial&) = default;
  Parity parity() const { return left.parity + right.parity; }
  bool contains(SymbolKind k) const { return left.kind == k || right.kind == k; }
  std::string str() const;
};

/// Canonical form of :uv:. Returns nullopt for an odd square; otherwise the
/// monomial and the Koszul sign (+1 or -1) picked up by reordering.
std::optional<std::pair<QuadraticMonomial, int>> canonical_monomial(const FieldSymbol& u,
                                                                    const FieldSymbol& v);

/// central·1 + Σ c·:uv:, homogeneous in parity.
class LocalField {
public:
  LocalField() = default;
  explicit LocalField(Parity parity) : parity_(parity) {}

  static LocalField constant(const Scalar& c);
  /// c·:uv:, canonicalized (zero for odd squares).
  static LocalField monomial(const Scalar& c, const FieldSymbol& u, const FieldSymbol& v);
  /// Bilinear extension of monomial() over symbol sums.
  static LocalField product(const Scalar& c, const SymbolSum& u, const SymbolSum& v);

  const Scalar& central() const { return central_; }
  const std::map<QuadraticMonomial, Scalar>& terms() const { return terms_; }
  Scalar coefficient(const QuadraticMonomial& q) const;
  Parity parity() const { return parity_; }

  bool is_zero() const { return central_.is_zero() && terms_.empty(); }
  bool has_fields() const { return !terms_.empty(); }

  void add_central(const Scalar& c);
  void add_term(const Scalar& c, const QuadraticMonomial& q);

  LocalField& operator+=(const LocalField& o);
  LocalField& operator-=(const LocalField& o);
  friend LocalField operator+(LocalField a, const LocalField& b) { return a += b; }
  friend LocalField operator-(LocalField a, const LocalField& b) { return a -= b; }
  friend LocalField operator*(const Scalar& c, const LocalField& f);
  friend LocalField operator-(const LocalField& f) { return Scalar(-1) * f; }
  friend bool operator==(const LocalField& a, const LocalField& b) {
    return a.central_ == b.central_ && a.terms_ == b.terms_;
  }

  /// Text such as `2:δ_1δ_1*: - 1/2` (`0` when zero).
  std::string str() const;

private:
  void claim_parity(Parity p);

  Scalar central_;
  std::map<QuadraticMonomial, Scalar> terms_;
  Parity parity_ = Parity::Even;
};

/// Coefficient prefix for rendering: "" for 1, "-" for -1, "(1+i)" for complex values.
std::string coefficient_prefix(const Scalar& c);

}  // namespace toroidal
