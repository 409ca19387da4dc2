#pragma once

#include "toroidal/distribution.hpp"

#include <string>

namespace toroidal {

/// Canonical :uv: (Koszul sign, zero for odd squares).
LocalField normal_order(const FieldSymbol& u, const FieldSymbol& v);

/// [u(z), v(w)] = ⟨u,v⟩δ(z-w).
DistributionExpr bracket_elementary(const FieldSymbol& u, const FieldSymbol& v,
                                    const PairingTable& table, const std::string& z = "z",
                                    const std::string& w = "w");

/// Single and double contraction parts of [A(z), B(w)] for quadratic fields:
/// the coefficient of δ(z-w) (a local field at w) and of ∂_wδ(z-w) (a scalar).
struct QuadraticBracket {
  LocalField single;
  Scalar dbl;
};

QuadraticBracket contract(const LocalField& a, const LocalField& b, const PairingTable& table);

/// [A(z), B(w)] as a distribution in (z, w). Central parts of A and B drop out.
DistributionExpr bracket_quadratic(const LocalField& a, const LocalField& b,
                                   const PairingTable& table, const std::string& z = "z",
                                   const std::string& w = "w");

/// [A(var), D] for D in normal form; `var` becomes the first variable.
DistributionExpr bracket_nested(const LocalField& a, const std::string& var,
                                const DistributionExpr& d, const PairingTable& table);

/// [D, C(var)]; `var` becomes the new root and D's root an ordinary variable.
DistributionExpr bracket_right(const DistributionExpr& d, const LocalField& c,
                               const std::string& var, const PairingTable& table);

}  // namespace toroidal
