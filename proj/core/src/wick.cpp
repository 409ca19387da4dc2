#include "toroidal/wick.hpp"

namespace toroidal {

LocalField normal_order(const FieldSymbol& u, const FieldSymbol& v) {
  return LocalField::monomial(Scalar(1), u, v);
}

DistributionExpr bracket_elementary(const FieldSymbol& u, const FieldSymbol& v,
                                    const PairingTable& table, const std::string& z,
                                    const std::string& w) {
  DistributionExpr out({z, w});
  out.add({0}, LocalField::constant(table(u, v)));
  return out;
}

namespace {

// [:ab:(z), :cd:(w)] for single monomials, accumulated into `acc`.
void contract_monomials(const QuadraticMonomial& x, const QuadraticMonomial& y, const Scalar& coef,
                        const PairingTable& t, QuadraticBracket& acc) {
  const FieldSymbol &a = x.left, &b = x.right, &c = y.left, &d = y.right;
  const int pa = bit(a.parity), pb = bit(b.parity), pc = bit(c.parity), pd = bit(d.parity);

  Scalar bc = t(b, c), bd = t(b, d), ac = t(a, c), ad = t(a, d);
  auto single = [&](const Scalar& s, const FieldSymbol& u, const FieldSymbol& v) {
    if (!s.is_zero()) acc.single += LocalField::monomial(coef * s, u, v);
  };
  single(bc, a, d);
  single(Scalar(koszul(pc, pd)) * bd, a, c);
  single(Scalar(koszul(pa, pb)) * ac, b, d);
  single(Scalar(koszul(pa, pb) * koszul(pc, pd)) * ad, b, c);
  acc.dbl += coef * (ad * bc + Scalar(koszul(pb, pc)) * ac * bd);
}

}  // namespace

QuadraticBracket contract(const LocalField& a, const LocalField& b, const PairingTable& table) {
  QuadraticBracket out{LocalField(a.parity() + b.parity()), Scalar()};
  for (const auto& [x, cx] : a.terms())
    for (const auto& [y, cy] : b.terms()) contract_monomials(x, y, cx * cy, table, out);
  return out;
}

DistributionExpr bracket_quadratic(const LocalField& a, const LocalField& b,
                                   const PairingTable& table, const std::string& z,
                                   const std::string& w) {
  auto q = contract(a, b, table);
  DistributionExpr out({z, w});
  out.add({0}, q.single);
  out.add({1}, LocalField::constant(q.dbl));
  return out;
}

DistributionExpr bracket_nested(const LocalField& a, const std::string& var,
                                const DistributionExpr& d, const PairingTable& table) {
  std::vector<std::string> vars{var};
  vars.insert(vars.end(), d.vars().begin(), d.vars().end());
  DistributionExpr out(vars);
  for (const auto& [orders, f] : d.terms()) {
    if (!f.has_fields()) continue;
    auto q = contract(a, f, table);
    DistributionExpr::Orders o{0};
    o.insert(o.end(), orders.begin(), orders.end());
    out.add(o, q.single);
    o[0] = 1;
    out.add(o, LocalField::constant(q.dbl));
  }
  return out;
}

DistributionExpr bracket_right(const DistributionExpr& d, const LocalField& c,
                               const std::string& var, const PairingTable& table) {
  std::vector<std::string> vars = d.vars();
  vars.push_back(var);
  DistributionExpr out(vars);
  for (const auto& [orders, f] : d.terms()) {
    if (!f.has_fields()) continue;
    auto q = contract(f, c, table);
    // Π δ(v_k - u) · ∂_w^j δ(u - w) = ∂_w^j [Π δ(v_k - w) · δ(u - w)]
    DistributionExpr::Orders base(orders.size() + 1, 0);
    for (const auto& [o, wgt] : leibniz(base, 0)) out.add(o, wgt * q.single);
    for (const auto& [o, wgt] : leibniz(base, 1)) out.add(o, LocalField::constant(wgt * q.dbl));
  }
  return out;
}

}  // namespace toroidal
