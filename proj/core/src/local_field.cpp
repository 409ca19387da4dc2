#include "toroidal/local_field.hpp"

#include <stdexcept>

namespace toroidal {

std::string QuadraticMonomial::str() const { return ":" + left.str() + right.str() + ":"; }

std::optional<std::pair<QuadraticMonomial, int>> canonical_monomial(const FieldSymbol& u,
                                                                    const FieldSymbol& v) {
  if (u == v && u.parity == Parity::Odd) return std::nullopt;
  if (v < u) return std::pair{QuadraticMonomial{v, u}, koszul(bit(u.parity), bit(v.parity))};
  return std::pair{QuadraticMonomial{u, v}, 1};
}

LocalField LocalField::constant(const Scalar& c) {
  LocalField f;
  f.central_ = c;
  return f;
}

LocalField LocalField::monomial(const Scalar& c, const FieldSymbol& u, const FieldSymbol& v) {
  LocalField f(u.parity + v.parity);
  if (auto cm = canonical_monomial(u, v)) f.add_term(c * Scalar(cm->second), cm->first);
  return f;
}

LocalField LocalField::product(const Scalar& c, const SymbolSum& u, const SymbolSum& v) {
  LocalField f;
  bool set = false;
  for (const auto& [cu, su] : u)
    for (const auto& [cv, sv] : v) {
      if (!set) {
        f = LocalField(su.parity + sv.parity);
        set = true;
      }
      f += monomial(c * cu * cv, su, sv);
    }
  return f;
}

Scalar LocalField::coefficient(const QuadraticMonomial& q) const {
  auto it = terms_.find(q);
  return it == terms_.end() ? Scalar() : it->second;
}

void LocalField::claim_parity(Parity p) {
  if (terms_.empty() && central_.is_zero()) {
    parity_ = p;
    return;
  }
  if (p != parity_) throw std::logic_error("mixing parities in a local field");
}

void LocalField::add_central(const Scalar& c) {
  if (c.is_zero()) return;
  claim_parity(Parity::Even);
  central_ += c;
}

void LocalField::add_term(const Scalar& c, const QuadraticMonomial& q) {
  if (c.is_zero()) return;
  claim_parity(q.parity());
  auto& slot = terms_[q];
  slot += c;
  if (slot.is_zero()) terms_.erase(q);
}

LocalField& LocalField::operator+=(const LocalField& o) {
  if (is_zero() && !o.is_zero()) parity_ = o.parity_;
  add_central(o.central_);
  for (const auto& [q, c] : o.terms_) add_term(c, q);
  return *this;
}

LocalField& LocalField::operator-=(const LocalField& o) { return *this += -o; }

LocalField operator*(const Scalar& c, const LocalField& f) {
  LocalField out(f.parity_);
  if (c.is_zero()) return out;
  out.central_ = c * f.central_;
  for (const auto& [q, x] : f.terms_) out.terms_[q] = c * x;
  return out;
}

std::string coefficient_prefix(const Scalar& c) {
  if (c.is_one()) return "";
  if (c == Scalar(-1)) return "-";
  if (c.is_real() || sgn(c.re()) == 0) return c.str();
  return "(" + c.str() + ")";
}

namespace {

void append_signed(std::string& out, std::string piece) {
  bool neg = !piece.empty() && piece.front() == '-';
  if (out.empty()) {
    out = piece;
    return;
  }
  out += neg ? " - " + piece.substr(1) : " + " + piece;
}

}  // namespace

std::string LocalField::str() const {
  std::string out;
  for (const auto& [q, c] : terms_) append_signed(out, coefficient_prefix(c) + q.str());
  if (!central_.is_zero()) {
    std::string cs = central_.str();
    if (!central_.is_real() && sgn(central_.re()) != 0) cs = "(" + cs + ")";
    append_signed(out, cs);
  }
  return out.empty() ? "0" : out;
}

}  // namespace toroidal
