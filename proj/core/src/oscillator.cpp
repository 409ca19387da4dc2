#include "toroidal/oscillator.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace toroidal {

std::string FieldSymbol::str() const {
  std::string s;
  switch (kind) {
    case SymbolKind::Eps: s = "ε_" + std::to_string(index); break;
    case SymbolKind::Del: s = "δ_" + std::to_string(index); break;
    case SymbolKind::Beta: s = "β"; break;
    case SymbolKind::Cbar: s = "c̄"; break;
    case SymbolKind::Ghost: s = "e"; break;
  }
  return starred ? s + "*" : s;
}

std::string FieldSymbol::ascii() const {
  std::string s;
  switch (kind) {
    case SymbolKind::Eps: s = "eps" + std::to_string(index); break;
    case SymbolKind::Del: s = "del" + std::to_string(index); break;
    case SymbolKind::Beta: s = "beta"; break;
    case SymbolKind::Cbar: s = "cbar"; break;
    case SymbolKind::Ghost: s = "e"; break;
  }
  return starred ? s + "*" : s;
}

void PairingTable::set(const FieldSymbol& u, const FieldSymbol& v, const Scalar& value) {
  if (value.is_zero())
    entries_.erase({u, v});
  else
    entries_[{u, v}] = value;
}

Scalar PairingTable::operator()(const FieldSymbol& u, const FieldSymbol& v) const {
  auto it = entries_.find({u, v});
  return it == entries_.end() ? Scalar() : it->second;
}

std::string to_string(BetaModel b) {
  return b == BetaModel::Combination ? "combination" : "identified";
}

BetaModel parse_beta_model(std::string_view s) {
  if (s == "combination") return BetaModel::Combination;
  if (s == "identified") return BetaModel::Identified;
  throw ParseError("unknown beta model '" + std::string(s) + "'");
}

GeneratorSet::GeneratorSet(const TypeParams& params, BetaModel model, Scalar ghost_norm)
    : params_(params), model_(model), ghost_norm_(std::move(ghost_norm)) {
  switch (params_.type) {
    case SuperType::A:
      eps_count_ = params_.m + 1;
      del_count_ = params_.n + 1;
      break;
    case SuperType::B:
    case SuperType::D:
      eps_count_ = params_.n;
      del_count_ = params_.m;
      break;
    case SuperType::C:
      eps_count_ = 1;
      del_count_ = params_.n;
      break;
  }
  for (bool star : {false, true}) {
    for (int i = 1; i <= eps_count_; ++i) symbols_.push_back(eps(i, star));
    for (int j = 1; j <= del_count_; ++j) symbols_.push_back(del(j, star));
    if (model_ == BetaModel::Combination) symbols_.push_back(cbar(star));
  }
  if (has_ghost()) symbols_.push_back(ghost());

  for (const auto& u : symbols_)
    for (const auto& v : symbols_) {
      if (u.kind == SymbolKind::Ghost || v.kind == SymbolKind::Ghost) {
        if (u.kind == v.kind) table_.set(u, v, ghost_norm_);
        continue;
      }
      if (u.starred == v.starred) continue;
      if (u.starred) {
        table_.set(u, v, form(v, u));  // ⟨b*,a⟩ = (a,b)
      } else {
        int s = koszul(bit(u.parity), bit(v.parity));
        table_.set(u, v, Scalar(-s) * form(u, v));  // ⟨a,b*⟩ = -(-1)^{p(a)p(b)}(a,b)
      }
    }
}

Parity GeneratorSet::parity(SymbolKind kind) const {
  bool c = params_.type == SuperType::C;
  switch (kind) {
    case SymbolKind::Eps: return c ? Parity::Odd : Parity::Even;
    case SymbolKind::Del: return c ? Parity::Even : Parity::Odd;
    case SymbolKind::Ghost: return Parity::Odd;
    case SymbolKind::Beta:
    case SymbolKind::Cbar: return Parity::Even;
  }
  return Parity::Even;
}

FieldSymbol GeneratorSet::eps(int i, bool star) const {
  if (i < 1 || i > eps_count_)
    throw std::out_of_range("eps index " + std::to_string(i) + " outside 1.." +
                            std::to_string(eps_count_));
  return {SymbolKind::Eps, i, star, parity(SymbolKind::Eps)};
}

FieldSymbol GeneratorSet::del(int j, bool star) const {
  if (j < 1 || j > del_count_)
    throw std::out_of_range("del index " + std::to_string(j) + " outside 1.." +
                            std::to_string(del_count_));
  return {SymbolKind::Del, j, star, parity(SymbolKind::Del)};
}

FieldSymbol GeneratorSet::cbar(bool star) const {
  if (model_ != BetaModel::Combination)
    throw std::logic_error("cbar is not an oscillator in the identified model");
  return {SymbolKind::Cbar, 0, star, Parity::Even};
}

FieldSymbol GeneratorSet::ghost() const {
  if (!has_ghost()) throw std::out_of_range("ghost e exists only for type B");
  return {SymbolKind::Ghost, 0, false, Parity::Odd};
}

SymbolSum GeneratorSet::beta(bool star) const {
  bool c = params_.type == SuperType::C;
  SymbolSum out{{Scalar(1), c ? del(1, star) : eps(1, star)}};
  if (model_ == BetaModel::Combination) {
    bool half = params_.type == SuperType::B || params_.type == SuperType::D;
    out.push_back({half ? Scalar::rational(-1, 2) : Scalar(-1), cbar(star)});
  }
  return out;
}

SymbolSum GeneratorSet::cbar_sum(bool star) const {
  if (model_ != BetaModel::Combination) return {};
  return {{Scalar(1), cbar(star)}};
}

SymbolSum GeneratorSet::expand(SymbolKind kind, int index, bool star) const {
  switch (kind) {
    case SymbolKind::Eps: return {{Scalar(1), eps(index, star)}};
    case SymbolKind::Del: return {{Scalar(1), del(index, star)}};
    case SymbolKind::Beta: return beta(star);
    case SymbolKind::Cbar: return cbar_sum(star);
    case SymbolKind::Ghost:
      if (star) throw std::out_of_range("e has no starred partner");
      return {{Scalar(1), ghost()}};
  }
  return {};
}

bool GeneratorSet::contains(const FieldSymbol& s) const {
  return std::find(symbols_.begin(), symbols_.end(), s) != symbols_.end();
}

Scalar GeneratorSet::form(const FieldSymbol& a, const FieldSymbol& b) const {
  if (a.kind != b.kind || a.index != b.index) return Scalar();
  switch (a.kind) {
    case SymbolKind::Eps: return Scalar(1);
    case SymbolKind::Del: return Scalar(-1);
    default: return Scalar();
  }
}

Scalar GeneratorSet::pairing(const FieldSymbol& u, const FieldSymbol& v) const {
  if (!contains(u)) throw std::out_of_range("unknown symbol " + u.ascii());
  if (!contains(v)) throw std::out_of_range("unknown symbol " + v.ascii());
  return table_(u, v);
}

Scalar GeneratorSet::pairing(const SymbolSum& u, const SymbolSum& v) const {
  Scalar acc;
  for (const auto& [cu, su] : u)
    for (const auto& [cv, sv] : v) acc += cu * cv * pairing(su, sv);
  return acc;
}

namespace {

int read_index(std::string_view text, std::string_view full, const TypeParams& p) {
  if (!text.empty() && text.front() == '_') text.remove_prefix(1);
  if (text.empty()) throw ParseError("missing index in symbol '" + std::string(full) + "'");
  int base = 0;
  std::size_t pos = 0;
  if (text[0] == 'm' || text[0] == 'n') {
    base = text[0] == 'm' ? p.m : p.n;
    pos = 1;
    if (pos == text.size()) return base;
    if (text[pos] != '+' && text[pos] != '-')
      throw ParseError("bad index in symbol '" + std::string(full) + "'");
  }
  int sign = 1;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    sign = text[pos] == '-' ? -1 : 1;
    ++pos;
  }
  if (pos == text.size()) throw ParseError("bad index in symbol '" + std::string(full) + "'");
  int v = 0;
  for (; pos < text.size(); ++pos) {
    if (!std::isdigit(static_cast<unsigned char>(text[pos])))
      throw ParseError("bad index in symbol '" + std::string(full) + "'");
    v = v * 10 + (text[pos] - '0');
  }
  return base + sign * v;
}

}  // namespace

SymbolSum GeneratorSet::parse_symbol(std::string_view text) const {
  std::string_view body = text;
  bool star = false;
  if (!body.empty() && body.back() == '*') {
    star = true;
    body.remove_suffix(1);
  }
  auto bad = [&](const std::string& why) {
    return ParseError("unknown symbol '" + std::string(text) + "': " + why);
  };
  try {
    if (body == "beta") return beta(star);
    if (body == "cbar") return cbar_sum(star);
    if (body == "e") return expand(SymbolKind::Ghost, 0, star);
    if (body.starts_with("eps")) return {{Scalar(1), eps(read_index(body.substr(3), text, params_), star)}};
    if (body.starts_with("del")) return {{Scalar(1), del(read_index(body.substr(3), text, params_), star)}};
  } catch (const std::out_of_range& e) {
    throw bad(e.what());
  }
  throw bad("expected eps<i>, del<j>, beta, cbar or e");
}

}  // namespace toroidal
