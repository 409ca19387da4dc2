#include "toroidal/fock.hpp"

#include "parallel.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace toroidal {

std::string to_string(Ordering o) { return o == Ordering::FockAdapted ? "fock-adapted" : "mode-split"; }

Ordering parse_ordering(std::string_view s) {
  if (s == "fock-adapted") return Ordering::FockAdapted;
  if (s == "mode-split") return Ordering::ModeSplit;
  throw ParseError("unknown ordering '" + std::string(s) + "'");
}

FockVector FockVector::basis(const FockState& s, const Scalar& c) {
  FockVector v;
  v.add(s, c);
  return v;
}

void FockVector::add(const FockState& s, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.try_emplace(s, c);
  if (fresh) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

FockVector& FockVector::operator+=(const FockVector& o) {
  for (const auto& [s, c] : o.terms_) add(s, c);
  return *this;
}

FockVector& FockVector::operator-=(const FockVector& o) {
  for (const auto& [s, c] : o.terms_) add(s, -c);
  return *this;
}

FockVector operator*(const Scalar& c, const FockVector& v) {
  FockVector out;
  if (c.is_zero()) return out;
  for (const auto& [s, x] : v.terms_) out.terms_.emplace(s, c * x);
  return out;
}

ModeOperator ModeOperator::scalar(const Scalar& c, std::string label) {
  return {std::move(label), Parity::Even, [c](const FockVector& v) { return c * v; }};
}

ModeOperator operator+(const ModeOperator& a, const ModeOperator& b) {
  return {a.label + " + " + b.label, a.parity,
          [a, b](const FockVector& v) { return a(v) + b(v); }};
}

ModeOperator operator-(const ModeOperator& a, const ModeOperator& b) {
  return {a.label + " - " + b.label, a.parity,
          [a, b](const FockVector& v) { return a(v) - b(v); }};
}

ModeOperator operator*(const Scalar& c, const ModeOperator& a) {
  return {c.str() + "·" + a.label, a.parity, [c, a](const FockVector& v) { return c * a(v); }};
}

ModeOperator supercommutator(const ModeOperator& a, const ModeOperator& b) {
  Scalar s(koszul(bit(a.parity), bit(b.parity)));
  return {"[" + a.label + "," + b.label + "]", a.parity + b.parity,
          [a, b, s](const FockVector& v) { return a(b(v)) - s * b(a(v)); }};
}

FockSpace::FockSpace(GeneratorSet gens, Ordering ordering)
    : gens_(std::move(gens)), ordering_(ordering) {
  const auto& sy = symbols();
  const std::size_t n = sy.size();
  for (const auto& u : sy) {
    parity_bit_.push_back(bit(u.parity));
    twice_weight_.push_back(twice_weight(u));
    is_cbar_.push_back(u.kind == SymbolKind::Cbar);
  }
  pair_.resize(n * n);
  paired_.resize(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      pair_[a * n + b] = gens_.table()(sy[a], sy[b]);
      paired_[a * n + b] = !pair_[a * n + b].is_zero();
    }
}

int FockSpace::symbol_index(const FieldSymbol& s) const {
  const auto& sy = symbols();
  auto it = std::find(sy.begin(), sy.end(), s);
  if (it == sy.end()) throw std::out_of_range("symbol " + s.ascii() + " not in this module");
  return static_cast<int>(it - sy.begin());
}

bool FockSpace::is_klein(const Mode& m) const {
  return m.k == 0 && symbols()[m.sym].kind == SymbolKind::Ghost;
}

bool FockSpace::is_creator(const Mode& m) const {
  if (m.k < 0) return true;
  if (m.k > 0) return false;
  const auto& s = symbols()[m.sym];
  return s.starred && s.kind != SymbolKind::Ghost;
}

int FockSpace::twice_weight(const FieldSymbol& s) const {
  if (s.kind == SymbolKind::Ghost) return 1;
  return s.starred ? 0 : 2;
}

int FockSpace::energy(const FockState& s) const {
  int e = 0;
  for (const auto& o : s) e += -o.mode.k * o.mult;
  return e;
}

int FockSpace::zero_degree(const FockState& s) const {
  int z = 0;
  for (const auto& o : s)
    if (o.mode.k == 0) z += o.mult;
  return z;
}

int FockSpace::parity(const FockState& s) const {
  int p = 0;
  for (const auto& o : s) p += parity_bit_[o.mode.sym] * o.mult;
  return p & 1;
}

int FockSpace::cbar_quanta(const FockState& s) const {
  int c = 0;
  for (const auto& o : s)
    if (is_cbar_[o.mode.sym]) c += o.mult;
  return c;
}

void FockSpace::apply_basis(const Mode& m, const FockState& s, const Scalar& c,
                            FockVector& out) const {
  const int pm = parity_bit_[m.sym];
  if (is_klein(m)) {
    Scalar w = c * Scalar::i();
    if (parity(s)) w.negate();
    out.add(s, w);
    return;
  }
  if (is_creator(m)) {
    int before = 0;
    std::size_t pos = 0;
    for (; pos < s.size() && s[pos].mode < m; ++pos) before += parity_bit_[s[pos].mode.sym] * s[pos].mult;
    FockState t;
    t.reserve(s.size() + 1);
    t = s;
    if (pos < s.size() && s[pos].mode == m) {
      if (pm) return;
      ++t[pos].mult;
    } else {
      t.insert(t.begin() + static_cast<std::ptrdiff_t>(pos), Occupation{m, 1});
    }
    if (pm && (before & 1)) {
      out.add(t, -c);
    } else {
      out.add(t, c);
    }
    return;
  }
  const std::size_t n = symbols().size();
  int before = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const Occupation& o = s[i];
    const int po = parity_bit_[o.mode.sym];
    const std::size_t slot = static_cast<std::size_t>(m.sym) * n + static_cast<std::size_t>(o.mode.sym);
    if (o.mode.k == -m.k && paired_[slot]) {
      FockState t = s;
      Scalar w = c * pair_[slot];
      if (po == 0 && o.mult != 1) w *= Scalar(o.mult);
      if (--t[i].mult == 0) t.erase(t.begin() + static_cast<std::ptrdiff_t>(i));
      if (pm && (before & 1)) w.negate();
      out.add(t, w);
    }
    before += po * o.mult;
  }
}

FockVector FockSpace::apply(const Mode& m, const FockVector& v) const {
  FockVector out;
  for (const auto& [s, c] : v.terms()) apply_basis(m, s, c, out);
  return out;
}

ModeOperator FockSpace::elementary(const FieldSymbol& u, int k) const {
  Mode m{symbol_index(u), k};
  return {u.ascii() + "(" + std::to_string(k) + ")", u.parity,
          [this, m](const FockVector& v) { return apply(m, v); }};
}

FockVector FockSpace::apply_composite(const LocalField& f, int twice_k, const FockVector& v) const {
  FockVector out;
  if (twice_k == -2 && !f.central().is_zero()) out += f.central() * v;
  for (const auto& [q, coef] : f.terms()) {
    const int iu = symbol_index(q.left), iv = symbol_index(q.right);
    const int s2 = twice_k + 2 - twice_weight_[iu] - twice_weight_[iv];
    if (s2 % 2 != 0) throw std::invalid_argument("mode index off the field's grid");
    const int S = s2 / 2;
    const Scalar swap_sign(koszul(bit(q.left.parity), bit(q.right.parity)));
    for (const auto& [st, cs] : v.terms()) {
      const Scalar direct = coef * cs;
      const Scalar swapped = swap_sign * direct;
      const int bound = energy(st) + std::abs(S) + 2;
      FockVector mid;
      for (int p = -bound; p <= bound; ++p) {
        Mode mu{iu, p}, mv{iv, S - p};
        bool swap = ordering_ == Ordering::FockAdapted ? (!is_creator(mu) && is_creator(mv)) : p >= 0;
        const Mode& first = swap ? mu : mv;
        const Mode& second = swap ? mv : mu;
        mid = FockVector();
        apply_basis(first, st, swap ? swapped : direct, mid);
        for (const auto& [t, ct] : mid.terms()) apply_basis(second, t, ct, out);
      }
    }
  }
  return out;
}

namespace {

std::string mode_text(int twice) {
  if (twice % 2 == 0) return std::to_string(twice / 2);
  return std::to_string(twice) + "/2";
}

}  // namespace

ModeOperator FockSpace::composite(const LocalField& f, int twice_k, std::string label) const {
  if (label.empty()) label = "(" + f.str() + ")";
  return {label + "(" + mode_text(twice_k) + ")", f.parity(),
          [this, f, twice_k](const FockVector& v) { return apply_composite(f, twice_k, v); }};
}

std::vector<FockState> FockSpace::window(int emax, int zmax) const {
  std::vector<Mode> creators;
  for (int i = 0; i < static_cast<int>(symbols().size()); ++i)
    for (int k = -emax; k <= 0; ++k)
      if (is_creator({i, k})) creators.push_back({i, k});
  std::sort(creators.begin(), creators.end());

  std::vector<FockState> out;
  FockState cur;
  std::function<void(std::size_t, int, int)> rec = [&](std::size_t idx, int e, int z) {
    if (idx == creators.size()) {
      out.push_back(cur);
      return;
    }
    const Mode& m = creators[idx];
    const int de = -m.k, dz = m.k == 0 ? 1 : 0;
    const int cap = bit(symbols()[m.sym].parity) ? 1 : emax + zmax;
    rec(idx + 1, e, z);
    for (int n = 1; n <= cap; ++n) {
      if (e + n * de > emax || z + n * dz > zmax) break;
      cur.push_back({m, n});
      rec(idx + 1, e + n * de, z + n * dz);
      cur.pop_back();
    }
  };
  rec(0, 0, 0);
  std::sort(out.begin(), out.end());
  return out;
}

std::string FockSpace::render(const FockState& s) const {
  if (s.empty()) return "|0>";
  std::string out;
  for (const auto& o : s) {
    out += symbols()[o.mode.sym].ascii() + "(" + std::to_string(o.mode.k) + ")";
    if (o.mult > 1) out += "^" + std::to_string(o.mult);
  }
  return out + "|0>";
}

std::string FockSpace::render(const FockVector& v) const {
  if (v.is_zero()) return "0";
  std::string out;
  for (const auto& [s, c] : v.terms()) {
    std::string piece = coefficient_prefix(c) + render(s);
    if (out.empty())
      out = piece;
    else if (piece.front() == '-')
      out += " - " + piece.substr(1);
    else
      out += " + " + piece;
  }
  return out;
}

bool half_integer_modes(const LocalField& f) {
  if (f.terms().empty()) return false;
  bool half = false;
  bool first = true;
  for (const auto& [q, c] : f.terms()) {
    int ghosts = (q.left.kind == SymbolKind::Ghost) + (q.right.kind == SymbolKind::Ghost);
    bool h = ghosts == 1;
    if (!first && h != half) throw std::invalid_argument("field mixes integer and half-integer modes");
    half = h;
    first = false;
  }
  return half;
}

int grid_mode(const LocalField& f, int k) { return half_integer_modes(f) ? 2 * k + 1 : 2 * k; }

std::string to_string(OracleStatus s) {
  switch (s) {
    case OracleStatus::Exact: return "exact";
    case OracleStatus::ModNullAction: return "mod-null-action";
    case OracleStatus::Fail: return "fail";
  }
  return "?";
}

OracleReport check_identity(const FockSpace& space, const std::string& id, const ModeOperator& lhs,
                            const ModeOperator& rhs, const std::vector<FockState>& states,
                            unsigned threads) {
  std::vector<OracleStatus> status(states.size(), OracleStatus::Exact);
  std::vector<FockVector> residual(states.size());
  detail::parallel_for(states.size(), threads, [&](std::size_t k) {
    FockVector in = FockVector::basis(states[k]);
    FockVector r = lhs(in) - rhs(in);
    if (r.is_zero()) return;
    int base = space.cbar_quanta(states[k]);
    bool null = std::all_of(r.terms().begin(), r.terms().end(),
                            [&](const auto& t) { return space.cbar_quanta(t.first) > base; });
    status[k] = null ? OracleStatus::ModNullAction : OracleStatus::Fail;
    residual[k] = std::move(r);
  });
  OracleReport rep;
  rep.id = id;
  rep.ordering = space.ordering();
  rep.states = states.size();
  for (std::size_t k = 0; k < states.size(); ++k)
    if (status[k] > rep.status) {
      rep.status = status[k];
      rep.worst_residual = space.render(states[k]) + " -> " + space.render(residual[k]);
    }
  return rep;
}

namespace {

struct ElementaryHit {
  std::size_t pair = 0;
  int k = 0;
  int l = 0;
  OracleStatus status = OracleStatus::Exact;
  FockVector residual;
};

}  // namespace

std::vector<OracleReport> elementary_checks(const FockSpace& space, int kmax, const WindowSpec& w,
                                            unsigned threads) {
  const auto states = space.window(w.emax, w.zmax);
  const auto& sy = space.symbols();
  const std::size_t n = sy.size();
  const int span = 2 * kmax + 1;
  std::vector<Mode> modes;
  for (std::size_t a = 0; a < n; ++a)
    for (int k = -kmax; k <= kmax; ++k) modes.push_back({static_cast<int>(a), k});

  // Per state, the first failing (k, l) of each generator pair, in (k, l) order.
  std::vector<std::vector<ElementaryHit>> hits(states.size());
  detail::parallel_for(states.size(), threads, [&](std::size_t si) {
    const FockVector in = FockVector::basis(states[si]);
    const int base = space.cbar_quanta(states[si]);
    std::vector<FockVector> first(modes.size());
    for (std::size_t x = 0; x < modes.size(); ++x) first[x] = space.apply(modes[x], in);
    std::vector<ElementaryHit> found;
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        const Scalar pair = space.gens().table()(sy[a], sy[b]);
        const Scalar sign(koszul(bit(sy[a].parity), bit(sy[b].parity)));
        for (int k = -kmax; k <= kmax; ++k)
          for (int l = -kmax; l <= kmax; ++l) {
            const Mode& mu = modes[a * span + (k + kmax)];
            const Mode& mv = modes[b * span + (l + kmax)];
            FockVector r = space.apply(mu, first[b * span + (l + kmax)]);
            r -= sign * space.apply(mv, first[a * span + (k + kmax)]);
            if (k == -l) r -= pair * in;
            if (r.is_zero()) continue;
            bool null = std::all_of(r.terms().begin(), r.terms().end(),
                                    [&](const auto& t) { return space.cbar_quanta(t.first) > base; });
            auto st = null ? OracleStatus::ModNullAction : OracleStatus::Fail;
            auto pos = std::find_if(found.begin(), found.end(),
                                    [&](const ElementaryHit& h) { return h.pair == a * n + b; });
            if (pos == found.end())
              found.push_back({a * n + b, k, l, st, std::move(r)});
            else if (st > pos->status)
              *pos = {a * n + b, k, l, st, std::move(r)};
          }
      }
    hits[si] = std::move(found);
  });

  std::vector<OracleReport> out(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      auto& rep = out[a * n + b];
      rep.id = "elementary[" + sy[a].ascii() + "," + sy[b].ascii() + "]";
      rep.window = w;
      rep.ordering = space.ordering();
      rep.states = states.size();
    }
  // Worst status wins; ties go to the smallest (k, l), then the earliest state.
  for (std::size_t si = 0; si < states.size(); ++si)
    for (const auto& h : hits[si]) {
      auto& rep = out[h.pair];
      bool better = h.status > rep.status ||
                    (h.status == rep.status && std::pair(2 * h.k, 2 * h.l) < std::pair(rep.twice_k, rep.twice_l));
      if (!better) continue;
      rep.status = h.status;
      rep.twice_k = 2 * h.k;
      rep.twice_l = 2 * h.l;
      rep.worst_residual = space.render(states[si]) + " -> " + space.render(h.residual);
    }
  return out;
}

ModeOperator relation_lhs_op(const FockSpace& space, const FieldAssignment& fa,
                             const RelationTemplate& t, int twice_k, int twice_l) {
  auto A = [&](int i, int k2) { return space.composite(fa.alpha[i], k2, "A" + std::to_string(i)); };
  auto X = [&](int i, int s, int k2) {
    return space.composite(fa.x(i, s), k2, std::string("X") + std::to_string(i) + (s > 0 ? "+" : "-"));
  };
  switch (t.kind) {
    case RelationKind::AlphaAlpha: return supercommutator(A(t.i, twice_k), A(t.j, twice_l));
    case RelationKind::AlphaX: return supercommutator(A(t.i, twice_k), X(t.j, t.sign, twice_l));
    case RelationKind::XX: return supercommutator(X(t.i, 1, twice_k), X(t.j, -1, twice_l));
    case RelationKind::SelfBracket:
    case RelationKind::Vanishing:
      return supercommutator(X(t.i, t.sign, twice_k), X(t.j, t.sign, twice_l));
    case RelationKind::Double:
    case RelationKind::Folded: {
      ModeOperator op = X(t.j, t.sign, twice_l);
      for (int d = 0; d < t.depth; ++d) op = supercommutator(X(t.i, t.sign, twice_k), op);
      return op;
    }
  }
  return ModeOperator::scalar(Scalar());
}

ModeOperator relation_rhs_op(const FockSpace& space, const FieldAssignment& fa,
                             const RelationTemplate& t, int twice_k, int twice_l,
                             const Scalar& level) {
  const Scalar k = Scalar(mpq_class(twice_k, 2));
  const bool opposite = twice_k == -twice_l;
  switch (t.kind) {
    case RelationKind::AlphaAlpha:
      return ModeOperator::scalar(opposite ? k * inner(fa.datum, t.i, t.j) * level : Scalar());
    case RelationKind::AlphaX:
      return Scalar(t.sign) * inner(fa.datum, t.i, t.j) *
             space.composite(fa.x(t.j, t.sign), twice_k + twice_l);
    case RelationKind::XX: {
      if (t.i != t.j) return ModeOperator::scalar(Scalar());
      Scalar norm = inner(fa.datum, t.i, t.i);
      Scalar c = norm.is_zero() ? Scalar(-1) : Scalar(-2) / norm;
      ModeOperator a = space.composite(fa.alpha[t.i], twice_k + twice_l);
      return c * (a + ModeOperator::scalar(opposite ? k * level : Scalar()));
    }
    default: return ModeOperator::scalar(Scalar());
  }
}

std::vector<OracleReport> composite_checks(const FockSpace& space, const FieldAssignment& fa,
                                           const std::vector<RelationTemplate>& templates,
                                           const Scalar& level, int kmax, const WindowSpec& w,
                                           unsigned threads) {
  auto states = space.window(w.emax, w.zmax);
  std::vector<OracleReport> out;
  for (const auto& t : templates) {
    const LocalField* fi = nullptr;
    const LocalField* fj = nullptr;
    switch (t.kind) {
      case RelationKind::AlphaAlpha: fi = &fa.alpha[t.i]; fj = &fa.alpha[t.j]; break;
      case RelationKind::AlphaX: fi = &fa.alpha[t.i]; fj = &fa.x(t.j, t.sign); break;
      case RelationKind::XX: fi = &fa.xp[t.i]; fj = &fa.xm[t.j]; break;
      default: fi = &fa.x(t.i, t.sign); fj = &fa.x(t.j, t.sign); break;
    }
    for (int k = -kmax; k <= kmax; ++k)
      for (int l = -kmax; l <= kmax; ++l) {
        int k2 = grid_mode(*fi, k), l2 = grid_mode(*fj, l);
        auto lhs = relation_lhs_op(space, fa, t, k2, l2);
        auto rhs = relation_rhs_op(space, fa, t, k2, l2, level);
        auto r = check_identity(space, t.id + "@" + mode_text(k2) + "," + mode_text(l2), lhs, rhs,
                                states, threads);
        r.twice_k = k2;
        r.twice_l = l2;
        r.window = w;
        out.push_back(std::move(r));
      }
  }
  return out;
}

Scalar fock_level(const FockSpace& space, const FieldAssignment& fa) {
  const int N = fa.datum.size();
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) {
      Scalar ip = inner(fa.datum, i, j);
      if (ip.is_zero()) continue;
      auto op = supercommutator(space.composite(fa.alpha[i], 2), space.composite(fa.alpha[j], -2));
      FockVector v = op(FockSpace::vacuum());
      if (v.terms().size() > 1 || (v.terms().size() == 1 && !v.terms().begin()->first.empty()))
        throw std::logic_error("[A_i(1), A_j(-1)] does not act on the vacuum by a scalar");
      Scalar c = v.is_zero() ? Scalar() : v.terms().begin()->second;
      return c / ip;
    }
  throw std::logic_error("no pair with nonzero inner product");
}

bool agrees(CheckStatus symbolic, OracleStatus oracle) {
  switch (symbolic) {
    case CheckStatus::Exact: return oracle == OracleStatus::Exact;
    case CheckStatus::ModNull: return oracle != OracleStatus::Fail;
    case CheckStatus::Fail: return true;
  }
  return false;
}

}  // namespace toroidal
