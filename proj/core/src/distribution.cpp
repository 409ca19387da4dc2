#include "toroidal/distribution.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>
#include <stdexcept>

namespace toroidal {

DistributionExpr::DistributionExpr(std::vector<std::string> vars) : vars_(std::move(vars)) {
  if (vars_.empty()) throw std::invalid_argument("distribution needs at least one variable");
  std::set<std::string> seen(vars_.begin(), vars_.end());
  if (seen.size() != vars_.size()) throw std::invalid_argument("repeated variable name");
}

void DistributionExpr::check_orders(const Orders& o) const {
  if (o.size() + 1 != vars_.size())
    throw std::invalid_argument("delta order vector does not match variable count");
  for (int k : o)
    if (k < 0) throw std::invalid_argument("negative derivative order");
}

void DistributionExpr::add(const Orders& orders, const LocalField& f) {
  check_orders(orders);
  if (f.is_zero()) return;
  bool derivative = std::any_of(orders.begin(), orders.end(), [](int k) { return k > 0; });
  auto& slot = terms_[orders];
  slot += f;
  if (derivative && slot.has_fields())
    throw std::invalid_argument("field multiplied by a derivative of delta");
  if (slot.is_zero()) terms_.erase(orders);
}

LocalField DistributionExpr::at(const Orders& orders) const {
  auto it = terms_.find(orders);
  return it == terms_.end() ? LocalField() : it->second;
}

bool DistributionExpr::has_fields() const {
  return std::any_of(terms_.begin(), terms_.end(),
                     [](const auto& t) { return t.second.has_fields(); });
}

DistributionExpr& DistributionExpr::operator+=(const DistributionExpr& o) {
  if (vars_.empty()) vars_ = o.vars_;
  if (o.vars_.empty()) return *this;
  if (o.vars_ != vars_) throw std::invalid_argument("adding distributions over different variables");
  for (const auto& [k, f] : o.terms_) add(k, f);
  return *this;
}

DistributionExpr& DistributionExpr::operator-=(const DistributionExpr& o) {
  return *this += Scalar(-1) * o;
}

DistributionExpr operator*(const Scalar& c, const DistributionExpr& d) {
  DistributionExpr out;
  out.vars_ = d.vars_;
  if (c.is_zero()) return out;
  for (const auto& [k, f] : d.terms_) out.terms_[k] = c * f;
  return out;
}

DistributionExpr DistributionExpr::reordered(const std::vector<std::string>& vars) const {
  if (vars.size() != vars_.size() || vars.back() != root())
    throw std::invalid_argument("reordering must keep the variable set and the root");
  std::vector<std::size_t> from(vars.size() - 1);
  for (std::size_t i = 0; i + 1 < vars.size(); ++i) {
    auto it = std::find(vars_.begin(), vars_.end() - 1, vars[i]);
    if (it == vars_.end() - 1) throw std::invalid_argument("unknown variable " + vars[i]);
    from[i] = static_cast<std::size_t>(it - vars_.begin());
  }
  DistributionExpr out(vars);
  for (const auto& [k, f] : terms_) {
    Orders o(k.size());
    for (std::size_t i = 0; i < o.size(); ++i) o[i] = k[from[i]];
    out.add(o, f);
  }
  return out;
}

DistributionExpr DistributionExpr::swapped() const {
  if (vars_.size() != 2) throw std::invalid_argument("swapped() needs exactly two variables");
  DistributionExpr out(vars_);
  for (const auto& [k, f] : terms_) out.add(k, (k[0] % 2 == 0) ? f : Scalar(-1) * f);
  return out;
}

namespace {

std::string delta_text(const std::string& v, const std::string& w, int order) {
  std::string d = "δ(" + v + "-" + w + ")";
  if (order == 0) return d;
  if (order == 1) return "∂_" + w + d;
  return "∂_" + w + "^" + std::to_string(order) + d;
}

void append_signed(std::string& out, const std::string& piece) {
  if (out.empty()) {
    out = piece;
    return;
  }
  if (piece.front() == '-')
    out += " - " + piece.substr(1);
  else
    out += " + " + piece;
}

}  // namespace

std::string DistributionExpr::str() const {
  std::string out;
  for (const auto& [k, f] : terms_) {
    std::string deltas;
    for (std::size_t i = 0; i < k.size(); ++i) deltas += delta_text(vars_[i], root(), k[i]);
    for (const auto& [q, c] : f.terms())
      append_signed(out, coefficient_prefix(c) + q.str() + "(" + root() + ")" + deltas);
    if (!f.central().is_zero()) {
      std::string c = coefficient_prefix(f.central());
      if (deltas.empty() && (c.empty() || c == "-")) c += "1";
      append_signed(out, c + deltas);
    }
  }
  return out.empty() ? "0" : out;
}

std::map<DistributionExpr::Orders, Scalar> leibniz(const DistributionExpr::Orders& base, int k) {
  std::map<DistributionExpr::Orders, Scalar> out;
  if (base.empty()) {
    if (k == 0) out[base] = Scalar(1);
    return out;
  }
  // weight k!/Π e_i! accumulated as a product of binomials
  std::function<void(std::size_t, int, DistributionExpr::Orders&, mpz_class)> rec =
      [&](std::size_t i, int left, DistributionExpr::Orders& cur, mpz_class w) {
        if (i + 1 == base.size()) {
          cur[i] = base[i] + left;
          out[cur] += Scalar(mpq_class(w));
          return;
        }
        for (int e = 0; e <= left; ++e) {
          mpz_class b;
          mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(left),
                       static_cast<unsigned long>(e));
          cur[i] = base[i] + e;
          rec(i + 1, left - e, cur, w * b);
        }
      };
  DistributionExpr::Orders cur(base.size());
  rec(0, k, cur, mpz_class(1));
  return out;
}

namespace {

struct Edge {
  std::string parent;
  int order;
};

using Partial = std::map<std::string, int>;  // non-root var -> order of its delta to root

}  // namespace

DistributionExpr simplify(const std::vector<std::string>& vars, const std::vector<RawTerm>& raw) {
  DistributionExpr out(vars);
  const std::string& root = vars.back();
  std::set<std::string> known(vars.begin(), vars.end());

  for (const auto& term : raw) {
    if (term.field.is_zero()) continue;
    if (term.deltas.size() + 1 != vars.size())
      throw std::invalid_argument("need exactly one delta factor per non-root variable");
    for (const auto& d : term.deltas)
      if (!known.count(d.a) || !known.count(d.b) || d.a == d.b || d.order < 0)
        throw std::invalid_argument("bad delta factor");
    if (!known.count(term.eval_var)) throw std::invalid_argument("unknown evaluation variable");

    // Orient every factor towards the root (breadth first).
    std::map<std::string, Edge> edge;
    Scalar sign(1);
    std::deque<std::string> queue{root};
    std::vector<std::string> bfs;
    std::vector<bool> used(term.deltas.size(), false);
    while (!queue.empty()) {
      std::string p = queue.front();
      queue.pop_front();
      for (std::size_t f = 0; f < term.deltas.size(); ++f) {
        if (used[f]) continue;
        const auto& d = term.deltas[f];
        std::string child;
        if (d.b == p) {
          child = d.a;
        } else if (d.a == p) {
          child = d.b;
          if (d.order % 2) sign = -sign;
        } else {
          continue;
        }
        if (edge.count(child) || child == root)
          throw std::invalid_argument("delta factors do not form a tree");
        used[f] = true;
        edge[child] = {p, d.order};
        bfs.push_back(child);
        queue.push_back(child);
      }
    }
    if (bfs.size() + 1 != vars.size()) throw std::invalid_argument("delta factors are not connected");

    // Move the field to the root along order-0 factors.
    if (term.field.has_fields()) {
      for (std::string v = term.eval_var; v != root; v = edge[v].parent)
        if (edge[v].order != 0)
          throw std::invalid_argument("field evaluated across a derivative of delta");
    }

    // Collapse chains in breadth-first order so that parents are rooted first.
    std::map<Partial, Scalar> sum{{Partial{}, sign}};
    for (const auto& c : bfs) {
      const Edge& e = edge[c];
      std::map<Partial, Scalar> next;
      for (const auto& [part, coef] : sum) {
        if (e.parent == root) {
          Partial q = part;
          q[c] = e.order;
          next[q] += coef;
          continue;
        }
        if (e.order != 0) throw std::invalid_argument("derivative on a delta between non-root variables");
        int k = part.at(e.parent);
        for (int i = 0; i <= k; ++i) {
          mpz_class b;
          mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(k), static_cast<unsigned long>(i));
          Partial q = part;
          q[c] = i;
          q[e.parent] = k - i;
          next[q] += coef * Scalar(mpq_class(b));
        }
      }
      sum = std::move(next);
    }

    for (const auto& [part, coef] : sum) {
      if (coef.is_zero()) continue;
      DistributionExpr::Orders o(vars.size() - 1);
      for (std::size_t i = 0; i + 1 < vars.size(); ++i) o[i] = part.at(vars[i]);
      out.add(o, coef * term.field);
    }
  }
  return out;
}

DistributionExpr simplify(const DistributionExpr& d) { return simplify(d.vars(), to_raw(d)); }

std::vector<RawTerm> to_raw(const DistributionExpr& d) {
  std::vector<RawTerm> out;
  for (const auto& [k, f] : d.terms()) {
    RawTerm t{f, d.root(), {}};
    for (std::size_t i = 0; i < k.size(); ++i) t.deltas.push_back({d.vars()[i], d.root(), k[i]});
    out.push_back(std::move(t));
  }
  return out;
}

}  // namespace toroidal
