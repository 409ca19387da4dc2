#pragma once

#include "toroidal/local_field.hpp"

#include <map>
#include <string>
#include <vector>

namespace toroidal {

/// Finite sum Σ F_t(w) · Π_k ∂_w^{o_tk} δ(v_k - w) over variables v_1..v_{N-1}, w.
///
/// The last variable is the root w; every other variable is tied to it by
/// exactly one delta factor, and fields are always evaluated at w. A term
/// whose derivative orders are not all zero carries a central scalar only;
/// field·∂δ products never arise from first-order contractions and are
/// rejected.
class DistributionExpr {
public:
  using Orders = std::vector<int>;

  DistributionExpr() = default;
  explicit DistributionExpr(std::vector<std::string> vars);

  const std::vector<std::string>& vars() const { return vars_; }
  const std::string& root() const { return vars_.back(); }
  const std::map<Orders, LocalField>& terms() const { return terms_; }

  void add(const Orders& orders, const LocalField& f);
  LocalField at(const Orders& orders) const;

  bool is_zero() const { return terms_.empty(); }
  bool has_fields() const;

  DistributionExpr& operator+=(const DistributionExpr& o);
  DistributionExpr& operator-=(const DistributionExpr& o);
  friend DistributionExpr operator+(DistributionExpr a, const DistributionExpr& b) { return a += b; }
  friend DistributionExpr operator-(DistributionExpr a, const DistributionExpr& b) { return a -= b; }
  friend DistributionExpr operator*(const Scalar& c, const DistributionExpr& d);
  friend bool operator==(const DistributionExpr&, const DistributionExpr&) = default;

  /// Same expression with the non-root variables listed in a different order.
  DistributionExpr reordered(const std::vector<std::string>& vars) const;

  /// Two-variable expression E(z,w) rewritten as E(w,z) in the (z,w) frame:
  /// F(z)δ(w-z) = F(w)δ(z-w) and ∂_zδ(w-z) = -∂_wδ(z-w).
  DistributionExpr swapped() const;

  std::string str() const;

private:
  void check_orders(const Orders& o) const;

  std::vector<std::string> vars_;
  std::map<Orders, LocalField> terms_;
};

/// ∂_b^order δ(a - b).
struct DeltaFactor {
  std::string a;
  std::string b;
  int order = 0;
};

/// One unnormalized product F(eval_var) · Π deltas.
struct RawTerm {
  LocalField field;
  std::string eval_var;
  std::vector<DeltaFactor> deltas;
};

/// Rewrites raw products into normal form over `vars` (root last): deltas are
/// re-rooted with δ(a-b)=δ(b-a), ∂_b^jδ(w-b) = (-1)^j ∂_w^jδ(b-w), chains are
/// collapsed with δ(a-b)·∂_w^kδ(b-w) = Σ C(k,i) ∂_w^iδ(a-w) ∂_w^{k-i}δ(b-w),
/// and fields are moved to the root along order-0 deltas. Throws
/// std::invalid_argument for products outside this fragment.
DistributionExpr simplify(const std::vector<std::string>& vars, const std::vector<RawTerm>& raw);
DistributionExpr simplify(const DistributionExpr& d);

std::vector<RawTerm> to_raw(const DistributionExpr& d);

/// ∂_w^k applied to Π_k δ(v_k - w) given as per-variable orders: all Leibniz
/// distributions of k extra derivatives, with multinomial weights.
std::map<DistributionExpr::Orders, Scalar> leibniz(const DistributionExpr::Orders& base, int k);

}  // namespace toroidal
