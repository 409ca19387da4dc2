#include "toroidal/realize.hpp"

#include "parallel.hpp"

namespace toroidal {

namespace {

struct Builder {
  const GeneratorSet& g;

  SymbolSum E(int i, bool s = false) const { return {{Scalar(1), g.eps(i, s)}}; }
  SymbolSum D(int j, bool s = false) const { return {{Scalar(1), g.del(j, s)}}; }
  SymbolSum B(bool s = false) const { return g.beta(s); }
  SymbolSum e() const { return {{Scalar(1), g.ghost()}}; }
  LocalField P(const Scalar& c, const SymbolSum& u, const SymbolSum& v) const {
    return LocalField::product(c, u, v);
  }
  LocalField P(const SymbolSum& u, const SymbolSum& v) const { return P(Scalar(1), u, v); }
};

void realize_a(const Builder& b, int m, int n, FieldAssignment& f) {
  const Scalar I = Scalar::i();
  f.xp.push_back(b.P(I, b.D(n + 1), b.B(true)));
  f.xm.push_back(b.P(I, b.B(), b.D(n + 1, true)));
  f.alpha.push_back(b.P(b.D(n + 1), b.D(n + 1, true)) - b.P(b.B(), b.B(true)));
  for (int i = 1; i <= m; ++i) {
    f.xp.push_back(b.P(I, b.E(i), b.E(i + 1, true)));
    f.xm.push_back(b.P(I, b.E(i + 1), b.E(i, true)));
    f.alpha.push_back(b.P(b.E(i), b.E(i, true)) - b.P(b.E(i + 1), b.E(i + 1, true)));
  }
  f.xp.push_back(b.P(b.E(m + 1), b.D(1, true)));
  f.xm.push_back(b.P(b.E(m + 1, true), b.D(1)));
  f.alpha.push_back(b.P(b.E(m + 1), b.E(m + 1, true)) - b.P(b.D(1), b.D(1, true)));
  for (int j = 1; j <= n; ++j) {
    f.xp.push_back(b.P(b.D(j), b.D(j + 1, true)));
    f.xm.push_back(b.P(b.D(j, true), b.D(j + 1)));
    f.alpha.push_back(b.P(b.D(j), b.D(j, true)) - b.P(b.D(j + 1), b.D(j + 1, true)));
  }
}

// Shared by B(0,n), B(m,n) and D(m,n): the affine node and the ε chain.
void realize_orthogonal_head(const Builder& b, int n, FieldAssignment& f) {
  const Scalar half = Scalar::rational(1, 2);
  f.xp.push_back(b.P(half, b.B(true), b.B(true)));
  f.xm.push_back(b.P(half, b.B(), b.B()));
  f.alpha.push_back(b.P(Scalar(-2), b.B(), b.B(true)));
  for (int i = 1; i <= n - 1; ++i) {
    f.xp.push_back(b.P(b.E(i), b.E(i + 1, true)));
    f.xm.push_back(b.P(Scalar(-1), b.E(i + 1), b.E(i, true)));
    f.alpha.push_back(b.P(b.E(i), b.E(i, true)) - b.P(b.E(i + 1), b.E(i + 1, true)));
  }
}

void realize_orthogonal_tail(const Builder& b, int m, int n, FieldAssignment& f) {
  f.xp.push_back(b.P(b.E(n), b.D(1, true)));
  f.xm.push_back(b.P(b.D(1), b.E(n, true)));
  f.alpha.push_back(b.P(b.E(n), b.E(n, true)) - b.P(b.D(1), b.D(1, true)));
  for (int j = 1; j <= m - 1; ++j) {
    f.xp.push_back(b.P(b.D(j), b.D(j + 1, true)));
    f.xm.push_back(b.P(b.D(j, true), b.D(j + 1)));
    f.alpha.push_back(b.P(b.D(j), b.D(j, true)) - b.P(b.D(j + 1), b.D(j + 1, true)));
  }
}

void realize_b(const Builder& b, int m, int n, FieldAssignment& f) {
  realize_orthogonal_head(b, n, f);
  if (m == 0) {
    f.xp.push_back(b.P(b.E(n), b.e()));
    f.xm.push_back(b.P(b.E(n, true), b.e()));
    f.alpha.push_back(b.P(b.E(n), b.E(n, true)));
    return;
  }
  realize_orthogonal_tail(b, m, n, f);
  f.xp.push_back(b.P(b.D(m), b.e()));
  f.xm.push_back(b.P(b.D(m, true), b.e()));
  f.alpha.push_back(b.P(b.D(m), b.D(m, true)));
}

void realize_d(const Builder& b, int m, int n, FieldAssignment& f) {
  realize_orthogonal_head(b, n, f);
  realize_orthogonal_tail(b, m, n, f);
  f.xp.push_back(b.P(b.D(m - 1), b.D(m)));
  f.xm.push_back(b.P(b.D(m - 1, true), b.D(m, true)));
  f.alpha.push_back(b.P(b.D(m - 1), b.D(m - 1, true)) + b.P(b.D(m), b.D(m, true)));
}

void realize_c(const Builder& b, int n, FieldAssignment& f) {
  const Scalar I = Scalar::i();
  f.xp.push_back(b.P(b.B(true), b.E(1, true)));
  f.xm.push_back(b.P(b.B(), b.E(1)));
  f.alpha.push_back(b.P(Scalar(-1), b.E(1), b.E(1, true)) - b.P(b.B(), b.B(true)));
  f.xp.push_back(b.P(b.E(1), b.D(1, true)));
  f.xm.push_back(b.P(b.D(1), b.E(1, true)));
  f.alpha.push_back(b.P(b.E(1), b.E(1, true)) - b.P(b.D(1), b.D(1, true)));
  for (int i = 2; i <= n; ++i) {
    f.xp.push_back(b.P(I, b.D(i - 1), b.D(i, true)));
    f.xm.push_back(b.P(I, b.D(i), b.D(i - 1, true)));
    f.alpha.push_back(b.P(b.D(i - 1), b.D(i - 1, true)) - b.P(b.D(i), b.D(i, true)));
  }
  const Scalar half = Scalar::rational(1, 2);
  f.xp.push_back(b.P(half, b.D(n), b.D(n)));
  f.xm.push_back(b.P(half, b.D(n, true), b.D(n, true)));
  f.alpha.push_back(b.P(Scalar(2), b.D(n), b.D(n, true)));
}

std::string pair_id(int i, int j) { return "(" + std::to_string(i) + "," + std::to_string(j) + ")"; }
std::string sign_text(int s) { return s > 0 ? "+" : "-"; }

DistributionExpr zero2() { return DistributionExpr({"z", "w"}); }

}  // namespace

FieldAssignment realize_fields(const TypeParams& params, BetaModel model, const Scalar& ghost_norm) {
  FieldAssignment f{build_root_datum(params), GeneratorSet(params, model, ghost_norm), {}, {}, {}};
  Builder b{f.gens};
  switch (params.type) {
    case SuperType::A: realize_a(b, params.m, params.n, f); break;
    case SuperType::B: realize_b(b, params.m, params.n, f); break;
    case SuperType::C: realize_c(b, params.n, f); break;
    case SuperType::D: realize_d(b, params.m, params.n, f); break;
  }
  if (static_cast<int>(f.xp.size()) != f.datum.size())
    throw std::logic_error("field table length mismatch for " + params.label());
  return f;
}

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Exact: return "exact";
    case CheckStatus::ModNull: return "mod-null";
    case CheckStatus::Fail: return "fail";
  }
  return "?";
}

std::vector<RelationTemplate> relation_suite(const RootDatum& R) {
  std::vector<RelationTemplate> out;
  const int N = R.size();
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j)
      out.push_back({"2'" + pair_id(i, j), RelationKind::AlphaAlpha, i, j, 1, 0});
  for (int s : {1, -1})
    for (int i = 0; i < N; ++i)
      for (int j = 0; j < N; ++j)
        out.push_back({"3'" + sign_text(s) + pair_id(i, j), RelationKind::AlphaX, i, j, s, 0});
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) out.push_back({"4'" + pair_id(i, j), RelationKind::XX, i, j, 1, 0});
  for (int s : {1, -1}) {
    std::string tag = "5'" + sign_text(s);
    for (int i = 0; i < N; ++i) {
      bool odd_nonisotropic = R.parities[i] == Parity::Odd && !inner(R, i, i).is_zero();
      if (!odd_nonisotropic)
        out.push_back({tag + "self(" + std::to_string(i) + ")", RelationKind::SelfBracket, i, i, s, 1});
    }
    for (int i = 0; i < N; ++i)
      for (int j = 0; j < N; ++j) {
        if (i == j) continue;
        auto st = serre_exponent(R, i, j);
        switch (st.kind) {
          case SerreKind::Vanishing:
            out.push_back({tag + "vanishing" + pair_id(i, j), RelationKind::Vanishing, i, j, s, 1});
            break;
          case SerreKind::Double:
            out.push_back({tag + "double" + pair_id(i, j), RelationKind::Double, i, j, s, 2});
            break;
          case SerreKind::Folded:
            out.push_back({tag + "folded" + std::to_string(st.depth) + pair_id(i, j),
                           RelationKind::Folded, i, j, s, st.depth});
            break;
        }
      }
  }
  return out;
}

bool in_null_ideal(const DistributionExpr& d) {
  for (const auto& [o, f] : d.terms()) {
    if (!f.central().is_zero()) return false;
    for (const auto& [q, c] : f.terms())
      if (!q.contains(SymbolKind::Cbar)) return false;
  }
  return true;
}

CheckStatus classify(const DistributionExpr& residual) {
  if (residual.is_zero()) return CheckStatus::Exact;
  return in_null_ideal(residual) ? CheckStatus::ModNull : CheckStatus::Fail;
}

DistributionExpr relation_lhs(const FieldAssignment& fa, const RelationTemplate& t) {
  const auto& tab = fa.gens.table();
  switch (t.kind) {
    case RelationKind::AlphaAlpha: return bracket_quadratic(fa.alpha[t.i], fa.alpha[t.j], tab);
    case RelationKind::AlphaX: return bracket_quadratic(fa.alpha[t.i], fa.x(t.j, t.sign), tab);
    case RelationKind::XX: return bracket_quadratic(fa.xp[t.i], fa.xm[t.j], tab);
    case RelationKind::SelfBracket:
    case RelationKind::Vanishing: return bracket_quadratic(fa.x(t.i, t.sign), fa.x(t.j, t.sign), tab);
    case RelationKind::Double:
    case RelationKind::Folded: {
      DistributionExpr d = bracket_quadratic(fa.x(t.i, t.sign), fa.x(t.j, t.sign), tab,
                                             "z" + std::to_string(t.depth), "w");
      for (int k = t.depth - 1; k >= 1; --k)
        d = bracket_nested(fa.x(t.i, t.sign), "z" + std::to_string(k), d, tab);
      return d;
    }
  }
  return zero2();
}

DistributionExpr relation_rhs(const FieldAssignment& fa, const RelationTemplate& t,
                              const Scalar& level) {
  DistributionExpr out = zero2();
  switch (t.kind) {
    case RelationKind::AlphaAlpha:
      out.add({1}, LocalField::constant(inner(fa.datum, t.i, t.j) * level));
      break;
    case RelationKind::AlphaX:
      out.add({0}, Scalar(t.sign) * inner(fa.datum, t.i, t.j) * fa.x(t.j, t.sign));
      break;
    case RelationKind::XX: {
      if (t.i != t.j) break;
      Scalar norm = inner(fa.datum, t.i, t.i);
      Scalar k = norm.is_zero() ? Scalar(-1) : Scalar(-2) / norm;
      out.add({0}, k * fa.alpha[t.i]);
      out.add({1}, LocalField::constant(k * level));
      break;
    }
    case RelationKind::Double:
    case RelationKind::Folded: {
      std::vector<std::string> vars;
      for (int k = 1; k <= t.depth; ++k) vars.push_back("z" + std::to_string(k));
      vars.push_back("w");
      return DistributionExpr(vars);
    }
    default: break;
  }
  return out;
}

LevelInconsistent::LevelInconsistent(std::string a, std::string b, const Scalar& x, const Scalar& y)
    : std::runtime_error("inconsistent level: " + a + " gives " + x.str() + ", " + b + " gives " +
                         y.str()),
      first(std::move(a)),
      second(std::move(b)) {}

Scalar extract_level(const FieldAssignment& fa) {
  std::optional<std::pair<std::string, Scalar>> found;
  auto offer = [&](const std::string& id, const Scalar& k) {
    if (!found) {
      found = {id, k};
      return;
    }
    if (found->second != k) throw LevelInconsistent(found->first, id, found->second, k);
  };
  const int N = fa.datum.size();
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) {
      RelationTemplate t{"2'" + pair_id(i, j), RelationKind::AlphaAlpha, i, j, 1, 0};
      Scalar c = relation_lhs(fa, t).at({1}).central();
      Scalar ip = inner(fa.datum, i, j);
      if (ip.is_zero()) {
        if (!c.is_zero()) throw LevelInconsistent(t.id, t.id, Scalar(), c);
        continue;
      }
      offer(t.id, c / ip);
    }
  for (int i = 0; i < N; ++i) {
    RelationTemplate t{"4'" + pair_id(i, i), RelationKind::XX, i, i, 1, 0};
    Scalar c = relation_lhs(fa, t).at({1}).central();
    Scalar norm = inner(fa.datum, i, i);
    Scalar k = norm.is_zero() ? Scalar(-1) : Scalar(-2) / norm;
    offer(t.id, c / k);
  }
  if (!found) throw std::logic_error("no relation determines the level");
  return found->second;
}

std::vector<RelationCheck> verify(const FieldAssignment& fa,
                                  const std::vector<RelationTemplate>& suite, const Scalar& level,
                                  unsigned threads) {
  std::vector<RelationCheck> out(suite.size());
  detail::parallel_for(suite.size(), threads, [&](std::size_t k) {
    const auto& t = suite[k];
    RelationCheck c;
    c.id = t.id;
    c.lhs = relation_lhs(fa, t);
    c.rhs = relation_rhs(fa, t, level);
    c.residual = simplify(c.lhs - c.rhs);
    c.status = classify(c.residual);
    out[k] = std::move(c);
  });
  return out;
}

CentralTower central_tower(const FieldAssignment& fa, unsigned threads) {
  CentralTower out;
  out.cbar_img = fa.alpha[0];
  for (int i = 1; i < fa.datum.size(); ++i)
    out.cbar_img += Scalar(fa.datum.theta_coeffs[i]) * fa.alpha[i];

  struct Job {
    std::string id;
    const LocalField* field;
  };
  std::vector<Job> jobs;
  const int N = fa.datum.size();
  for (int j = 0; j < N; ++j) {
    jobs.push_back({"tower[x+](" + std::to_string(j) + ")", &fa.xp[j]});
    jobs.push_back({"tower[x-](" + std::to_string(j) + ")", &fa.xm[j]});
    jobs.push_back({"tower[alpha](" + std::to_string(j) + ")", &fa.alpha[j]});
  }
  out.checks.resize(jobs.size());
  detail::parallel_for(jobs.size(), threads, [&](std::size_t k) {
    RelationCheck c;
    c.id = jobs[k].id;
    c.lhs = bracket_quadratic(out.cbar_img, *jobs[k].field, fa.gens.table());
    c.rhs = zero2();
    c.residual = simplify(c.lhs);
    c.status = classify(c.residual);
    out.checks[k] = std::move(c);
  });
  for (const auto& c : out.checks)
    if (c.status > out.status) out.status = c.status;
  return out;
}

}  // namespace toroidal
