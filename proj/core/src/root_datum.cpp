#include "toroidal/root_datum.hpp"

#include <stdexcept>

namespace toroidal {

std::string to_string(SuperType t) {
  switch (t) {
    case SuperType::A: return "A";
    case SuperType::B: return "B";
    case SuperType::C: return "C";
    case SuperType::D: return "D";
  }
  return "?";
}

SuperType parse_super_type(std::string_view s) {
  if (s == "A" || s == "a") return SuperType::A;
  if (s == "B" || s == "b") return SuperType::B;
  if (s == "C" || s == "c") return SuperType::C;
  if (s == "D" || s == "d") return SuperType::D;
  throw ParseError("unknown type '" + std::string(s) + "' (expected A, B, C or D)");
}

TypeParams TypeParams::make(SuperType type, int m, int n) {
  auto need = [](bool ok, const std::string& what) {
    if (!ok) throw std::invalid_argument(what);
  };
  switch (type) {
    case SuperType::A:
      need(m >= 0, "A(m,n) requires m >= 0");
      need(n >= 0, "A(m,n) requires n >= 0");
      need(m + n >= 1, "A(m,n) requires m + n >= 1");
      break;
    case SuperType::B:
      need(m >= 0, "B(m,n) requires m >= 0");
      need(n >= 1, "B(m,n) requires n >= 1");
      break;
    case SuperType::C:
      need(n >= 1, "C(n) requires n >= 1");
      m = 0;
      break;
    case SuperType::D:
      need(m >= 2, "D(m,n) requires m >= 2");
      need(n >= 1, "D(m,n) requires n >= 1");
      break;
  }
  return TypeParams{type, m, n};
}

std::string TypeParams::label() const {
  if (type == SuperType::C) return "C(" + std::to_string(n) + ")";
  return to_string(type) + "(" + std::to_string(m) + "," + std::to_string(n) + ")";
}

std::string AmbientBasis::str() const {
  return std::string(kind == 'e' ? "eps" : "del") + std::to_string(index);
}

AmbientVector AmbientVector::basis(char kind, int index) {
  AmbientVector v;
  v.coords_[{kind, index}] = Scalar(1);
  return v;
}

AmbientVector& AmbientVector::operator+=(const AmbientVector& o) {
  for (const auto& [k, c] : o.coords_) {
    auto& slot = coords_[k];
    slot += c;
    if (slot.is_zero()) coords_.erase(k);
  }
  return *this;
}

AmbientVector& AmbientVector::operator-=(const AmbientVector& o) { return *this += -o; }

AmbientVector operator*(const Scalar& c, const AmbientVector& v) {
  AmbientVector out;
  if (c.is_zero()) return out;
  for (const auto& [k, x] : v.coords_) out.coords_[k] = c * x;
  return out;
}

std::string AmbientVector::str() const {
  if (coords_.empty()) return "0";
  std::string out;
  for (const auto& [k, c] : coords_) {
    std::string cs = c.str();
    if (!out.empty()) out += (cs.front() == '-') ? " " : " +";
    if (c.is_one())
      out += k.str();
    else if (c == Scalar(-1))
      out += "-" + k.str();
    else
      out += "(" + cs + ")" + k.str();
  }
  return out;
}

Scalar form(const AmbientVector& a, const AmbientVector& b) {
  Scalar acc;
  for (const auto& [k, x] : a.coords()) {
    auto it = b.coords().find(k);
    if (it == b.coords().end()) continue;
    Scalar term = x * it->second;
    if (k.kind == 'd') term = -term;
    acc += term;
  }
  return acc;
}

namespace {

using V = AmbientVector;
V eps(int i) { return V::eps(i); }
V del(int j) { return V::del(j); }

// Symmetrizing vector as tabulated for the distinguished systems.
std::vector<Scalar> d_table(const TypeParams& p) {
  std::vector<Scalar> d;
  auto push = [&](Scalar v, int count) {
    for (int k = 0; k < count; ++k) d.push_back(v);
  };
  switch (p.type) {
    case SuperType::A:
      push(1, 1);
      push(1, p.m + 1);
      push(-1, p.n);
      break;
    case SuperType::B:
      if (p.m == 0) {
        push(2, 1);
        push(1, p.n - 1);
        push(Scalar::rational(1, 2), 1);
      } else {
        push(2, 1);
        push(1, p.n);
        push(-1, p.m - 1);
        push(Scalar::rational(-1, 2), 1);
      }
      break;
    case SuperType::C:
      push(1, 2);
      push(-1, p.n - 1);
      push(-2, 1);
      break;
    case SuperType::D:
      push(2, 1);
      push(1, p.n);
      push(-1, p.m);
      break;
  }
  return d;
}

}  // namespace

RootDatum build_root_datum(SuperType type, int m, int n) {
  return build_root_datum(TypeParams::make(type, m, n));
}

RootDatum build_root_datum(const TypeParams& p) {
  RootDatum R;
  R.params = p;
  const int m = p.m, n = p.n;
  std::vector<V> fin;  // α_1..α_r
  std::vector<int> odd;
  switch (p.type) {
    case SuperType::A: {
      R.r = m + n + 1;
      for (int i = 1; i <= m; ++i) fin.push_back(eps(i) - eps(i + 1));
      fin.push_back(eps(m + 1) - del(1));
      for (int j = 1; j <= n; ++j) fin.push_back(del(j) - del(j + 1));
      R.cbar = eps(0) + del(n + 2);
      R.beta = eps(1) - R.cbar;
      R.theta_coeffs.assign(R.r + 1, 1);
      odd = {0, m + 1};
      break;
    }
    case SuperType::B: {
      R.r = m + n;
      for (int i = 1; i <= n - 1; ++i) fin.push_back(eps(i) - eps(i + 1));
      if (m == 0) {
        fin.push_back(eps(n));
      } else {
        fin.push_back(eps(n) - del(1));
        for (int j = 1; j <= m - 1; ++j) fin.push_back(del(j) - del(j + 1));
        fin.push_back(del(m));
      }
      R.cbar = eps(0) + del(m + 1);
      R.beta = eps(1) - Scalar::rational(1, 2) * R.cbar;
      R.theta_coeffs.assign(R.r + 1, 2);
      odd = {n};
      break;
    }
    case SuperType::C: {
      R.r = n + 1;
      fin.push_back(eps(1) - del(1));
      for (int j = 1; j <= n - 1; ++j) fin.push_back(del(j) - del(j + 1));
      fin.push_back(Scalar(2) * del(n));
      R.cbar = eps(0) + del(n + 1);
      R.beta = del(1) - R.cbar;
      R.theta_coeffs.assign(R.r + 1, 2);
      R.theta_coeffs[1] = 1;
      R.theta_coeffs[R.r] = 1;
      odd = {0, 1};
      break;
    }
    case SuperType::D: {
      R.r = m + n;
      for (int i = 1; i <= n - 1; ++i) fin.push_back(eps(i) - eps(i + 1));
      fin.push_back(eps(n) - del(1));
      for (int j = 1; j <= m - 1; ++j) fin.push_back(del(j) - del(j + 1));
      fin.push_back(del(m - 1) + del(m));
      R.cbar = eps(0) + del(m + 1);
      R.beta = eps(1) - Scalar::rational(1, 2) * R.cbar;
      R.theta_coeffs.assign(R.r + 1, 2);
      R.theta_coeffs[R.r - 1] = 1;
      R.theta_coeffs[R.r] = 1;
      odd = {n};
      break;
    }
  }
  R.theta_coeffs[0] = 0;
  for (int i = 1; i <= R.r; ++i) R.theta = R.theta + Scalar(R.theta_coeffs[i]) * fin[i - 1];

  R.simple_roots.push_back(R.cbar - R.theta);
  R.simple_roots.insert(R.simple_roots.end(), fin.begin(), fin.end());
  if (static_cast<int>(R.simple_roots.size()) != R.r + 1)
    throw std::logic_error("simple root count mismatch for " + p.label());

  R.parities.assign(R.r + 1, Parity::Even);
  for (int i : odd) R.parities[i] = Parity::Odd;

  R.d = d_table(p);
  if (static_cast<int>(R.d.size()) != R.r + 1)
    throw std::logic_error("d-vector length mismatch for " + p.label());
  for (int i = 0; i <= R.r; ++i) {
    Scalar nn = form(R.simple_roots[i], R.simple_roots[i]);
    if (!nn.is_zero() && R.d[i] != nn / Scalar(2))
      throw std::logic_error("d_i disagrees with half-norm at i=" + std::to_string(i));
  }

  R.cartan.assign(R.r + 1, std::vector<Scalar>(R.r + 1));
  for (int i = 0; i <= R.r; ++i)
    for (int j = 0; j <= R.r; ++j)
      R.cartan[i][j] = form(R.simple_roots[i], R.simple_roots[j]) / R.d[i];
  return R;
}

namespace {
void check_index(const RootDatum& R, int i) {
  if (i < 0 || i > R.r)
    throw std::out_of_range("root index " + std::to_string(i) + " outside 0.." +
                            std::to_string(R.r));
}
}  // namespace

Scalar inner(const RootDatum& R, int i, int j) {
  check_index(R, i);
  check_index(R, j);
  return form(R.simple_roots[i], R.simple_roots[j]);
}

Scalar cartan_entry(const RootDatum& R, int i, int j) {
  check_index(R, i);
  check_index(R, j);
  return R.cartan[i][j];
}

std::vector<std::vector<Scalar>> appendix_cartan(const TypeParams& p) {
  const int m = p.m, n = p.n;
  int r = 0;
  switch (p.type) {
    case SuperType::A: r = m + n + 1; break;
    case SuperType::B: r = m + n; break;
    case SuperType::C: r = n + 1; break;
    case SuperType::D: r = m + n; break;
  }
  const int N = r + 1;
  std::vector<std::vector<Scalar>> a(N, std::vector<Scalar>(N));
  auto set = [&](int i, int j, long v) {
    if (i >= 0 && j >= 0 && i < N && j < N) a[i][j] = Scalar(v);
  };
  auto tridiagonal = [&](int from, int to) {
    for (int i = from; i <= to; ++i) set(i, i, 2);
    for (int i = from; i < to; ++i) {
      set(i, i + 1, -1);
      set(i + 1, i, -1);
    }
  };
  auto isotropic_row = [&](int s) {
    set(s, s, 0);
    set(s, s - 1, -1);
    set(s, s + 1, 1);
  };
  switch (p.type) {
    case SuperType::A:
      tridiagonal(0, r);
      set(0, r, 1);
      set(r, 0, -1);
      isotropic_row(m + 1);
      break;
    case SuperType::B:
      tridiagonal(0, r);
      set(1, 0, -2);
      if (m >= 1) isotropic_row(n);
      set(r, r - 1, -2);
      break;
    case SuperType::C:
      tridiagonal(2, r);
      set(0, 0, 0);
      set(0, 1, -2);
      set(0, 2, -1);
      set(1, 0, -2);
      set(1, 1, 0);
      set(1, 2, -1);
      set(2, 0, -1);
      set(2, 1, -1);
      set(r - 1, r, -2);
      set(r, r - 1, -1);
      break;
    case SuperType::D:
      tridiagonal(0, r - 1);
      set(1, 0, -2);
      isotropic_row(n);
      set(r, r, 2);
      set(r - 2, r, -1);
      set(r, r - 2, -1);
      set(r - 1, r, 0);
      set(r, r - 1, 0);
      break;
  }
  return a;
}

ErratumReport appendix_crosscheck(const RootDatum& R) {
  ErratumReport out;
  auto printed = appendix_cartan(R.params);
  for (int i = 0; i <= R.r; ++i)
    for (int j = 0; j <= R.r; ++j)
      if (printed[i][j] != R.cartan[i][j]) out.push_back({i, j, R.cartan[i][j], printed[i][j]});
  return out;
}

std::vector<AmbientVector> positive_roots(const RootDatum& R) {
  const int m = R.params.m, n = R.params.n;
  std::vector<V> out;
  auto two = Scalar(2);
  switch (R.params.type) {
    case SuperType::A:
      for (int i = 1; i <= m + 1; ++i)
        for (int j = i + 1; j <= m + 1; ++j) out.push_back(eps(i) - eps(j));
      for (int k = 1; k <= n + 1; ++k)
        for (int l = k + 1; l <= n + 1; ++l) out.push_back(del(k) - del(l));
      for (int i = 1; i <= m + 1; ++i)
        for (int k = 1; k <= n + 1; ++k) out.push_back(eps(i) - del(k));
      break;
    case SuperType::B:
    case SuperType::D: {
      bool is_b = R.params.type == SuperType::B;
      for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
          out.push_back(eps(i) - eps(j));
          out.push_back(eps(i) + eps(j));
        }
      for (int k = 1; k <= m; ++k)
        for (int l = k + 1; l <= m; ++l) {
          out.push_back(del(k) - del(l));
          out.push_back(del(k) + del(l));
        }
      for (int i = 1; i <= n; ++i) {
        out.push_back(two * eps(i));
        if (is_b) out.push_back(eps(i));
      }
      if (is_b)
        for (int k = 1; k <= m; ++k) out.push_back(del(k));
      for (int i = 1; i <= n; ++i)
        for (int k = 1; k <= m; ++k) {
          out.push_back(eps(i) - del(k));
          out.push_back(eps(i) + del(k));
        }
      break;
    }
    case SuperType::C:
      for (int k = 1; k <= n; ++k)
        for (int l = k + 1; l <= n; ++l) {
          out.push_back(del(k) - del(l));
          out.push_back(del(k) + del(l));
        }
      for (int k = 1; k <= n; ++k) {
        out.push_back(two * del(k));
        out.push_back(eps(1) - del(k));
        out.push_back(eps(1) + del(k));
      }
      break;
  }
  return out;
}

long superalgebra_dimension(const TypeParams& p) {
  const long m = p.m, n = p.n;
  auto so = [](long k) { return k * (k - 1) / 2; };      // so(k)
  auto sp = [](long twok) { return twok * (twok + 1) / 2; };  // sp(2k) with argument 2k
  switch (p.type) {
    case SuperType::A: {
      long N = m + n + 2;
      return N * N - 1;
    }
    case SuperType::B: return so(2 * m + 1) + sp(2 * n) + (2 * m + 1) * (2 * n);
    case SuperType::C: return so(2) + sp(2 * n) + 2 * (2 * n);
    case SuperType::D: return so(2 * m) + sp(2 * n) + (2 * m) * (2 * n);
  }
  return 0;
}

std::string to_string(SerreKind k) {
  switch (k) {
    case SerreKind::Vanishing: return "vanishing";
    case SerreKind::Double: return "double";
    case SerreKind::Folded: return "folded";
  }
  return "?";
}

SerreTemplate serre_exponent(const RootDatum& R, int i, int j) {
  if (i == j) throw std::invalid_argument("serre_exponent requires i != j");
  Scalar ii = inner(R, i, i);
  Scalar ij = inner(R, i, j);
  if (ii.is_zero()) {
    if (ij.is_zero()) return {SerreKind::Vanishing, 1};
    return {SerreKind::Double, 2};
  }
  Scalar depth = Scalar(1) - Scalar(2) * ij / ii;
  if (!depth.is_real() || depth.re().get_den() != 1 || depth.re() < 1)
    throw std::logic_error("non-integral Serre depth " + depth.str());
  return {SerreKind::Folded, static_cast<int>(depth.re().get_num().get_si())};
}

}  // namespace toroidal
