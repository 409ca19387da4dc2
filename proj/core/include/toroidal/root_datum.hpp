#pragma once

#include "toroidal/scalar.hpp"

#include <map>
#include <string>
#include <vector>

namespace toroidal {

enum class SuperType { A, B, C, D };

std::string to_string(SuperType t);
SuperType parse_super_type(std::string_view s);

enum class Parity { Even = 0, Odd = 1 };

inline int bit(Parity p) { return static_cast<int>(p); }
inline Parity operator+(Parity a, Parity b) { return Parity((bit(a) + bit(b)) & 1); }

/// Type tag plus ranks, validated on construction.
///
/// Conventions: A(m,n) = sl(m+1|n+1); B(m,n) = osp(2m+1|2n); C(n) = osp(2|2n)
/// (m is ignored and stored as 0); D(m,n) = osp(2m|2n). For B and D the
/// ε-directions are indexed 1..n and the δ-directions 1..m.
struct TypeParams {
  SuperType type = SuperType::A;
  int m = 0;
  int n = 0;

  /// Throws std::invalid_argument naming the violated bound.
  static TypeParams make(SuperType type, int m, int n);
  std::string label() const;  // e.g. "B(1,2)", "C(3)"
  friend bool operator==(const TypeParams&, const TypeParams&) = default;
};

/// Basis direction of the ambient space: ε_i (norm +1) or δ_j (norm -1).
struct AmbientBasis {
  char kind;  // 'e' or 'd'
  int index;
  friend auto operator<=>(const AmbientBasis&, const AmbientBasis&) = default;
  std::string str() const;
};

/// Vector in the span of ε_i, δ_j with the form (ε_i|ε_j)=δ_ij,
/// (δ_i|δ_j)=-δ_ij, (ε|δ)=0. Zero coordinates are never stored.
class AmbientVector {
public:
  AmbientVector() = default;
  static AmbientVector eps(int i) { return basis('e', i); }
  static AmbientVector del(int j) { return basis('d', j); }

  AmbientVector& operator+=(const AmbientVector& o);
  AmbientVector& operator-=(const AmbientVector& o);
  friend AmbientVector operator+(AmbientVector a, const AmbientVector& b) { return a += b; }
  friend AmbientVector operator-(AmbientVector a, const AmbientVector& b) { return a -= b; }
  friend AmbientVector operator*(const Scalar& c, const AmbientVector& v);
  friend AmbientVector operator-(const AmbientVector& v) { return Scalar(-1) * v; }
  friend bool operator==(const AmbientVector&, const AmbientVector&) = default;

  bool is_zero() const { return coords_.empty(); }
  const std::map<AmbientBasis, Scalar>& coords() const { return coords_; }
  std::string str() const;

private:
  static AmbientVector basis(char kind, int index);
  std::map<AmbientBasis, Scalar> coords_;
};

Scalar form(const AmbientVector& a, const AmbientVector& b);

/// Distinguished affine simple-root data for one (type, m, n).
struct RootDatum {
  TypeParams params;
  int r = 0;                              ///< index of the last simple root
  std::vector<AmbientVector> simple_roots;  ///< α_0..α_r
  std::vector<Parity> parities;
  std::vector<Scalar> d;                  ///< symmetrizing vector d_0..d_r
  AmbientVector cbar;                     ///< isotropic radical direction
  AmbientVector beta;
  AmbientVector theta;
  std::vector<int> theta_coeffs;          ///< θ = Σ_{i>=1} theta_coeffs[i]·α_i; entry 0 unused (0)
  std::vector<std::vector<Scalar>> cartan;  ///< a_ij = (α_i|α_j)/d_i

  int size() const { return r + 1; }
};

RootDatum build_root_datum(SuperType type, int m, int n);
RootDatum build_root_datum(const TypeParams& p);

/// (α_i|α_j) from ambient coordinates. Throws std::out_of_range.
Scalar inner(const RootDatum& datum, int i, int j);
Scalar cartan_entry(const RootDatum& datum, int i, int j);

/// The printed appendix pattern instantiated at the datum's (m, n).
std::vector<std::vector<Scalar>> appendix_cartan(const TypeParams& p);

struct CartanMismatch {
  int i = 0;
  int j = 0;
  Scalar computed;
  Scalar printed;
};
using ErratumReport = std::vector<CartanMismatch>;

ErratumReport appendix_crosscheck(const RootDatum& datum);

/// Finite positive roots (distinguished system), in a fixed deterministic order.
std::vector<AmbientVector> positive_roots(const RootDatum& datum);

/// dim of the underlying finite-dimensional matrix superalgebra
/// (sl(m+1|n+1) for A, osp for B/C/D).
long superalgebra_dimension(const TypeParams& p);

enum class SerreKind { Vanishing, Double, Folded };

struct SerreTemplate {
  SerreKind kind;
  int depth;  ///< number of x_i factors in the nested bracket
};

std::string to_string(SerreKind k);

/// Which Serre-type relation governs the pair (i, j), i != j.
SerreTemplate serre_exponent(const RootDatum& datum, int i, int j);

}  // namespace toroidal
