#pragma once

#include "toroidal/realize.hpp"

#include <functional>
#include <map>
#include <string>
#include <vector>

namespace toroidal {

/// How a pair of modes is put in normal order inside a composite mode.
/// FockAdapted moves annihilators of the module (u(k>0), unstarred u(0)
/// and the Klein zero mode e(0)) to the right; ModeSplit moves every left
/// factor with mode index >= 0 to the right.
enum class Ordering { FockAdapted, ModeSplit };

std::string to_string(Ordering o);
Ordering parse_ordering(std::string_view s);

/// Mode u(k) of base oscillator number `sym` of the space.
struct Mode {
  int sym = 0;
  int k = 0;
  friend auto operator<=>(const Mode&, const Mode&) = default;
};

struct Occupation {
  Mode mode;
  int mult = 1;
  friend auto operator<=>(const Occupation&, const Occupation&) = default;
};

/// Ordered product of creation modes acting on the vacuum, sorted by mode.
using FockState = std::vector<Occupation>;

class FockVector {
public:
  FockVector() = default;
  static FockVector basis(const FockState& s, const Scalar& c = Scalar(1));

  void add(const FockState& s, const Scalar& c);
  const std::map<FockState, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  FockVector& operator+=(const FockVector& o);
  FockVector& operator-=(const FockVector& o);
  friend FockVector operator+(FockVector a, const FockVector& b) { return a += b; }
  friend FockVector operator-(FockVector a, const FockVector& b) { return a -= b; }
  friend FockVector operator*(const Scalar& c, const FockVector& v);
  friend bool operator==(const FockVector&, const FockVector&) = default;

private:
  std::map<FockState, Scalar> terms_;
};

/// Linear operator on the Fock module with a parity, applied exactly.
struct ModeOperator {
  std::string label;
  Parity parity = Parity::Even;
  std::function<FockVector(const FockVector&)> fn;

  FockVector operator()(const FockVector& v) const { return fn(v); }

  static ModeOperator scalar(const Scalar& c, std::string label = "");
  friend ModeOperator operator+(const ModeOperator& a, const ModeOperator& b);
  friend ModeOperator operator-(const ModeOperator& a, const ModeOperator& b);
  friend ModeOperator operator*(const Scalar& c, const ModeOperator& a);
};

/// [A, B] = AB - (-1)^{p(A)p(B)} BA.
ModeOperator supercommutator(const ModeOperator& a, const ModeOperator& b);

/// Induced module of the oscillator algebra of a generator set.
///
/// Unstarred fields carry conformal weight 1, starred ones weight 0 and the
/// ghost weight 1/2, so that [u(k), v(l)] = ⟨u,v⟩δ_{k,-l} integrates to
/// [u(z), v(w)] = ⟨u,v⟩δ(z-w). Creation modes: u(-k) (k >= 1) and u*(0).
/// e(0) acts as √-1 times the parity operator of the state.
class FockSpace {
public:
  FockSpace(GeneratorSet gens, Ordering ordering);

  const GeneratorSet& gens() const { return gens_; }
  Ordering ordering() const { return ordering_; }
  const std::vector<FieldSymbol>& symbols() const { return gens_.symbols(); }
  int symbol_index(const FieldSymbol& s) const;

  bool is_creator(const Mode& m) const;
  bool is_klein(const Mode& m) const;

  static FockVector vacuum() { return FockVector::basis({}); }
  int energy(const FockState& s) const;
  int zero_degree(const FockState& s) const;
  int parity(const FockState& s) const;
  int cbar_quanta(const FockState& s) const;

  FockVector apply(const Mode& m, const FockVector& v) const;
  ModeOperator elementary(const FieldSymbol& u, int k) const;

  /// Mode F(K) with F(z) = Σ F(K) z^{-K-1}; `twice_k` = 2K (odd for fields
  /// with a single ghost factor).
  FockVector apply_composite(const LocalField& f, int twice_k, const FockVector& v) const;
  ModeOperator composite(const LocalField& f, int twice_k, std::string label = "") const;

  /// All basis states with energy <= emax and zero-mode degree <= zmax.
  std::vector<FockState> window(int emax, int zmax) const;

  std::string render(const FockState& s) const;
  std::string render(const FockVector& v) const;

private:
  int twice_weight(const FieldSymbol& s) const;
  void apply_basis(const Mode& m, const FockState& s, const Scalar& c, FockVector& out) const;

  GeneratorSet gens_;
  Ordering ordering_;
  std::vector<int> parity_bit_;
  std::vector<int> twice_weight_;
  std::vector<char> is_cbar_;
  std::vector<Scalar> pair_;  // pair_[a * size + b] = ⟨a, b⟩
  std::vector<char> paired_;
};

/// True when every monomial of f carries exactly one ghost factor.
bool half_integer_modes(const LocalField& f);

enum class OracleStatus { Exact, ModNullAction, Fail };
std::string to_string(OracleStatus s);

struct WindowSpec {
  int emax = 2;
  int zmax = 1;
};

struct OracleReport {
  std::string id;
  int twice_k = 0;
  int twice_l = 0;
  WindowSpec window;
  Ordering ordering = Ordering::FockAdapted;
  OracleStatus status = OracleStatus::Exact;
  std::string worst_residual;  // rendered residual with the most terms, or empty
  std::size_t states = 0;
};

/// Evaluates lhs - rhs on every state; results may leave the window.
OracleReport check_identity(const FockSpace& space, const std::string& id, const ModeOperator& lhs,
                            const ModeOperator& rhs, const std::vector<FockState>& states,
                            unsigned threads = 1);

/// [u(k), v(l)] = ⟨u,v⟩δ_{k,-l} for all generator pairs and |k|,|l| <= kmax;
/// one report per ordered generator pair.
std::vector<OracleReport> elementary_checks(const FockSpace& space, int kmax, const WindowSpec& w,
                                            unsigned threads = 1);

/// Mode-level operator for the left side of a relation template at modes (k, l)
/// given in doubled units, and for its right side with 𝒦 = level.
ModeOperator relation_lhs_op(const FockSpace& space, const FieldAssignment& fa,
                             const RelationTemplate& t, int twice_k, int twice_l);
ModeOperator relation_rhs_op(const FockSpace& space, const FieldAssignment& fa,
                             const RelationTemplate& t, int twice_k, int twice_l,
                             const Scalar& level);

/// Doubled mode index for integer grid point k of the field (k + 1/2 on the
/// half-integer grid).
int grid_mode(const LocalField& f, int k);

/// Checks relation templates at all (k, l) in [-kmax, kmax]^2.
std::vector<OracleReport> composite_checks(const FockSpace& space, const FieldAssignment& fa,
                                           const std::vector<RelationTemplate>& templates,
                                           const Scalar& level, int kmax, const WindowSpec& w,
                                           unsigned threads = 1);

/// 𝒦 read from [A_i(1), A_j(-1)] on the vacuum for the first pair with (α_i|α_j) != 0.
Scalar fock_level(const FockSpace& space, const FieldAssignment& fa);

/// Symbolic exact => oracle exact; symbolic mod-null => oracle not fail.
bool agrees(CheckStatus symbolic, OracleStatus oracle);

}  // namespace toroidal
