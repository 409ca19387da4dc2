#pragma once

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

namespace toroidal {

/// Thrown for malformed input (scalar text, symbols, parameters, CLI tokens).
class ParseError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Division by an exact zero.
class DivisionByZero : public std::domain_error {
public:
  DivisionByZero() : std::domain_error("division by zero in Q(i)") {}
};

/// Exact Gaussian rational a + b*i with a, b in Q.
///
/// Both parts are kept as canonical GMP rationals (positive denominator,
/// coprime numerator/denominator), so structural equality is numeric
/// equality. Values are immutable in spirit; the compound operators exist
/// for accumulation loops.
class Scalar {
public:
  Scalar() = default;
  Scalar(long v) : re_(v) {}  // NOLINT(google-explicit-constructor)
  Scalar(mpq_class re, mpq_class im = 0);
  static Scalar rational(long num, long den);
  static Scalar i() { return Scalar(mpq_class(0), mpq_class(1)); }

  /// Parses the textual grammar `[-]p[/q][(+|-)r[/s]i]` (a bare imaginary
  /// part such as `i`, `-2i`, `1/2i` is also accepted, as is `*i`).
  static Scalar parse(std::string_view text);

  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }
  bool is_one() const { return re_ == 1 && sgn(im_) == 0; }

  void negate() {
    mpq_neg(re_.get_mpq_t(), re_.get_mpq_t());
    mpq_neg(im_.get_mpq_t(), im_.get_mpq_t());
  }

  Scalar conj() const { return Scalar(re_, -im_); }
  Scalar inverse() const;

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend Scalar operator-(const Scalar& a) { return Scalar(-a.re_, -a.im_); }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  /// Total order (lexicographic on re, im); only used for deterministic containers.
  friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b);

  /// Canonical text: `0`, `3/4`, `-i`, `1/2i`, `1/2+3/4i`.
  std::string str() const;

private:
  mpq_class re_{0};
  mpq_class im_{0};
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

/// (-1)^(a*b) for parities a, b in {0,1}.
inline int koszul(int a, int b) { return (a & b) ? -1 : 1; }

}  // namespace toroidal
