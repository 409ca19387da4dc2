#include "toroidal/scalar.hpp"

#include <cctype>
#include <ostream>

namespace toroidal {

Scalar::Scalar(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
  re_.canonicalize();
  im_.canonicalize();
}

Scalar Scalar::rational(long num, long den) {
  if (den == 0) throw DivisionByZero();
  return Scalar(mpq_class(num, den));
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw DivisionByZero();
  mpq_class norm = re_ * re_ + im_ * im_;
  return Scalar(re_ / norm, -im_ / norm);
}

Scalar& Scalar::operator+=(const Scalar& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  if (sgn(o.im_) == 0) {
    re_ *= o.re_;
    if (sgn(im_) != 0) im_ *= o.re_;
    return *this;
  }
  if (sgn(im_) == 0) {
    im_ = re_ * o.im_;
    re_ *= o.re_;
    return *this;
  }
  mpq_class r = re_ * o.re_ - im_ * o.im_;
  mpq_class i = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(r);
  im_ = std::move(i);
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
  int c = cmp(a.re_, b.re_);
  if (c == 0) c = cmp(a.im_, b.im_);
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

std::string Scalar::str() const {
  if (is_zero()) return "0";
  std::string out;
  if (sgn(re_) != 0) out = re_.get_str();
  if (sgn(im_) != 0) {
    mpq_class mag = abs(im_);
    if (sgn(im_) < 0)
      out += "-";
    else if (!out.empty())
      out += "+";
    if (mag != 1) out += mag.get_str();
    out += "i";
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

namespace {

struct Cursor {
  std::string_view s;
  std::size_t pos = 0;
  bool done() const { return pos >= s.size(); }
  char peek() const { return done() ? '\0' : s[pos]; }
};

[[noreturn]] void fail(std::string_view text, const std::string& why) {
  throw ParseError("bad scalar '" + std::string(text) + "': " + why);
}

// Unsigned rational magnitude `p[/q]`; returns false if no digits present.
bool read_magnitude(Cursor& c, mpq_class& out, std::string_view text) {
  std::size_t start = c.pos;
  while (!c.done() && std::isdigit(static_cast<unsigned char>(c.peek()))) ++c.pos;
  if (c.pos == start) return false;
  mpz_class num(std::string(c.s.substr(start, c.pos - start)));
  mpz_class den = 1;
  if (c.peek() == '/') {
    ++c.pos;
    std::size_t ds = c.pos;
    while (!c.done() && std::isdigit(static_cast<unsigned char>(c.peek()))) ++c.pos;
    if (c.pos == ds) fail(text, "missing denominator");
    den = mpz_class(std::string(c.s.substr(ds, c.pos - ds)));
    if (den == 0) fail(text, "zero denominator");
  }
  out = mpq_class(num, den);
  out.canonicalize();
  return true;
}

// Optional `*` then `i`.
bool read_unit(Cursor& c) {
  std::size_t save = c.pos;
  if (c.peek() == '*') ++c.pos;
  if (c.peek() == 'i') {
    ++c.pos;
    return true;
  }
  c.pos = save;
  return false;
}

}  // namespace

Scalar Scalar::parse(std::string_view text) {
  Cursor c{text};
  mpq_class re = 0, im = 0;
  int sign = 1;
  if (c.peek() == '+' || c.peek() == '-') {
    sign = c.peek() == '-' ? -1 : 1;
    ++c.pos;
  }
  mpq_class mag;
  bool have_mag = read_magnitude(c, mag, text);
  if (read_unit(c)) {
    im = have_mag ? mag : mpq_class(1);
    im *= sign;
  } else {
    if (!have_mag) fail(text, "expected a number");
    re = mag * sign;
    if (!c.done()) {
      if (c.peek() != '+' && c.peek() != '-') fail(text, "unexpected character");
      int isign = c.peek() == '-' ? -1 : 1;
      ++c.pos;
      mpq_class imag;
      bool have_imag = read_magnitude(c, imag, text);
      if (!read_unit(c)) fail(text, "imaginary part must end in 'i'");
      im = (have_imag ? imag : mpq_class(1)) * isign;
    }
  }
  if (!c.done()) fail(text, "trailing characters");
  return Scalar(re, im);
}

}  // namespace toroidal
