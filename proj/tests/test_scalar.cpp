#include "support.hpp"

#include <doctest.h>

using namespace toroidal;

TEST_CASE("scalar arithmetic examples") {
  CHECK(Scalar::i() * Scalar::i() == Scalar(-1));
  CHECK(Scalar::rational(1, 2) + Scalar::rational(1, 2) == Scalar(1));
  CHECK(Scalar::rational(2, 4) == Scalar::rational(1, 2));
  CHECK(Scalar::i() != -Scalar::i());
  CHECK((Scalar(1) / Scalar(3)) * Scalar(3) == Scalar(1));
}

TEST_CASE("sqrt(-1) times -2 against raw mpz arithmetic") {
  Scalar got = Scalar::i() * Scalar(-2);
  // (0 + 1i)(-2 + 0i) computed on bare numerators.
  mpz_class re = mpz_class(0) * -2 - mpz_class(1) * 0;
  mpz_class im = mpz_class(0) * 0 + mpz_class(1) * -2;
  CHECK(got.re() == mpq_class(re));
  CHECK(got.im() == mpq_class(im));
  CHECK(got.str() == "-2i");
}

TEST_CASE("rendering") {
  CHECK(Scalar().str() == "0");
  CHECK(Scalar::rational(3, 4).str() == "3/4");
  CHECK((-Scalar::i()).str() == "-i");
  CHECK(Scalar(mpq_class(0), mpq_class(1, 2)).str() == "1/2i");
  CHECK(Scalar(mpq_class(1, 2), mpq_class(3, 4)).str() == "1/2+3/4i");
  CHECK(Scalar(mpq_class(-1, 2), mpq_class(-3, 4)).str() == "-1/2-3/4i");
}

TEST_CASE("parsing") {
  CHECK(Scalar::parse("1/2+3/4i") == Scalar(mpq_class(1, 2), mpq_class(3, 4)));
  CHECK(Scalar::parse("1/2+3/4*i") == Scalar(mpq_class(1, 2), mpq_class(3, 4)));
  CHECK(Scalar::parse("-i") == -Scalar::i());
  CHECK(Scalar::parse("2/4") == Scalar::rational(1, 2));
  CHECK_THROWS_AS(Scalar::parse("1/0"), std::exception);
  CHECK_THROWS_AS(Scalar::parse("abc"), ParseError);
  CHECK_THROWS_AS(Scalar::parse("1+2"), ParseError);
  CHECK_THROWS_AS(Scalar() .inverse(), DivisionByZero);
}

TEST_CASE("field axioms on random Gaussian rationals") {
  support::Rng rng(11);
  auto draw = [&] {
    return Scalar(mpq_class(rng.uniform(-50, 50), rng.uniform(1, 30)),
                  mpq_class(rng.uniform(-50, 50), rng.uniform(1, 30)));
  };
  for (int t = 0; t < 300; ++t) {
    Scalar a = draw(), b = draw(), c = draw();
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    CHECK(a + (-a) == Scalar());
    if (!a.is_zero()) CHECK(a * a.inverse() == Scalar(1));
    if (!b.is_zero()) CHECK((a / b) * b == a);
  }
}

TEST_CASE("render/parse round trip") {
  support::Rng rng(12);
  for (int t = 0; t < 300; ++t) {
    Scalar a(mpq_class(rng.uniform(-40, 40), rng.uniform(1, 25)),
             rng.coin() ? mpq_class(0) : mpq_class(rng.uniform(-40, 40), rng.uniform(1, 25)));
    CHECK(Scalar::parse(a.str()) == a);
  }
}

TEST_CASE("Koszul sign") {
  CHECK(koszul(0, 0) == 1);
  CHECK(koszul(0, 1) == 1);
  CHECK(koszul(1, 0) == 1);
  CHECK(koszul(1, 1) == -1);
}
