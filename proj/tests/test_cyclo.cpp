#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "fcat/cyclo.hpp"

#include <random>
#include <vector>

using namespace fcat;

namespace {

Cyclo zeta(unsigned n, long long k = 1) { return Cyclo::root(n, k); }

Cyclo golden() { return -zeta(5, 2) - zeta(5, 3); }         // (1+sqrt5)/2
Cyclo golden_bar() { return Cyclo(1) + zeta(5, 2) + zeta(5, 3); }  // (1-sqrt5)/2

struct RandomCyclo {
  std::mt19937_64 rng;
  std::vector<unsigned> conductors{1, 3, 4, 5, 8, 9, 12, 15, 16, 24};

  explicit RandomCyclo(std::uint64_t seed) : rng(seed) {}

  Rational coeff() {
    long n = static_cast<long>(rng() % 9) - 4;
    long d = 1 + static_cast<long>(rng() % 3);
    return Rational(n, d);
  }

  Cyclo next() {
    unsigned n = conductors[rng() % conductors.size()];
    Cyclo acc;
    unsigned terms = 1 + rng() % 3;
    for (unsigned i = 0; i < terms; ++i)
      acc += Cyclo(coeff()) * zeta(n, static_cast<long long>(rng() % n));
    return acc;
  }
};

}  // namespace

TEST_CASE("roots of unity canonical values") {
  CHECK(zeta(2, 1) == Cyclo(-1));
  CHECK(zeta(1, 0) == Cyclo(1));
  CHECK(zeta(4, 2) == Cyclo(-1));
  CHECK(zeta(3, 3) == Cyclo(1));
  CHECK(Cyclo::root(3, -1) == zeta(3, 2));
  CHECK_THROWS_AS(Cyclo::root(0, 1), std::invalid_argument);
  // conductor 2 mod 4 is normalized away
  CHECK(zeta(6, 1) == -zeta(3, 2));
  CHECK(zeta(6, 1).conductor() == 3);
  CHECK(zeta(12, 2).conductor() == 3);
}

TEST_CASE("addition") {
  Cyclo s = zeta(5, 1) + zeta(5, 2) + zeta(5, 3) + zeta(5, 4);
  CHECK(s == Cyclo(-1));
  CHECK(s.conductor() == 1);

  Cyclo sqrt2 = zeta(8, 1) + zeta(8, 7);
  CHECK(sqrt2 == zeta(8, 1) - zeta(8, 3));
  CHECK(sqrt2.is_real());
  CHECK(sqrt2.sign_real() == 1);
  CHECK(sqrt2 * sqrt2 == Cyclo(2));

  RandomCyclo gen(11);
  for (int i = 0; i < 50; ++i) {
    Cyclo x = gen.next();
    CHECK(x + Cyclo() == x);
  }
}

TEST_CASE("multiplication") {
  CHECK(zeta(3, 1) * zeta(3, 2) == Cyclo(1));
  CHECK(golden() * golden_bar() == Cyclo(-1));
  CHECK(zeta(8, 1) * zeta(8, 1) == zeta(4, 1));
}

TEST_CASE("inverse") {
  for (unsigned n : {3u, 5u, 8u, 12u}) {
    for (unsigned k = 1; k < n; ++k) {
      CHECK(zeta(n, k).inv() == zeta(n, n - k));
    }
  }
  CHECK(golden().inv() == golden() - Cyclo(1));
  CHECK_THROWS_AS(Cyclo().inv(), DivisionByZero);
}

TEST_CASE("conjugation") {
  CHECK(zeta(5, 1).conj() == zeta(5, 4));
  CHECK(zeta(4, 1).conj() == -zeta(4, 1));
  Cyclo sqrt2 = zeta(8, 1) + zeta(8, 7);
  CHECK(sqrt2.conj() == sqrt2);

  RandomCyclo gen(12);
  for (int i = 0; i < 200; ++i) {
    Cyclo x = gen.next(), y = gen.next();
    CHECK((x * y).conj() == x.conj() * y.conj());
    CHECK((x + y).conj() == x.conj() + y.conj());
    CHECK(x.conj().conj() == x);
  }
}

TEST_CASE("galois automorphisms") {
  CHECK(zeta(5, 1).galois(2) == zeta(5, 2));
  CHECK_THROWS_AS(zeta(5, 1).galois(5), std::invalid_argument);
}

TEST_CASE("numeric enclosures match printed census values") {
  Cyclo a = zeta(7, 4) + zeta(7, 3) + Cyclo(2);
  CHECK(format_numeric(a, 3) == "0.198");

  CHECK(format_numeric(zeta(16, 1), 3) == "0.924 + 0.383i");
  CHECK(format_numeric(golden(), 3) == "1.618");
  CHECK(format_numeric(golden_bar(), 3) == "-0.618");
  CHECK(format_numeric(Cyclo(Rational(1, 2)), 3) == "0.5");
  CHECK(format_numeric(Cyclo(1), 3) == "1");
  CHECK(format_numeric(zeta(4, 1), 3) == "i");
  CHECK(format_numeric(-zeta(4, 1), 3) == "-i");
  CHECK(format_numeric(zeta(3, 1), 3) == "-0.5 + 0.866i");

  ComplexInterval box = a.to_complex(6);
  CHECK(box.re_width() < Rational(1, 1000000));
  CHECK(box.im_lo <= 0);
  CHECK(box.im_hi >= 0);
}

TEST_CASE("enclosures are nested for increasing digits") {
  RandomCyclo gen(13);
  for (int i = 0; i < 40; ++i) {
    Cyclo x = gen.next();
    ComplexInterval coarse = x.to_complex(4);
    ComplexInterval fine = x.to_complex(14);
    CHECK(coarse.contains(fine));
  }
}

TEST_CASE("sign of real values") {
  CHECK(golden().sign_real() == 1);
  CHECK(golden_bar().sign_real() == -1);
  CHECK(Cyclo().sign_real() == 0);
  Cyclo sqrt2 = zeta(8, 1) + zeta(8, 7);
  CHECK((-sqrt2).sign_real() == -1);
}

TEST_CASE("parsing") {
  CHECK(Cyclo::parse("E(5)^3") == zeta(5, 3));
  Cyclo v = Cyclo(Rational(-1, 2)) * zeta(3, 2) + zeta(7, 1);
  CHECK(Cyclo::parse("-1/2*E(3)^2 + E(7)") == v);
  CHECK(Cyclo::parse("0") == Cyclo());
  CHECK(Cyclo::parse(" - 1") == Cyclo(-1));
  CHECK(Cyclo::parse("2/3") == Cyclo(Rational(2, 3)));
  CHECK(Cyclo::parse("E(8)-E(8)^3") == zeta(8, 1) + zeta(8, 7));
  CHECK(Cyclo::parse("E(5)^-1") == zeta(5, 4));
  CHECK_THROWS_AS(Cyclo::parse("E(4"), ParseError);
  CHECK_THROWS_AS(Cyclo::parse(""), ParseError);
  CHECK_THROWS_AS(Cyclo::parse("E(0)"), ParseError);
  CHECK_THROWS_AS(Cyclo::parse("1 + "), ParseError);
  try {
    Cyclo::parse("1 + %");
  } catch (const ParseError& e) {
    CHECK(e.offset == 4);
  }
}

TEST_CASE("formatting") {
  CHECK(Cyclo().str() == "0");
  CHECK(Cyclo(-1).str() == "-1");
  CHECK(zeta(3, 1).str() == "E(3)");
  CHECK((zeta(8, 1) + zeta(8, 7)).str() == "E(8) - E(8)^3");
  CHECK((Cyclo(Rational(1, 2)) * zeta(5, 2)).str() == "1/2*E(5)^2");
}

TEST_CASE("parse-format round trip on random values") {
  RandomCyclo gen(14);
  for (int i = 0; i < 1000; ++i) {
    Cyclo x = gen.next();
    CHECK(Cyclo::parse(x.str()) == x);
  }
}

TEST_CASE("field axioms on random triples") {
  RandomCyclo gen(15);
  for (int i = 0; i < 1000; ++i) {
    Cyclo x = gen.next(), y = gen.next(), z = gen.next();
    CHECK((x + y) + z == x + (y + z));
    CHECK((x * y) * z == x * (y * z));
    CHECK(x * (y + z) == x * y + x * z);
    CHECK(x + (-x) == Cyclo());
    CHECK(x * y == y * x);
    if (!x.is_zero()) CHECK(x * x.inv() == Cyclo(1));
  }
}

TEST_CASE("canonical form is independent of the construction path") {
  std::mt19937_64 rng(16);
  for (int i = 0; i < 200; ++i) {
    unsigned n = 2 + rng() % 30;
    unsigned k = rng() % n;
    Cyclo a = Cyclo::root(n, k);
    CHECK(a == Cyclo::root(2 * n, 2 * k));
    CHECK(a == Cyclo::root(3 * n, 3 * k));
    CHECK(a == Cyclo::root(4 * n, 4 * k));
  }
  // the same value assembled at different conductors
  Cyclo via24 = zeta(24, 8);  // = zeta_3
  CHECK(via24 == zeta(3, 1));
  CHECK(via24.conductor() == 3);
}

TEST_CASE("root of unity recognition") {
  auto r = as_root_of_unity(zeta(8, 3));
  REQUIRE(r.has_value());
  CHECK(r->first == 8);
  CHECK(r->second == 3);

  r = as_root_of_unity(Cyclo(-1));
  REQUIRE(r.has_value());
  CHECK(r->first == 2);
  CHECK(r->second == 1);

  r = as_root_of_unity(Cyclo(1));
  REQUIRE(r.has_value());
  CHECK(r->first == 1);

  r = as_root_of_unity(zeta(6, 1));  // conductor 3, order 6
  REQUIRE(r.has_value());
  CHECK(r->first == 6);
  CHECK(r->second == 1);

  CHECK(!as_root_of_unity(golden()).has_value());
  CHECK(!as_root_of_unity(Cyclo()).has_value());
  CHECK(!as_root_of_unity(Cyclo(2)).has_value());
}

TEST_CASE("real and imaginary parts") {
  Cyclo x = zeta(16, 1);
  Cyclo re = real_part(x), im = imag_part(x);
  CHECK(re.is_real());
  CHECK(im.is_real());
  CHECK(re + zeta(4, 1) * im == x);
}
