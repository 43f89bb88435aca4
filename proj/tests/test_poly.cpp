#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "cyclojac/parse.hpp"
#include "cyclojac/poly.hpp"
#include "support/oracles.hpp"

using cyclojac::ParseError;
using cyclojac::parse_polynomial;
using cyclojac::Rational;
using cyclojac::RationalPoly;

TEST_CASE("parse_polynomial on plain expressions") {
  const RationalPoly f = parse_polynomial("x^4 - x - 1");
  REQUIRE(f.degree() == 4);
  REQUIRE(f.coeff(0) == -1);
  REQUIRE(f.coeff(1) == -1);
  REQUIRE(f.coeff(2) == 0);
  REQUIRE(f.coeff(3) == 0);
  REQUIRE(f.coeff(4) == 1);

  const RationalPoly g = parse_polynomial("(x-1)*(x+1)");
  REQUIRE(g == parse_polynomial("x^2 - 1"));

  const RationalPoly h = parse_polynomial("1/2*x^2 + 3/4");
  REQUIRE(h.coeff(2) == Rational(1, 2));
  REQUIRE(h.coeff(0) == Rational(3, 4));
}

TEST_CASE("parse_polynomial rejects malformed input") {
  try {
    parse_polynomial("x^^2");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    REQUIRE(e.offset() == 2);
  }
  REQUIRE_THROWS_AS(parse_polynomial("x + y"), ParseError);
  REQUIRE_THROWS_AS(parse_polynomial("x^-2"), ParseError);
  REQUIRE_THROWS_AS(parse_polynomial("(x+1"), ParseError);
}

TEST_CASE("discriminant of the worked quartic") {
  REQUIRE(RationalPoly::discriminant(parse_polynomial("x^4 - x - 1")) == Rational(-283));
  REQUIRE(RationalPoly::discriminant(parse_polynomial("x^2 - 1")) == Rational(4));
  REQUIRE(RationalPoly::discriminant(parse_polynomial("x^3 - x")) == Rational(4));
  REQUIRE_THROWS_AS(RationalPoly::discriminant(RationalPoly::constant(Rational(5))),
                    std::invalid_argument);
}

TEST_CASE("resultant agrees with the Sylvester determinant") {
  std::mt19937 rng(20240811);
  std::uniform_int_distribution<int> coeff(-9, 9);
  std::uniform_int_distribution<int> deg(1, 5);
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<Rational> fc, gc;
    const int df = deg(rng), dg = deg(rng);
    for (int i = 0; i < df; ++i) fc.emplace_back(coeff(rng));
    fc.emplace_back(coeff(rng) | 1);  // nonzero lead
    for (int i = 0; i < dg; ++i) gc.emplace_back(coeff(rng));
    gc.emplace_back(coeff(rng) | 1);
    const RationalPoly f(fc), g(gc);
    REQUIRE(RationalPoly::resultant(f, g) == oracles::sylvester_resultant(f, g));
  }
}

TEST_CASE("quartic trinomial discriminant identity") {
  // disc(x^4 + a x + b) = -27 a^4 + 256 b^3, confirmed by the independent
  // Sylvester oracle before pinning.
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> coeff(-20, 20);
  for (int trial = 0; trial < 50; ++trial) {
    const long a = coeff(rng), b = coeff(rng);
    std::vector<Rational> c{Rational(b), Rational(a), Rational(0), Rational(0), Rational(1)};
    const RationalPoly f(c);
    const Rational expected =
        Rational(-27) * Rational(a) * Rational(a) * Rational(a) * Rational(a) +
        Rational(256) * Rational(b) * Rational(b) * Rational(b);
    REQUIRE(RationalPoly::discriminant(f) == expected);
    const Rational via_oracle = Rational((4 * 3 / 2) % 2 == 0 ? 1 : -1) *
                                oracles::sylvester_resultant(f, f.derivative()) / f.leading();
    REQUIRE(via_oracle == expected);
  }
}

TEST_CASE("squarefree detection") {
  REQUIRE(parse_polynomial("x^4 - x - 1").is_squarefree());
  REQUIRE_FALSE(parse_polynomial("(x-1)*(x-1)").is_squarefree());
  REQUIRE(parse_polynomial("x^2 + 1").is_squarefree());
}

TEST_CASE("printing round-trips through the parser") {
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> num(-12, 12);
  std::uniform_int_distribution<int> den(1, 6);
  std::uniform_int_distribution<int> deg(0, 6);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<Rational> c;
    const int d = deg(rng);
    for (int i = 0; i <= d; ++i) {
      Rational v(num(rng), den(rng));
      v.canonicalize();
      c.push_back(v);
    }
    const RationalPoly f(c);
    REQUIRE(parse_polynomial(f.to_string()) == f);
  }
}

TEST_CASE("polynomial division and gcd") {
  const RationalPoly f = parse_polynomial("x^5 - 1");
  const RationalPoly g = parse_polynomial("x - 1");
  auto [q, rem] = f.divmod(g);
  REQUIRE(rem.is_zero());
  REQUIRE(q * g == f);
  REQUIRE(RationalPoly::gcd(f, g) == g.monic());
  REQUIRE(RationalPoly::gcd(parse_polynomial("x^2+1"), parse_polynomial("x^2-1")).degree() == 0);
}
