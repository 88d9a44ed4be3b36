#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "yotl/scalars.hpp"

#include <stdexcept>

using namespace yotl;

TEST_CASE("rational helpers") {
  CHECK(make_rational(4, 6) == make_rational(2, 3));
  CHECK(parse_rational("-7/3") == make_rational(-7, 3));
  CHECK(parse_rational("5") == Rational(5));
  CHECK(rational_str(make_rational(-7, 3)) == "-7/3");
  CHECK(rational_str(Rational(4)) == "4");
  CHECK(rational_pow(make_rational(2, 3), 3) == make_rational(8, 27));
  CHECK(rational_pow(make_rational(2, 3), -2) == make_rational(9, 4));
  CHECK(rational_pow(Rational(7), 0) == Rational(1));

  auto s = rational_sqrt(make_rational(4, 9));
  REQUIRE(s.has_value());
  CHECK(*s == make_rational(2, 3));
  CHECK_FALSE(rational_sqrt(Rational(2)).has_value());
  CHECK_FALSE(rational_sqrt(make_rational(-1, 4)).has_value());
}

TEST_CASE("coefficient ring structure") {
  Coefficient zero;
  Coefficient one(1);
  Coefficient u = Coefficient::u_pow(1);

  CHECK(zero.is_zero());
  CHECK(one.is_one());
  CHECK((one - one).is_zero());
  CHECK((u - u).is_zero());

  // (u - 1)(u + 1) = u^2 - 1
  Coefficient um1 = u - one;
  Coefficient up1 = u + one;
  Coefficient expected = Coefficient::u_pow(2) - one;
  CHECK(um1 * up1 == expected);

  // Laurent part: u * u^-1 = 1
  CHECK(u * Coefficient::u_pow(-1) == one);

  // distributivity spot check
  Coefficient a = Coefficient::u_pow(2, make_rational(1, 2)) + Coefficient(3);
  Coefficient b = u - Coefficient(make_rational(2, 5));
  Coefficient c = Coefficient::u_pow(-1) + one;
  CHECK(a * (b + c) == a * b + a * c);
}

TEST_CASE("coefficient division and inverse") {
  Coefficient u = Coefficient::u_pow(1);
  Coefficient um1 = u - Coefficient(1);
  Coefficient up1 = u + Coefficient(1);

  Coefficient q = um1 / up1;
  CHECK_FALSE(q.is_laurent());
  CHECK(q * up1 == um1);
  CHECK(q.inverse() * q == Coefficient(1));

  // (u^2 - 1)/(u + 1) collapses back to a Laurent polynomial
  Coefficient collapsed = (um1 * up1) / up1;
  CHECK(collapsed.is_laurent());
  CHECK(collapsed == um1);

  CHECK_THROWS_AS(um1 / Coefficient(), std::domain_error);
}

TEST_CASE("coefficient evaluation and poles") {
  Coefficient u = Coefficient::u_pow(1);
  Coefficient q = (u - Coefficient(1)) / (u + Coefficient(1));

  CHECK(q.evaluate(Rational(2)) == make_rational(1, 3));
  CHECK(q.has_pole_at(Rational(-1)));
  CHECK_FALSE(q.has_pole_at(Rational(3)));
  CHECK_THROWS_AS(q.evaluate(Rational(-1)), std::domain_error);

  // negative powers cannot be evaluated at zero
  Coefficient laurent = Coefficient::u_pow(-2, make_rational(3, 4));
  CHECK(laurent.evaluate(Rational(2)) == make_rational(3, 16));
  CHECK_THROWS_AS(laurent.evaluate(Rational(0)), std::domain_error);
}

TEST_CASE("coefficient rendering and parsing") {
  Coefficient u = Coefficient::u_pow(1);
  CHECK(Coefficient(1).str() == "1");
  CHECK((u - Coefficient(1)).str() == "u - 1");
  CHECK(Coefficient::u_pow(-1).str() == "u^-1");
  CHECK(Coefficient::u_pow(1, -2).str() == "-2*u");
  CHECK(((u - Coefficient(1)) / (u + Coefficient(1))).str() == "(u - 1)/(u + 1)");

  for (const Coefficient& c : {
           Coefficient(),
           Coefficient(make_rational(-5, 7)),
           Coefficient::u_pow(3) + Coefficient::u_pow(-2, make_rational(1, 2)),
           (u * u - Coefficient(4)) / (u + Coefficient(1)),
       }) {
    CHECK(parse_coefficient(c.str()) == c);
  }
}

TEST_CASE("trace polynomial basics") {
  int d = 2;
  TracePolynomial z = TracePolynomial::z(d);
  TracePolynomial x1 = TracePolynomial::x(d, 1);
  TracePolynomial one = TracePolynomial::one(d);

  // x subscripts reduce mod d and x_0 is the unit
  CHECK(TracePolynomial::x(d, 0) == one);
  CHECK(TracePolynomial::x(d, 2) == one);
  CHECK(TracePolynomial::x(d, 3) == x1);

  TracePolynomial p = z * z + z * x1 + one;
  CHECK(p.z_degree() == 2);
  CHECK(p.coefficient_of_z(1) == x1);
  CHECK(p.coefficient_of_z(2) == one);
  CHECK(p.coefficient_of_z(5).is_zero());
  CHECK((p - p).is_zero());
  CHECK(TracePolynomial(d).z_degree() == -1);

  TracePolynomial q = z * x1 - one;
  CHECK(p * q == q * p);
}

TEST_CASE("trace polynomial rendering") {
  // (u + 1) z^2 + (u + 2) z + 1, ascending by z power
  TracePolynomial p = TracePolynomial::one(1) +
                      TracePolynomial::z(1) * (Coefficient::u_pow(1) + Coefficient(2)) +
                      TracePolynomial::z(1, 2) * (Coefficient::u_pow(1) + Coefficient(1));
  CHECK(p.str() == "1 + (u + 2)*z + (u + 1)*z^2");
}

TEST_CASE("quadratic extension arithmetic") {
  // residues mod z^2 + 4/3 z + 1/3 (monic form of 3z^2 + 4z + 1)
  QuadModulus m{make_rational(4, 3), make_rational(1, 3)};
  QuadExtScalar z(Rational(0), Rational(1), m);
  QuadExtScalar zsq = z * z;
  CHECK(zsq == QuadExtScalar(make_rational(-1, 3), make_rational(-4, 3), m));

  // the modulus annihilates its own root
  QuadExtScalar value = zsq + z * make_rational(4, 3) + QuadExtScalar::from_rational(make_rational(1, 3), m);
  CHECK(value.is_zero());

  CHECK(z.pow(0) == QuadExtScalar::from_rational(Rational(1), m));
  CHECK(z.pow(3) == z * z * z);
  CHECK((z - z).is_zero());
  CHECK((-z + z).is_zero());
}

TEST_CASE("quadratic roots, rational discriminant") {
  // 3z^2 + 4z + 1 = (3z + 1)(z + 1)
  QuadRoots r = quad_roots_numeric(Rational(3), Rational(4), Rational(1));
  REQUIRE(r.rational);
  CHECK(r.first.c1() == 0);
  CHECK(r.first.c0() == make_rational(-1, 3));
  CHECK(r.second.c0() == Rational(-1));
}

TEST_CASE("quadratic roots, irrational discriminant") {
  // 3z^2 + 29/8 z + 1 has discriminant 73/64, not a rational square
  QuadRoots r = quad_roots_numeric(Rational(3), make_rational(29, 8), Rational(1));
  REQUIRE_FALSE(r.rational);
  CHECK(r.first.c0() == 0);
  CHECK(r.first.c1() == 1);

  // Vieta: sum -b/a, product c/a, exactly in the extension
  QuadExtScalar sum = r.first + r.second;
  CHECK(sum.c1() == 0);
  CHECK(sum.c0() == make_rational(-29, 24));
  QuadExtScalar prod = r.first * r.second;
  CHECK(prod.c1() == 0);
  CHECK(prod.c0() == make_rational(1, 3));
}

TEST_CASE("substitution into trace polynomials") {
  // p = (u + 1) z^2 + (u + 2) z + 1 vanishes at z = -1/3 when u = 2
  TracePolynomial p = TracePolynomial::one(1) +
                      TracePolynomial::z(1) * (Coefficient::u_pow(1) + Coefficient(2)) +
                      TracePolynomial::z(1, 2) * (Coefficient::u_pow(1) + Coefficient(1));
  QuadModulus m{make_rational(4, 3), make_rational(1, 3)};
  QuadExtScalar root = QuadExtScalar::from_rational(make_rational(-1, 3), m);
  CHECK(substitute(p, Rational(2), {}, root).is_zero());

  QuadExtScalar off = QuadExtScalar::from_rational(Rational(1), m);
  CHECK_FALSE(substitute(p, Rational(2), {}, off).is_zero());

  // z-free scalar substitution
  TracePolynomial q = TracePolynomial::x(2, 1) * TracePolynomial::x(2, 1) +
                      TracePolynomial::one(2) * Coefficient::u_pow(1);
  CHECK(substitute_scalar(q, Rational(3), {make_rational(1, 2)}) == make_rational(13, 4));
}
