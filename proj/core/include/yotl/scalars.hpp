#pragma once

#include <gmpxx.h>

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace yotl {

/* Arbitrary precision rational, always reduced with positive denominator. */
using Rational = mpq_class;

Rational make_rational(long num, long den = 1);
Rational parse_rational(const std::string& s);  // "p/q" or "p"
std::string rational_str(const Rational& q);
Rational rational_pow(const Rational& base, long e);
// Exact square root when q is a perfect square of a rational, otherwise empty.
std::optional<Rational> rational_sqrt(const Rational& q);

/*
 * Scalar of the algebra: an element of the rational function field Q(u).
 *
 * The numerator is a sparse Laurent polynomial in u (finite map exponent ->
 * Rational, no zero terms stored). The denominator is a monic polynomial in u
 * with nonzero constant term; it equals 1 everywhere except on the code paths
 * that divide by u + 1 (the non-invertible generators l_i and their relation
 * coefficients). Representations are gcd-reduced, so equality is structural.
 */
class Coefficient {
 public:
  Coefficient();  // zero
  Coefficient(long value);
  Coefficient(const Rational& value);
  static Coefficient u_pow(long e, const Rational& scale = 1);
  static Coefficient from_terms(std::map<long, Rational> terms);

  bool is_zero() const { return num_.empty(); }
  bool is_one() const;
  bool is_laurent() const { return den_.size() == 1; }

  // Laurent terms of the numerator; the identity is {0 -> 1}.
  const std::map<long, Rational>& numerator_terms() const { return num_; }
  // Dense monic denominator, constant coefficient first; {1} when trivial.
  const std::vector<Rational>& denominator_poly() const { return den_; }

  Coefficient operator-() const;
  Coefficient operator+(const Coefficient& o) const;
  Coefficient operator-(const Coefficient& o) const;
  Coefficient operator*(const Coefficient& o) const;
  Coefficient operator/(const Coefficient& o) const;  // o != 0
  Coefficient& operator+=(const Coefficient& o);
  Coefficient& operator-=(const Coefficient& o);
  Coefficient& operator*=(const Coefficient& o);
  bool operator==(const Coefficient& o) const;

  Coefficient inverse() const;  // *this != 0

  // Evaluates at u = u0. Throws std::domain_error at a pole of the
  // denominator and at u0 = 0 when negative powers are present.
  Rational evaluate(const Rational& u0) const;
  bool has_pole_at(const Rational& u0) const;

  // Rendering grammar (also accepted by parse_coefficient):
  //   laurent   := ['-'] term (('+'|'-') term)*        terms by falling power
  //   term      := rational ['*' upow] | upow
  //   upow      := 'u' ['^' int]
  //   fraction  := '(' laurent ')' '/' '(' laurent ')'
  std::string str() const;

 private:
  std::map<long, Rational> num_;
  std::vector<Rational> den_;
  void normalize();
};

Coefficient parse_coefficient(const std::string& s);

/*
 * Values of the Markov trace: polynomials in the trace parameters z and
 * x_1 .. x_{d-1} with Coefficient entries. The symbol x_0 is identified with
 * 1 and never stored; x subscripts are always reduced mod d.
 */
struct TraceKey {
  long zexp = 0;
  std::vector<int> xexp;  // xexp[s-1] = power of x_s, length d - 1
  auto operator<=>(const TraceKey&) const = default;
};

class TracePolynomial {
 public:
  explicit TracePolynomial(int d);  // zero polynomial
  static TracePolynomial constant(int d, const Coefficient& c);
  static TracePolynomial one(int d);
  static TracePolynomial z(int d, long e = 1);
  static TracePolynomial x(int d, long s);  // x_{s mod d}; x_0 is 1

  int d() const { return d_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<TraceKey, Coefficient>& terms() const { return terms_; }

  TracePolynomial operator-() const;
  TracePolynomial operator+(const TracePolynomial& o) const;
  TracePolynomial operator-(const TracePolynomial& o) const;
  TracePolynomial operator*(const TracePolynomial& o) const;
  TracePolynomial& operator+=(const TracePolynomial& o);
  TracePolynomial operator*(const Coefficient& c) const;
  bool operator==(const TracePolynomial& o) const;

  long z_degree() const;  // -1 for the zero polynomial
  // Sum of the terms with zexp == k, with z stripped (z-free result).
  TracePolynomial coefficient_of_z(long k) const;

  // Terms ascending by (z power, x powers); coefficients follow the
  // Coefficient grammar, parenthesized when attached to a monomial.
  std::string str() const;

 private:
  int d_;
  std::map<TraceKey, Coefficient> terms_;
  void add_term(TraceKey key, const Coefficient& c);
};

/*
 * Quadratic extension scalar: residue c0 + c1 z in Q[z] / (z^2 + b z + c).
 * Used to evaluate trace values at an abstract root of the z-quadratic.
 * When the quadratic has rational roots the root is stored explicitly
 * (c1 = 0) so that zero tests are per-root exact.
 */
struct QuadModulus {
  Rational b, c;  // z^2 + b z + c
  bool operator==(const QuadModulus&) const = default;
};

class QuadExtScalar {
 public:
  QuadExtScalar() = default;  // zero over the degenerate modulus z^2
  QuadExtScalar(const Rational& c0, const Rational& c1, const QuadModulus& m);
  static QuadExtScalar from_rational(const Rational& r, const QuadModulus& m);

  const Rational& c0() const { return c0_; }
  const Rational& c1() const { return c1_; }
  const QuadModulus& modulus() const { return m_; }
  bool is_zero() const { return c0_ == 0 && c1_ == 0; }

  QuadExtScalar operator-() const;
  QuadExtScalar operator+(const QuadExtScalar& o) const;
  QuadExtScalar operator-(const QuadExtScalar& o) const;
  QuadExtScalar operator*(const QuadExtScalar& o) const;
  QuadExtScalar operator*(const Rational& r) const;
  QuadExtScalar pow(unsigned long e) const;
  bool operator==(const QuadExtScalar& o) const;

  std::string str() const;  // "c0 + c1*z"

 private:
  Rational c0_, c1_;
  QuadModulus m_;
};

struct QuadRoots {
  bool rational;  // discriminant is a perfect square in Q
  QuadExtScalar first, second;
};

// Roots of a z^2 + b z + c with a != 0. With irrational discriminant the
// roots are the abstract residues z and -b/a - z; with a rational square
// discriminant they are explicit rationals, first = (-b + sqrt)/(2a).
QuadRoots quad_roots_numeric(const Rational& a, const Rational& b,
                             const Rational& c);

// Ring homomorphism sending u -> u0, x_s -> xvals[s-1], z -> zval.
// Requires u0 not in {0, 1} and a complete x assignment.
QuadExtScalar substitute(const TracePolynomial& p, const Rational& u0,
                         const std::vector<Rational>& xvals,
                         const QuadExtScalar& zval);

// Same substitution for z-free polynomials (quadratic coefficients).
Rational substitute_scalar(const TracePolynomial& p, const Rational& u0,
                           const std::vector<Rational>& xvals);

}  // namespace yotl
