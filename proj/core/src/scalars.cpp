#include "yotl/scalars.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>
#include <utility>

namespace yotl {

Rational make_rational(long num, long den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational parse_rational(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) {
      return Rational(mpz_class(s));
    }
    mpz_class num(s.substr(0, slash));
    mpz_class den(s.substr(slash + 1));
    if (den == 0) throw std::domain_error("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("malformed rational: '" + s + "'");
  }
}

std::string rational_str(const Rational& q) { return q.get_str(); }

Rational rational_pow(const Rational& base, long e) {
  if (e == 0) return 1;
  if (base == 0) {
    if (e < 0) throw std::domain_error("zero to a negative power");
    return 0;
  }
  mpz_class num, den;
  unsigned long ae = static_cast<unsigned long>(e < 0 ? -e : e);
  mpz_pow_ui(num.get_mpz_t(), base.get_num().get_mpz_t(), ae);
  mpz_pow_ui(den.get_mpz_t(), base.get_den().get_mpz_t(), ae);
  Rational r = e > 0 ? Rational(num, den) : Rational(den, num);
  r.canonicalize();
  return r;
}

std::optional<Rational> rational_sqrt(const Rational& q) {
  if (sgn(q) < 0) return std::nullopt;
  const mpz_class& num = q.get_num();
  const mpz_class& den = q.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) ||
      !mpz_perfect_square_p(den.get_mpz_t()))
    return std::nullopt;
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
  return Rational(rn, rd);
}

namespace {

/* Dense polynomials in u: coefficient of u^k at index k, trimmed, {} = 0. */
using Poly = std::vector<Rational>;

void poly_trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  poly_trim(r);
  return r;
}

// Division with remainder; b must be nonzero.
void poly_divrem(Poly a, const Poly& b, Poly& quot, Poly& rem) {
  quot.assign(a.size() > b.size() ? a.size() - b.size() + 1 : 1, Rational(0));
  const Rational& lead = b.back();
  while (a.size() >= b.size() && !a.empty()) {
    Rational f = a.back() / lead;
    std::size_t shift = a.size() - b.size();
    quot[shift] = f;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
    poly_trim(a);
    if (a.size() < b.size()) break;
  }
  poly_trim(quot);
  rem = std::move(a);
}

Poly poly_divexact(const Poly& a, const Poly& b) {
  Poly q, r;
  poly_divrem(a, b, q, r);
  if (!r.empty()) throw std::logic_error("inexact polynomial division");
  return q;
}

Poly poly_monic(Poly p) {
  if (p.empty() || p.back() == 1) return p;
  Rational lead = p.back();
  for (auto& c : p) c /= lead;
  return p;
}

Poly poly_gcd(Poly a, Poly b) {
  poly_trim(a);
  poly_trim(b);
  while (!b.empty()) {
    Poly q, r;
    poly_divrem(a, b, q, r);
    a = std::move(b);
    b = poly_monic(std::move(r));
  }
  return poly_monic(std::move(a));
}

Rational poly_eval(const Poly& p, const Rational& u0) {
  Rational acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * u0 + *it;
  return acc;
}

using Laurent = std::map<long, Rational>;

void laurent_add_term(Laurent& m, long e, const Rational& c) {
  if (c == 0) return;
  auto it = m.find(e);
  if (it == m.end()) {
    m.emplace(e, c);
  } else {
    it->second += c;
    if (it->second == 0) m.erase(it);
  }
}

Laurent laurent_mul(const Laurent& a, const Laurent& b) {
  Laurent r;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) laurent_add_term(r, ea + eb, ca * cb);
  return r;
}

Laurent laurent_mul_poly(const Laurent& a, const Poly& p) {
  Laurent r;
  for (const auto& [ea, ca] : a)
    for (std::size_t k = 0; k < p.size(); ++k)
      if (p[k] != 0) laurent_add_term(r, ea + static_cast<long>(k), ca * p[k]);
  return r;
}

// num = u^shift * P with P(0) != 0.
std::pair<long, Poly> laurent_shifted_poly(const Laurent& m) {
  long shift = m.begin()->first;
  long top = m.rbegin()->first;
  Poly p(static_cast<std::size_t>(top - shift) + 1, Rational(0));
  for (const auto& [e, c] : m) p[static_cast<std::size_t>(e - shift)] = c;
  return {shift, p};
}

Laurent poly_to_laurent(const Poly& p, long shift) {
  Laurent m;
  for (std::size_t k = 0; k < p.size(); ++k)
    if (p[k] != 0) m.emplace(shift + static_cast<long>(k), p[k]);
  return m;
}

std::string laurent_term_str(const Rational& mag, long e) {
  if (e == 0) return rational_str(mag);
  std::string pw = e == 1 ? "u" : "u^" + std::to_string(e);
  if (mag == 1) return pw;
  return rational_str(mag) + "*" + pw;
}

// Terms by falling power of u, "a*u^e" pieces joined with " + " / " - ".
std::string laurent_str(const Laurent& m) {
  if (m.empty()) return "0";
  std::string out;
  for (auto it = m.rbegin(); it != m.rend(); ++it) {
    Rational mag = abs(it->second);
    bool neg = sgn(it->second) < 0;
    if (out.empty()) {
      out = (neg ? "-" : "") + laurent_term_str(mag, it->first);
    } else {
      out += (neg ? " - " : " + ") + laurent_term_str(mag, it->first);
    }
  }
  return out;
}

}  // namespace

Coefficient::Coefficient() : den_{Rational(1)} {}

Coefficient::Coefficient(long value) : den_{Rational(1)} {
  if (value != 0) num_.emplace(0, Rational(value));
}

Coefficient::Coefficient(const Rational& value) : den_{Rational(1)} {
  if (value != 0) num_.emplace(0, value);
}

Coefficient Coefficient::u_pow(long e, const Rational& scale) {
  Coefficient c;
  if (scale != 0) c.num_.emplace(e, scale);
  return c;
}

Coefficient Coefficient::from_terms(std::map<long, Rational> terms) {
  Coefficient c;
  for (auto& [e, v] : terms)
    if (v != 0) c.num_.emplace(e, v);
  return c;
}

bool Coefficient::is_one() const {
  return den_.size() == 1 && num_.size() == 1 && num_.begin()->first == 0 &&
         num_.begin()->second == 1;
}

void Coefficient::normalize() {
  if (num_.empty()) {
    den_.assign(1, Rational(1));
    return;
  }
  if (den_.size() == 1) {
    if (den_[0] != 1) {
      Rational inv = 1 / den_[0];
      for (auto& [e, c] : num_) c *= inv;
      den_[0] = 1;
    }
    return;
  }
  auto [shift, p] = laurent_shifted_poly(num_);
  Poly g = poly_gcd(p, den_);
  if (g.size() > 1) {
    p = poly_divexact(p, g);
    den_ = poly_divexact(den_, g);
  }
  Rational lead = den_.back();
  if (lead != 1) {
    for (auto& c : den_) c /= lead;
    for (auto& c : p) c /= lead;
  }
  num_ = poly_to_laurent(p, shift);
  if (den_.empty() || den_[0] == 0)
    throw std::logic_error("coefficient denominator lost normal form");
}

Coefficient Coefficient::operator-() const {
  Coefficient r(*this);
  for (auto& [e, c] : r.num_) c = -c;
  return r;
}

Coefficient Coefficient::operator+(const Coefficient& o) const {
  Coefficient r;
  if (den_ == o.den_) {
    r.num_ = num_;
    for (const auto& [e, c] : o.num_) laurent_add_term(r.num_, e, c);
    r.den_ = den_;
  } else {
    r.num_ = laurent_mul_poly(num_, o.den_);
    for (const auto& [e, c] : laurent_mul_poly(o.num_, den_))
      laurent_add_term(r.num_, e, c);
    r.den_ = poly_mul(den_, o.den_);
  }
  r.normalize();
  return r;
}

Coefficient Coefficient::operator-(const Coefficient& o) const {
  return *this + (-o);
}

Coefficient Coefficient::operator*(const Coefficient& o) const {
  Coefficient r;
  r.num_ = laurent_mul(num_, o.num_);
  r.den_ = (den_.size() == 1 && o.den_.size() == 1) ? den_
                                                    : poly_mul(den_, o.den_);
  r.normalize();
  return r;
}

Coefficient Coefficient::inverse() const {
  if (num_.empty()) throw std::domain_error("inverse of zero coefficient");
  auto [shift, p] = laurent_shifted_poly(num_);
  Coefficient r;
  r.num_ = poly_to_laurent(den_, -shift);
  Rational lead = p.back();
  if (lead != 1) {
    for (auto& c : p) c /= lead;
    for (auto& [e, c] : r.num_) c /= lead;
  }
  r.den_ = std::move(p);
  r.normalize();
  return r;
}

Coefficient Coefficient::operator/(const Coefficient& o) const {
  return *this * o.inverse();
}

Coefficient& Coefficient::operator+=(const Coefficient& o) {
  *this = *this + o;
  return *this;
}
Coefficient& Coefficient::operator-=(const Coefficient& o) {
  *this = *this - o;
  return *this;
}
Coefficient& Coefficient::operator*=(const Coefficient& o) {
  *this = *this * o;
  return *this;
}

bool Coefficient::operator==(const Coefficient& o) const {
  return num_ == o.num_ && den_ == o.den_;
}

Rational Coefficient::evaluate(const Rational& u0) const {
  Rational dv = poly_eval(den_, u0);
  if (dv == 0) throw std::domain_error("evaluation at a denominator root");
  Rational nv = 0;
  for (const auto& [e, c] : num_) {
    if (u0 == 0) {
      if (e < 0)
        throw std::domain_error("evaluation of a negative power at u = 0");
      if (e == 0) nv += c;
      continue;
    }
    nv += c * rational_pow(u0, e);
  }
  return nv / dv;
}

bool Coefficient::has_pole_at(const Rational& u0) const {
  if (poly_eval(den_, u0) == 0) return true;
  return u0 == 0 && !num_.empty() && num_.begin()->first < 0;
}

std::string Coefficient::str() const {
  if (den_.size() == 1) return laurent_str(num_);
  return "(" + laurent_str(num_) + ")/(" + laurent_str(poly_to_laurent(den_, 0)) +
         ")";
}

namespace {

/* Recursive-descent parser for the Coefficient grammar. */
class CoeffParser {
 public:
  explicit CoeffParser(const std::string& s) : s_(s) {}

  Coefficient parse() {
    skip_ws();
    Coefficient result;
    if (peek() == '(') {
      Laurent num = parse_parenthesized();
      skip_ws();
      expect('/');
      skip_ws();
      Laurent den = parse_parenthesized();
      result = Coefficient::from_terms(std::map<long, Rational>(num.begin(), num.end())) /
               Coefficient::from_terms(std::map<long, Rational>(den.begin(), den.end()));
    } else {
      Laurent num = parse_laurent();
      result = Coefficient::from_terms(std::map<long, Rational>(num.begin(), num.end()));
    }
    skip_ws();
    if (pos_ != s_.size()) fail("trailing characters");
    return result;
  }

 private:
  const std::string& s_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& what) {
    throw std::invalid_argument("coefficient parse error at column " +
                                std::to_string(pos_ + 1) + ": " + what);
  }
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
  }
  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  Laurent parse_parenthesized() {
    expect('(');
    Laurent m = parse_laurent();
    skip_ws();
    expect(')');
    return m;
  }

  Laurent parse_laurent() {
    Laurent m;
    skip_ws();
    bool neg = false;
    if (peek() == '-') {
      neg = true;
      ++pos_;
    } else if (peek() == '+') {
      ++pos_;
    }
    while (true) {
      auto [e, c] = parse_term();
      laurent_add_term(m, e, neg ? Rational(-c) : c);
      skip_ws();
      char op = peek();
      if (op == '+' || op == '-') {
        neg = op == '-';
        ++pos_;
        skip_ws();
      } else {
        break;
      }
    }
    return m;
  }

  // term := rational ['*' upow] | upow
  std::pair<long, Rational> parse_term() {
    skip_ws();
    if (peek() == 'u') return {parse_upow(), Rational(1)};
    Rational c = parse_number();
    skip_ws();
    if (peek() == '*') {
      ++pos_;
      skip_ws();
      if (peek() != 'u') fail("expected 'u' after '*'");
      return {parse_upow(), c};
    }
    return {0, c};
  }

  long parse_upow() {
    expect('u');
    if (peek() != '^') return 1;
    ++pos_;
    bool neg = false;
    if (peek() == '-') {
      neg = true;
      ++pos_;
    }
    std::string digits = parse_digits();
    long e = std::stol(digits);
    return neg ? -e : e;
  }

  std::string parse_digits() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
    if (pos_ == start) fail("expected digits");
    return s_.substr(start, pos_ - start);
  }

  Rational parse_number() {
    std::string num = parse_digits();
    if (peek() == '/') {
      ++pos_;
      std::string den = parse_digits();
      Rational q{mpz_class(num), mpz_class(den)};
      q.canonicalize();
      return q;
    }
    return Rational(mpz_class(num));
  }
};

}  // namespace

Coefficient parse_coefficient(const std::string& s) {
  return CoeffParser(s).parse();
}

TracePolynomial::TracePolynomial(int d) : d_(d) {
  if (d < 1) throw std::invalid_argument("framing order d must be positive");
}

TracePolynomial TracePolynomial::constant(int d, const Coefficient& c) {
  TracePolynomial p(d);
  if (!c.is_zero()) p.terms_.emplace(TraceKey{0, std::vector<int>(d - 1, 0)}, c);
  return p;
}

TracePolynomial TracePolynomial::one(int d) {
  return constant(d, Coefficient(1));
}

TracePolynomial TracePolynomial::z(int d, long e) {
  TracePolynomial p(d);
  p.terms_.emplace(TraceKey{e, std::vector<int>(d - 1, 0)}, Coefficient(1));
  return p;
}

TracePolynomial TracePolynomial::x(int d, long s) {
  long m = ((s % d) + d) % d;
  if (m == 0) return one(d);
  TraceKey key{0, std::vector<int>(d - 1, 0)};
  key.xexp[static_cast<std::size_t>(m - 1)] = 1;
  TracePolynomial p(d);
  p.terms_.emplace(std::move(key), Coefficient(1));
  return p;
}

void TracePolynomial::add_term(TraceKey key, const Coefficient& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(std::move(key), c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

TracePolynomial TracePolynomial::operator-() const {
  TracePolynomial r(d_);
  for (const auto& [k, c] : terms_) r.terms_.emplace(k, -c);
  return r;
}

TracePolynomial TracePolynomial::operator+(const TracePolynomial& o) const {
  if (d_ != o.d_)
    throw std::invalid_argument("signature mismatch: trace polynomials with different d");
  TracePolynomial r(*this);
  for (const auto& [k, c] : o.terms_) r.add_term(k, c);
  return r;
}

TracePolynomial TracePolynomial::operator-(const TracePolynomial& o) const {
  return *this + (-o);
}

TracePolynomial& TracePolynomial::operator+=(const TracePolynomial& o) {
  if (d_ != o.d_)
    throw std::invalid_argument("signature mismatch: trace polynomials with different d");
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

TracePolynomial TracePolynomial::operator*(const TracePolynomial& o) const {
  if (d_ != o.d_)
    throw std::invalid_argument("signature mismatch: trace polynomials with different d");
  TracePolynomial r(d_);
  for (const auto& [ka, ca] : terms_)
    for (const auto& [kb, cb] : o.terms_) {
      TraceKey k{ka.zexp + kb.zexp, ka.xexp};
      for (std::size_t i = 0; i < k.xexp.size(); ++i) k.xexp[i] += kb.xexp[i];
      r.add_term(std::move(k), ca * cb);
    }
  return r;
}

TracePolynomial TracePolynomial::operator*(const Coefficient& c) const {
  TracePolynomial r(d_);
  if (c.is_zero()) return r;
  for (const auto& [k, v] : terms_) r.terms_.emplace(k, v * c);
  return r;
}

bool TracePolynomial::operator==(const TracePolynomial& o) const {
  return d_ == o.d_ && terms_ == o.terms_;
}

long TracePolynomial::z_degree() const {
  if (terms_.empty()) return -1;
  return terms_.rbegin()->first.zexp;
}

TracePolynomial TracePolynomial::coefficient_of_z(long k) const {
  TracePolynomial r(d_);
  for (const auto& [key, c] : terms_)
    if (key.zexp == k) r.terms_.emplace(TraceKey{0, key.xexp}, c);
  return r;
}

std::string TracePolynomial::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [key, c] : terms_) {
    std::string mono;
    if (key.zexp != 0)
      mono = key.zexp == 1 ? "z" : "z^" + std::to_string(key.zexp);
    for (std::size_t i = 0; i < key.xexp.size(); ++i) {
      if (key.xexp[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += "x" + std::to_string(i + 1);
      if (key.xexp[i] != 1) mono += "^" + std::to_string(key.xexp[i]);
    }
    std::string piece;
    if (mono.empty()) {
      piece = c.str();
    } else if (c.is_laurent() && c.numerator_terms().size() == 1) {
      std::string cs = c.str();
      if (cs == "1")
        piece = mono;
      else if (cs == "-1")
        piece = "-" + mono;
      else
        piece = cs + "*" + mono;
    } else {
      piece = "(" + c.str() + ")*" + mono;
    }
    if (out.empty()) {
      out = piece;
    } else if (!piece.empty() && piece[0] == '-') {
      out += " - " + piece.substr(1);
    } else {
      out += " + " + piece;
    }
  }
  return out;
}

QuadExtScalar::QuadExtScalar(const Rational& c0, const Rational& c1,
                             const QuadModulus& m)
    : c0_(c0), c1_(c1), m_(m) {}

QuadExtScalar QuadExtScalar::from_rational(const Rational& r,
                                           const QuadModulus& m) {
  return QuadExtScalar(r, 0, m);
}

QuadExtScalar QuadExtScalar::operator-() const {
  return QuadExtScalar(-c0_, -c1_, m_);
}

namespace {
void check_same_modulus(const QuadModulus& a, const QuadModulus& b) {
  if (!(a == b))
    throw std::invalid_argument(
        "signature mismatch: quadratic extension scalars over different moduli");
}
}  // namespace

QuadExtScalar QuadExtScalar::operator+(const QuadExtScalar& o) const {
  check_same_modulus(m_, o.m_);
  return QuadExtScalar(c0_ + o.c0_, c1_ + o.c1_, m_);
}

QuadExtScalar QuadExtScalar::operator-(const QuadExtScalar& o) const {
  check_same_modulus(m_, o.m_);
  return QuadExtScalar(c0_ - o.c0_, c1_ - o.c1_, m_);
}

QuadExtScalar QuadExtScalar::operator*(const QuadExtScalar& o) const {
  check_same_modulus(m_, o.m_);
  // (a0 + a1 z)(b0 + b1 z) with z^2 = -b z - c.
  Rational zz = c1_ * o.c1_;
  return QuadExtScalar(c0_ * o.c0_ - zz * m_.c,
                       c0_ * o.c1_ + c1_ * o.c0_ - zz * m_.b, m_);
}

QuadExtScalar QuadExtScalar::operator*(const Rational& r) const {
  return QuadExtScalar(c0_ * r, c1_ * r, m_);
}

QuadExtScalar QuadExtScalar::pow(unsigned long e) const {
  QuadExtScalar acc = from_rational(1, m_);
  QuadExtScalar base = *this;
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

bool QuadExtScalar::operator==(const QuadExtScalar& o) const {
  return m_ == o.m_ && c0_ == o.c0_ && c1_ == o.c1_;
}

std::string QuadExtScalar::str() const {
  if (c1_ == 0) return rational_str(c0_);
  std::string zpart;
  if (c1_ == 1)
    zpart = "z";
  else if (c1_ == -1)
    zpart = "-z";
  else
    zpart = rational_str(c1_) + "*z";
  if (c0_ == 0) return zpart;
  if (zpart[0] == '-') return rational_str(c0_) + " - " + zpart.substr(1);
  return rational_str(c0_) + " + " + zpart;
}

QuadRoots quad_roots_numeric(const Rational& a, const Rational& b,
                             const Rational& c) {
  if (a == 0) throw std::domain_error("degenerate quadratic: leading coefficient 0");
  QuadModulus m{b / a, c / a};
  Rational disc = b * b - 4 * a * c;
  if (auto s = rational_sqrt(disc)) {
    Rational r1 = (-b + *s) / (2 * a);
    Rational r2 = (-b - *s) / (2 * a);
    return QuadRoots{true, QuadExtScalar::from_rational(r1, m),
                     QuadExtScalar::from_rational(r2, m)};
  }
  return QuadRoots{false, QuadExtScalar(0, 1, m), QuadExtScalar(-m.b, -1, m)};
}

QuadExtScalar substitute(const TracePolynomial& p, const Rational& u0,
                         const std::vector<Rational>& xvals,
                         const QuadExtScalar& zval) {
  if (u0 == 0 || u0 == 1)
    throw std::domain_error("substitution requires u outside {0, 1}");
  if (xvals.size() != static_cast<std::size_t>(p.d() - 1))
    throw std::invalid_argument("substitution needs exactly d - 1 x-values");
  QuadExtScalar acc = QuadExtScalar::from_rational(0, zval.modulus());
  for (const auto& [key, c] : p.terms()) {
    if (key.zexp < 0)
      throw std::domain_error("negative z power in substitution");
    Rational r = c.evaluate(u0);
    for (std::size_t i = 0; i < key.xexp.size(); ++i)
      if (key.xexp[i] != 0) r *= rational_pow(xvals[i], key.xexp[i]);
    acc = acc + zval.pow(static_cast<unsigned long>(key.zexp)) * r;
  }
  return acc;
}

Rational substitute_scalar(const TracePolynomial& p, const Rational& u0,
                           const std::vector<Rational>& xvals) {
  if (u0 == 0 || u0 == 1)
    throw std::domain_error("substitution requires u outside {0, 1}");
  if (xvals.size() != static_cast<std::size_t>(p.d() - 1))
    throw std::invalid_argument("substitution needs exactly d - 1 x-values");
  Rational acc = 0;
  for (const auto& [key, c] : p.terms()) {
    if (key.zexp != 0)
      throw std::invalid_argument("z-free substitution on a polynomial with z terms");
    Rational r = c.evaluate(u0);
    for (std::size_t i = 0; i < key.xexp.size(); ++i)
      if (key.xexp[i] != 0) r *= rational_pow(xvals[i], key.xexp[i]);
    acc += r;
  }
  return acc;
}

}  // namespace yotl
