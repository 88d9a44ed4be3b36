#include "yotl/yhecke.hpp"

#include <json.hpp>

#include <stdexcept>
#include <utility>

#include "yotl/util.hpp"

namespace yotl {

BasisWord::BasisWord(FramingVector framing, Permutation perm)
    : framing_(std::move(framing)), perm_(std::move(perm)), word_(canonical_word(perm_)) {
  if (static_cast<int>(framing_.size()) != perm_.degree())
    throw std::invalid_argument("signature mismatch: framing length vs permutation degree");
  for (int r : framing_)
    if (r < 0) throw std::invalid_argument("framing exponent must be reduced to 0..d-1");
}

bool BasisWord::operator==(const BasisWord& o) const {
  return framing_ == o.framing_ && perm_ == o.perm_;
}

bool BasisWord::operator<(const BasisWord& o) const {
  if (framing_ != o.framing_) return framing_ < o.framing_;
  std::size_t la = word_.letter_count(), lb = o.word_.letter_count();
  if (la != lb) return la < lb;
  return word_.letters() < o.word_.letters();
}

std::string BasisWord::str() const {
  std::string out;
  for (std::size_t j = 0; j < framing_.size(); ++j) {
    if (framing_[j] == 0) continue;
    if (!out.empty()) out += " ";
    out += "t" + std::to_string(j + 1);
    if (framing_[j] != 1) out += "^" + std::to_string(framing_[j]);
  }
  for (int l : word_.letters()) {
    if (!out.empty()) out += " ";
    out += "g" + std::to_string(l);
  }
  return out.empty() ? "1" : out;
}

AlgebraElement::AlgebraElement(int d, int n) : d_(d), n_(n) {
  if (d < 1 || n < 0) throw std::invalid_argument("algebra needs d >= 1, n >= 0");
}

void AlgebraElement::add_term(const BasisWord& w, const Coefficient& c) {
  if (w.n() != n_)
    throw std::invalid_argument("signature mismatch: basis word of wrong strand count");
  for (int r : w.framing())
    if (r >= d_) throw std::invalid_argument("framing exponent not reduced mod d");
  if (c.is_zero()) return;
  auto it = support_.find(w);
  if (it == support_.end()) {
    support_.emplace(w, c);
    if (support_.size() > limits().max_support)
      throw CapExceeded("element support exceeds the configured cap of " +
                        std::to_string(limits().max_support));
  } else {
    it->second += c;
    if (it->second.is_zero()) support_.erase(it);
  }
}

Coefficient AlgebraElement::coefficient(const BasisWord& w) const {
  auto it = support_.find(w);
  return it == support_.end() ? Coefficient() : it->second;
}

AlgebraElement AlgebraElement::operator-() const {
  AlgebraElement r(d_, n_);
  for (const auto& [w, c] : support_) r.support_.emplace(w, -c);
  return r;
}

AlgebraElement AlgebraElement::operator+(const AlgebraElement& o) const {
  if (d_ != o.d_ || n_ != o.n_)
    throw std::invalid_argument("signature mismatch: adding elements of different algebras");
  AlgebraElement r(*this);
  for (const auto& [w, c] : o.support_) r.add_term(w, c);
  return r;
}

AlgebraElement AlgebraElement::operator-(const AlgebraElement& o) const {
  return *this + (-o);
}

AlgebraElement AlgebraElement::operator*(const Coefficient& c) const {
  AlgebraElement r(d_, n_);
  if (c.is_zero()) return r;
  for (const auto& [w, v] : support_) {
    Coefficient prod = v * c;
    if (!prod.is_zero()) r.support_.emplace(w, prod);
  }
  return r;
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o) {
  if (d_ != o.d_ || n_ != o.n_)
    throw std::invalid_argument("signature mismatch: adding elements of different algebras");
  for (const auto& [w, c] : o.support_) add_term(w, c);
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& o) {
  return *this += -o;
}

bool AlgebraElement::operator==(const AlgebraElement& o) const {
  return d_ == o.d_ && n_ == o.n_ && support_ == o.support_;
}

std::string AlgebraElement::str() const {
  if (support_.empty()) return "0";
  std::string out;
  for (const auto& [w, c] : support_) {
    std::string ws = w.str();
    std::string piece;
    if (ws == "1") {
      piece = c.is_laurent() && c.numerator_terms().size() <= 1 ? c.str()
                                                                : "(" + c.str() + ")";
    } else if (c.is_one()) {
      piece = ws;
    } else if (c.is_laurent() && c.numerator_terms().size() == 1) {
      std::string cs = c.str();
      piece = cs == "-1" ? "-" + ws : cs + "*" + ws;
    } else {
      piece = "(" + c.str() + ")*" + ws;
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

AlgebraElement unit(int d, int n) {
  AlgebraElement e(d, n);
  e.add_term(BasisWord(FramingVector(static_cast<std::size_t>(n), 0), Permutation(n)),
             Coefficient(1));
  return e;
}

AlgebraElement gen_g(int i, int d, int n) {
  if (i < 1 || i >= n) throw std::invalid_argument("generator index g out of range");
  AlgebraElement e(d, n);
  e.add_term(BasisWord(FramingVector(static_cast<std::size_t>(n), 0),
                       Permutation::transposition(n, i)),
             Coefficient(1));
  return e;
}

AlgebraElement gen_t(int j, int d, int n, long s) {
  if (j < 1 || j > n) throw std::invalid_argument("generator index t out of range");
  FramingVector f(static_cast<std::size_t>(n), 0);
  f[static_cast<std::size_t>(j - 1)] = static_cast<int>(((s % d) + d) % d);
  AlgebraElement e(d, n);
  e.add_term(BasisWord(std::move(f), Permutation(n)), Coefficient(1));
  return e;
}

AlgebraElement idempotent_e(int i, int d, int n) {
  if (i < 1 || i >= n) throw std::invalid_argument("idempotent index out of range");
  AlgebraElement e(d, n);
  Coefficient share(Rational(1, d));
  for (int m = 0; m < d; ++m) {
    FramingVector f(static_cast<std::size_t>(n), 0);
    f[static_cast<std::size_t>(i - 1)] = m;
    f[static_cast<std::size_t>(i)] = (d - m) % d;
    e.add_term(BasisWord(std::move(f), Permutation(n)), share);
  }
  return e;
}

AlgebraElement g_inverse(int i, int d, int n) {
  if (i < 1 || i >= n) throw std::invalid_argument("generator index g out of range");
  // g_i + (u^{-1} - 1) e_i (1 + g_i), with e_i's framings already left.
  AlgebraElement e = gen_g(i, d, n);
  Coefficient c = Coefficient::u_pow(-1) - Coefficient(1);
  Coefficient share = c * Rational(1, d);
  Permutation id(n), si = Permutation::transposition(n, i);
  for (int m = 0; m < d; ++m) {
    FramingVector f(static_cast<std::size_t>(n), 0);
    f[static_cast<std::size_t>(i - 1)] = m;
    f[static_cast<std::size_t>(i)] = (d - m) % d;
    e.add_term(BasisWord(f, id), share);
    e.add_term(BasisWord(f, si), share);
  }
  return e;
}

AlgebraElement right_mul_g(const AlgebraElement& a, int i) {
  int d = a.d(), n = a.n();
  if (i < 1 || i >= n) throw std::invalid_argument("generator index g out of range");
  AlgebraElement r(d, n);
  Permutation si = Permutation::transposition(n, i);
  Coefficient umius = Coefficient::u_pow(1) - Coefficient(1);  // u - 1
  Coefficient share = umius * Rational(1, d);
  for (const auto& [w, c] : a.support()) {
    const Permutation& pi = w.perm();
    Permutation pis = pi.compose(si);
    if (pi(i) < pi(i + 1)) {
      r.add_term(BasisWord(w.framing(), pis), c);
      continue;
    }
    // Descent: pi = pi' s_i with pi' shorter; expand g_{pi'} g_i^2.
    const Permutation& pip = pis;
    int pa = pip(i), pb = pip(i + 1);
    r.add_term(BasisWord(w.framing(), pip), c);
    Coefficient cs = c * share;
    for (int m = 0; m < d; ++m) {
      FramingVector f = w.framing();
      f[static_cast<std::size_t>(pa - 1)] = (f[static_cast<std::size_t>(pa - 1)] + m) % d;
      f[static_cast<std::size_t>(pb - 1)] =
          (f[static_cast<std::size_t>(pb - 1)] + d - m) % d;
      r.add_term(BasisWord(f, pip), cs);
      r.add_term(BasisWord(f, pi), cs);
    }
  }
  return r;
}

AlgebraElement right_mul_t(const AlgebraElement& a, int j, long s) {
  int d = a.d(), n = a.n();
  if (j < 1 || j > n) throw std::invalid_argument("generator index t out of range");
  int add = static_cast<int>(((s % d) + d) % d);
  AlgebraElement r(d, n);
  for (const auto& [w, c] : a.support()) {
    FramingVector f = w.framing();
    std::size_t pos = static_cast<std::size_t>(w.perm()(j) - 1);
    f[pos] = (f[pos] + add) % d;
    r.add_term(BasisWord(std::move(f), w.perm()), c);
  }
  return r;
}

AlgebraElement left_mul_t(const AlgebraElement& a, int j, long s) {
  int d = a.d(), n = a.n();
  if (j < 1 || j > n) throw std::invalid_argument("generator index t out of range");
  int add = static_cast<int>(((s % d) + d) % d);
  AlgebraElement r(d, n);
  for (const auto& [w, c] : a.support()) {
    FramingVector f = w.framing();
    std::size_t pos = static_cast<std::size_t>(j - 1);
    f[pos] = (f[pos] + add) % d;
    r.add_term(BasisWord(std::move(f), w.perm()), c);
  }
  return r;
}

AlgebraElement mul(const AlgebraElement& a, const AlgebraElement& b) {
  if (a.d() != b.d() || a.n() != b.n())
    throw std::invalid_argument("signature mismatch: multiplying elements of different algebras");
  AlgebraElement r(a.d(), a.n());
  for (const auto& [w, c] : b.support()) {
    AlgebraElement acc = a;
    const FramingVector& f = w.framing();
    for (std::size_t j = 0; j < f.size(); ++j)
      if (f[j] != 0) acc = right_mul_t(acc, static_cast<int>(j + 1), f[j]);
    for (int l : w.word().letters()) acc = right_mul_g(acc, l);
    r += acc * c;
  }
  return r;
}

AlgebraElement word_element(int d, int n, const FramingVector& framing,
                            const std::vector<int>& letters) {
  AlgebraElement e(d, n);
  FramingVector f(framing);
  for (auto& r : f) r = ((r % d) + d) % d;
  e.add_term(BasisWord(std::move(f), Permutation(n)), Coefficient(1));
  for (int l : letters) e = right_mul_g(e, l);
  return e;
}

AlgebraElement embed(const AlgebraElement& a, int m) {
  if (m < a.n()) throw std::invalid_argument("embedding target smaller than source");
  AlgebraElement r(a.d(), m);
  for (const auto& [w, c] : a.support()) {
    FramingVector f = w.framing();
    f.resize(static_cast<std::size_t>(m), 0);
    std::vector<int> img = w.perm().images();
    for (int x = a.n() + 1; x <= m; ++x) img.push_back(x);
    r.add_term(BasisWord(std::move(f), Permutation::from_images(std::move(img))), c);
  }
  return r;
}

std::string element_to_json(const AlgebraElement& a) {
  nlohmann::json j;
  j["d"] = a.d();
  j["n"] = a.n();
  j["terms"] = nlohmann::json::array();
  for (const auto& [w, c] : a.support()) {
    nlohmann::json term;
    term["framing"] = w.framing();
    term["word"] = w.word().letters();
    term["coeff"] = c.str();
    j["terms"].push_back(std::move(term));
  }
  return j.dump();
}

AlgebraElement element_from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  AlgebraElement a(j.at("d").get<int>(), j.at("n").get<int>());
  for (const auto& term : j.at("terms")) {
    FramingVector f = term.at("framing").get<FramingVector>();
    std::vector<int> letters = term.at("word").get<std::vector<int>>();
    Permutation p = permutation_of_letters(a.n(), letters);
    if (canonical_word(p).letters() != letters)
      throw std::invalid_argument("element JSON holds a non-canonical word");
    a.add_term(BasisWord(std::move(f), std::move(p)),
               parse_coefficient(term.at("coeff").get<std::string>()));
  }
  return a;
}

PresentationReport verify_presentation(int d, int n, std::size_t triples,
                                       std::uint64_t seed) {
  if (n < 2) throw std::invalid_argument("presentation checks need at least 2 strands");
  PresentationReport report;
  report.d = d;
  report.n = n;
  report.triples = triples;
  report.seed = seed;
  report.all_hold = true;
  auto record = [&report](const std::string& name, bool holds) {
    report.checks.push_back({name, holds});
    if (!holds) report.all_hold = false;
  };

  Coefficient um1 = Coefficient::u_pow(1) - Coefficient(1);
  std::vector<AlgebraElement> g, e, t;
  for (int i = 1; i <= n - 1; ++i) {
    g.push_back(gen_g(i, d, n));
    e.push_back(idempotent_e(i, d, n));
  }
  for (int j = 1; j <= n; ++j) t.push_back(gen_t(j, d, n));
  auto gi = [&](int i) { return g[static_cast<std::size_t>(i - 1)]; };
  auto ei = [&](int i) { return e[static_cast<std::size_t>(i - 1)]; };
  auto tj = [&](int j) { return t[static_cast<std::size_t>(j - 1)]; };

  {
    bool ok = true;
    for (int i = 1; i + 1 <= n - 1; ++i)
      ok = ok && mul(mul(gi(i), gi(i + 1)), gi(i)) == mul(mul(gi(i + 1), gi(i)), gi(i + 1));
    for (int a = 1; a <= n - 1; ++a)
      for (int b = a + 2; b <= n - 1; ++b)
        ok = ok && mul(gi(a), gi(b)) == mul(gi(b), gi(a));
    record("braid relations", ok);
  }
  {
    bool ok = true;
    for (int j = 1; j <= n; ++j) {
      AlgebraElement p = unit(d, n);
      for (int k = 0; k < d; ++k) p = mul(p, tj(j));
      ok = ok && p == unit(d, n);
    }
    for (int a = 1; a <= n; ++a)
      for (int b = a + 1; b <= n; ++b)
        ok = ok && mul(tj(a), tj(b)) == mul(tj(b), tj(a));
    record("framing relations t^d = 1, t t = t t", ok);
  }
  {
    bool ok = true;
    for (int i = 1; i <= n - 1; ++i) {
      ok = ok && mul(gi(i), tj(i)) == mul(tj(i + 1), gi(i));
      ok = ok && mul(gi(i), tj(i + 1)) == mul(tj(i), gi(i));
      for (int j = 1; j <= n; ++j) {
        if (j == i || j == i + 1) continue;
        ok = ok && mul(gi(i), tj(j)) == mul(tj(j), gi(i));
      }
    }
    record("mixed relations g t = t g", ok);
  }
  {
    bool ok = true;
    for (int i = 1; i <= n - 1; ++i) {
      AlgebraElement rhs = unit(d, n) + ei(i) * um1 + mul(ei(i), gi(i)) * um1;
      ok = ok && mul(gi(i), gi(i)) == rhs;
    }
    record("quadratic relation", ok);
  }
  {
    bool ok = true;
    for (int i = 1; i <= n - 1; ++i) ok = ok && mul(ei(i), ei(i)) == ei(i);
    record("e_i idempotent", ok);
  }
  {
    bool ok = true;
    for (int i = 1; i <= n - 1; ++i) ok = ok && mul(ei(i), gi(i)) == mul(gi(i), ei(i));
    record("e_i g_i = g_i e_i", ok);
  }
  {
    bool ok = true;
    for (int i = 1; i <= n - 1; ++i) {
      AlgebraElement inv = g_inverse(i, d, n);
      ok = ok && mul(gi(i), inv) == unit(d, n) && mul(inv, gi(i)) == unit(d, n);
    }
    record("two-sided inverse of g_i", ok);
  }

  std::mt19937_64 rng(seed);
  FramingVector zero(static_cast<std::size_t>(n), 0);
  {
    // Inserting either side of a braid move into a random letter context
    // must give the same element, reduced or not.
    bool ok = true;
    std::size_t rounds = triples < 100 ? triples : 100;
    for (std::size_t r = 0; r < rounds && ok; ++r) {
      std::vector<int> before, after;
      std::size_t lb = static_cast<std::size_t>(bounded_int(rng, 0, 3));
      std::size_t la = static_cast<std::size_t>(bounded_int(rng, 0, 3));
      for (std::size_t k = 0; k < lb; ++k)
        before.push_back(static_cast<int>(bounded_int(rng, 1, n - 1)));
      for (std::size_t k = 0; k < la; ++k)
        after.push_back(static_cast<int>(bounded_int(rng, 1, n - 1)));
      std::vector<int> lhs = before, rhs = before;
      if (n >= 3 && (bounded_int(rng, 0, 1) == 0)) {
        int i = static_cast<int>(bounded_int(rng, 1, n - 2));
        lhs.insert(lhs.end(), {i, i + 1, i});
        rhs.insert(rhs.end(), {i + 1, i, i + 1});
      } else if (n >= 4) {
        int i = static_cast<int>(bounded_int(rng, 1, n - 3));
        int j = static_cast<int>(bounded_int(rng, i + 2, n - 1));
        lhs.insert(lhs.end(), {i, j});
        rhs.insert(rhs.end(), {j, i});
      } else {
        continue;
      }
      lhs.insert(lhs.end(), after.begin(), after.end());
      rhs.insert(rhs.end(), after.begin(), after.end());
      ok = word_element(d, n, zero, lhs) == word_element(d, n, zero, rhs);
    }
    record("word independence under braid moves", n >= 3 ? ok : true);
  }
  {
    bool ok = true;
    std::vector<std::pair<FramingVector, Permutation>> basis = enumerate_S(d, n);
    long last = static_cast<long>(basis.size()) - 1;
    for (std::size_t r = 0; r < triples && ok; ++r) {
      auto pick = [&]() {
        const auto& [f, p] = basis[static_cast<std::size_t>(bounded_int(rng, 0, last))];
        AlgebraElement w(d, n);
        w.add_term(BasisWord(f, p), Coefficient(1));
        return w;
      };
      AlgebraElement a = pick(), b = pick(), c = pick();
      ok = mul(mul(a, b), c) == mul(a, mul(b, c));
    }
    record("associativity on random basis triples", ok);
  }
  return report;
}

}  // namespace yotl
