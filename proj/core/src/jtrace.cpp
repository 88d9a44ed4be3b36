#include "yotl/jtrace.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

#include "yotl/permwords.hpp"
#include "yotl/util.hpp"
#include "yotl/ytl.hpp"

namespace yotl {

namespace {

void append_desc(std::vector<int>& out, int h, int f) {
  for (int x = h; x >= f; --x) out.push_back(x);
}

Coefficient u_minus_1() { return Coefficient::u_pow(1) - Coefficient(1); }

TracePolynomial trace_word(int d, const BasisWord& w) {
  int n = w.n();
  if (n == 0) return TracePolynomial::one(d);

  const std::vector<Run>& runs = w.word().runs();
  bool top_touched = !runs.empty() && runs.back().head == n - 1;

  if (!top_touched) {
    // Strand n is a fixed point: strip it and apply the framing rule.
    int s = w.framing()[static_cast<std::size_t>(n - 1)];
    FramingVector f(w.framing().begin(), w.framing().end() - 1);
    std::vector<int> img = w.perm().images();
    img.pop_back();
    TracePolynomial rest =
        trace_word(d, BasisWord(std::move(f), Permutation::from_images(std::move(img))));
    return s == 0 ? rest : rest * TracePolynomial::x(d, s);
  }

  // The top cycle is g_{n-1} ... g_f.  Pulling t_n through it and applying
  // the Markov rule leaves z times a product of two shorter words.
  const Run last = runs.back();
  FramingVector fa(w.framing().begin(), w.framing().end() - 1);
  std::vector<int> letters_a;
  for (std::size_t m = 0; m + 1 < runs.size(); ++m)
    append_desc(letters_a, runs[m].head, runs[m].foot);
  AlgebraElement a(d, n - 1);
  a.add_term(BasisWord(std::move(fa), permutation_of_letters(n - 1, letters_a)),
             Coefficient(1));

  FramingVector fb(static_cast<std::size_t>(n - 1), 0);
  fb[static_cast<std::size_t>(n - 2)] = w.framing()[static_cast<std::size_t>(n - 1)];
  std::vector<int> letters_b;
  append_desc(letters_b, n - 2, last.foot);
  AlgebraElement b(d, n - 1);
  b.add_term(BasisWord(std::move(fb), permutation_of_letters(n - 1, letters_b)),
             Coefficient(1));

  return TracePolynomial::z(d) * trace(mul(a, b));
}

}  // namespace

TracePolynomial trace(const AlgebraElement& a) {
  TracePolynomial result(a.d());
  for (const auto& [w, c] : a.support()) result += trace_word(a.d(), w) * c;
  return result;
}

TracePolynomial E(int s, int d) {
  TracePolynomial sum(d);
  for (int m = 0; m < d; ++m)
    sum += TracePolynomial::x(d, m) * TracePolynomial::x(d, s - m + d);
  return sum * Coefficient(Rational(1, d));
}

ZQuadratic z_quadratic(int d) {
  TracePolynomial p = trace(linear_relation(1, d, 3));
  if (p.z_degree() != 2)
    throw std::logic_error("trace of the linear relation is not quadratic in z");
  ZQuadratic q{d, p.coefficient_of_z(2), p.coefficient_of_z(1), p.coefficient_of_z(0), p};
  return q;
}

namespace {

void check_params(const TraceParams& params) {
  if (params.d < 1) throw std::invalid_argument("parameter set needs d >= 1");
  if (params.u == 0 || params.u == 1)
    throw std::domain_error("u must avoid 0 and 1");
  if (params.x.size() != static_cast<std::size_t>(params.d - 1))
    throw std::invalid_argument("expected exactly d-1 framing parameter values");
}

}  // namespace

ZRootsResult z_roots(const TraceParams& params) {
  check_params(params);
  ZQuadratic q = z_quadratic(params.d);
  ZRootsResult res;
  res.d = params.d;
  res.lead = substitute_scalar(q.z2, params.u, params.x);
  res.lin = substitute_scalar(q.z1, params.u, params.x);
  res.cst = substitute_scalar(q.z0, params.u, params.x);
  res.quadratic = q.str();
  res.roots = quad_roots_numeric(res.lead, res.lin, res.cst);
  return res;
}

QuadExtScalar obstruction(const AlgebraElement& w, int i, const TraceParams& params,
                          const QuadExtScalar& root) {
  check_params(params);
  if (w.d() != params.d)
    throw std::invalid_argument("signature mismatch: word and parameter set disagree on d");
  TracePolynomial p = trace(mul(w, linear_relation(i, w.d(), w.n())));
  return substitute(p, params.u, params.x, root);
}

ObstructionReport factoring_scan(int d, int n, const TraceParams& params, RootChoice roots) {
  check_params(params);
  if (n < 3) throw std::invalid_argument("scans need at least 3 strands");
  ObstructionReport report;
  report.d = d;
  report.n = n;
  report.params = params;

  ZRootsResult zr = z_roots(params);
  report.quadratic = zr.quadratic;
  std::vector<QuadExtScalar> chosen{zr.roots.first};
  if (roots == RootChoice::both) chosen.push_back(zr.roots.second);
  for (const auto& r : chosen) report.roots.push_back(r.str());

  for (const auto& [f, p] : enumerate_S(d, n)) {
    BasisWord w(f, p);
    AlgebraElement elem(d, n);
    elem.add_term(w, Coefficient(1));
    bool word_hit = false;
    for (int i = 1; i <= n - 2; ++i) {
      TracePolynomial tp = trace(mul(elem, linear_relation(i, d, n)));
      for (std::size_t rid = 0; rid < chosen.size(); ++rid) {
        ScanEntry entry;
        entry.word = w.str();
        entry.relation_index = i;
        entry.root_id = static_cast<int>(rid);
        entry.value = substitute(tp, params.u, params.x, chosen[rid]);
        entry.is_zero = entry.value.is_zero();
        if (!entry.is_zero) {
          ++report.nonzero_count;
          word_hit = true;
        }
        report.entries.push_back(std::move(entry));
      }
    }
    if (word_hit) report.witnesses.push_back(w.str());
  }
  return report;
}

Tr9Tr10Report identity_tr9_tr10(int d) {
  Tr9Tr10Report report;
  report.d = d;
  report.all_match = true;

  TracePolynomial z = TracePolynomial::z(d);
  TracePolynomial zz = TracePolynomial::z(d, 2);
  Coefficient um1 = u_minus_1();

  for (int k1 = 0; k1 < d; ++k1)
    for (int k2 = 0; k2 < d; ++k2)
      for (int k = 0; k < d; ++k) {
        int K = (k1 + k2 + k) % d;
        FramingVector f{k1, k2, k};
        AlgebraElement w = word_element(d, 3, f, {1, 2, 1});

        TracePolynomial lhs9 = trace(w);
        TracePolynomial rhs9 = z * TracePolynomial::x(d, k1 + k) * TracePolynomial::x(d, k2) +
                               (z * E(K, d)) * um1 + (zz * TracePolynomial::x(d, K)) * um1;
        if (!(lhs9 == rhs9)) {
          report.all_match = false;
          report.mismatches.push_back(
              "closed form for the braided trace fails at k1=" + std::to_string(k1) +
              " k2=" + std::to_string(k2) + " k=" + std::to_string(k) + ": got " + lhs9.str());
        }

        TracePolynomial lhs10 = trace(reduce_to_sigma(w).element());
        TracePolynomial rhs10 =
            -(zz * TracePolynomial::x(d, K) * Coefficient(2) +
              z * TracePolynomial::x(d, k1) * TracePolynomial::x(d, k2 + k) +
              z * TracePolynomial::x(d, k) * TracePolynomial::x(d, k1 + k2) +
              TracePolynomial::x(d, k1) * TracePolynomial::x(d, k2) * TracePolynomial::x(d, k));
        if (!(lhs10 == rhs10)) {
          report.all_match = false;
          report.mismatches.push_back(
              "closed form for the rewritten trace fails at k1=" + std::to_string(k1) +
              " k2=" + std::to_string(k2) + " k=" + std::to_string(k) + ": got " + lhs10.str());
        }

        if (k1 == 0 && k2 == 0 && k == 0) {
          TracePolynomial diff = lhs9 - lhs10;
          report.zero_case_matches_quadratic = diff == z_quadratic(d).full;
          if (!report.zero_case_matches_quadratic) report.all_match = false;
        }
      }
  return report;
}

TraceRulesReport verify_trace_rules(int d, int n, std::size_t pairs, std::uint64_t seed) {
  if (n < 2) throw std::invalid_argument("trace rule checks need at least 2 strands");
  TraceRulesReport report;
  report.d = d;
  report.n = n;
  report.pairs = pairs;
  report.seed = seed;
  report.all_hold = true;
  auto record = [&report](const std::string& name, bool holds) {
    report.checks.push_back({name, holds});
    if (!holds) report.all_hold = false;
  };

  std::mt19937_64 rng(seed);
  std::vector<std::pair<FramingVector, Permutation>> basis = enumerate_S(d, n);
  long last = static_cast<long>(basis.size()) - 1;
  auto pick = [&]() {
    const auto& [f, p] = basis[static_cast<std::size_t>(bounded_int(rng, 0, last))];
    AlgebraElement w(d, n);
    w.add_term(BasisWord(f, p), Coefficient(1));
    return w;
  };

  record("tr(1) = 1", trace(unit(d, n)) == TracePolynomial::one(d));
  {
    bool ok = true;
    for (int reps = 0; reps < 16 && ok; ++reps) {
      AlgebraElement a = pick(), b = pick();
      Coefficient c1 = Coefficient::u_pow(bounded_int(rng, -2, 2),
                                          Rational(bounded_int(rng, 1, 5)));
      Coefficient c2(Rational(bounded_int(rng, -5, 5), bounded_int(rng, 1, 4)));
      ok = trace(a * c1 + b * c2) == trace(a) * c1 + trace(b) * c2;
    }
    record("linearity over scalars", ok);
  }
  {
    bool ok = true;
    for (int reps = 0; reps < 32 && ok; ++reps) {
      AlgebraElement a = embed(pick(), n + 1);
      long s = bounded_int(rng, 0, d - 1);
      TracePolynomial lhs = trace(right_mul_t(a, n + 1, s));
      TracePolynomial rhs = s == 0 ? trace(a) : trace(a) * TracePolynomial::x(d, s);
      ok = lhs == rhs;
    }
    record("framing rule tr(a t^s) = x_s tr(a)", ok);
  }
  {
    bool ok = true;
    for (int reps = 0; reps < 32 && ok; ++reps) {
      AlgebraElement a = pick(), b = pick();
      AlgebraElement top = mul(right_mul_g(embed(a, n + 1), n), embed(b, n + 1));
      ok = trace(top) == TracePolynomial::z(d) * trace(mul(a, b));
    }
    record("Markov rule tr(a g b) = z tr(a b)", ok);
  }
  {
    bool ok = true;
    for (std::size_t reps = 0; reps < pairs && ok; ++reps) {
      AlgebraElement a = pick(), b = pick();
      ok = trace(mul(a, b)) == trace(mul(b, a));
    }
    record("commutativity tr(ab) = tr(ba)", ok);
  }
  return report;
}

std::map<long, Rational> substitute_u_x(const TracePolynomial& p, const Rational& u0,
                                        const std::vector<Rational>& xvals) {
  if (u0 == 0 || u0 == 1) throw std::domain_error("u must avoid 0 and 1");
  if (xvals.size() + 1 != static_cast<std::size_t>(p.d()))
    throw std::invalid_argument("expected exactly d-1 framing parameter values");
  std::map<long, Rational> out;
  for (const auto& [key, c] : p.terms()) {
    Rational v = c.evaluate(u0);
    for (std::size_t s = 0; s < key.xexp.size(); ++s)
      v *= rational_pow(xvals[s], key.xexp[s]);
    Rational& slot = out[key.zexp];
    slot += v;
    if (slot == 0) out.erase(key.zexp);
  }
  return out;
}

std::string z_poly_str(const std::map<long, Rational>& poly) {
  if (poly.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : poly) {
    Rational a = c;
    if (first) {
      if (a < 0) {
        os << "-";
        a = -a;
      }
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    first = false;
    if (e == 0) {
      os << rational_str(a);
    } else {
      if (a != 1) os << rational_str(a) << "*";
      os << "z";
      if (e != 1) os << "^" << e;
    }
  }
  return os.str();
}

TraceParams default_params(int d) {
  TraceParams p;
  p.d = d;
  p.u = 2;
  for (int s = 1; s < d; ++s) p.x.push_back(Rational(1, s + 1));
  return p;
}

}  // namespace yotl
