#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "yotl/ytl.hpp"
#include "yotl/util.hpp"
#include "yotl/wordexpr.hpp"

#include <map>
#include <random>

using namespace yotl;

namespace {

AlgebraElement word(int d, int n, const std::string& text) {
  return eval_word(parse_word(text, d, n));
}

AlgebraElement basis_element(int d, int n, const FramingVector& f, const Permutation& p) {
  AlgebraElement a(d, n);
  a.add_term(BasisWord(f, p), Coefficient(1));
  return a;
}

// number of products a r_i b whose reduction is nonzero, over all basis pairs
long nonzero_reductions(int d, int n) {
  auto basis = enumerate_S(d, n);
  long bad = 0;
  for (int i = 1; i + 1 < n; ++i) {
    AlgebraElement rel = linear_relation(i, d, n);
    for (auto& [fa, pa] : basis) {
      AlgebraElement ar = mul(basis_element(d, n, fa, pa), rel);
      for (auto& [fb, pb] : basis) {
        if (!reduce_to_sigma(mul(ar, basis_element(d, n, fb, pb))).is_zero()) ++bad;
      }
    }
  }
  return bad;
}

}  // namespace

TEST_CASE("sigma membership") {
  CHECK(is_sigma_word(BasisWord({0, 0, 0}, Permutation::from_images({2, 3, 1}))));
  CHECK(is_sigma_word(BasisWord({1, 0, 1}, Permutation::from_images({3, 1, 2}))));
  CHECK_FALSE(is_sigma_word(BasisWord({0, 0, 0}, Permutation::from_images({3, 2, 1}))));
  for (auto& [f, p] : enumerate_Sigma(2, 3)) CHECK(is_sigma_word(BasisWord(f, p)));
}

TEST_CASE("linear relation element") {
  AlgebraElement r = linear_relation(1, 1, 3);
  REQUIRE(r.support().size() == 6);
  for (auto& [w, c] : r.support()) CHECK(c == Coefficient(1));

  AlgebraElement expected(1, 3);
  for (const char* t : {"g1 g2 g1", "g1 g2", "g2 g1", "g1", "g2", "1"}) {
    expected += word(1, 3, t);
  }
  CHECK(r == expected);

  CHECK_THROWS_AS(linear_relation(1, 1, 2), std::invalid_argument);
  CHECK_THROWS_AS(linear_relation(2, 1, 3), std::invalid_argument);

  // specialization sends the relation at d = 2 to the relation at d = 1
  CHECK(specialize_tl(linear_relation(1, 2, 3)) == linear_relation(1, 1, 3));
}

TEST_CASE("five term rewriting golden case") {
  // g1 g2 g1 = -(g2 g1 + g1 g2 + g1 + g2 + 1) in the quotient
  for (int d : {1, 2}) {
    YtlElement red = reduce_to_sigma(word(d, 3, "g1 g2 g1"));
    AlgebraElement expected(d, 3);
    for (const char* t : {"g2 g1", "g1 g2", "g1", "g2", "1"}) {
      expected -= word(d, 3, t);
    }
    CHECK(red.element() == expected);
  }
}

TEST_CASE("reduction fixes sigma supported elements") {
  for (auto& [f, p] : enumerate_Sigma(2, 3)) {
    AlgebraElement a = basis_element(2, 3, f, p);
    CHECK(reduce_to_sigma(a).element() == a);
  }
}

TEST_CASE("reduction is a projection") {
  std::mt19937_64 rng(0x706a72ULL);
  auto basis = enumerate_S(2, 3);
  for (int rep = 0; rep < 25; ++rep) {
    AlgebraElement a(2, 3);
    for (int k = 0; k < 4; ++k) {
      auto& [f, p] = basis[static_cast<std::size_t>(bounded_int(rng, 0, 47))];
      a.add_term(BasisWord(f, p), Coefficient::u_pow(bounded_int(rng, -1, 2)));
    }
    YtlElement once = reduce_to_sigma(a);
    CHECK(reduce_to_sigma(once.element()).element() == once.element());
  }
}

TEST_CASE("bare relation elements reduce to zero") {
  for (auto [d, n] : {std::pair{1, 3}, {2, 3}, {1, 4}, {3, 3}}) {
    for (int i = 1; i + 1 < n; ++i) {
      CHECK(reduce_to_sigma(linear_relation(i, d, n)).is_zero());
    }
  }
}

TEST_CASE("reduction annihilates the two-sided ideal at d = 1") {
  CHECK(nonzero_reductions(1, 3) == 0);
  CHECK(nonzero_reductions(1, 4) == 0);
}

TEST_CASE("at d = 2 the sigma span meets the ideal") {
  // The quotient of the 48 dimensional algebra by the two-sided ideal has
  // dimension 28, strictly below the 40 sigma words, so sigma is dependent
  // in the quotient and a spanning rewrite cannot kill every ideal element.
  // Witness, by the framing commutation rules alone:
  //   r_1 t_1 - t_3 r_1 = (t_2 - t_3)(g_1 g_2 + g_1) + (t_1 - t_3)(g_2 + 1)
  // which is a nonzero combination of eight sigma words inside the ideal.
  AlgebraElement lhs = mul(linear_relation(1, 2, 3), gen_t(1, 2, 3)) -
                       mul(gen_t(3, 2, 3), linear_relation(1, 2, 3));
  AlgebraElement rhs = mul(word(2, 3, "t2") - word(2, 3, "t3"),
                           word(2, 3, "g1 g2") + word(2, 3, "g1")) +
                       mul(word(2, 3, "t1") - word(2, 3, "t3"),
                           word(2, 3, "g2") + unit(2, 3));
  CHECK(lhs == rhs);
  CHECK_FALSE(lhs.is_zero());
  for (auto& [w, c] : lhs.support()) CHECK(is_sigma_word(w));

  CHECK(nonzero_reductions(2, 3) == 2112);
}

TEST_CASE("ideal span shapes") {
  CHECK(ideal_basis_span(1, 2).rows() == 0);
  auto m13 = ideal_basis_span(1, 3);
  CHECK(m13.rows() == 36);
  CHECK(m13.cols() == 6);
  auto m23 = ideal_basis_span(2, 3);
  CHECK(m23.rows() == 2304);
  CHECK(m23.cols() == 48);
}

TEST_CASE("ideal rank at (2,3) from two independent methods") {
  auto span = ideal_basis_span(2, 3);
  RankReport sampled = rank_over_u(span);
  CHECK(sampled.rank == 20);
  CHECK(sampled.stable);
  CHECK(rank_symbolic(span) == 20);
}

TEST_CASE("reduction is sound modulo the ideal") {
  // coordinates of w - reduce(w) must lie in the row space of the ideal span
  auto span = ideal_basis_span(2, 3);
  Rational u0 = make_rational(5, 3);

  auto basis = enumerate_S(2, 3);
  std::map<BasisWord, std::size_t> index;
  std::size_t k = 0;
  for (auto& [f, p] : basis) index.emplace(BasisWord(f, p), k++);

  std::vector<AlgebraElement> diffs;
  for (auto& [f, p] : basis) {
    AlgebraElement a = basis_element(2, 3, f, p);
    AlgebraElement diff = a - reduce_to_sigma(a).element();
    if (!diff.is_zero()) diffs.push_back(diff);
  }
  // exactly the eight longest words are rewritten at n = 3
  CHECK(diffs.size() == 8);

  RationalMatrix m(span.rows() + diffs.size(), span.cols());
  for (std::size_t r = 0; r < span.rows(); ++r)
    for (std::size_t c = 0; c < span.cols(); ++c)
      m.at(r, c) = span.at(r, c).evaluate(u0);
  for (std::size_t d2 = 0; d2 < diffs.size(); ++d2)
    for (auto& [w, c] : diffs[d2].support())
      m.at(span.rows() + d2, index.at(w)) = c.evaluate(u0);

  RationalMatrix base(span.rows(), span.cols());
  for (std::size_t r = 0; r < span.rows(); ++r)
    for (std::size_t c = 0; c < span.cols(); ++c)
      base.at(r, c) = span.at(r, c).evaluate(u0);

  CHECK(rank_rational(m) == rank_rational(base));
}

TEST_CASE("kernel of the reduction matches the ideal at d = 1") {
  auto basis = enumerate_S(1, 4);
  std::map<BasisWord, std::size_t> index;
  std::size_t k = 0;
  for (auto& [f, p] : basis) index.emplace(BasisWord(f, p), k++);

  CoefficientMatrix m(basis.size(), basis.size());
  std::size_t r = 0;
  for (auto& [f, p] : basis) {
    AlgebraElement a = basis_element(1, 4, f, p);
    AlgebraElement diff = a - reduce_to_sigma(a).element();
    for (auto& [w, c] : diff.support()) m.at(r, index.at(w)) = c;
    ++r;
  }
  CHECK(rank_over_u(m).rank == 10);
  CHECK(rank_over_u(ideal_basis_span(1, 4)).rank == 10);
}

TEST_CASE("dimension reports") {
  DimensionReport r12 = dimension_report(1, 2);
  CHECK(r12.dim_formula == 2);
  CHECK(r12.dim_rank == 2);
  CHECK(r12.ideal_rank == 0);
  CHECK(r12.agree);

  DimensionReport r13 = dimension_report(1, 3);
  CHECK(r13.dim_formula == 5);
  CHECK(r13.dim_rank == 5);
  CHECK(r13.ideal_rank == 1);
  CHECK(r13.agree);
  CHECK(r13.symbolic_anchor);

  DimensionReport r14 = dimension_report(1, 4);
  CHECK(r14.dim_formula == 14);
  CHECK(r14.dim_rank == 14);
  CHECK(r14.ideal_rank == 10);
  CHECK(r14.agree);

  DimensionReport r22 = dimension_report(2, 2);
  CHECK(r22.dim_formula == 8);
  CHECK(r22.dim_rank == 8);
  CHECK(r22.agree);

  DimensionReport r32 = dimension_report(3, 2);
  CHECK(r32.dim_formula == 18);
  CHECK(r32.dim_rank == 18);
  CHECK(r32.agree);
}

TEST_CASE("dimension report at (2,3) records the true quotient dimension") {
  // the closed form d^n C_n = 40 overcounts here; the computed quotient has
  // dimension 28 and the report says so rather than echoing the formula
  DimensionReport r = dimension_report(2, 3);
  CHECK(r.full_dim == 48);
  CHECK(r.dim_formula == 40);
  CHECK(r.ideal_rank == 20);
  CHECK(r.dim_rank == 28);
  CHECK(r.rank_stable);
  CHECK_FALSE(r.agree);
}

TEST_CASE("quotient multiplication") {
  YtlElement one = ytl_unit(1, 3);
  YtlElement a = reduce_to_sigma(word(1, 3, "g1 g2"));
  CHECK(ytl_mul(a, one) == a);
  CHECK(ytl_mul(one, a) == a);

  YtlElement prod = ytl_mul(a, reduce_to_sigma(word(1, 3, "g1")));
  CHECK(prod.element() == reduce_to_sigma(word(1, 3, "g1 g2 g1")).element());
}

TEST_CASE("quotient multiplication associates at d = 1") {
  std::mt19937_64 rng(0x61737363ULL);
  auto sigma = enumerate_Sigma(1, 4);
  for (int rep = 0; rep < 30; ++rep) {
    auto& [fa, pa] = sigma[static_cast<std::size_t>(bounded_int(rng, 0, (long)sigma.size() - 1))];
    auto& [fb, pb] = sigma[static_cast<std::size_t>(bounded_int(rng, 0, (long)sigma.size() - 1))];
    auto& [fc, pc] = sigma[static_cast<std::size_t>(bounded_int(rng, 0, (long)sigma.size() - 1))];
    YtlElement a = reduce_to_sigma(basis_element(1, 4, fa, pa));
    YtlElement b = reduce_to_sigma(basis_element(1, 4, fb, pb));
    YtlElement c = reduce_to_sigma(basis_element(1, 4, fc, pc));
    CHECK(ytl_mul(ytl_mul(a, b), c) == ytl_mul(a, ytl_mul(b, c)));
  }
}

TEST_CASE("non invertible generator relations") {
  for (auto [d, n] : {std::pair{1, 3}, {2, 3}, {3, 3}}) {
    LPresentationReport rep = verify_l_presentation(d, n);
    CHECK(rep.d == d);
    CHECK(rep.n == n);
    CHECK(rep.all_hold);
    REQUIRE_FALSE(rep.checks.empty());
    for (const auto& c : rep.checks) CHECK(c.holds);
  }

  // at d = 1 the report includes the classical loop coefficient check
  LPresentationReport d1 = verify_l_presentation(1, 3);
  bool has_tau = false;
  for (const auto& c : d1.checks) {
    if (c.name.find("tau") != std::string::npos) has_tau = c.holds;
  }
  CHECK(has_tau);
}

TEST_CASE("l generator identity in the full algebra") {
  // l_i^2 = ((u-1) e_i + 2)/(u+1) l_i holds before passing to the quotient
  for (auto [d, n] : {std::pair{2, 3}, {3, 2}}) {
    AlgebraElement l = l_generator(1, d, n);
    Coefficient up1 = Coefficient::u_pow(1) + Coefficient(1);
    Coefficient um1 = Coefficient::u_pow(1) - Coefficient(1);
    AlgebraElement rhs =
        mul(idempotent_e(1, d, n) * (um1 / up1) + unit(d, n) * (Coefficient(2) / up1), l);
    CHECK(mul(l, l) == rhs);
  }
}

TEST_CASE("specialization to one dimensional framings") {
  CHECK(specialize_tl(idempotent_e(1, 2, 3)) == unit(1, 3));
  CHECK(specialize_tl(word(2, 3, "t1 g1")) == word(1, 3, "g1"));

  std::mt19937_64 rng(0x73706563ULL);
  auto basis = enumerate_S(2, 3);
  for (int rep = 0; rep < 20; ++rep) {
    auto& [fa, pa] = basis[static_cast<std::size_t>(bounded_int(rng, 0, 47))];
    auto& [fb, pb] = basis[static_cast<std::size_t>(bounded_int(rng, 0, 47))];
    AlgebraElement a = basis_element(2, 3, fa, pa);
    AlgebraElement b = basis_element(2, 3, fb, pb);
    CHECK(specialize_tl(mul(a, b)) == mul(specialize_tl(a), specialize_tl(b)));
    CHECK(specialize_tl(reduce_to_sigma(a).element()) ==
          reduce_to_sigma(specialize_tl(a)).element());
  }
}

TEST_CASE("rewriting respects the step cap") {
  std::size_t saved = limits().max_steps;
  limits().max_steps = 0;
  CHECK_THROWS_AS(reduce_to_sigma(word(1, 3, "g1 g2 g1")), CapExceeded);
  limits().max_steps = saved;
  CHECK_FALSE(reduce_to_sigma(word(1, 3, "g1 g2 g1")).is_zero());
}
