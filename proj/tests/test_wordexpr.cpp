#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "yotl/wordexpr.hpp"
#include "yotl/util.hpp"

using namespace yotl;

TEST_CASE("tokenization") {
  WordExpr e = parse_word("t1 t3^2 g2 g1^-1", 3, 3);
  CHECK(e.d == 3);
  CHECK(e.n == 3);
  REQUIRE(e.tokens.size() == 4);
  CHECK(e.tokens[0].kind == 't');
  CHECK(e.tokens[0].index == 1);
  CHECK(e.tokens[0].exponent == 1);
  CHECK(e.tokens[1].kind == 't');
  CHECK(e.tokens[1].index == 3);
  CHECK(e.tokens[1].exponent == 2);
  CHECK(e.tokens[2].kind == 'g');
  CHECK(e.tokens[2].index == 2);
  CHECK(e.tokens[3].kind == 'g');
  CHECK(e.tokens[3].exponent == -1);
}

TEST_CASE("empty product") {
  WordExpr e = parse_word("1", 2, 3);
  CHECK(e.tokens.empty());
  CHECK(eval_word(e) == unit(2, 3));
  CHECK(eval_word(parse_word("  1  ", 2, 3)) == unit(2, 3));
}

TEST_CASE("evaluation matches generator constructors") {
  CHECK(eval_word(parse_word("g1", 2, 3)) == gen_g(1, 2, 3));
  CHECK(eval_word(parse_word("t2", 2, 3)) == gen_t(2, 2, 3));
  CHECK(eval_word(parse_word("e1", 2, 3)) == idempotent_e(1, 2, 3));
  CHECK(eval_word(parse_word("g1^-1", 2, 3)) == g_inverse(1, 2, 3));
  CHECK(eval_word(parse_word("g1^2", 2, 3)) ==
        mul(gen_g(1, 2, 3), gen_g(1, 2, 3)));
  CHECK(eval_word(parse_word("g2^-2", 1, 3)) ==
        mul(g_inverse(2, 1, 3), g_inverse(2, 1, 3)));
  // negative framing exponents wrap mod d
  CHECK(eval_word(parse_word("t2^-1", 3, 3)) == eval_word(parse_word("t2^2", 3, 3)));
  CHECK(eval_word(parse_word("t1 g1", 2, 3)) ==
        mul(gen_t(1, 2, 3), gen_g(1, 2, 3)));
}

TEST_CASE("every basis word round trips through its rendering") {
  for (auto [d, n] : {std::pair{2, 3}, {1, 4}}) {
    for (auto& [f, p] : enumerate_S(d, n)) {
      BasisWord w(f, p);
      AlgebraElement direct(d, n);
      direct.add_term(w, Coefficient(1));
      CHECK(eval_word(parse_word(w.str(), d, n)) == direct);
    }
  }
}

TEST_CASE("parse errors carry a column") {
  auto column_of = [](const std::string& text, int d, int n) -> std::size_t {
    try {
      parse_word(text, d, n);
    } catch (const WordParseError& err) {
      return err.column();
    }
    return 0;  // no throw
  };

  CHECK(column_of("bogus", 2, 3) == 1);
  CHECK(column_of("g1 q2", 2, 3) == 4);
  CHECK(column_of("g3", 2, 3) == 1);      // index out of range at n = 3
  CHECK(column_of("t4", 2, 3) == 1);
  CHECK(column_of("e2 e0", 2, 3) == 4);
  CHECK(column_of("t1^", 2, 3) == 4);     // dangling exponent
  CHECK(column_of("t1g2", 2, 3) == 3);    // factors must be separated
  CHECK(column_of("e1^2", 2, 3) == 1);    // idempotent powers are redundant
  CHECK_THROWS_AS(parse_word("g1 g99999999999999999999^2", 2, 3), WordParseError);
}

TEST_CASE("exponent magnitude is capped") {
  CHECK_THROWS_AS(parse_word("g1^1000001", 2, 3), WordParseError);
  CHECK_NOTHROW(parse_word("t1^1000000", 2, 3));
}
