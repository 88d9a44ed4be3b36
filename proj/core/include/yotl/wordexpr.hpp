#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "yotl/yhecke.hpp"

namespace yotl {

// One generator factor: kind 't', 'g' or 'e', 1-based index, integer
// exponent (always 1 for 'e').
struct WordToken {
  char kind = 't';
  int index = 1;
  long exponent = 1;
};

struct WordExpr {
  int d = 1;
  int n = 0;
  std::vector<WordToken> tokens;  // product read left to right
};

class WordParseError : public std::runtime_error {
 public:
  WordParseError(std::size_t column, const std::string& what);
  std::size_t column() const { return column_; }

 private:
  std::size_t column_;
};

// Grammar: whitespace separated factors t<j>, t<j>^<k>, g<i>, g<i>^<k>
// (negative k inverts), e<i>.  "1" alone denotes the empty product.
WordExpr parse_word(const std::string& text, int d, int n);

AlgebraElement eval_word(const WordExpr& expr);

}  // namespace yotl
