#include "yotl/wordexpr.hpp"

#include <cctype>

namespace yotl {

WordParseError::WordParseError(std::size_t column, const std::string& what)
    : std::runtime_error("word parse error at column " + std::to_string(column) + ": " + what),
      column_(column) {}

namespace {

struct Cursor {
  const std::string& text;
  std::size_t pos = 0;

  bool done() const { return pos >= text.size(); }
  char peek() const { return text[pos]; }
  std::size_t column() const { return pos + 1; }

  void skip_space() {
    while (!done() && std::isspace(static_cast<unsigned char>(peek()))) ++pos;
  }

  long integer(const std::string& what) {
    std::size_t start = pos;
    bool neg = false;
    if (!done() && (peek() == '-' || peek() == '+')) {
      neg = peek() == '-';
      ++pos;
    }
    if (done() || !std::isdigit(static_cast<unsigned char>(peek())))
      throw WordParseError(start + 1, "malformed " + what);
    long v = 0;
    while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + (peek() - '0');
      if (v > 1000000) throw WordParseError(start + 1, what + " out of range");
      ++pos;
    }
    return neg ? -v : v;
  }
};

}  // namespace

WordExpr parse_word(const std::string& text, int d, int n) {
  if (d < 1 || n < 0) throw std::invalid_argument("word context needs d >= 1, n >= 0");
  WordExpr expr;
  expr.d = d;
  expr.n = n;

  Cursor cur{text};
  cur.skip_space();
  if (!cur.done() && cur.peek() == '1') {
    std::size_t save = cur.pos;
    ++cur.pos;
    cur.skip_space();
    if (cur.done()) return expr;
    cur.pos = save;
  }
  while (!cur.done()) {
    std::size_t col = cur.column();
    char kind = cur.peek();
    if (kind != 't' && kind != 'g' && kind != 'e')
      throw WordParseError(col, std::string("unknown token starting with '") + kind + "'");
    ++cur.pos;
    long index = cur.integer("generator index");
    if (kind == 't') {
      if (index < 1 || index > n)
        throw WordParseError(col, "index out of range: t takes 1.." + std::to_string(n));
    } else if (index < 1 || index > n - 1) {
      throw WordParseError(col, std::string(1, kind) + " takes 1.." + std::to_string(n - 1));
    }
    long exponent = 1;
    if (!cur.done() && cur.peek() == '^') {
      ++cur.pos;
      exponent = cur.integer("exponent");
      if (kind == 'e')
        throw WordParseError(col, "the idempotent e takes no exponent");
    }
    expr.tokens.push_back({kind, static_cast<int>(index), exponent});
    if (!cur.done() && !std::isspace(static_cast<unsigned char>(cur.peek())))
      throw WordParseError(cur.column(), "expected whitespace between factors");
    cur.skip_space();
  }
  return expr;
}

AlgebraElement eval_word(const WordExpr& expr) {
  AlgebraElement acc = unit(expr.d, expr.n);
  for (const WordToken& tok : expr.tokens) {
    switch (tok.kind) {
      case 't':
        acc = right_mul_t(acc, tok.index, tok.exponent);
        break;
      case 'g':
        if (tok.exponent >= 0) {
          for (long k = 0; k < tok.exponent; ++k) acc = right_mul_g(acc, tok.index);
        } else {
          AlgebraElement inv = g_inverse(tok.index, expr.d, expr.n);
          for (long k = 0; k < -tok.exponent; ++k) acc = mul(acc, inv);
        }
        break;
      case 'e':
        acc = mul(acc, idempotent_e(tok.index, expr.d, expr.n));
        break;
      default:
        throw std::logic_error("unreachable token kind");
    }
  }
  return acc;
}

}  // namespace yotl
