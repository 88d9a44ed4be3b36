#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "yotl/permwords.hpp"
#include "yotl/scalars.hpp"

namespace yotl {

/*
 * Basis word t_1^{r_1} ... t_n^{r_n} g_w of the Yokonuma-Hecke algebra
 * Y_{d,n}(u): a framing vector followed by the canonical word of a
 * permutation. Framing exponents are stored already reduced mod d.
 */
class BasisWord {
 public:
  BasisWord(FramingVector framing, Permutation perm);

  const FramingVector& framing() const { return framing_; }
  const Permutation& perm() const { return perm_; }
  const CanonicalWord& word() const { return word_; }
  int n() const { return perm_.degree(); }

  bool operator==(const BasisWord& o) const;
  bool operator<(const BasisWord& o) const;  // framing lex, then word order

  // Parseable text: framing as t<j>^<k> tokens, then canonical g letters,
  // e.g. "t1 t3^2 g2 g1"; the empty word is "1".
  std::string str() const;

 private:
  FramingVector framing_;
  Permutation perm_;
  CanonicalWord word_;
};

/*
 * Element of Y_{d,n}(u): finite Coefficient-linear combination of basis
 * words, kept in normal form (framings left, canonical g word right).
 */
class AlgebraElement {
 public:
  AlgebraElement(int d, int n);  // zero

  int d() const { return d_; }
  int n() const { return n_; }
  bool is_zero() const { return support_.empty(); }
  const std::map<BasisWord, Coefficient>& support() const { return support_; }

  void add_term(const BasisWord& w, const Coefficient& c);
  Coefficient coefficient(const BasisWord& w) const;

  AlgebraElement operator-() const;
  AlgebraElement operator+(const AlgebraElement& o) const;
  AlgebraElement operator-(const AlgebraElement& o) const;
  AlgebraElement operator*(const Coefficient& c) const;
  AlgebraElement& operator+=(const AlgebraElement& o);
  AlgebraElement& operator-=(const AlgebraElement& o);
  bool operator==(const AlgebraElement& o) const;

  std::string str() const;

 private:
  int d_, n_;
  std::map<BasisWord, Coefficient> support_;
};

AlgebraElement unit(int d, int n);
AlgebraElement gen_g(int i, int d, int n);
AlgebraElement gen_t(int j, int d, int n, long s = 1);
// e_i = (1/d) sum_m t_i^m t_{i+1}^{-m}
AlgebraElement idempotent_e(int i, int d, int n);
// g_i^{-1} = g_i + (u^{-1} - 1) e_i + (u^{-1} - 1) e_i g_i
AlgebraElement g_inverse(int i, int d, int n);

/*
 * Right multiplication by g_i in normal form. On an ascent the word just
 * grows; on a descent the quadratic relation
 *   g_i^2 = 1 + (u - 1) e_i + (u - 1) e_i g_i
 * is applied after commuting the idempotent's framings to the left.
 */
AlgebraElement right_mul_g(const AlgebraElement& a, int i);
AlgebraElement right_mul_t(const AlgebraElement& a, int j, long s);
AlgebraElement left_mul_t(const AlgebraElement& a, int j, long s);

// Product, factoring the right operand word by word.
AlgebraElement mul(const AlgebraElement& a, const AlgebraElement& b);

// t^r g_letters as an element, evaluating possibly non-reduced letters.
AlgebraElement word_element(int d, int n, const FramingVector& framing,
                            const std::vector<int>& letters);

// Inclusion Y_{d,n} into Y_{d,m}: pad framings with 0, fix new strands.
AlgebraElement embed(const AlgebraElement& a, int m);

// JSON round-trip: {"d":..,"n":..,"terms":[{"framing":[..],"word":[..],
// "coeff":"<Coefficient string>"},..]} with terms in basis order.
std::string element_to_json(const AlgebraElement& a);
AlgebraElement element_from_json(const std::string& text);

struct PresentationCheck {
  std::string name;
  bool holds = false;
};

struct PresentationReport {
  int d = 0;
  int n = 0;
  std::size_t triples = 0;
  std::uint64_t seed = 0;
  bool all_hold = false;
  std::vector<PresentationCheck> checks;
};

/*
 * Exhaustive defining-relation checks plus randomized structural ones:
 * word-independence of products under braid moves and associativity on
 * `triples` random basis-word triples.
 */
PresentationReport verify_presentation(int d, int n, std::size_t triples = 500,
                                       std::uint64_t seed = 0x70726573656e74ULL);

}  // namespace yotl
