#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace yotl {

/* Permutation of {1..n}, stored as the image vector. Composition applies the
   right factor first, so a word s_{i_1} ... s_{i_k} read left to right is the
   function s_{i_1} o ... o s_{i_k}. */
class Permutation {
 public:
  explicit Permutation(int n);
  static Permutation transposition(int n, int i);  // s_i, 1 <= i <= n-1
  static Permutation from_images(std::vector<int> images);

  int degree() const { return static_cast<int>(img_.size()); }
  int operator()(int i) const;
  const std::vector<int>& images() const { return img_; }

  Permutation compose(const Permutation& rhs) const;  // this o rhs
  Permutation inverse() const;
  bool is_identity() const;
  long length() const;  // inversion count

  bool operator==(const Permutation&) const = default;

 private:
  std::vector<int> img_;
};

/* One descending run g_head g_{head-1} ... g_foot of a canonical word. */
struct Run {
  int head;
  int foot;
  auto operator<=>(const Run&) const = default;
};

/*
 * Canonical reduced word of a permutation: a product of descending runs
 * whose heads strictly increase left to right. Every permutation has
 * exactly one such word; the letter count equals the inversion count.
 */
class CanonicalWord {
 public:
  CanonicalWord() = default;
  explicit CanonicalWord(std::vector<Run> runs);

  const std::vector<Run>& runs() const { return runs_; }
  std::vector<int> letters() const;
  std::size_t letter_count() const;
  // Feet strictly increasing left to right: membership in the Sigma shape.
  bool feet_strictly_increase() const;
  std::string str() const;  // "(s2 s1)(s3)", "1" for the empty word

  bool operator==(const CanonicalWord&) const = default;

 private:
  std::vector<Run> runs_;
};

// Extracts the canonical word by repeatedly peeling the largest moved point.
CanonicalWord canonical_word(const Permutation& p);

// Product s_{letters[0]} ... s_{letters[k-1]} as a permutation of {1..n}.
Permutation permutation_of_letters(int n, const std::vector<int>& letters);

/* Framing vector: one exponent in 0..d-1 per strand. */
using FramingVector = std::vector<int>;

// Left action permuting positions: act(p, f)[p(j)] = f[j].
FramingVector act(const Permutation& p, const FramingVector& f);

// Total order used everywhere a basis order is needed: framing
// lexicographic, then word length, then letters lexicographic.
bool word_order_less(const FramingVector& fa, const Permutation& pa,
                     const FramingVector& fb, const Permutation& pb);

// All permutations of {1..n} sorted by (length, canonical letters).
std::vector<Permutation> permutations_by_word_order(int n);

/*
 * Basis enumerations. enumerate_S yields all (framing, permutation) pairs in
 * the documented order; enumerate_Sigma keeps only words whose canonical
 * cycles have strictly increasing feet. Both throw CapExceeded when
 * d^n * n! exceeds limits().max_dim.
 */
std::vector<std::pair<FramingVector, Permutation>> enumerate_S(int d, int n);
std::vector<std::pair<FramingVector, Permutation>> enumerate_Sigma(int d, int n);

std::uint64_t factorial(int n);
std::uint64_t catalan(int n);
std::uint64_t dimension_formula(int d, int n);  // d^n * catalan(n)
std::uint64_t full_dimension(int d, int n);     // d^n * n!

}  // namespace yotl
