#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "yotl/exactlinalg.hpp"
#include "yotl/yhecke.hpp"

namespace yotl {

// Words whose cycle feet strictly increase; these span the quotient.
bool is_sigma_word(const BasisWord& w);

// r_i = g_i g_{i+1} g_i + g_i g_{i+1} + g_{i+1} g_i + g_i + g_{i+1} + 1.
AlgebraElement linear_relation(int i, int d, int n);

// Element of the Temperley-Lieb quotient, stored over the sigma basis.
class YtlElement {
 public:
  YtlElement(int d, int n) : elem_(d, n) {}
  explicit YtlElement(AlgebraElement a);

  const AlgebraElement& element() const { return elem_; }
  int d() const { return elem_.d(); }
  int n() const { return elem_.n(); }

  YtlElement operator+(const YtlElement& o) const { return YtlElement(elem_ + o.elem_); }
  YtlElement operator-(const YtlElement& o) const { return YtlElement(elem_ - o.elem_); }
  YtlElement operator*(const Coefficient& c) const { return YtlElement(elem_ * c); }
  bool operator==(const YtlElement& o) const { return elem_ == o.elem_; }

  bool is_zero() const { return elem_.is_zero(); }
  std::string str() const { return elem_.str(); }

 private:
  AlgebraElement elem_;
};

// Rewrites every support word onto the sigma basis by repeatedly replacing a
// g_k g_{k+1} g_k pattern with the five shorter terms of the linear relation.
// Deterministic: always the first offending support word, and within it the
// leftmost cycle pair whose feet fail to increase.
YtlElement reduce_to_sigma(const AlgebraElement& a);

YtlElement ytl_unit(int d, int n);
YtlElement ytl_mul(const YtlElement& a, const YtlElement& b);

// Rows are the coordinates over the word basis of a*r_i*b for every pair of
// basis words (a, b) and every relation index i.
CoefficientMatrix ideal_basis_span(int d, int n);

enum class DimMethod { formula, rank };

struct DimensionReport {
  int d = 0;
  int n = 0;
  std::uint64_t full_dim = 0;
  std::uint64_t dim_formula = 0;
  std::uint64_t dim_rank = 0;
  std::size_t ideal_rank = 0;
  bool agree = false;
  bool rank_stable = false;
  bool symbolic_anchor = false;
  std::uint64_t seed = 0;
  std::vector<RankSample> samples;
};

std::uint64_t ytl_dimension(int d, int n, DimMethod method);
DimensionReport dimension_report(int d, int n);

// l_i = (g_i + 1)/(u + 1), the non-invertible generator.
AlgebraElement l_generator(int i, int d, int n);

struct LRelationCheck {
  std::string name;
  bool holds = false;
};

struct LPresentationReport {
  int d = 0;
  int n = 0;
  bool all_hold = false;
  std::vector<LRelationCheck> checks;
};

LPresentationReport verify_l_presentation(int d, int n);

// Ring map t_j -> 1, g_i -> g_i onto the d = 1 algebra.
AlgebraElement specialize_tl(const AlgebraElement& a);

}  // namespace yotl
