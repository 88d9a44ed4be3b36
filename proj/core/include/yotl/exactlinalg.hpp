#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "yotl/scalars.hpp"

namespace yotl {

// Dense matrix with exact entries, row major.
template <typename T>
class ExactMatrix {
 public:
  ExactMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& at(std::size_t r, std::size_t c) {
    if (r >= rows_ || c >= cols_) throw std::out_of_range("matrix index out of range");
    return data_[r * cols_ + c];
  }
  const T& at(std::size_t r, std::size_t c) const {
    if (r >= rows_ || c >= cols_) throw std::out_of_range("matrix index out of range");
    return data_[r * cols_ + c];
  }

 private:
  std::size_t rows_, cols_;
  std::vector<T> data_;
};

using RationalMatrix = ExactMatrix<Rational>;
using CoefficientMatrix = ExactMatrix<Coefficient>;

// Fraction-free Bareiss elimination after clearing denominators row by row.
std::size_t rank_rational(const RationalMatrix& m);

struct RankOptions {
  std::size_t samples = 3;
  std::uint64_t seed = 0x59544c2d72616e6bULL;
  std::size_t max_retries = 64;
};

struct RankSample {
  Rational u_value;
  std::size_t rank = 0;
};

struct RankReport {
  std::size_t rank = 0;
  bool stable = false;
  std::uint64_t seed = 0;
  std::vector<RankSample> samples;
};

// Rank of a matrix over the rational function field, estimated by evaluating
// u at random rational points and taking the maximum sampled rank.  The
// estimate is a lower bound on the symbolic rank and is flagged stable once
// two samples attain the maximum.
RankReport rank_over_u(const CoefficientMatrix& m, const RankOptions& opts = {});

// Exact Gaussian elimination over the field of rational functions in u.
std::size_t rank_symbolic(const CoefficientMatrix& m);

}  // namespace yotl
