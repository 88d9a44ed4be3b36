#include "yotl/exactlinalg.hpp"

#include <gmp.h>
#include <gmpxx.h>

#include <random>
#include <utility>

#include "yotl/util.hpp"

namespace yotl {

namespace {

std::size_t rank_integer(std::vector<std::vector<mpz_class>> m) {
  if (m.empty()) return 0;
  std::size_t rows = m.size(), cols = m[0].size();
  std::size_t rank = 0;
  mpz_class prev = 1;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t best = rows;
    std::size_t best_bits = 0;
    for (std::size_t i = rank; i < rows; ++i) {
      if (m[i][c] == 0) continue;
      std::size_t bits = mpz_sizeinbase(m[i][c].get_mpz_t(), 2);
      if (best == rows || bits < best_bits) {
        best = i;
        best_bits = bits;
      }
    }
    if (best == rows) continue;
    if (best != rank) m[best].swap(m[rank]);
    const mpz_class piv = m[rank][c];
    for (std::size_t i = rank + 1; i < rows; ++i) {
      if (m[i][c] == 0 && prev == 1) {
        for (std::size_t j = c + 1; j < cols; ++j) m[i][j] *= piv;
        continue;
      }
      const mpz_class fac = m[i][c];
      m[i][c] = 0;
      for (std::size_t j = c + 1; j < cols; ++j) {
        mpz_class num = piv * m[i][j] - fac * m[rank][j];
        if (!mpz_divisible_p(num.get_mpz_t(), prev.get_mpz_t()))
          throw std::logic_error("fraction-free elimination lost exact divisibility");
        mpz_divexact(m[i][j].get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = piv;
    ++rank;
  }
  return rank;
}

}  // namespace

std::size_t rank_rational(const RationalMatrix& m) {
  std::size_t rows = m.rows(), cols = m.cols();
  if (rows == 0 || cols == 0) return 0;
  std::vector<std::vector<mpz_class>> z(rows, std::vector<mpz_class>(cols));
  for (std::size_t i = 0; i < rows; ++i) {
    mpz_class lcm = 1;
    for (std::size_t j = 0; j < cols; ++j)
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), m.at(i, j).get_den().get_mpz_t());
    for (std::size_t j = 0; j < cols; ++j) {
      mpq_class scaled = m.at(i, j) * Rational(lcm);
      z[i][j] = scaled.get_num();
    }
  }
  return rank_integer(std::move(z));
}

RankReport rank_over_u(const CoefficientMatrix& m, const RankOptions& opts) {
  RankReport report;
  report.seed = opts.seed;
  std::mt19937_64 rng(opts.seed);
  std::size_t want = opts.samples < 3 ? 3 : opts.samples;
  std::size_t retries = 0;
  while (report.samples.size() < want) {
    if (retries > opts.max_retries)
      throw std::runtime_error("could not find enough admissible sample points for u");
    long p = bounded_int(rng, -97, 97);
    long q = bounded_int(rng, 1, 97);
    if (p == 0) {
      ++retries;
      continue;
    }
    Rational u0 = make_rational(p, q);
    if (u0 == 0 || u0 == 1 || u0 == -1) {
      ++retries;
      continue;
    }
    bool pole = false;
    RationalMatrix num(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows() && !pole; ++i)
      for (std::size_t j = 0; j < m.cols() && !pole; ++j) {
        if (m.at(i, j).has_pole_at(u0)) {
          pole = true;
          break;
        }
        num.at(i, j) = m.at(i, j).evaluate(u0);
      }
    if (pole) {
      ++retries;
      continue;
    }
    RankSample sample;
    sample.u_value = u0;
    sample.rank = rank_rational(num);
    report.samples.push_back(std::move(sample));
  }
  std::size_t hits = 0;
  for (const auto& s : report.samples) {
    if (s.rank > report.rank) {
      report.rank = s.rank;
      hits = 1;
    } else if (s.rank == report.rank) {
      ++hits;
    }
  }
  report.stable = hits >= 2;
  return report;
}

std::size_t rank_symbolic(const CoefficientMatrix& m) {
  std::size_t rows = m.rows(), cols = m.cols();
  if (rows == 0 || cols == 0) return 0;
  std::vector<std::vector<Coefficient>> w(rows, std::vector<Coefficient>(cols));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) w[i][j] = m.at(i, j);
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    // Prefer the sparsest pivot to limit growth of rational function entries.
    std::size_t best = rows;
    std::size_t best_terms = 0;
    for (std::size_t i = rank; i < rows; ++i) {
      if (w[i][c].is_zero()) continue;
      std::size_t terms = w[i][c].numerator_terms().size();
      if (best == rows || terms < best_terms) {
        best = i;
        best_terms = terms;
      }
    }
    if (best == rows) continue;
    if (best != rank) w[best].swap(w[rank]);
    Coefficient inv = w[rank][c].inverse();
    for (std::size_t i = rank + 1; i < rows; ++i) {
      if (w[i][c].is_zero()) continue;
      Coefficient fac = w[i][c] * inv;
      w[i][c] = Coefficient();
      for (std::size_t j = c + 1; j < cols; ++j) {
        if (w[rank][j].is_zero()) continue;
        w[i][j] -= fac * w[rank][j];
      }
    }
    ++rank;
  }
  return rank;
}

}  // namespace yotl
