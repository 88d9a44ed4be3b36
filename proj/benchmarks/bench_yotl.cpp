#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "yotl/jtrace.hpp"
#include "yotl/util.hpp"
#include "yotl/ytl.hpp"

using namespace yotl;

namespace {

AlgebraElement basis_element(int d, int n, const FramingVector& f, const Permutation& p) {
  AlgebraElement a(d, n);
  a.add_term(BasisWord(f, p), Coefficient(1));
  return a;
}

std::vector<AlgebraElement> random_words(int d, int n, std::size_t count, std::uint64_t seed) {
  auto basis = enumerate_S(d, n);
  std::mt19937_64 rng(seed);
  std::vector<AlgebraElement> out;
  out.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    auto& [f, p] = basis[static_cast<std::size_t>(bounded_int(rng, 0, (long)basis.size() - 1))];
    out.push_back(basis_element(d, n, f, p));
  }
  return out;
}

}  // namespace

static void BM_mul(benchmark::State& state) {
  auto words = random_words(2, 3, 64, 0x62656e6368ULL);
  std::size_t k = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(mul(words[k % 64], words[(k + 1) % 64]));
    ++k;
  }
}
BENCHMARK(BM_mul);

static void BM_reduce(benchmark::State& state) {
  // the longest braid word is the one rewritten, so this exercises the
  // five term substitution and the renormalization behind it
  AlgebraElement w(2, 3);
  w.add_term(BasisWord({1, 0, 1}, Permutation::from_images({3, 2, 1})), Coefficient(1));
  for (auto _ : state) benchmark::DoNotOptimize(reduce_to_sigma(w));
}
BENCHMARK(BM_reduce);

static void BM_trace(benchmark::State& state) {
  auto words = random_words(2, 3, 64, 0x7472616365ULL);
  std::size_t k = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(trace(words[k % 64]));
    ++k;
  }
}
BENCHMARK(BM_trace);

static void BM_ideal_span(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(ideal_basis_span(1, 3));
}
BENCHMARK(BM_ideal_span);

static void BM_rank(benchmark::State& state) {
  auto span = ideal_basis_span(1, 3);
  for (auto _ : state) benchmark::DoNotOptimize(rank_over_u(span).rank);
}
BENCHMARK(BM_rank);

BENCHMARK_MAIN();
