#pragma once

#include <cstddef>
#include <random>
#include <stdexcept>
#include <string>

namespace yotl {

/* Process-wide resource guards. Enumerations, element supports and rewriting
   loops check these and throw CapExceeded instead of truncating silently. */
struct Limits {
  std::size_t max_dim = 1000000;      // largest d^n * n! style enumeration
  std::size_t max_support = 1000000;  // largest element support size
  std::size_t max_steps = 1000000;    // most rewriting steps per reduction
};

Limits& limits();

class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Uniform integer in [lo, hi] by rejection, so that a recorded seed gives the
// same sample sequence on every platform.
long bounded_int(std::mt19937_64& rng, long lo, long hi);

}  // namespace yotl
