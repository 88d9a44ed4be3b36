#include "yotl/util.hpp"

namespace yotl {

Limits& limits() {
  static Limits instance;
  return instance;
}

long bounded_int(std::mt19937_64& rng, long lo, long hi) {
  std::uint64_t range = static_cast<std::uint64_t>(hi - lo) + 1;
  std::uint64_t limit = std::uint64_t(-1) - std::uint64_t(-1) % range;
  std::uint64_t v;
  do {
    v = rng();
  } while (v >= limit);
  return lo + static_cast<long>(v % range);
}

}  // namespace yotl
