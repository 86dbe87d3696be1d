// SPDX-License-Identifier: Apache-2.0
#include "emobee/rng.hpp"

#include <cmath>

namespace emobee {

std::uint32_t Rng::below(std::uint32_t n) {
  std::uint64_t x = engine_() >> 32;
  std::uint64_t m = x * n;
  auto low = static_cast<std::uint32_t>(m);
  if (low < n) {
    const std::uint32_t threshold = static_cast<std::uint32_t>(-n) % n;
    while (low < threshold) {
      x = engine_() >> 32;
      m = x * n;
      low = static_cast<std::uint32_t>(m);
    }
  }
  return static_cast<std::uint32_t>(m >> 32);
}

double Rng::normal() {
  double u, v, s;
  do {
    u = 2.0 * uniform() - 1.0;
    v = 2.0 * uniform() - 1.0;
    s = u * u + v * v;
  } while (s >= 1.0 || s == 0.0);
  return u * std::sqrt(-2.0 * std::log(s) / s);
}

}  // namespace emobee
