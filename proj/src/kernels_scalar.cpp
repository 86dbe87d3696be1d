// SPDX-License-Identifier: Apache-2.0
#include <algorithm>

#include "emobee/kernels.hpp"

namespace emobee::kernels::scalar {

void group_sums(const std::uint8_t* codes, const double* valence, const double* arousal,
                std::size_t n, GroupSums& out) {
  double lane_v[3][4] = {};
  double lane_a[3][4] = {};
  std::array<std::size_t, 3> count{};
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t lane = i % 4;
    for (std::size_t g = 0; g < 3; ++g) {
      // Non-members contribute +0.0, exactly as the masked SIMD add does.
      const bool member = codes[i] == g;
      lane_v[g][lane] += member ? valence[i] : 0.0;
      lane_a[g][lane] += member ? arousal[i] : 0.0;
    }
    ++count[codes[i]];
  }
  for (std::size_t g = 0; g < 3; ++g) {
    out.count[g] = count[g];
    out.valence[g] = (lane_v[g][0] + lane_v[g][1]) + (lane_v[g][2] + lane_v[g][3]);
    out.arousal[g] = (lane_a[g][0] + lane_a[g][1]) + (lane_a[g][2] + lane_a[g][3]);
  }
}

void contagion(const double* src_v, const double* src_a, double* dst_v, double* dst_a,
               std::size_t n, double gamma_v, double gamma_a) {
  for (std::size_t i = 0; i < n; ++i) {
    const double v = dst_v[i] + gamma_v * (src_v[i] - dst_v[i]);
    const double a = dst_a[i] + gamma_a * (src_a[i] - dst_a[i]);
    dst_v[i] = std::min(std::max(v, -1.0), 1.0);
    dst_a[i] = std::min(std::max(a, 0.0), 1.0);
  }
}

void welford(double* mean, double* m2, const double* x, std::size_t n, std::size_t k) {
  const double kd = static_cast<double>(k);
  for (std::size_t i = 0; i < n; ++i) {
    const double delta = x[i] - mean[i];
    mean[i] = mean[i] + delta / kd;
    m2[i] = m2[i] + delta * (x[i] - mean[i]);
  }
}

void pairwise_max(const double* a, const double* b, double* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = a[i] < b[i] ? b[i] : a[i];
}

}  // namespace emobee::kernels::scalar
