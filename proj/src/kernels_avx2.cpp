// SPDX-License-Identifier: Apache-2.0
#include "emobee/kernels.hpp"

#if EMOBEE_HAVE_AVX2_KERNELS

#include <immintrin.h>

#include <bit>
#include <cstring>

// Functions are compiled for AVX2 through target attributes instead of a
// per-file -mavx2 so no inline code shared with other translation units is
// emitted with AVX2 instructions.
#define EMOBEE_AVX2 __attribute__((target("avx2")))

namespace emobee::kernels::avx2 {

EMOBEE_AVX2 void group_sums(const std::uint8_t* codes, const double* valence,
                            const double* arousal, std::size_t n, GroupSums& out) {
  __m256d acc_v[3] = {_mm256_setzero_pd(), _mm256_setzero_pd(), _mm256_setzero_pd()};
  __m256d acc_a[3] = {_mm256_setzero_pd(), _mm256_setzero_pd(), _mm256_setzero_pd()};
  std::array<std::size_t, 3> count{};
  const __m256i group_id[3] = {_mm256_set1_epi64x(0), _mm256_set1_epi64x(1),
                               _mm256_set1_epi64x(2)};

  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    std::int32_t packed;
    std::memcpy(&packed, codes + i, sizeof packed);
    const __m256i lanes = _mm256_cvtepu8_epi64(_mm_cvtsi32_si128(packed));
    const __m256d v = _mm256_loadu_pd(valence + i);
    const __m256d a = _mm256_loadu_pd(arousal + i);
    for (int g = 0; g < 3; ++g) {
      const __m256d mask = _mm256_castsi256_pd(_mm256_cmpeq_epi64(lanes, group_id[g]));
      acc_v[g] = _mm256_add_pd(acc_v[g], _mm256_and_pd(v, mask));
      acc_a[g] = _mm256_add_pd(acc_a[g], _mm256_and_pd(a, mask));
      count[g] += static_cast<std::size_t>(std::popcount(
          static_cast<unsigned>(_mm256_movemask_pd(mask))));
    }
  }

  alignas(32) double lane_v[3][4];
  alignas(32) double lane_a[3][4];
  for (int g = 0; g < 3; ++g) {
    _mm256_store_pd(lane_v[g], acc_v[g]);
    _mm256_store_pd(lane_a[g], acc_a[g]);
  }
  for (; i < n; ++i) {
    const std::size_t lane = i % 4;
    for (std::size_t g = 0; g < 3; ++g) {
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

EMOBEE_AVX2 void contagion(const double* src_v, const double* src_a, double* dst_v,
                           double* dst_a, std::size_t n, double gamma_v, double gamma_a) {
  const __m256d gv = _mm256_set1_pd(gamma_v);
  const __m256d ga = _mm256_set1_pd(gamma_a);
  const __m256d v_lo = _mm256_set1_pd(-1.0);
  const __m256d a_lo = _mm256_setzero_pd();
  const __m256d hi = _mm256_set1_pd(1.0);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d tv = _mm256_loadu_pd(dst_v + i);
    const __m256d ta = _mm256_loadu_pd(dst_a + i);
    __m256d v = _mm256_add_pd(tv, _mm256_mul_pd(gv, _mm256_sub_pd(_mm256_loadu_pd(src_v + i), tv)));
    __m256d a = _mm256_add_pd(ta, _mm256_mul_pd(ga, _mm256_sub_pd(_mm256_loadu_pd(src_a + i), ta)));
    // Operand order reproduces std::min(std::max(x, lo), hi).
    v = _mm256_min_pd(hi, _mm256_max_pd(v_lo, v));
    a = _mm256_min_pd(hi, _mm256_max_pd(a_lo, a));
    _mm256_storeu_pd(dst_v + i, v);
    _mm256_storeu_pd(dst_a + i, a);
  }
  if (i < n) scalar::contagion(src_v + i, src_a + i, dst_v + i, dst_a + i, n - i, gamma_v, gamma_a);
}

EMOBEE_AVX2 void welford(double* mean, double* m2, const double* x, std::size_t n,
                         std::size_t k) {
  const __m256d kd = _mm256_set1_pd(static_cast<double>(k));
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d xi = _mm256_loadu_pd(x + i);
    const __m256d mu = _mm256_loadu_pd(mean + i);
    const __m256d delta = _mm256_sub_pd(xi, mu);
    const __m256d mu_new = _mm256_add_pd(mu, _mm256_div_pd(delta, kd));
    const __m256d m2_new =
        _mm256_add_pd(_mm256_loadu_pd(m2 + i), _mm256_mul_pd(delta, _mm256_sub_pd(xi, mu_new)));
    _mm256_storeu_pd(mean + i, mu_new);
    _mm256_storeu_pd(m2 + i, m2_new);
  }
  if (i < n) scalar::welford(mean + i, m2 + i, x + i, n - i, k);
}

EMOBEE_AVX2 void pairwise_max(const double* a, const double* b, double* out, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    _mm256_storeu_pd(out + i, _mm256_max_pd(_mm256_loadu_pd(b + i), _mm256_loadu_pd(a + i)));
  }
  if (i < n) scalar::pairwise_max(a + i, b + i, out + i, n - i);
}

}  // namespace emobee::kernels::avx2

#endif
