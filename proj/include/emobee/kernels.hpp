// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace emobee::kernels {

//---------------------------------------------------------------------------//
// Data-parallel inner loops with a scalar reference and SIMD variants.
//
// Every variant must be bit-identical to the scalar reference. Reductions
// therefore use a fixed four-lane accumulation order (element i goes to lane
// i % 4, lanes combined as (l0 + l1) + (l2 + l3)) which the scalar reference
// spells out explicitly and the AVX2 path gets from its register layout.
//---------------------------------------------------------------------------//

enum class Isa { Scalar, Avx2 };

std::string_view name(Isa isa);

/// Per-group (indexed by decision code 0..2) agent counts and emotion sums.
struct GroupSums {
  std::array<std::size_t, 3> count{};
  std::array<double, 3> valence{};
  std::array<double, 3> arousal{};
};

struct KernelTable {
  Isa isa;

  /// Sums valence/arousal per decision code. Codes must be < 3.
  void (*group_sums)(const std::uint8_t* codes, const double* valence, const double* arousal,
                     std::size_t n, GroupSums& out);

  /// target += gamma * (source - target), clamped to [lo, hi], for valence
  /// ([-1, 1]) and arousal ([0, 1]) in one pass.
  void (*contagion)(const double* src_v, const double* src_a, double* dst_v, double* dst_a,
                    std::size_t n, double gamma_v, double gamma_a);

  /// One Welford step per column: k is the 1-based sample count after this
  /// update. mean and m2 are updated in place.
  void (*welford)(double* mean, double* m2, const double* x, std::size_t n, std::size_t k);

  /// out[i] = max(a[i], b[i]).
  void (*pairwise_max)(const double* a, const double* b, double* out, std::size_t n);
};

/// Variants compiled into this binary and supported by the running CPU.
std::vector<Isa> available();

/// Table for a given ISA. Throws DomainError if it is not available.
const KernelTable& table(Isa isa);

/// Best available variant, chosen once. Setting EMOBEE_SIMD=scalar in the
/// environment forces the scalar reference.
const KernelTable& active();

//---------------------------------------------------------------------------//
// Span conveniences over the active table
//---------------------------------------------------------------------------//

inline GroupSums group_sums(std::span<const std::uint8_t> codes, std::span<const double> valence,
                            std::span<const double> arousal) {
  GroupSums out;
  active().group_sums(codes.data(), valence.data(), arousal.data(), codes.size(), out);
  return out;
}

namespace scalar {
void group_sums(const std::uint8_t* codes, const double* valence, const double* arousal,
                std::size_t n, GroupSums& out);
void contagion(const double* src_v, const double* src_a, double* dst_v, double* dst_a,
               std::size_t n, double gamma_v, double gamma_a);
void welford(double* mean, double* m2, const double* x, std::size_t n, std::size_t k);
void pairwise_max(const double* a, const double* b, double* out, std::size_t n);
}  // namespace scalar

#if defined(__x86_64__) || defined(_M_X64)
#define EMOBEE_HAVE_AVX2_KERNELS 1
namespace avx2 {
void group_sums(const std::uint8_t* codes, const double* valence, const double* arousal,
                std::size_t n, GroupSums& out);
void contagion(const double* src_v, const double* src_a, double* dst_v, double* dst_a,
               std::size_t n, double gamma_v, double gamma_a);
void welford(double* mean, double* m2, const double* x, std::size_t n, std::size_t k);
void pairwise_max(const double* a, const double* b, double* out, std::size_t n);
}  // namespace avx2
#else
#define EMOBEE_HAVE_AVX2_KERNELS 0
#endif

}  // namespace emobee::kernels
