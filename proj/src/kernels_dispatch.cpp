// SPDX-License-Identifier: Apache-2.0
#include <cstdlib>
#include <string>

#include "emobee/error.hpp"
#include "emobee/kernels.hpp"

namespace emobee::kernels {

namespace {

constexpr KernelTable kScalar{Isa::Scalar, &scalar::group_sums, &scalar::contagion,
                              &scalar::welford, &scalar::pairwise_max};

#if EMOBEE_HAVE_AVX2_KERNELS
constexpr KernelTable kAvx2{Isa::Avx2, &avx2::group_sums, &avx2::contagion, &avx2::welford,
                            &avx2::pairwise_max};

bool cpu_has_avx2() {
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2");
}
#endif

const KernelTable& select() {
  if (const char* forced = std::getenv("EMOBEE_SIMD"); forced && std::string(forced) == "scalar") {
    return kScalar;
  }
#if EMOBEE_HAVE_AVX2_KERNELS
  if (cpu_has_avx2()) return kAvx2;
#endif
  return kScalar;
}

}  // namespace

std::string_view name(Isa isa) {
  switch (isa) {
    case Isa::Avx2: return "avx2";
    default: return "scalar";
  }
}

std::vector<Isa> available() {
  std::vector<Isa> out{Isa::Scalar};
#if EMOBEE_HAVE_AVX2_KERNELS
  if (cpu_has_avx2()) out.push_back(Isa::Avx2);
#endif
  return out;
}

const KernelTable& table(Isa isa) {
  switch (isa) {
    case Isa::Scalar: return kScalar;
    case Isa::Avx2:
#if EMOBEE_HAVE_AVX2_KERNELS
      if (cpu_has_avx2()) return kAvx2;
#endif
      break;
  }
  throw DomainError("kernel variant '" + std::string(name(isa)) + "' not available");
}

const KernelTable& active() {
  static const KernelTable& chosen = select();
  return chosen;
}

}  // namespace emobee::kernels
