#include <cstdlib>
#include <cstring>

#include "altruism/errors.hpp"
#include "altruism/simd/kernels.hpp"

namespace altruism::simd {

namespace {

constexpr KernelTable kScalarTable{&scalar::wf_step, &scalar::inverse_gap_sum};
#if defined(ALTRUISM_HAVE_AVX2)
constexpr KernelTable kAvx2Table{&avx2::wf_step, &avx2::inverse_gap_sum};
#endif

Isa detect() {
  if (const char* env = std::getenv("ALTRUISM_SIMD"); env && std::strcmp(env, "scalar") == 0) {
    return Isa::scalar;
  }
  return isa_available(Isa::avx2) ? Isa::avx2 : Isa::scalar;
}

}  // namespace

std::string to_string(Isa isa) { return isa == Isa::avx2 ? "avx2" : "scalar"; }

bool isa_available(Isa isa) {
  if (isa == Isa::scalar) return true;
#if defined(ALTRUISM_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

Isa active_isa() {
  static const Isa isa = detect();
  return isa;
}

const KernelTable& kernels(Isa isa) {
  if (!isa_available(isa)) throw ConfigError("SIMD variant not available: " + to_string(isa));
#if defined(ALTRUISM_HAVE_AVX2)
  if (isa == Isa::avx2) return kAvx2Table;
#endif
  return kScalarTable;
}

const KernelTable& kernels() {
  static const KernelTable& table = kernels(active_isa());
  return table;
}

}  // namespace altruism::simd
