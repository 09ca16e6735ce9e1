#include <atomic>
#include <cstdlib>
#include <string>

#include "ader/errors.hpp"
#include "ader/kernels/kernels.hpp"

namespace ader::kernels {

namespace {

Isa detect() {
  const char* env = std::getenv("ADER_SIMD");
  const std::string choice = env ? env : "auto";
  if (choice == "scalar") return Isa::kScalar;
  if (choice == "avx2" && !avx2_supported()) throw ConfigError("ADER_SIMD=avx2 but the CPU lacks AVX2");
  return avx2_supported() ? Isa::kAvx2 : Isa::kScalar;
}

std::atomic<Isa>& current() {
  static std::atomic<Isa> isa{detect()};
  return isa;
}

}  // namespace

bool avx2_supported() {
#if defined(ADER_HAVE_AVX2_KERNELS) && (defined(__x86_64__) || defined(__i386__))
  static const bool ok = __builtin_cpu_supports("avx2");
  return ok;
#else
  return false;
#endif
}

Isa active_isa() { return current().load(std::memory_order_relaxed); }

void set_isa(Isa isa) {
  if (isa == Isa::kAvx2 && !avx2_supported()) throw ConfigError("AVX2 kernels unavailable on this CPU");
  current().store(isa, std::memory_order_relaxed);
}

std::string_view isa_name(Isa isa) { return isa == Isa::kAvx2 ? "avx2" : "scalar"; }

void weno(const WenoTables& t, const double* center, std::size_t n, double* out,
          std::size_t out_stride) {
#if defined(ADER_HAVE_AVX2_KERNELS)
  if (active_isa() == Isa::kAvx2) return weno_avx2(t, center, n, out, out_stride);
#endif
  weno_scalar(t, center, n, out, out_stride);
}

void fv_update(const double* q, const double* flux, const double* src, std::size_t len,
               std::size_t m, double dt_dx, double dt, double* out) {
#if defined(ADER_HAVE_AVX2_KERNELS)
  if (active_isa() == Isa::kAvx2) return fv_update_avx2(q, flux, src, len, m, dt_dx, dt, out);
#endif
  fv_update_scalar(q, flux, src, len, m, dt_dx, dt, out);
}

}  // namespace ader::kernels
