#include <atomic>
#include <cstdlib>
#include <cstring>

#include "bmodel/kernels.hpp"

namespace bmodel::kernels {

namespace {

bool cpu_has_avx2() {
#if defined(__x86_64__) || defined(_M_X64)
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

Isa detect() {
  const char* force = std::getenv("BMODEL_FORCE_SCALAR");
  if (force != nullptr && std::strcmp(force, "1") == 0) return Isa::scalar;
  return cpu_has_avx2() ? Isa::avx2 : Isa::scalar;
}

std::atomic<Isa>& active() {
  static std::atomic<Isa> isa{detect()};
  return isa;
}

void check_sizes(PointsView z, OutputView out) {
  if (z.im.size() != z.size() || out.re.size() != z.size() || out.im.size() != z.size())
    throw DomainError("kernels: mismatched span lengths");
}

}  // namespace

Isa detected_isa() { return detect(); }

Isa active_isa() { return active().load(std::memory_order_relaxed); }

void set_active_isa(Isa isa) {
  if (isa == Isa::avx2 && !cpu_has_avx2()) throw DomainError("kernels: AVX2 not supported on this CPU");
  active().store(isa, std::memory_order_relaxed);
}

std::string_view isa_name(Isa isa) { return isa == Isa::avx2 ? "avx2" : "scalar"; }

void blaschke_eval(Complex c, std::span<const Complex> zeros, PointsView z, OutputView out) {
  check_sizes(z, out);
#if defined(__x86_64__) || defined(_M_X64)
  if (active_isa() == Isa::avx2) return avx2::blaschke_eval(c, zeros, z, out);
#endif
  scalar::blaschke_eval(c, zeros, z, out);
}

void log_derivative(std::span<const Complex> zeros, PointsView z, OutputView out) {
  check_sizes(z, out);
#if defined(__x86_64__) || defined(_M_X64)
  if (active_isa() == Isa::avx2) return avx2::log_derivative(zeros, z, out);
#endif
  scalar::log_derivative(zeros, z, out);
}

}  // namespace bmodel::kernels
