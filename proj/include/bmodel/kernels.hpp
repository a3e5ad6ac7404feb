#pragma once

// Batch kernels for the arithmetic inner loops: evaluating a factored
// Blaschke product, and its logarithmic derivative z*B'/B, over many points.
// A portable scalar reference and an AVX2/FMA variant are provided; the
// variant is chosen once at runtime from the CPU features. Points and
// results are stored structure-of-arrays (separate real/imag spans).

#include <span>
#include <string_view>

#include "bmodel/core.hpp"

namespace bmodel::kernels {

enum class Isa { scalar, avx2 };

/// Best variant supported by this CPU (honours BMODEL_FORCE_SCALAR=1).
Isa detected_isa();
/// Variant currently used by the dispatching entry points.
Isa active_isa();
/// Overrides the dispatch choice; requesting an unsupported ISA is a
/// DomainError. Intended for tests and benchmarks.
void set_active_isa(Isa isa);
std::string_view isa_name(Isa isa);

struct PointsView {
  std::span<const double> re, im;
  std::size_t size() const { return re.size(); }
};
struct OutputView {
  std::span<double> re, im;
};

/// out = c * prod_j k_j (z - a_j) / (1 - conj(a_j) z), k_j = (1-conj(a_j))/(1-a_j).
void blaschke_eval(Complex c, std::span<const Complex> zeros, PointsView z, OutputView out);
/// out = sum_j z (1 - |a_j|^2) / ((z - a_j)(1 - conj(a_j) z)).
void log_derivative(std::span<const Complex> zeros, PointsView z, OutputView out);

namespace scalar {
void blaschke_eval(Complex c, std::span<const Complex> zeros, PointsView z, OutputView out);
void log_derivative(std::span<const Complex> zeros, PointsView z, OutputView out);
}  // namespace scalar

#if defined(__x86_64__) || defined(_M_X64)
namespace avx2 {
void blaschke_eval(Complex c, std::span<const Complex> zeros, PointsView z, OutputView out);
void log_derivative(std::span<const Complex> zeros, PointsView z, OutputView out);
}  // namespace avx2
#endif

}  // namespace bmodel::kernels
