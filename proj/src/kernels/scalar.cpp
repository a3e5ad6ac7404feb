#include "bmodel/kernels.hpp"
#include "bmodel/mobius.hpp"

namespace bmodel::kernels::scalar {

void blaschke_eval(Complex c, std::span<const Complex> zeros, PointsView z, OutputView out) {
  for (std::size_t i = 0; i < z.size(); ++i) {
    Complex x(z.re[i], z.im[i]);
    Complex acc = c;
    for (Complex a : zeros) acc *= mu_constant(a) * (x - a) / (1.0 - std::conj(a) * x);
    out.re[i] = acc.real();
    out.im[i] = acc.imag();
  }
}

void log_derivative(std::span<const Complex> zeros, PointsView z, OutputView out) {
  for (std::size_t i = 0; i < z.size(); ++i) {
    Complex x(z.re[i], z.im[i]);
    Complex acc(0.0);
    for (Complex a : zeros) acc += x * (1.0 - std::norm(a)) / ((x - a) * (1.0 - std::conj(a) * x));
    out.re[i] = acc.real();
    out.im[i] = acc.imag();
  }
}

}  // namespace bmodel::kernels::scalar
