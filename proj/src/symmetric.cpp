#include "bmodel/symmetric.hpp"

#include <algorithm>

#include "bmodel/polynomial.hpp"

namespace bmodel {

std::vector<Complex> elementary_symmetric(std::span<const Complex> points) {
  std::vector<Complex> sorted(points.begin(), points.end());
  for (Complex z : sorted) require_finite(z, "elementary_symmetric");
  std::sort(sorted.begin(), sorted.end(), [](Complex a, Complex b) {
    return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
  });
  // e[k] after processing m points is sigma_k of those m points
  std::vector<Complex> e(sorted.size() + 1, Complex(0.0));
  e[0] = 1.0;
  for (std::size_t m = 0; m < sorted.size(); ++m)
    for (std::size_t k = m + 1; k >= 1; --k) e[k] += sorted[m] * e[k - 1];
  return std::vector<Complex>(e.begin() + 1, e.end());
}

std::vector<Complex> to_monic(std::span<const Complex> points) {
  auto sigma = elementary_symmetric(points);
  for (std::size_t j = 0; j < sigma.size(); ++j)
    if (j % 2 == 0) sigma[j] = -sigma[j];
  return sigma;
}

std::vector<Complex> from_monic(std::span<const Complex> coefficients) {
  const std::size_t n = coefficients.size();
  if (n == 0) return {};
  std::vector<Complex> asc(n + 1);
  asc[n] = 1.0;
  for (std::size_t j = 0; j < n; ++j) asc[n - 1 - j] = coefficients[j];
  RootOptions opt;
  opt.drop_leading_below = 0.0;
  return polynomial_roots(Polynomial(std::move(asc)), opt);
}

double monic_distance(std::span<const Complex> x, std::span<const Complex> y) {
  if (x.size() != y.size()) throw DomainError("monic_distance: tuples of different size");
  auto bx = to_monic(x), by = to_monic(y);
  double d = 0.0;
  for (std::size_t j = 0; j < bx.size(); ++j) d = std::max(d, std::abs(bx[j] - by[j]));
  return d;
}

}  // namespace bmodel
