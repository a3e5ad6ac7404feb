#pragma once

#include <span>
#include <vector>

#include "bmodel/core.hpp"

namespace bmodel {

/// Dense complex polynomial, coefficients in ascending order of degree.
/// Used only transiently inside solvers; products are never stored expanded.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Complex> coeffs) : c_(std::move(coeffs)) {}

  /// prod_j (z - roots[j])
  static Polynomial from_roots(std::span<const Complex> roots);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<Complex>& coeffs() const { return c_; }
  Complex operator[](std::size_t i) const { return c_[i]; }

  Complex operator()(Complex z) const;
  /// Value and first derivative in one Horner pass.
  std::pair<Complex, Complex> eval_with_derivative(Complex z) const;
  Polynomial derivative() const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator*(Complex s) const;

 private:
  std::vector<Complex> c_;
};

struct RootOptions {
  int max_iterations = 500;
  /// Leading coefficients below this fraction of the largest coefficient are
  /// discarded; their roots sit near infinity and are of no interest here.
  double drop_leading_below = 1e-13;
};

/// All roots of p (with multiplicity), via simultaneous Aberth-Ehrlich
/// iteration with a Laguerre-plus-deflation fallback, followed by one
/// Newton polish per root. Exact zero trailing coefficients yield exact zero
/// roots. Throws NumericalError if neither method converges.
std::vector<Complex> polynomial_roots(const Polynomial& p, const RootOptions& opt = {});

}  // namespace bmodel
