#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bmodel/core.hpp"
#include "bmodel/mobius.hpp"
#include "bmodel/polynomial.hpp"

namespace bmodel {

/// Finite Blaschke product beta(z) = c * mu_{a_1}(z) ... mu_{a_d}(z) in
/// factored form. Because every mu_a fixes 1, c = beta(1); the product is
/// boundary-rooted exactly when c = 1.
class BlaschkeProduct {
 public:
  /// Validates d >= 1, |a_j| <= 1 - tol_boundary and |c| = 1 within
  /// tol_unimodular; c is renormalized onto the circle.
  BlaschkeProduct(Complex c, std::vector<Complex> zeros);

  /// c z^d
  static BlaschkeProduct power(int d, Complex c = Complex(1.0));

  int degree() const { return static_cast<int>(zeros_.size()); }
  Complex c() const { return c_; }
  const std::vector<Complex>& zeros() const { return zeros_; }

  /// Evaluation on the closed disk (|z| <= 1 + tol_eval, else DomainError).
  Complex operator()(Complex z) const;
  /// Rational extension to the plane; returns a non-finite value at poles.
  Complex eval_extended(Complex z) const;
  Complex derivative(Complex z) const;
  /// z beta'(z) / beta(z) for |z| = 1: a sum of d positive reals.
  Complex log_derivative_on_circle(Complex z) const;

  bool is_boundary_rooted(double tol) const { return std::abs(c_ - 1.0) <= tol; }

  /// c K prod (z - a_j), K = prod k_j; beta = numerator / denominator.
  Polynomial numerator() const;
  /// prod (1 - conj(a_j) z)
  Polynomial denominator() const;

 private:
  Complex c_;
  std::vector<Complex> zeros_;
};

/// Batch evaluation through the SIMD kernels. Points must lie in the closed
/// disk (not checked per point).
std::vector<Complex> eval_many(const BlaschkeProduct& b, std::span<const Complex> z);
std::vector<Complex> log_derivative_many(const BlaschkeProduct& b, std::span<const Complex> z);

Complex eval(const BlaschkeProduct& b, Complex z);
Complex log_derivative_on_circle(const BlaschkeProduct& b, Complex z);

/// The d-1 critical points in the open disk, with multiplicity, ordered by
/// modulus. Requires d >= 2.
std::vector<Complex> critical_points(const BlaschkeProduct& b);

struct FixedPointReport {
  std::optional<Complex> interior;
  /// Distinct boundary fixed points, counterclockwise from 1.
  std::vector<Complex> boundary;
  /// Real multipliers beta'(z0) = z0 beta'(z0)/beta(z0) of the boundary points.
  std::vector<double> boundary_multipliers;
  /// Tangency warnings: multiplier within tol_multiplicity of 1, or merged
  /// root clusters. Without an interior fixed point the boundary count is
  /// then only a lower bound for the d+1 fixed points with multiplicity.
  std::vector<std::string> warnings;
};

/// Classifies every solution of beta(z) = z in the closed disk. Requires d >= 2.
FixedPointReport fixed_points(const BlaschkeProduct& b);

/// The d solutions of beta(z) = target (|target| <= 1), with multiplicity.
/// For |target| = 1 they are distinct circle points, sorted counterclockwise
/// from 1.
std::vector<Complex> preimages(const BlaschkeProduct& b, Complex target);

/// outer o inner
BlaschkeProduct compose(const BlaschkeProduct& outer, const BlaschkeProduct& inner);
/// b o m
BlaschkeProduct compose_right(const BlaschkeProduct& b, const MobiusAutomorphism& m);
/// m o b
BlaschkeProduct compose_left(const MobiusAutomorphism& m, const BlaschkeProduct& b);
/// h^{-1} o b o h
BlaschkeProduct conjugate(const BlaschkeProduct& b, const MobiusAutomorphism& h);

}  // namespace bmodel
