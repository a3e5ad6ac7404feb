#pragma once

#include <span>

#include "bmodel/core.hpp"

namespace bmodel {

struct Barycenter {
  Complex point;
  /// |sum_j mu_p(c_j)| at the returned point.
  double residual = 0.0;
  int iterations = 0;
};

/// Conformal barycenter of points in the open disk: the unique p for which
/// the automorphisms sending p to 0 carry the points to a configuration with
/// zero Euclidean sum. Damped Newton in (Re p, Im p) with step halving,
/// started at the Euclidean mean. Throws NumericalError if the residual does
/// not drop below tol_barycenter within the iteration budget.
Barycenter conformal_barycenter(std::span<const Complex> points);

/// sum_j (c_j - p) / (1 - conj(p) c_j); rotation-free form of the residual.
Complex barycenter_residual(std::span<const Complex> points, Complex p);

}  // namespace bmodel
