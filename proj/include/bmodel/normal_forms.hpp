#pragma once

#include <vector>

#include "bmodel/blaschke.hpp"
#include "bmodel/mobius.hpp"

namespace bmodel {

struct NormalizedMap {
  BlaschkeProduct map;
  MobiusAutomorphism h;
};

/// Every conjugate beta = h^{-1} o phi o h that fixes 0 and the boundary
/// point 1. h sends 0 to the interior fixed point of phi and 1 to one of its
/// d-1 boundary fixed points (taken counterclockwise from 1), so exactly d-1
/// results are returned. Throws NoInteriorFixedPoint when phi has none.
std::vector<NormalizedMap> normalize_fixed_point_centered(const BlaschkeProduct& phi);

/// Every beta' = phi o h that is boundary-rooted with critical points
/// summing to zero: h sends 0 to the conformal barycenter of the critical
/// points of phi and 1 to one of the d points of phi^{-1}(1). Exactly d
/// results, ordered counterclockwise by h(1).
std::vector<NormalizedMap> normalize_critically_centered(const BlaschkeProduct& phi);

struct Recentered {
  BlaschkeProduct map;
  /// Boundary-rooted automorphism (eta(1) = 1) realizing the change.
  MobiusAutomorphism eta;
};

/// For boundary-rooted beta with zeros summing to zero, returns
/// beta' = beta o eta^{-1} critically centered.
Recentered zero_sum_to_critically_centered(const BlaschkeProduct& beta);

/// Inverse direction: for boundary-rooted, critically centered beta',
/// returns beta = beta' o eta with zeros summing to zero. Zero order is
/// preserved by both directions.
Recentered critically_centered_to_zero_sum(const BlaschkeProduct& beta_prime);

/// |sum of critical points|
double critical_sum_residual(const BlaschkeProduct& b);

}  // namespace bmodel
