#pragma once

#include <random>
#include <vector>

#include "bmodel/blaschke.hpp"
#include "bmodel/mobius.hpp"

namespace bmodel {

/// Uniform in the disk |z| < radius.
Complex random_disk_point(std::mt19937_64& rng, double radius = 0.9);
Complex random_unimodular(std::mt19937_64& rng);
std::vector<Complex> random_disk_points(std::mt19937_64& rng, int n, double radius = 0.9);

/// Random c and d zeros in |a| < radius.
BlaschkeProduct random_blaschke(std::mt19937_64& rng, int degree, double radius = 0.9);
/// Random c, a zero at 0 and d-1 further zeros in |a| < radius.
BlaschkeProduct random_fixed_point_centered(std::mt19937_64& rng, int degree, double radius = 0.9);
MobiusAutomorphism random_automorphism(std::mt19937_64& rng, double radius = 0.9);

}  // namespace bmodel
