#pragma once

#include <span>
#include <vector>

#include "bmodel/core.hpp"

namespace bmodel {

/// Chart between unordered n-tuples of complex numbers and monic degree-n
/// polynomials: {a_1..a_n} <-> (z - a_1)...(z - a_n) = z^n + b_1 z^{n-1} + ... + b_n,
/// where b_j = (-1)^j sigma_j and sigma_j is the j-th elementary symmetric
/// function.

/// sigma_1 .. sigma_n. The input is put in a canonical order first, so the
/// result is bitwise invariant under permutation.
std::vector<Complex> elementary_symmetric(std::span<const Complex> points);

/// b_1 .. b_n (the leading 1 is implicit).
std::vector<Complex> to_monic(std::span<const Complex> points);

/// Roots of z^n + b_1 z^{n-1} + ... + b_n, with multiplicity.
std::vector<Complex> from_monic(std::span<const Complex> coefficients);

/// max_j |b_j(x) - b_j(y)|; a distance between multisets of equal size.
double monic_distance(std::span<const Complex> x, std::span<const Complex> y);

}  // namespace bmodel
