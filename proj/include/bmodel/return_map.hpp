#pragma once

#include <optional>
#include <vector>

#include "bmodel/blaschke.hpp"

namespace bmodel {

/// Composite of a chain of Blaschke products, chain[0] applied first: the
/// first-return map of a cycle of disks. Up to kSymbolicDegreeLimit the
/// composite is also formed in factored form so that its fixed points come
/// from a polynomial solve; above it, circle fixed points are located by a
/// dense scan and Newton polish.
class ReturnMap {
 public:
  static constexpr int kSymbolicDegreeLimit = 64;

  explicit ReturnMap(std::vector<BlaschkeProduct> chain);

  int degree() const { return degree_; }
  Complex operator()(Complex z) const;
  Complex derivative(Complex z) const;
  const std::optional<BlaschkeProduct>& composed() const { return composed_; }

  /// Attracting interior fixed point, found by iterating from 0 and
  /// Newton-polishing; nullopt if the orbit of 0 escapes toward the circle
  /// or fails to settle within the iteration budget.
  std::optional<Complex> attracting_fixed_point(int max_iterations = 10000) const;

  /// The distinct circle fixed points, counterclockwise from 1.
  std::vector<Complex> boundary_fixed_points() const;

 private:
  std::vector<BlaschkeProduct> chain_;
  int degree_;
  std::optional<BlaschkeProduct> composed_;
};

}  // namespace bmodel
