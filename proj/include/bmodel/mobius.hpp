#pragma once

#include "bmodel/core.hpp"

namespace bmodel {

/// Conformal automorphism of the closed unit disk,
///
///     z  |->  rotation * (z - a) / (1 - conj(a) z),
///
/// with |a| < 1 and |rotation| = 1. The pair (a, rotation) is the canonical
/// form for I/O; internally the map is held as a 2x2 coefficient matrix
/// [[p, q], [r, s]] normalized so that s = 1, which keeps composition stable.
class MobiusAutomorphism {
 public:
  /// Identity.
  MobiusAutomorphism() = default;

  /// Validates |a| <= 1 - boundary and |rotation| = 1 (rotation is
  /// renormalized onto the circle after the check).
  MobiusAutomorphism(Complex a, Complex rotation);

  static MobiusAutomorphism identity() { return {}; }
  static MobiusAutomorphism rotation_by(Complex eta);

  Complex a() const;
  Complex rotation() const;

  /// Evaluation on the closed disk; |z| <= 1 + tol_eval is required.
  Complex operator()(Complex z) const;
  /// Evaluation of the rational extension on the whole plane (used for the
  /// reflection z -> 1/conj(z) checks). Throws DomainError at the pole.
  Complex eval_extended(Complex z) const;

  MobiusAutomorphism inverse() const;
  /// (*this) o inner.
  MobiusAutomorphism after(const MobiusAutomorphism& inner) const;

  bool is_rotation(double tol = 0.0) const { return std::abs(a()) <= tol; }

 private:
  MobiusAutomorphism(Complex p, Complex q, Complex r);
  static MobiusAutomorphism from_matrix(Complex p, Complex q, Complex r, Complex s);

  Complex p_{1.0, 0.0};
  Complex q_{0.0, 0.0};
  Complex r_{0.0, 0.0};
};

/// The normalized automorphism sending a to 0 and fixing the boundary
/// point 1: mu_a(z) = k (z - a)/(1 - conj(a) z), k = (1 - conj(a))/(1 - a).
MobiusAutomorphism mobius_to_zero(Complex a);

/// Unique automorphism sending p to 0 and the circle point b to 1.
MobiusAutomorphism mobius_from_specs(Complex p, Complex b);

Complex mobius_eval(const MobiusAutomorphism& m, Complex z);
MobiusAutomorphism mobius_compose(const MobiusAutomorphism& outer, const MobiusAutomorphism& inner);
MobiusAutomorphism mobius_invert(const MobiusAutomorphism& m);

/// The factor k = (1 - conj(a))/(1 - a) of mu_a.
inline Complex mu_constant(Complex a) { return (1.0 - std::conj(a)) / (1.0 - a); }

}  // namespace bmodel
