#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>

namespace bmodel {

using Complex = std::complex<double>;

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Error taxonomy. Every public operation reports failure by throwing one of
// these; callers that only care about "something went wrong" catch Error.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct DomainError : Error {
  using Error::Error;
};
struct NumericalError : Error {
  using Error::Error;
};
struct BudgetError : Error {
  using Error::Error;
};
struct ValidationError : Error {
  using Error::Error;
};
struct MembershipError : Error {
  using Error::Error;
};
struct NoInteriorFixedPoint : Error {
  using Error::Error;
};

/// Named numerical tolerances. A single process-wide instance is read by
/// every module; the CLI may override entries at startup via `--tol`.
struct Tolerances {
  double boundary = 1e-12;      // parameters must satisfy |a| <= 1 - boundary
  double eval = 1e-9;           // pointwise identities
  double unimodular = 1e-9;     // | |c| - 1 |
  double singular = 1e-14;      // smallest admissible Mobius denominator
  double barycenter = 1e-10;    // |sum mu_p(c_j)|
  double multiplicity = 1e-6;   // tangency warning threshold on multipliers
  double circle_snap = 1e-7;    // radial snap of roots onto the circle
  double conj = 1e-7;           // circle-table matching distance
  double pcf = 1e-8;            // "all zeros at the origin"
  double chart = 1e-9;          // chart round trips

  /// Sets the entry called `name`; returns false for unknown names.
  bool set(const std::string& name, double value);
};

const Tolerances& tolerances();
void set_tolerances(const Tolerances& t);

inline bool is_finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

inline void require_finite(Complex z, const char* what) {
  if (!is_finite(z)) throw DomainError(std::string(what) + ": non-finite complex value");
}

/// z / |z|; z must be nonzero.
inline Complex unit(Complex z) { return z / std::abs(z); }

/// Counterclockwise angle of z measured from `base`, in [0, 2*pi). Values
/// within `snap` of 2*pi fold to 0 so that `base` itself reads as 0.
inline double ccw_angle(Complex z, Complex base = Complex(1.0, 0.0), double snap = 1e-11) {
  double t = std::arg(z * std::conj(base));
  if (t < 0) t += kTwoPi;
  if (t >= kTwoPi - snap) t = 0.0;
  return t;
}

}  // namespace bmodel
