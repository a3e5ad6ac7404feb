#include "bmodel/barycenter.hpp"

#include <algorithm>

namespace bmodel {

Complex barycenter_residual(std::span<const Complex> points, Complex p) {
  Complex s(0.0);
  for (Complex c : points) s += (c - p) / (1.0 - std::conj(p) * c);
  return s;
}

Barycenter conformal_barycenter(std::span<const Complex> points) {
  if (points.empty()) throw DomainError("conformal_barycenter: empty point set");
  const Tolerances& tol = tolerances();
  Complex mean(0.0);
  for (Complex c : points) {
    require_finite(c, "conformal_barycenter");
    if (std::abs(c) > 1.0 - tol.boundary) throw DomainError("conformal_barycenter: point too close to the circle");
    mean += c;
  }
  mean /= static_cast<double>(points.size());

  // Target well below the acceptance threshold so that downstream
  // recomputation has headroom.
  const double goal = std::min(tol.barycenter * 1e-3, 1e-13 * static_cast<double>(points.size()));
  Complex p = mean;
  Complex g = barycenter_residual(points, p);
  int iter = 0;
  for (; iter < 200 && std::abs(g) > goal; ++iter) {
    // g depends on p and conj(p): dg = A dp + B conj(dp).
    Complex A(0.0), B(0.0);
    for (Complex c : points) {
      Complex den = 1.0 - std::conj(p) * c;
      A -= 1.0 / den;
      B += c * (c - p) / (den * den);
    }
    double det = std::norm(A) - std::norm(B);
    Complex step;
    if (std::abs(det) > 1e-300) step = (std::conj(A) * (-g) - B * std::conj(-g)) / det;
    else step = -g / static_cast<double>(points.size());

    double lambda = 1.0;
    bool accepted = false;
    for (int h = 0; h < 60; ++h, lambda *= 0.5) {
      Complex cand = p + lambda * step;
      if (std::abs(cand) >= 1.0 - tol.boundary) continue;
      Complex gc = barycenter_residual(points, cand);
      if (std::abs(gc) < std::abs(g)) {
        p = cand;
        g = gc;
        accepted = true;
        break;
      }
    }
    if (!accepted) break;
  }
  Barycenter out{p, std::abs(g), iter};
  if (!(out.residual <= tol.barycenter))
    throw NumericalError("conformal_barycenter: residual did not converge");
  return out;
}

}  // namespace bmodel
