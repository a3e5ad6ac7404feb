#include "bmodel/normal_forms.hpp"

#include "bmodel/barycenter.hpp"

namespace bmodel {

std::vector<NormalizedMap> normalize_fixed_point_centered(const BlaschkeProduct& phi) {
  FixedPointReport rep = fixed_points(phi);
  if (!rep.interior) throw NoInteriorFixedPoint("normalize_fixed_point_centered: no interior fixed point");
  std::vector<NormalizedMap> out;
  for (Complex b : rep.boundary) {
    MobiusAutomorphism h = mobius_from_specs(*rep.interior, b).inverse();
    out.push_back({conjugate(phi, h), h});
  }
  return out;
}

std::vector<NormalizedMap> normalize_critically_centered(const BlaschkeProduct& phi) {
  auto crit = critical_points(phi);
  Complex p = conformal_barycenter(crit).point;
  std::vector<NormalizedMap> out;
  for (Complex u : preimages(phi, Complex(1.0))) {
    MobiusAutomorphism h = mobius_from_specs(p, u).inverse();
    out.push_back({compose_right(phi, h), h});
  }
  return out;
}

Recentered zero_sum_to_critically_centered(const BlaschkeProduct& beta) {
  const Tolerances& tol = tolerances();
  if (!beta.is_boundary_rooted(tol.eval)) throw DomainError("zero_sum_to_critically_centered: not boundary-rooted");
  Complex s(0.0);
  for (Complex a : beta.zeros()) s += a;
  if (std::abs(s) > tol.eval) throw DomainError("zero_sum_to_critically_centered: zeros do not sum to zero");
  if (beta.degree() < 2) throw DomainError("zero_sum_to_critically_centered: degree must be at least 2");
  Complex p = conformal_barycenter(critical_points(beta)).point;
  MobiusAutomorphism eta = mobius_from_specs(p, Complex(1.0));
  return {compose_right(beta, eta.inverse()), eta};
}

Recentered critically_centered_to_zero_sum(const BlaschkeProduct& beta_prime) {
  const Tolerances& tol = tolerances();
  if (!beta_prime.is_boundary_rooted(tol.eval))
    throw DomainError("critically_centered_to_zero_sum: not boundary-rooted");
  if (beta_prime.degree() < 2) throw DomainError("critically_centered_to_zero_sum: degree must be at least 2");
  Complex q = conformal_barycenter(beta_prime.zeros()).point;
  MobiusAutomorphism eta = mobius_from_specs(q, Complex(1.0)).inverse();
  return {compose_right(beta_prime, eta), eta};
}

double critical_sum_residual(const BlaschkeProduct& b) {
  Complex s(0.0);
  for (Complex c : critical_points(b)) s += c;
  return std::abs(s);
}

}  // namespace bmodel
