#include "bmodel/random.hpp"

namespace bmodel {

Complex random_disk_point(std::mt19937_64& rng, double radius) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  double r = radius * std::sqrt(u(rng));
  return std::polar(r, kTwoPi * u(rng));
}

Complex random_unimodular(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, kTwoPi);
  return std::polar(1.0, u(rng));
}

std::vector<Complex> random_disk_points(std::mt19937_64& rng, int n, double radius) {
  std::vector<Complex> out;
  for (int i = 0; i < n; ++i) out.push_back(random_disk_point(rng, radius));
  return out;
}

BlaschkeProduct random_blaschke(std::mt19937_64& rng, int degree, double radius) {
  Complex c = random_unimodular(rng);
  return BlaschkeProduct(c, random_disk_points(rng, degree, radius));
}

BlaschkeProduct random_fixed_point_centered(std::mt19937_64& rng, int degree, double radius) {
  Complex c = random_unimodular(rng);
  std::vector<Complex> zeros{Complex(0.0)};
  for (int i = 1; i < degree; ++i) zeros.push_back(random_disk_point(rng, radius));
  return BlaschkeProduct(c, std::move(zeros));
}

MobiusAutomorphism random_automorphism(std::mt19937_64& rng, double radius) {
  Complex a = random_disk_point(rng, radius);
  return MobiusAutomorphism(a, random_unimodular(rng));
}

}  // namespace bmodel
