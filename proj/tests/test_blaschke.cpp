#include <algorithm>
#include <random>

#include "bmodel/blaschke.hpp"
#include "bmodel/random.hpp"
#include "doctest.h"
#include "oracle.hpp"

using namespace bmodel;

namespace {

BlaschkeProduct half_pair() { return BlaschkeProduct(1.0, {0.5, -0.5}); }

bool contains(const std::vector<Complex>& zs, Complex w, double tol) {
  return std::any_of(zs.begin(), zs.end(), [&](Complex z) { return std::abs(z - w) < tol; });
}

}  // namespace

TEST_CASE("evaluation examples") {
  CHECK(std::abs(BlaschkeProduct::power(2)(Complex(0, 1)) + 1.0) < 1e-15);
  CHECK(std::abs(half_pair()(0.0) + 0.25) < 1e-15);
  Complex z(0.3, -0.6);
  CHECK(std::abs(half_pair()(z) - (z * z - 0.25) / (1.0 - z * z / 4.0)) < 1e-15);

  std::mt19937_64 rng(1);
  auto b = random_blaschke(rng, 4);
  for (int j = 0; j < 50; ++j) {
    Complex w = std::polar(1.0, kTwoPi * j / 50);
    CHECK(std::abs(std::abs(b(w)) - 1.0) < 1e-12);
    CHECK(std::abs(b(w) - oracle::blaschke(b.c(), b.zeros(), w)) < 1e-13);
  }
  CHECK(b.is_boundary_rooted(1e-9) == (std::abs(b(1.0) - 1.0) < 1e-9));
  CHECK(BlaschkeProduct(1.0, {Complex(0.2, 0.7)}).is_boundary_rooted(1e-12));
}

TEST_CASE("construction rejects invalid data") {
  CHECK_THROWS_AS(BlaschkeProduct(1.0, {}), DomainError);
  CHECK_THROWS_AS(BlaschkeProduct(Complex(1.1, 0.0), {0.0}), DomainError);
  CHECK_THROWS_AS(BlaschkeProduct(1.0, {Complex(1.0, 0.0)}), DomainError);
  CHECK_THROWS_AS(BlaschkeProduct::power(2)(Complex(1.5, 0.0)), DomainError);
}

TEST_CASE("log derivative on the circle") {
  for (int d = 1; d <= 5; ++d)
    CHECK(std::abs(BlaschkeProduct::power(d).log_derivative_on_circle(std::polar(1.0, 0.7)) - double(d)) < 1e-13);
  BlaschkeProduct b(1.0, {0.0, 0.5});
  CHECK(std::abs(b.log_derivative_on_circle(1.0) - 4.0) < 1e-13);

  std::mt19937_64 rng(2);
  auto r = random_blaschke(rng, 3);
  for (int j = 0; j < 64; ++j) {
    Complex z = std::polar(1.0, kTwoPi * j / 64);
    Complex ld = r.log_derivative_on_circle(z);
    Complex numeric = z * oracle::derivative([&](Complex w) { return r.eval_extended(w); }, z) / r(z);
    CHECK(ld.real() > 0.0);
    CHECK(std::abs(ld.imag()) < 1e-12);
    CHECK(std::abs(ld - numeric) < 1e-6 * std::abs(ld));
  }
}

TEST_CASE("derivative and inversion symmetry") {
  std::mt19937_64 rng(4);
  for (int t = 0; t < 100; ++t) {
    auto b = random_blaschke(rng, 1 + t % 5);
    Complex z = oracle::disk_point(rng, 0.95);
    if (std::abs(z) < 1e-3) continue;
    Complex numeric = oracle::derivative([&](Complex w) { return b.eval_extended(w); }, z, 1e-7);
    CHECK(std::abs(b.derivative(z) - numeric) < 1e-5 * std::max(1.0, std::abs(numeric)));
    Complex lhs = b.eval_extended(1.0 / std::conj(z));
    Complex rhs = 1.0 / std::conj(b(z));
    CHECK(std::abs(lhs - rhs) < 1e-9 * std::max(1.0, std::abs(rhs)));
  }
}

TEST_CASE("fixed-point-centered maps contract and expand on the circle") {
  std::mt19937_64 rng(6);
  for (int t = 0; t < 100; ++t) {
    auto b = random_fixed_point_centered(rng, 2 + t % 5);
    Complex prod = b.c();
    for (std::size_t j = 1; j < b.zeros().size(); ++j) prod *= mu_constant(b.zeros()[j]) * -b.zeros()[j];
    CHECK(std::abs(std::abs(b.derivative(0.0)) - std::abs(prod)) < 1e-12);
    CHECK(std::abs(b.derivative(0.0)) < 1.0);
    Complex z = oracle::disk_point(rng, 1.0);
    if (std::abs(z) > 0) CHECK(std::abs(b(z)) < std::abs(z));
    for (int j = 0; j < 256; ++j) CHECK(b.log_derivative_on_circle(std::polar(1.0, kTwoPi * j / 256)).real() > 1.0);
  }
}

TEST_CASE("critical points") {
  auto c2 = critical_points(BlaschkeProduct::power(2));
  REQUIRE(c2.size() == 1);
  CHECK(std::abs(c2[0]) < 1e-12);
  auto ch = critical_points(half_pair());
  REQUIRE(ch.size() == 1);
  CHECK(std::abs(ch[0]) < 1e-12);

  // z mu_{1/2}: bisection on the real slice for the zero of the derivative
  BlaschkeProduct b(1.0, {0.0, 0.5});
  auto f = [&](double x) { return b.derivative(Complex(x, 0.0)).real(); };
  double lo = 0.0, hi = 0.5;
  for (int i = 0; i < 200; ++i) {
    double mid = 0.5 * (lo + hi);
    (f(lo) * f(mid) <= 0 ? hi : lo) = mid;
  }
  auto cz = critical_points(b);
  REQUIRE(cz.size() == 1);
  CHECK(std::abs(cz[0] - Complex(lo, 0.0)) < 1e-10);
  CHECK(lo > 0.0);
  CHECK(lo < 0.5);

  std::mt19937_64 rng(8);
  for (int d = 2; d <= 6; ++d) {
    auto r = random_blaschke(rng, d);
    auto cp = critical_points(r);
    CHECK(cp.size() == std::size_t(d - 1));
    for (Complex z : cp) {
      CHECK(std::abs(z) < 1.0);
      CHECK(std::abs(r.derivative(z)) < 1e-8);
    }
  }
}

TEST_CASE("fixed point examples") {
  auto r3 = fixed_points(BlaschkeProduct::power(3));
  REQUIRE(r3.interior.has_value());
  CHECK(std::abs(*r3.interior) < 1e-12);
  REQUIRE(r3.boundary.size() == 2);
  CHECK(contains(r3.boundary, 1.0, 1e-12));
  CHECK(contains(r3.boundary, -1.0, 1e-12));
  for (double m : r3.boundary_multipliers) CHECK(std::abs(m - 3.0) < 1e-9);

  auto rm = fixed_points(BlaschkeProduct::power(2, -1.0));
  REQUIRE(rm.interior.has_value());
  REQUIRE(rm.boundary.size() == 1);
  CHECK(std::abs(rm.boundary[0] + 1.0) < 1e-12);

  // (z^2 - 1/4) = z (1 - z^2/4)  <=>  z^3 + 4 z^2 - 4 z - 1 = 0
  auto rh = fixed_points(half_pair());
  REQUIRE(rh.interior.has_value());
  CHECK(std::abs(rh.interior->imag()) < 1e-12);
  double x = rh.interior->real();
  CHECK(std::abs(x * x * x + 4 * x * x - 4 * x - 1) < 1e-12);
  CHECK(x < -0.15);
  CHECK(x > -0.25);
  REQUIRE(rh.boundary.size() == 1);
  CHECK(std::abs(rh.boundary[0] - 1.0) < 1e-12);
}

TEST_CASE("fixed points without an interior fixed point") {
  // (z^2 + r)/(1 + r z^2), r = 1/2: fixed points solve (x - 1)(r x^2 + (r - 1) x + r) = 0,
  // all three on the circle; the multiplier at 1 is 2(1 - r)/(1 + r) < 1
  const double r = 0.5;
  BlaschkeProduct b(1.0, {Complex(0, std::sqrt(r)), Complex(0, -std::sqrt(r))});
  auto rep = fixed_points(b);
  CHECK_FALSE(rep.interior.has_value());
  REQUIRE(rep.boundary.size() == 3);
  CHECK(std::abs(rep.boundary[0] - 1.0) < 1e-12);
  CHECK(std::abs(rep.boundary_multipliers[0] - 2.0 * (1 - r) / (1 + r)) < 1e-9);
  Complex disc = std::sqrt(Complex((r - 1) * (r - 1) - 4 * r * r));
  CHECK(contains(rep.boundary, (1 - r + disc) / (2 * r), 1e-9));
  CHECK(contains(rep.boundary, (1 - r - disc) / (2 * r), 1e-9));
}

TEST_CASE("preimages") {
  auto p = preimages(BlaschkeProduct::power(2), 1.0);
  REQUIRE(p.size() == 2);
  CHECK(std::abs(p[0] - 1.0) < 1e-15);
  CHECK(std::abs(p[1] + 1.0) < 1e-15);
  auto q = preimages(BlaschkeProduct::power(3), -1.0);
  REQUIRE(q.size() == 3);
  for (Complex z : q) CHECK(std::abs(z * z * z + 1.0) < 1e-12);

  std::mt19937_64 rng(10);
  for (int t = 0; t < 20; ++t) {
    auto b = random_blaschke(rng, 3);
    Complex target = oracle::circle_point(rng);
    auto s = preimages(b, target);
    REQUIRE(s.size() == 3);
    double prev = -1.0;
    for (Complex z : s) {
      CHECK(std::abs(std::abs(z) - 1.0) < 1e-15);
      CHECK(std::abs(b(z) - target) < 1e-9);
      CHECK(ccw_angle(z) > prev);
      prev = ccw_angle(z);
    }
    Complex inner = oracle::disk_point(rng, 0.9);
    for (Complex z : preimages(b, inner)) CHECK(std::abs(b(z) - inner) < 1e-9);
  }
}

TEST_CASE("composition and conjugation agree with pointwise evaluation") {
  std::mt19937_64 rng(12);
  for (int t = 0; t < 30; ++t) {
    auto outer = random_blaschke(rng, 1 + t % 3);
    auto inner = random_blaschke(rng, 1 + t % 4);
    auto m = random_automorphism(rng);
    auto oi = compose(outer, inner);
    auto bm = compose_right(outer, m);
    auto mb = compose_left(m, outer);
    auto cj = conjugate(outer, m);
    CHECK(oi.degree() == outer.degree() * inner.degree());
    for (int j = 0; j < 10; ++j) {
      Complex z = oracle::disk_point(rng, 1.0);
      CHECK(std::abs(oi(z) - outer(inner(z))) < 1e-9);
      CHECK(std::abs(bm(z) - outer(m(z))) < 1e-9);
      CHECK(std::abs(mb(z) - m(outer(z))) < 1e-9);
      CHECK(std::abs(cj(z) - m.inverse()(outer(m(z)))) < 1e-9);
    }
  }
  // -z^2 conjugated by z -> -z is z^2
  auto c = conjugate(BlaschkeProduct::power(2, -1.0), MobiusAutomorphism::rotation_by(-1.0));
  CHECK(std::abs(c.c() - 1.0) < 1e-15);
  for (Complex a : c.zeros()) CHECK(std::abs(a) < 1e-15);
}
