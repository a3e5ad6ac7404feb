#include <numeric>
#include <random>

#include "bmodel/barycenter.hpp"
#include "bmodel/normal_forms.hpp"
#include "bmodel/random.hpp"
#include "doctest.h"
#include "oracle.hpp"

using namespace bmodel;

namespace {

// sum_j mu_p(c_j) evaluated directly from the formula
Complex mu_sum(const std::vector<Complex>& pts, Complex p) {
  oracle::LComplex s = 0;
  for (Complex c : pts) s += oracle::mu(p, oracle::lift(c));
  return oracle::drop(s);
}

Complex sum(const std::vector<Complex>& v) { return std::accumulate(v.begin(), v.end(), Complex(0.0)); }

}  // namespace

TEST_CASE("barycenter examples") {
  Complex c(0.3, -0.45);
  CHECK(std::abs(conformal_barycenter(std::vector<Complex>{c}).point - c) < 1e-12);
  CHECK(std::abs(conformal_barycenter(std::vector<Complex>{c, -c}).point) < 1e-14);
  auto p = conformal_barycenter(std::vector<Complex>{0.0, 0.0, 0.6});
  CHECK(std::abs(p.point.imag()) < 1e-14);
  CHECK(p.point.real() > 0.0);
  CHECK(p.point.real() < 0.6);
  CHECK(std::abs(mu_sum({0.0, 0.0, 0.6}, p.point)) < 1e-10);
}

TEST_CASE("barycenter residual and equivariance") {
  std::mt19937_64 rng(21);
  for (int t = 0; t < 100; ++t) {
    auto pts = random_disk_points(rng, 1 + t % 6, 0.95);
    auto g = random_automorphism(rng, 0.8);
    auto p = conformal_barycenter(pts);
    CHECK(p.residual < 1e-10);
    CHECK(std::abs(mu_sum(pts, p.point)) < 1e-10);
    std::vector<Complex> moved;
    for (Complex z : pts) moved.push_back(g(z));
    CHECK(std::abs(conformal_barycenter(moved).point - g(p.point)) < 1e-9);
  }
  CHECK_THROWS_AS(conformal_barycenter(std::vector<Complex>{}), DomainError);
}

TEST_CASE("fixed-point-centered normal forms") {
  auto one = normalize_fixed_point_centered(BlaschkeProduct::power(2));
  REQUIRE(one.size() == 1);
  CHECK(one[0].h.is_rotation(1e-15));
  CHECK(std::abs(one[0].h.rotation() - 1.0) < 1e-15);

  auto neg = normalize_fixed_point_centered(BlaschkeProduct::power(2, -1.0));
  REQUIRE(neg.size() == 1);
  CHECK(std::abs(neg[0].h(Complex(0.2, 0.1)) + Complex(0.2, 0.1)) < 1e-14);
  CHECK(std::abs(neg[0].map.c() - 1.0) < 1e-14);
  for (Complex a : neg[0].map.zeros()) CHECK(std::abs(a) < 1e-14);

  auto cube = normalize_fixed_point_centered(BlaschkeProduct::power(3));
  REQUIRE(cube.size() == 2);
  CHECK(std::abs(cube[0].h(1.0) - cube[1].h(1.0)) > 1.0);
  for (const auto& f : cube)
    for (Complex a : f.map.zeros()) CHECK(std::abs(a) < 1e-14);

  std::mt19937_64 rng(22);
  for (int d = 2; d <= 6; ++d) {
    for (int t = 0; t < 50; ++t) {
      auto phi = conjugate(random_fixed_point_centered(rng, d), random_automorphism(rng, 0.6));
      auto forms = normalize_fixed_point_centered(phi);
      REQUIRE(forms.size() == std::size_t(d - 1));
      for (const auto& f : forms) {
        CHECK(std::abs(f.map(0.0)) < 1e-9);
        CHECK(std::abs(f.map.c() - 1.0) < 1e-9);
        Complex z = oracle::disk_point(rng, 1.0);
        CHECK(std::abs(f.map(z) - f.h.inverse()(phi(f.h(z)))) < 1e-9);
      }
    }
  }
  CHECK_THROWS_AS(normalize_fixed_point_centered(BlaschkeProduct(1.0, {Complex(0, 0.7071), Complex(0, -0.7071)})),
                  NoInteriorFixedPoint);
}

TEST_CASE("critically centered normal forms") {
  auto sq = normalize_critically_centered(BlaschkeProduct::power(2));
  REQUIRE(sq.size() == 2);
  CHECK(std::abs(sq[0].h(1.0) - 1.0) < 1e-14);
  CHECK(std::abs(sq[1].h(1.0) + 1.0) < 1e-14);

  auto pair = normalize_critically_centered(BlaschkeProduct(1.0, {0.5, -0.5}));
  REQUIRE(pair.size() == 2);
  for (const auto& f : pair) {
    CHECK(f.h.is_rotation(1e-12));
    CHECK(std::abs(BlaschkeProduct(1.0, {0.5, -0.5})(f.h(1.0)) - 1.0) < 1e-12);
    CHECK(critical_sum_residual(f.map) < 1e-12);
  }

  std::mt19937_64 rng(23);
  for (int d = 2; d <= 6; ++d) {
    for (int t = 0; t < 50; ++t) {
      auto phi = random_blaschke(rng, d);
      auto forms = normalize_critically_centered(phi);
      REQUIRE(forms.size() == std::size_t(d));
      for (const auto& f : forms) {
        CHECK(std::abs(f.map.c() - 1.0) < 1e-9);
        CHECK(std::abs(sum(critical_points(f.map))) < 1e-9);
        Complex z = oracle::disk_point(rng, 1.0);
        CHECK(std::abs(f.map(z) - phi(f.h(z))) < 1e-9);
      }
    }
  }
}

TEST_CASE("zero-sum and critically centered charts") {
  for (int d = 2; d <= 4; ++d) {
    auto r = zero_sum_to_critically_centered(BlaschkeProduct::power(d));
    CHECK(r.eta.is_rotation(1e-15));
    for (Complex a : r.map.zeros()) CHECK(std::abs(a) < 1e-15);
  }
  BlaschkeProduct pair(1.0, {Complex(0.3, 0.2), Complex(-0.3, -0.2)});
  auto rp = zero_sum_to_critically_centered(pair);
  CHECK(std::abs(rp.eta.a()) < 1e-12);

  std::mt19937_64 rng(24);
  for (int t = 0; t < 50; ++t) {
    int d = 2 + t % 4;
    std::vector<Complex> zeros = random_disk_points(rng, d - 1, 0.9 / d);
    zeros.push_back(-sum(zeros));
    BlaschkeProduct beta(1.0, zeros);
    auto fwd = zero_sum_to_critically_centered(beta);
    CHECK(std::abs(fwd.eta(1.0) - 1.0) < 1e-12);
    CHECK(std::abs(fwd.map.c() - 1.0) < 1e-9);
    CHECK(critical_sum_residual(fwd.map) < 1e-10);
    Complex z = oracle::disk_point(rng, 1.0);
    CHECK(std::abs(fwd.map(fwd.eta(z)) - beta(z)) < 1e-9);
    auto back = critically_centered_to_zero_sum(fwd.map);
    REQUIRE(back.map.zeros().size() == zeros.size());
    for (std::size_t j = 0; j < zeros.size(); ++j) CHECK(std::abs(back.map.zeros()[j] - zeros[j]) < 1e-9);
  }
  CHECK_THROWS_AS(zero_sum_to_critically_centered(BlaschkeProduct(1.0, {0.5, 0.1})), DomainError);
}
