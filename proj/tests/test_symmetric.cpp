#include <algorithm>
#include <random>

#include "bmodel/polynomial.hpp"
#include "bmodel/symmetric.hpp"
#include "doctest.h"
#include "oracle.hpp"

using namespace bmodel;

TEST_CASE("to_monic examples") {
  auto z = to_monic(std::vector<Complex>(4, 0.0));
  REQUIRE(z.size() == 4);
  for (Complex b : z) CHECK(b == Complex(0.0));

  Complex a(0.3, 0.2);
  auto p = to_monic(std::vector<Complex>{a, -a});
  CHECK(std::abs(p[0]) < 1e-16);
  CHECK(std::abs(p[1] + a * a) < 1e-16);

  // (z - 1/2)(z - i/3)(z + 1/4) expanded by hand:
  // z^3 - (1/4 + i/3) z^2 + (-1/8 + i/12) z + i/24
  auto c = to_monic(std::vector<Complex>{0.5, Complex(0, 1.0 / 3), -0.25});
  CHECK(std::abs(c[0] - Complex(-0.25, -1.0 / 3)) < 1e-15);
  CHECK(std::abs(c[1] - Complex(-0.125, 1.0 / 12)) < 1e-15);
  CHECK(std::abs(c[2] - Complex(0, 1.0 / 24)) < 1e-15);
}

TEST_CASE("from_monic examples") {
  for (Complex r : from_monic(std::vector<Complex>(3, 0.0))) CHECK(r == Complex(0.0));
  auto h = from_monic(std::vector<Complex>{0.0, -0.25});
  std::sort(h.begin(), h.end(), [](Complex x, Complex y) { return x.real() < y.real(); });
  CHECK(std::abs(h[0] + 0.5) < 1e-15);
  CHECK(std::abs(h[1] - 0.5) < 1e-15);
}

TEST_CASE("chart round trips and permutation invariance") {
  std::mt19937_64 rng(51);
  for (int t = 0; t < 100; ++t) {
    int n = 1 + t % 6;
    std::vector<Complex> pts;
    for (int j = 0; j < n; ++j) pts.push_back(oracle::disk_point(rng, 0.99));
    auto b = to_monic(pts);
    auto shuffled = pts;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    CHECK(to_monic(shuffled) == b);
    CHECK(monic_distance(pts, shuffled) == 0.0);

    // coefficients against an independent expansion
    auto poly = Polynomial::from_roots(pts);
    for (int j = 0; j < n; ++j) CHECK(std::abs(b[j] - poly[n - 1 - j]) < 1e-14);

    auto roots = from_monic(b);
    REQUIRE(roots.size() == pts.size());
    for (Complex r : roots) CHECK(std::abs(r) < 1.0);
    CHECK(monic_distance(roots, pts) < 1e-9);
  }
}
