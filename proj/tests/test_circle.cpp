#include <random>

#include "bmodel/circle.hpp"
#include "bmodel/random.hpp"
#include "doctest.h"
#include "oracle.hpp"

using namespace bmodel;

TEST_CASE("coordinate tables of power maps") {
  auto t2 = build_coordinate_table(BlaschkeProduct::power(2), 2);
  REQUIRE(t2.denominator() == 4);
  const Complex want[] = {1.0, Complex(0, 1), -1.0, Complex(0, -1)};
  for (std::size_t j = 0; j < 4; ++j) {
    CHECK(std::abs(t2.entries()[j].point - want[j]) < 1e-14);
    CHECK(t2.entries()[j].numerator == j);
  }
  auto t3 = build_coordinate_table(BlaschkeProduct::power(3), 1);
  REQUIRE(t3.denominator() == 3);
  for (std::size_t j = 0; j < 3; ++j) CHECK(std::abs(t3.entries()[j].point - std::polar(1.0, kTwoPi * j / 3)) < 1e-14);
  auto e = boundary_coordinate(t2, Complex(0, 1));
  CHECK(std::abs(e.value - 0.25) < 1e-12);
  CHECK(boundary_coordinate(t2, 1.0).value == 0.0);
}

TEST_CASE("coordinate table conjugacy for z mu_{1/2}") {
  BlaschkeProduct b(1.0, {0.0, 0.5});
  auto t = build_coordinate_table(b, 8);
  REQUIRE(t.denominator() == 256);
  const auto& e = t.entries();
  for (std::size_t j = 0; j < e.size(); ++j) {
    if (j > 0) CHECK(e[j].angle > e[j - 1].angle);
    std::size_t target = (2 * j) % 256;
    CHECK(std::abs(b(e[j].point) - e[target].point) < 1e-7);
    CHECK(t.nearest(b(e[j].point)) == target);
  }
  auto v = boundary_coordinate(t, -1.0);
  auto w = boundary_coordinate(t, b(-1.0));
  double diff = std::fmod(std::abs(w.value - 2 * v.value) + 0.5, 1.0) - 0.5;
  CHECK(std::abs(diff) < 4 * v.error_bound);
}

TEST_CASE("coordinate table base selection and budget") {
  auto t = build_coordinate_table(BlaschkeProduct::power(3), 2, 1);
  CHECK(std::abs(t.base() + 1.0) < 1e-14);
  CHECK(std::abs(t.entries()[0].point + 1.0) < 1e-14);
  CHECK_THROWS_AS(build_coordinate_table(BlaschkeProduct::power(2), 30, 0, 1 << 10), BudgetError);
  CHECK_THROWS_AS(build_coordinate_table(BlaschkeProduct(1.0, {Complex(0, 0.7071), Complex(0, -0.7071)}), 2),
                  NoInteriorFixedPoint);
}

TEST_CASE("arc weights") {
  ArcInterval a(0.0, 1.0);
  CHECK(a.weight(0.5) == 1.0);
  CHECK(a.weight(1.5) == 0.0);
  CHECK(a.weight(0.0) == 0.5);
  CHECK(a.weight(1.0) == 0.5);
  CHECK(ArcInterval::full_circle(0.3).weight(0.3) == 1.0);
  ArcInterval wrap(6.0, 0.5);
  CHECK(wrap.weight(0.2) == 1.0);
  CHECK(wrap.length() == doctest::Approx(0.5 + kTwoPi - 6.0));
  CHECK_THROWS_AS(ArcInterval(0.0, 7.0), DomainError);
}

TEST_CASE("invariant measure examples") {
  auto z2 = BlaschkeProduct::power(2);
  CHECK(invariant_measure(z2, ArcInterval(0.0, std::numbers::pi), 8) == 0.5);
  for (int k = 1; k <= 10; ++k) CHECK(invariant_measure(z2, ArcInterval::full_circle(0.4), k) == 1.0);

  BlaschkeProduct b(1.0, {0.0, 0.5});
  ArcInterval right(-std::numbers::pi / 2, std::numbers::pi / 2);
  CHECK(std::abs(invariant_measure(b, right, 12) - invariant_measure(b, right, 14)) < 1.0 / 1024);

  // preimage arcs of a power map each carry l(I)/d
  for (int d : {2, 3}) {
    auto rep = verify_balanced(BlaschkeProduct::power(d), ArcInterval(0.2, 1.4), 8);
    REQUIRE(rep.components.size() == std::size_t(d));
    for (double m : rep.component_measures) CHECK(std::abs(m - rep.measure / d) < 1e-12 + 2.0 / std::pow(d, 8));
  }
  std::mt19937_64 rng(31);
  auto g = random_fixed_point_centered(rng, 2, 0.8);
  auto rep = verify_balanced(g, ArcInterval(1.0, 2.5), 12);
  CHECK(rep.max_deviation < 10.0 * std::pow(2.0, -11));
  CHECK_THROWS_AS(verify_balanced(g, ArcInterval(0.0, 4.0), 6), DomainError);
}

TEST_CASE("measure expansion on small arcs") {
  std::mt19937_64 rng(32);
  auto b = random_fixed_point_centered(rng, 2, 0.7);
  InvariantMeasure ell(b, 14);
  for (int t = 0; t < 10; ++t) {
    double s = std::uniform_real_distribution<double>(0.0, kTwoPi)(rng);
    ArcInterval small(s, s + 0.02);
    double img0 = ccw_angle(b(std::polar(1.0, small.start())));
    double img1 = img0 + std::abs(std::arg(b(std::polar(1.0, small.end())) / b(std::polar(1.0, small.start()))));
    ArcInterval image(img0, img1);
    CHECK(std::abs(ell(image) - 2 * ell(small)) < 4.0 * std::pow(2.0, -13));
  }
}

TEST_CASE("circle fixed points by scan agree with the polynomial solve") {
  std::mt19937_64 rng(33);
  for (int d = 2; d <= 7; ++d) {
    auto b = random_fixed_point_centered(rng, d);
    auto scan = circle_fixed_points_by_scan([&](Complex z) { return b(z); }, d);
    auto exact = fixed_points(b).boundary;
    REQUIRE(scan.size() == exact.size());
    for (std::size_t j = 0; j < scan.size(); ++j) CHECK(std::abs(scan[j] - exact[j]) < 1e-9);
  }
}

TEST_CASE("table csv") {
  auto csv = coordinate_table_csv(build_coordinate_table(BlaschkeProduct::power(2), 1));
  CHECK(csv.rfind("angle,re,im,t_numerator,t_denominator\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 3);
}
