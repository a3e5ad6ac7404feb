#include <random>

#include "bmodel/model.hpp"
#include "bmodel/random.hpp"
#include "bmodel/straighten.hpp"
#include "doctest.h"

using namespace bmodel;

namespace {

BasinSystem single(const BlaschkeProduct& b) {
  return BasinSystem{{"a"}, {0}, {b}, {MobiusAutomorphism::identity()}, {MobiusAutomorphism::identity()}};
}

std::vector<MobiusAutomorphism> random_frames(int n, std::mt19937_64& rng) {
  std::vector<MobiusAutomorphism> g;
  for (int i = 0; i < n; ++i) g.push_back(random_automorphism(rng));
  return g;
}

}  // namespace

TEST_CASE("derive_schema examples") {
  auto s = derive_schema(single(BlaschkeProduct::power(2)));
  CHECK(s.size() == 1);
  CHECK(s.image[0] == 0);
  CHECK(s.weight[0] == 1);

  auto id = MobiusAutomorphism::identity();
  BasinSystem swap{{"a", "b"}, {1, 0}, {BlaschkeProduct::power(2), BlaschkeProduct::power(2)}, {id, id}, {id, id}};
  auto s2 = derive_schema(swap);
  CHECK(s2.image == std::vector<int>{1, 0});
  CHECK(s2.weight == std::vector<int>{1, 1});

  BasinSystem tail{{"a", "b"}, {1, 1}, {BlaschkeProduct::power(2), BlaschkeProduct::power(3)}, {id, id}, {id, id}};
  auto s3 = derive_schema(tail);
  CHECK(s3.image == std::vector<int>{1, 1});
  CHECK(s3.weight == std::vector<int>{1, 2});

  CHECK_THROWS_AS(derive_schema(single(BlaschkeProduct(1.0, {0.3}))), ValidationError);
  BasinSystem bad = swap;
  bad.image[0] = 5;
  CHECK_THROWS_AS(validate(bad), ValidationError);
  bad = swap;
  bad.labels[1] = "a";
  CHECK_THROWS_AS(validate(bad), ValidationError);
}

TEST_CASE("straighten z^2 and -z^2") {
  auto r = straighten(single(BlaschkeProduct::power(2)));
  REQUIRE(r.size() == 1);
  CHECK(map_distance(r[0].model, center_map(r[0].model.schema)) < 1e-14);
  CHECK(std::abs(r[0].h[0](Complex(0.3, 0.2)) - Complex(0.3, 0.2)) < 1e-14);

  auto n = straighten(single(BlaschkeProduct(-1.0, {0.0, 0.0})));
  REQUIRE(n.size() == 1);
  CHECK(map_distance(n[0].model, center_map(n[0].model.schema)) < 1e-14);
  for (Complex z : {Complex(0.5, 0), Complex(0.1, -0.4), Complex(0, 1)}) CHECK(std::abs(n[0].h[0](z) + z) < 1e-14);
}

TEST_CASE("straighten requires an interior fixed point") {
  // (z^2 + 1/2)/(1 + z^2/2) attracts to the boundary point 1
  BlaschkeProduct b(1.0, {Complex(0, std::sqrt(0.5)), Complex(0, -std::sqrt(0.5))});
  CHECK_THROWS_AS(straighten(single(b)), NoInteriorFixedPoint);
}

TEST_CASE("round trip on scrambled samples") {
  std::mt19937_64 rng(71);
  for (int w = 1; w <= 3; ++w) {
    for (const auto& s : enumerate_schemata(w)) {
      for (int t = 0; t < 3; ++t) {
        auto m = random_member(s, rng);
        auto b = scramble(m, random_frames(s.size(), rng));
        CHECK(derive_schema(b).weight == s.weight);
        auto all = straighten(b);
        REQUIRE(all.size() == symmetry_group_order(s));
        for (const auto& r : all) {
          CHECK_NOTHROW(validate_membership(r.model));
          CHECK(conjugacy_residual(b, r) < 1e-7);
          CHECK(conjugacy_equivalent(r.model, m));
        }
        auto first = straighten(b, StraightenMode::first);
        REQUIRE(first.size() == 1);
        CHECK(map_distance(first[0].model, all[0].model) == 0.0);
      }
    }
  }
}

TEST_CASE("straightening a normalized member includes the identity") {
  std::mt19937_64 rng(72);
  for (int w = 1; w <= 3; ++w) {
    for (const auto& s : enumerate_schemata(w)) {
      auto m = random_member(s, rng);
      auto b = scramble(m, std::vector<MobiusAutomorphism>(s.size()));
      auto all = straighten(b);
      REQUIRE(!all.empty());
      CHECK(map_distance(all[0].model, m) < 1e-9);
      for (int v = 0; v < s.size(); ++v) CHECK(all[0].component_of[v] == v);
      bool found = false;
      for (const auto& r : all) found = found || map_distance(r.model, m) < 1e-9;
      CHECK(found);
    }
  }
}

TEST_CASE("straighten output is deterministic") {
  std::mt19937_64 rng(73);
  auto s = MappingSchema::from_arrays({1, 0, 0}, {1, 1, 1});
  auto b = scramble(random_member(s, rng), random_frames(3, rng));
  auto x = straighten(b);
  auto y = straighten(b);
  REQUIRE(x.size() == y.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    CHECK(x[i].component_of == y[i].component_of);
    CHECK(map_distance(x[i].model, y[i].model) == 0.0);
  }
}
