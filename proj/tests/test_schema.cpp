#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "bmodel/schema.hpp"
#include "doctest.h"

using namespace bmodel;

namespace {

// Burnside count of (F, w) pairs on n labeled vertices with total weight W,
// up to relabeling.
std::uint64_t burnside_count(int W) {
  std::uint64_t total = 0;
  for (int n = 1; n <= W; ++n) {
    std::vector<std::vector<int>> maps, weights;
    std::vector<int> f(n, 0);
    std::function<void(int)> gen_f = [&](int i) {
      if (i == n) return maps.push_back(f);
      for (int x = 0; x < n; ++x) f[i] = x, gen_f(i + 1);
    };
    gen_f(0);
    std::vector<int> w(n, 1);
    std::function<void(int, int)> gen_w = [&](int i, int left) {
      if (i == n - 1) {
        if (left >= 1) w[i] = left, weights.push_back(w);
        return;
      }
      for (int x = 1; x <= left - (n - 1 - i); ++x) w[i] = x, gen_w(i + 1, left - x);
    };
    gen_w(0, W);
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::uint64_t fixed = 0, group = 0;
    do {
      ++group;
      for (const auto& F : maps)
        for (const auto& ww : weights) {
          bool inv = true;
          for (int v = 0; v < n && inv; ++v) inv = F[perm[v]] == perm[F[v]] && ww[perm[v]] == ww[v];
          if (inv) ++fixed;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    total += fixed / group;
  }
  return total;
}

MappingSchema relabel(const MappingSchema& s, const std::vector<int>& p) {
  MappingSchema r = s;
  for (int v = 0; v < s.size(); ++v) {
    r.image[p[v]] = p[s.image[v]];
    r.weight[p[v]] = s.weight[v];
  }
  return r;
}

std::uint64_t closed_form_N(const MappingSchema& s) {
  // cycles found by walking F from each vertex
  std::uint64_t order = 1;
  std::set<int> on_cycle;
  for (int v = 0; v < s.size(); ++v) {
    int x = v;
    for (int i = 0; i < s.size(); ++i) x = s.image[x];
    on_cycle.insert(x);
    for (int y = s.image[x]; y != x; y = s.image[y]) on_cycle.insert(y);
  }
  std::set<int> seen;
  for (int v : on_cycle) {
    if (seen.count(v)) continue;
    std::uint64_t D = 1;
    int y = v;
    do {
      seen.insert(y);
      D *= s.degree(y);
      y = s.image[y];
    } while (y != v);
    order *= D - 1;
  }
  for (int v = 0; v < s.size(); ++v)
    if (!on_cycle.count(v)) order *= s.degree(v);
  return order;
}

}  // namespace

TEST_CASE("cycle decomposition examples") {
  auto one = enumerate_cycles(MappingSchema::from_arrays({0}, {1}));
  REQUIRE(one.cycles.size() == 1);
  CHECK(one.cycles[0].composite_degree == 2);
  auto two = enumerate_cycles(MappingSchema::from_arrays({1, 0}, {1, 1}));
  REQUIRE(two.cycles.size() == 1);
  CHECK(two.cycles[0].composite_degree == 4);
  CHECK(two.cycles[0].vertices == std::vector<int>{0, 1});
  auto tail = enumerate_cycles(MappingSchema::from_arrays({1, 1}, {1, 2}));
  REQUIRE(tail.cycles.size() == 1);
  CHECK(tail.cycles[0].vertices == std::vector<int>{1});
  CHECK(tail.cycles[0].composite_degree == 3);
  CHECK(tail.tree_vertices == std::vector<int>{0});
  CHECK_FALSE(tail.periodic(0));
}

TEST_CASE("validation") {
  CHECK_THROWS_AS(validate(MappingSchema{}), ValidationError);
  CHECK_THROWS_AS(validate(MappingSchema::from_arrays({0}, {0})), ValidationError);
  CHECK_THROWS_AS(validate(MappingSchema::from_arrays({2, 0}, {1, 1})), ValidationError);
  MappingSchema dup = MappingSchema::from_arrays({0, 1}, {1, 1});
  dup.ids[1] = dup.ids[0];
  CHECK_THROWS_AS(validate(dup), ValidationError);
}

TEST_CASE("group examples") {
  CHECK(automorphism_group(MappingSchema::from_arrays({0}, {1})).size() == 1);
  CHECK(automorphism_group(MappingSchema::from_arrays({0, 1}, {1, 1})).size() == 2);
  CHECK(automorphism_group(MappingSchema::from_arrays({1, 0}, {1, 1})).size() == 2);
  CHECK(automorphism_group(MappingSchema::from_arrays({1, 0}, {1, 2})).size() == 1);

  CHECK(rotation_group(MappingSchema::from_arrays({0}, {1})).size() == 1);
  auto r2 = rotation_group(MappingSchema::from_arrays({0}, {2}));
  REQUIRE(r2.size() == 2);
  CHECK(r2[1].angle[0] == Angle::make(1, 2));
  auto rc = rotation_group(MappingSchema::from_arrays({1, 0}, {1, 1}));
  REQUIRE(rc.size() == 3);
  std::set<Angle> base;
  for (const auto& r : rc) base.insert(r.angle[0]);
  CHECK(base == std::set<Angle>{Angle::make(0, 1), Angle::make(1, 3), Angle::make(2, 3)});

  CHECK(symmetry_group_order(MappingSchema::from_arrays({0}, {1})) == 1);
  CHECK(symmetry_group_order(MappingSchema::from_arrays({0}, {2})) == 2);
  CHECK(symmetry_group_order(MappingSchema::from_arrays({1, 0}, {1, 1})) == 6);
}

TEST_CASE("angles are exact") {
  auto a = Angle::make(5, 3);
  CHECK(a.num == 2);
  CHECK(a.den == 3);
  CHECK(Angle::make(-1, 4) == Angle::make(3, 4));
  CHECK((Angle::make(1, 6) + Angle::make(1, 3)) == Angle::make(1, 2));
  CHECK(Angle::make(1, 3).times(4) == Angle::make(1, 3));
  CHECK((-Angle::make(1, 5)) == Angle::make(4, 5));
  CHECK(to_string(Angle::make(2, 4)) == "1/2");
}

TEST_CASE("enumeration matches Burnside counting") {
  CHECK(enumerate_schemata(1).size() == 1);
  CHECK(enumerate_schemata(2).size() == 4);
  for (int W = 1; W <= 4; ++W) CHECK(enumerate_schemata(W).size() == burnside_count(W));
  CHECK_THROWS_AS(enumerate_schemata(0), BudgetError);
  CHECK_THROWS_AS(enumerate_schemata(7), BudgetError);
}

TEST_CASE("group structure on every schema of weight at most 4") {
  std::mt19937_64 rng(41);
  for (int W = 1; W <= 4; ++W) {
    for (const auto& s : enumerate_schemata(W)) {
      CAPTURE(W);
      auto rot = rotation_group(s);
      CHECK(rot.size() == closed_form_N(s));
      CHECK(rotation_group_order(s) == closed_form_N(s));
      CHECK(std::set<RotationElement>(rot.begin(), rot.end()).size() == rot.size());
      for (const auto& r : rot) REQUIRE(is_rotation_element(s, r));

      auto aut = automorphism_group(s);
      auto cyc = enumerate_cycles(s);
      for (const auto& p : aut) {
        REQUIRE(is_automorphism(s, p));
        for (int v = 0; v < s.size(); ++v) CHECK(cyc.periodic(v) == cyc.periodic(p[v]));
      }

      auto g = symmetry_group(s);
      CHECK(g.size() == symmetry_group_order(s));
      CHECK(g.front() == identity_element(s));
      std::uniform_int_distribution<std::size_t> pick(0, g.size() - 1);
      for (int t = 0; t < 20; ++t) {
        const auto& a = g[pick(rng)];
        const auto& b = g[pick(rng)];
        const auto& c = g[pick(rng)];
        REQUIRE(is_symmetry_element(s, multiply(a, b)));
        CHECK(multiply(multiply(a, b), c) == multiply(a, multiply(b, c)));
        CHECK(multiply(a, inverse(a)) == identity_element(s));
        CHECK(multiply(identity_element(s), a) == a);
      }
      std::vector<int> p(s.size());
      std::iota(p.begin(), p.end(), 0);
      std::shuffle(p.begin(), p.end(), rng);
      CHECK(canonical_form(relabel(s, p)) == canonical_form(s));
      CHECK(isomorphic(relabel(s, p), s));
    }
  }
}

TEST_CASE("rotation group is complete for weight at most 3") {
  // every assignment of L-th roots of unity satisfying d(v) theta_v = theta_F(v)
  for (int W = 1; W <= 3; ++W) {
    for (const auto& s : enumerate_schemata(W)) {
      std::int64_t L = closed_form_N(s);
      for (int v = 0; v < s.size(); ++v) L *= s.degree(v);
      std::vector<std::int64_t> k(s.size());
      std::uint64_t count = 0;
      std::function<void(int)> rec = [&](int v) {
        if (v == s.size()) {
          for (int u = 0; u < s.size(); ++u)
            if ((k[u] * s.degree(u)) % L != k[s.image[u]]) return;
          ++count;
          return;
        }
        for (k[v] = 0; k[v] < L; ++k[v]) rec(v + 1);
      };
      rec(0);
      CHECK(count == rotation_group_order(s));
    }
  }
}

TEST_CASE("non-isomorphic schemata are told apart") {
  CHECK_FALSE(isomorphic(MappingSchema::from_arrays({0, 0}, {1, 2}), MappingSchema::from_arrays({0, 0}, {2, 1})));
  CHECK(isomorphic(MappingSchema::from_arrays({0, 0}, {1, 2}), MappingSchema::from_arrays({1, 1}, {2, 1})));
  CHECK_FALSE(isomorphic(MappingSchema::from_arrays({1, 0}, {1, 1}), MappingSchema::from_arrays({0, 1}, {1, 1})));
}
