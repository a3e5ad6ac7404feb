#include "bmodel/schema.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

#include "bmodel/core.hpp"

namespace bmodel {

int MappingSchema::total_weight() const { return std::accumulate(weight.begin(), weight.end(), 0); }

int MappingSchema::index_of(const std::string& id) const {
  auto it = std::find(ids.begin(), ids.end(), id);
  return it == ids.end() ? -1 : static_cast<int>(it - ids.begin());
}

MappingSchema MappingSchema::from_arrays(std::vector<int> image, std::vector<int> weight) {
  MappingSchema s;
  for (std::size_t i = 0; i < image.size(); ++i) s.ids.push_back("v" + std::to_string(i));
  s.image = std::move(image);
  s.weight = std::move(weight);
  return s;
}

void validate(const MappingSchema& s) {
  const std::size_t n = s.ids.size();
  if (n == 0) throw ValidationError("schema: no vertices");
  if (s.image.size() != n || s.weight.size() != n) throw ValidationError("schema: inconsistent array sizes");
  std::set<std::string> seen;
  for (std::size_t v = 0; v < n; ++v) {
    if (!seen.insert(s.ids[v]).second) throw ValidationError("schema: duplicate vertex id '" + s.ids[v] + "'");
    if (s.weight[v] < 1) throw ValidationError("schema: vertex '" + s.ids[v] + "' has weight < 1");
    if (s.image[v] < 0 || s.image[v] >= static_cast<int>(n))
      throw ValidationError("schema: vertex '" + s.ids[v] + "' has a dangling image");
  }
}

CycleDecomposition enumerate_cycles(const MappingSchema& s) {
  validate(s);
  const int n = s.size();
  CycleDecomposition dec;
  dec.cycle_of.assign(static_cast<std::size_t>(n), -1);
  dec.depth.assign(static_cast<std::size_t>(n), -1);
  for (int v = 0; v < n; ++v) {
    if (dec.cycle_of[static_cast<std::size_t>(v)] >= 0) continue;
    int u = v;
    for (int k = 0; k < n; ++k) u = s.image[static_cast<std::size_t>(u)];
    // u is now periodic; v is periodic iff it lies on u's cycle
    bool on_cycle = false;
    int w = u;
    do {
      if (w == v) on_cycle = true;
      w = s.image[static_cast<std::size_t>(w)];
    } while (w != u);
    if (!on_cycle) continue;
    Cycle c;
    c.composite_degree = 1;
    w = v;
    do {
      c.vertices.push_back(w);
      c.composite_degree *= s.degree(w);
      dec.cycle_of[static_cast<std::size_t>(w)] = static_cast<int>(dec.cycles.size());
      dec.depth[static_cast<std::size_t>(w)] = 0;
      w = s.image[static_cast<std::size_t>(w)];
    } while (w != v);
    dec.cycles.push_back(std::move(c));
  }
  std::function<int(int)> depth_of = [&](int v) -> int {
    int& d = dec.depth[static_cast<std::size_t>(v)];
    if (d < 0) d = 1 + depth_of(s.image[static_cast<std::size_t>(v)]);
    return d;
  };
  for (int v = 0; v < n; ++v)
    if (depth_of(v) > 0) dec.tree_vertices.push_back(v);
  std::stable_sort(dec.tree_vertices.begin(), dec.tree_vertices.end(), [&](int a, int b) {
    return dec.depth[static_cast<std::size_t>(a)] < dec.depth[static_cast<std::size_t>(b)];
  });
  return dec;
}

Angle Angle::make(std::int64_t num, std::int64_t den) {
  if (den <= 0) throw DomainError("Angle: denominator must be positive");
  num %= den;
  if (num < 0) num += den;
  std::int64_t g = std::gcd(num, den);
  if (g == 0) g = den;
  return Angle{num / g, den / g};
}

Angle Angle::operator+(const Angle& o) const {
  std::int64_t l = std::lcm(den, o.den);
  return make(num * (l / den) + o.num * (l / o.den), l);
}

Angle Angle::operator-() const { return make(-num, den); }

Angle Angle::times(std::int64_t k) const { return make(num * k, den); }

std::string to_string(const Angle& a) { return std::to_string(a.num) + "/" + std::to_string(a.den); }

bool is_automorphism(const MappingSchema& s, const Permutation& p) {
  const int n = s.size();
  if (static_cast<int>(p.size()) != n) return false;
  std::vector<char> hit(static_cast<std::size_t>(n), 0);
  for (int v = 0; v < n; ++v) {
    int pv = p[static_cast<std::size_t>(v)];
    if (pv < 0 || pv >= n || hit[static_cast<std::size_t>(pv)]) return false;
    hit[static_cast<std::size_t>(pv)] = 1;
  }
  for (int v = 0; v < n; ++v) {
    auto uv = static_cast<std::size_t>(v);
    if (s.weight[static_cast<std::size_t>(p[uv])] != s.weight[uv]) return false;
    if (p[static_cast<std::size_t>(s.image[uv])] != s.image[static_cast<std::size_t>(p[uv])]) return false;
  }
  return true;
}

bool is_rotation_element(const MappingSchema& s, const RotationElement& r) {
  if (static_cast<int>(r.angle.size()) != s.size()) return false;
  for (int v = 0; v < s.size(); ++v)
    if (r.angle[static_cast<std::size_t>(v)].times(s.degree(v)) != r.angle[static_cast<std::size_t>(s.image[static_cast<std::size_t>(v)])])
      return false;
  return true;
}

std::vector<Permutation> automorphism_group(const MappingSchema& s) {
  validate(s);
  const int n = s.size();
  std::vector<Permutation> out;
  Permutation p(static_cast<std::size_t>(n), -1);
  std::vector<char> used(static_cast<std::size_t>(n), 0);
  std::function<void(int)> extend = [&](int v) {
    if (v == n) {
      if (is_automorphism(s, p)) out.push_back(p);
      return;
    }
    for (int t = 0; t < n; ++t) {
      if (used[static_cast<std::size_t>(t)] || s.weight[static_cast<std::size_t>(t)] != s.weight[static_cast<std::size_t>(v)]) continue;
      p[static_cast<std::size_t>(v)] = t;
      // F o p = p o F on every assigned pair
      bool ok = true;
      for (int u = 0; u <= v && ok; ++u) {
        int fu = s.image[static_cast<std::size_t>(u)];
        if (fu <= v && p[static_cast<std::size_t>(fu)] != s.image[static_cast<std::size_t>(p[static_cast<std::size_t>(u)])]) ok = false;
      }
      if (!ok) continue;
      used[static_cast<std::size_t>(t)] = 1;
      extend(v + 1);
      used[static_cast<std::size_t>(t)] = 0;
    }
    p[static_cast<std::size_t>(v)] = -1;
  };
  extend(0);
  return out;
}

std::vector<RotationElement> rotation_group(const MappingSchema& s) {
  CycleDecomposition dec = enumerate_cycles(s);
  const std::size_t n = static_cast<std::size_t>(s.size());
  // one slot per cycle (D_c - 1 choices) followed by one per tree vertex
  std::vector<std::int64_t> radix;
  for (const auto& c : dec.cycles) radix.push_back(c.composite_degree - 1);
  for (int v : dec.tree_vertices) radix.push_back(s.degree(v));

  std::vector<RotationElement> out;
  std::vector<std::int64_t> digit(radix.size(), 0);
  while (true) {
    RotationElement r;
    r.angle.assign(n, Angle{});
    for (std::size_t ci = 0; ci < dec.cycles.size(); ++ci) {
      const auto& c = dec.cycles[ci];
      Angle a = Angle::make(digit[ci], c.composite_degree - 1);
      for (int v : c.vertices) {
        r.angle[static_cast<std::size_t>(v)] = a;
        a = a.times(s.degree(v));
      }
    }
    for (std::size_t ti = 0; ti < dec.tree_vertices.size(); ++ti) {
      int v = dec.tree_vertices[ti];
      const Angle& up = r.angle[static_cast<std::size_t>(s.image[static_cast<std::size_t>(v)])];
      std::int64_t d = s.degree(v);
      r.angle[static_cast<std::size_t>(v)] = Angle::make(up.num + digit[dec.cycles.size() + ti] * up.den, up.den * d);
    }
    out.push_back(std::move(r));
    std::size_t k = radix.size();
    while (k > 0) {
      --k;
      if (++digit[k] < radix[k]) break;
      digit[k] = 0;
      if (k == 0) return out;
    }
    if (radix.empty()) return out;
  }
}

std::uint64_t rotation_group_order(const MappingSchema& s) {
  CycleDecomposition dec = enumerate_cycles(s);
  std::uint64_t order = 1;
  for (const auto& c : dec.cycles) order *= static_cast<std::uint64_t>(c.composite_degree - 1);
  for (int v : dec.tree_vertices) order *= static_cast<std::uint64_t>(s.degree(v));
  return order;
}

std::vector<SymmetryElement> symmetry_group(const MappingSchema& s) {
  auto aut = automorphism_group(s);
  auto rot = rotation_group(s);
  std::vector<SymmetryElement> out;
  out.reserve(aut.size() * rot.size());
  for (const auto& p : aut)
    for (const auto& r : rot) out.push_back({p, r});
  return out;
}

std::uint64_t symmetry_group_order(const MappingSchema& s) {
  return automorphism_group(s).size() * rotation_group_order(s);
}

SymmetryElement identity_element(const MappingSchema& s) {
  SymmetryElement g;
  g.iota.resize(static_cast<std::size_t>(s.size()));
  std::iota(g.iota.begin(), g.iota.end(), 0);
  g.rotation.angle.assign(static_cast<std::size_t>(s.size()), Angle{});
  return g;
}

namespace {
Permutation invert(const Permutation& p) {
  Permutation q(p.size());
  for (std::size_t v = 0; v < p.size(); ++v) q[static_cast<std::size_t>(p[v])] = static_cast<int>(v);
  return q;
}
}  // namespace

// h1 o h2 (v, z) = (i1 i2 v, eta1_{i1 i2 v} eta2_{i2 v} z), so the product
// has iota = i1 i2 and angle_u = angle1_u + angle2_{i1^{-1} u}.
SymmetryElement multiply(const SymmetryElement& g1, const SymmetryElement& g2) {
  const std::size_t n = g1.iota.size();
  if (g2.iota.size() != n) throw DomainError("multiply: elements of different schemata");
  Permutation inv1 = invert(g1.iota);
  SymmetryElement g;
  g.iota.resize(n);
  g.rotation.angle.resize(n);
  for (std::size_t v = 0; v < n; ++v) {
    g.iota[v] = g1.iota[static_cast<std::size_t>(g2.iota[v])];
    g.rotation.angle[v] = g1.rotation.angle[v] + g2.rotation.angle[static_cast<std::size_t>(inv1[v])];
  }
  return g;
}

SymmetryElement inverse(const SymmetryElement& g) {
  const std::size_t n = g.iota.size();
  SymmetryElement h;
  h.iota = invert(g.iota);
  h.rotation.angle.resize(n);
  for (std::size_t u = 0; u < n; ++u) h.rotation.angle[u] = -g.rotation.angle[static_cast<std::size_t>(g.iota[u])];
  return h;
}

bool is_symmetry_element(const MappingSchema& s, const SymmetryElement& g) {
  return is_automorphism(s, g.iota) && is_rotation_element(s, g.rotation);
}

// Encoding: the weights in label order followed by the relabeled images.
// Because the weights come first, the minimum over all orderings is attained
// by an ordering with nondecreasing weights, so only those are searched.
std::vector<int> canonical_form(const MappingSchema& s) {
  validate(s);
  const int n = s.size();
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return s.weight[static_cast<std::size_t>(a)] < s.weight[static_cast<std::size_t>(b)];
  });
  std::vector<int> best;
  std::vector<int> label(static_cast<std::size_t>(n)), enc(static_cast<std::size_t>(2 * n));
  // permute within runs of equal weight
  std::vector<std::pair<int, int>> runs;
  for (int i = 0; i < n;) {
    int j = i;
    while (j < n && s.weight[static_cast<std::size_t>(order[static_cast<std::size_t>(j)])] ==
                        s.weight[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])])
      ++j;
    runs.emplace_back(i, j);
    std::sort(order.begin() + i, order.begin() + j);
    i = j;
  }
  std::function<void(std::size_t)> visit = [&](std::size_t r) {
    if (r == runs.size()) {
      for (int i = 0; i < n; ++i) label[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] = i;
      for (int i = 0; i < n; ++i) {
        int old = order[static_cast<std::size_t>(i)];
        enc[static_cast<std::size_t>(i)] = s.weight[static_cast<std::size_t>(old)];
        enc[static_cast<std::size_t>(n + i)] = label[static_cast<std::size_t>(s.image[static_cast<std::size_t>(old)])];
      }
      if (best.empty() || enc < best) best = enc;
      return;
    }
    auto [a, b] = runs[r];
    do {
      visit(r + 1);
    } while (std::next_permutation(order.begin() + a, order.begin() + b));
  };
  visit(0);
  return best;
}

bool isomorphic(const MappingSchema& a, const MappingSchema& b) {
  return a.size() == b.size() && canonical_form(a) == canonical_form(b);
}

namespace {

void partitions(int remaining, int parts, int min_part, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (parts == 0) {
    if (remaining == 0) out.push_back(cur);
    return;
  }
  for (int p = min_part; p * parts <= remaining; ++p) {
    cur.push_back(p);
    partitions(remaining - p, parts - 1, p, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<MappingSchema> enumerate_schemata(int total_weight) {
  if (total_weight < 1 || total_weight > 6) throw BudgetError("enumerate_schemata: total weight must be in 1..6");
  std::set<std::vector<int>> forms;
  for (int n = 1; n <= total_weight; ++n) {
    std::vector<std::vector<int>> weight_lists;
    std::vector<int> cur;
    partitions(total_weight, n, 1, cur, weight_lists);
    for (const auto& w : weight_lists) {
      std::vector<int> f(static_cast<std::size_t>(n), 0);
      while (true) {
        forms.insert(canonical_form(MappingSchema::from_arrays(f, w)));
        int k = n - 1;
        while (k >= 0 && ++f[static_cast<std::size_t>(k)] == n) f[static_cast<std::size_t>(k--)] = 0;
        if (k < 0) break;
      }
    }
  }
  std::vector<MappingSchema> out;
  // shorter encodings (fewer vertices) first
  std::vector<std::vector<int>> sorted(forms.begin(), forms.end());
  std::stable_sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) { return a.size() < b.size(); });
  for (const auto& e : sorted) {
    const std::size_t n = e.size() / 2;
    out.push_back(MappingSchema::from_arrays(std::vector<int>(e.begin() + static_cast<std::ptrdiff_t>(n), e.end()),
                                             std::vector<int>(e.begin(), e.begin() + static_cast<std::ptrdiff_t>(n))));
  }
  return out;
}

}  // namespace bmodel
