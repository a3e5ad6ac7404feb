#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "bmodel/core.hpp"

namespace bmodel {

/// Reduced mapping schema S = (|S|, F, w): vertices 0..n-1 with string ids,
/// a total self-map F and weights w(v) >= 1. The local degree is d(v) = w(v)+1.
struct MappingSchema {
  std::vector<std::string> ids;
  std::vector<int> image;
  std::vector<int> weight;

  int size() const { return static_cast<int>(ids.size()); }
  int degree(int v) const { return weight[static_cast<std::size_t>(v)] + 1; }
  int total_weight() const;
  int index_of(const std::string& id) const;  // -1 if absent

  /// Builds vertices named v0, v1, ...
  static MappingSchema from_arrays(std::vector<int> image, std::vector<int> weight);
};

/// Throws ValidationError on an empty schema, weight < 1, an image index out
/// of range, or duplicate ids.
void validate(const MappingSchema& s);

struct Cycle {
  /// Dynamical order v, F(v), F^2(v), ... starting from the smallest index.
  std::vector<int> vertices;
  /// D_c = product of d(v) over the cycle.
  std::int64_t composite_degree;
};

struct CycleDecomposition {
  std::vector<Cycle> cycles;          // ordered by their smallest vertex
  std::vector<int> cycle_of;          // cycle index, or -1 for tree vertices
  std::vector<int> tree_vertices;     // by distance to the cycles, then index
  std::vector<int> depth;             // 0 on cycles

  bool periodic(int v) const { return cycle_of[static_cast<std::size_t>(v)] >= 0; }
};

CycleDecomposition enumerate_cycles(const MappingSchema& s);

/// Exact angle p/q in [0, 1), standing for the root of unity e^{2 pi i p/q}.
struct Angle {
  std::int64_t num = 0;
  std::int64_t den = 1;

  static Angle make(std::int64_t num, std::int64_t den);  // reduces mod 1
  Angle operator+(const Angle& o) const;
  Angle operator-() const;
  Angle times(std::int64_t k) const;
  double turns() const { return static_cast<double>(num) / static_cast<double>(den); }
  auto operator<=>(const Angle&) const = default;
};

/// Vertex permutation, iota[v] = image of v.
using Permutation = std::vector<int>;

/// eta_v = e^{2 pi i angle[v]} with eta_v^{d(v)} = eta_{F(v)}.
struct RotationElement {
  std::vector<Angle> angle;
  auto operator<=>(const RotationElement&) const = default;
};

/// Element of G(S): the automorphism h(v, z) = (iota(v), eta_{iota(v)} z) of
/// |S| x D, which commutes with the center map.
struct SymmetryElement {
  Permutation iota;
  RotationElement rotation;
  auto operator<=>(const SymmetryElement&) const = default;
};

bool is_automorphism(const MappingSchema& s, const Permutation& p);
bool is_rotation_element(const MappingSchema& s, const RotationElement& r);

/// Aut(S), identity first, lexicographic otherwise.
std::vector<Permutation> automorphism_group(const MappingSchema& s);

/// N(S), generated by propagating eta^{d(v)} = eta_{F(v)} around cycles and up
/// the trees; identity first.
std::vector<RotationElement> rotation_group(const MappingSchema& s);

/// prod_c (D_c - 1) * prod_{v non-periodic} d(v)
std::uint64_t rotation_group_order(const MappingSchema& s);

/// G(S) = Aut(S) x N(S) as sets, ordered by automorphism then rotation.
std::vector<SymmetryElement> symmetry_group(const MappingSchema& s);
std::uint64_t symmetry_group_order(const MappingSchema& s);

SymmetryElement identity_element(const MappingSchema& s);
/// Group law of G(S): the automorphism h_{g1} o h_{g2}.
SymmetryElement multiply(const SymmetryElement& g1, const SymmetryElement& g2);
SymmetryElement inverse(const SymmetryElement& g);
bool is_symmetry_element(const MappingSchema& s, const SymmetryElement& g);

/// Minimal lexicographic encoding over all vertex orderings.
std::vector<int> canonical_form(const MappingSchema& s);
bool isomorphic(const MappingSchema& a, const MappingSchema& b);

/// All reduced schemata of total weight W (1 <= W <= 6), one per
/// isomorphism class, in canonical order. BudgetError outside that range.
std::vector<MappingSchema> enumerate_schemata(int total_weight);

std::string to_string(const Angle& a);

}  // namespace bmodel
