#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bmodel/blaschke.hpp"
#include "bmodel/mobius.hpp"
#include "bmodel/model.hpp"
#include "bmodel/schema.hpp"

namespace bmodel {

/// Proper holomorphic self-map of a finite disjoint union of disks. Component
/// sigma is carried onto component image[sigma] by post o core o pre.
struct BasinSystem {
  std::vector<std::string> labels;
  std::vector<int> image;
  std::vector<BlaschkeProduct> core;
  std::vector<MobiusAutomorphism> pre;
  std::vector<MobiusAutomorphism> post;

  int size() const { return static_cast<int>(labels.size()); }
  /// The map on component sigma as a single Blaschke product.
  BlaschkeProduct map_on(int sigma) const;
};

/// Throws ValidationError on inconsistent sizes, a bad image index or a
/// duplicate label.
void validate(const BasinSystem& b);

/// Vertices = components, F = component map, w = degree - 1. ValidationError
/// on a component of degree < 2.
MappingSchema derive_schema(const BasinSystem& b);

/// The system with core = factor_v, pre = g_v^{-1}, post = g_{F(v)}, i.e. m
/// read in the coordinates z -> g_v(z) on each component.
BasinSystem scramble(const ModelMap& m, const std::vector<MobiusAutomorphism>& g);

struct Straightening {
  ModelMap model;
  /// component_of[v] = component sitting at model vertex v.
  std::vector<int> component_of;
  /// h[sigma] carries component sigma onto the disk of its model vertex;
  /// model.at(v) = h[F sigma] o map_on(sigma) o h[sigma]^{-1} for sigma = component_of[v].
  std::vector<MobiusAutomorphism> h;
};

enum class StraightenMode { all, first };

/// Every conjugacy of b onto a member of B(derive_schema(b)), |G(S)| of them,
/// in canonical order: schema automorphisms in group order, then the choices
/// of circle fixed point for each cycle (cycles by smallest label, points
/// counterclockwise from 1), then the preimage choices at tree components in
/// the same angular order. NoInteriorFixedPoint if some cycle's return map
/// has no attracting interior fixed point.
std::vector<Straightening> straighten(const BasinSystem& b, StraightenMode mode = StraightenMode::all);

/// max over components of |model.at(v)(z) - h[F sigma](map_on(sigma)(h[sigma]^{-1} z))| at
/// a few circle and interior probe points.
double conjugacy_residual(const BasinSystem& b, const Straightening& s);

}  // namespace bmodel
