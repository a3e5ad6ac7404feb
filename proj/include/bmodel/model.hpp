#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "bmodel/blaschke.hpp"
#include "bmodel/schema.hpp"

namespace bmodel {

/// A point of the model space B(S): one boundary-rooted Blaschke product of
/// degree d(v) per vertex, carrying v x D onto F(v) x D. Factors at periodic
/// vertices fix 0; factors at the other vertices are critically centered.
struct ModelMap {
  MappingSchema schema;
  std::vector<BlaschkeProduct> factor;  // indexed like schema.ids

  const BlaschkeProduct& at(int v) const { return factor[static_cast<std::size_t>(v)]; }
};

/// (v, z) -> (F(v), z^{d(v)})
ModelMap center_map(const MappingSchema& s);

struct MembershipResidual {
  int vertex;
  double root;        // |factor_v(1) - 1|
  double center;      // |factor_v(0)| (periodic vertices) or |sum of critical points|
  bool periodic;
  bool degree_ok;
};
std::vector<MembershipResidual> membership_residuals(const ModelMap& m);

/// Throws MembershipError naming the first violated clause and vertex.
void validate_membership(const ModelMap& m);

/// Real dimension of B(S): 2 w(S).
inline std::size_t parameter_count(const MappingSchema& s) { return 2 * static_cast<std::size_t>(s.total_weight()); }

/// Chart R^{2w} -> B(S). Vertices are taken in schema order, each consuming
/// w(v) complex numbers as (re, im) pairs. A periodic vertex gets
/// z * mu_{a_1} ... mu_{a_w}; a non-periodic vertex gets the zero-sum product
/// with zeros a_1 .. a_w, -(a_1 + ... + a_w), recentered critically.
/// DomainError on a wrong length or a zero outside the disk.
ModelMap sample(const MappingSchema& s, const std::vector<double>& parameters);

/// Inverse chart. Exact inverse of sample on its image; for other members the
/// zeros are read in stored order.
std::vector<double> parameters_of(const ModelMap& m);

/// Random chart point: periodic zeros uniform in |a| < radius, non-periodic
/// free zeros in |a| < radius / w(v) so that the balancing zero stays inside.
std::vector<double> random_parameters(const MappingSchema& s, std::mt19937_64& rng, double radius = 0.9);
ModelMap random_member(const MappingSchema& s, std::mt19937_64& rng, double radius = 0.9);

/// True iff every zero of every factor lies within tol_pcf of 0, i.e. m is
/// the center map.
bool is_post_critically_finite(const ModelMap& m);

struct CriticalOrbit {
  int vertex;
  Complex critical_point;
  int iterations;          // steps until the orbit is within `threshold` of the cycle
  double final_distance;   // |z| once on a periodic vertex
  bool converged;
};
/// Follows every critical point until it lands on a periodic vertex within
/// `threshold` of the center.
std::vector<CriticalOrbit> critical_orbits(const ModelMap& m, double threshold = 1e-6, int max_iterations = 10000);

/// Equivariant choice of circle points: q[v] lies on the circle of vertex
/// iota(v), and factor_{iota(v)}(q[v]) = q[F(v)].
struct BoundaryMarking {
  SymmetryElement label;
  Permutation iota;
  std::vector<Complex> q;
};

/// Computes markings of one member. The marking labeled g = (iota, theta)
/// is q(v) = p_theta(iota(v)), where p_theta is the equivariant point family
/// with coordinates theta: on a cycle with base b (its smallest vertex) it
/// starts from the (theta_b (D_c - 1))-th circle fixed point of the return
/// map counterclockwise from 1, and at a tree vertex u it takes the
/// floor(d(u) theta_u)-th preimage of p_theta(F(u)) counterclockwise from 1.
/// For the center map p_theta(v) = exp(2 pi i theta_v).
class MarkingSolver {
 public:
  explicit MarkingSolver(const ModelMap& m);
  std::vector<Complex> points(const RotationElement& theta) const;
  BoundaryMarking marking(const SymmetryElement& g) const;
  std::vector<BoundaryMarking> all() const;
  /// Circle fixed points of each cycle's return map, counterclockwise from 1.
  const std::vector<std::vector<Complex>>& cycle_fixed_points() const { return fixed_; }

 private:
  ModelMap m_;
  CycleDecomposition dec_;
  std::vector<std::vector<Complex>> fixed_;
};

std::vector<BoundaryMarking> boundary_markings(const ModelMap& m);
BoundaryMarking marking_for(const ModelMap& m, const SymmetryElement& g);

/// max over vertices of |factor_{iota v}(q v) - q(F v)|
double marking_residual(const ModelMap& m, const BoundaryMarking& q);

/// The member conjugate to m by z -> q(v) z on each component:
/// beta'_v(z) = conj(q(F v)) factor_{iota v}(q(v) z).
ModelMap conjugate_by_marking(const ModelMap& m, const BoundaryMarking& q);

/// Action of G(S) on B(S): conjugation by the marking labeled g^{-1}.
ModelMap act(const SymmetryElement& g, const ModelMap& m);

/// Factor-wise comparison: |c - c'| and the distance of the zero multisets
/// in monic coefficients, both at most tol.
double map_distance(const ModelMap& a, const ModelMap& b);
bool same_map(const ModelMap& a, const ModelMap& b, double tol);

/// Elements of G(S) acting trivially on `probes` seeded random members.
std::vector<SymmetryElement> kernel_N0(const MappingSchema& s, std::uint64_t seed = 1, int probes = 20);
std::uint64_t effective_group_order(const MappingSchema& s, std::uint64_t seed = 1);

/// True iff some element of G(S) carries m1 to m2 within tol.
bool conjugacy_equivalent(const ModelMap& m1, const ModelMap& m2, std::optional<double> tol = std::nullopt);

}  // namespace bmodel
