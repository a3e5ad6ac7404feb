#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "bmodel/blaschke.hpp"

namespace bmodel {

/// One point of the iterated preimage set together with its exact dyadic
/// (d-adic) coordinate numerator / denominator.
struct CoordinateEntry {
  Complex point;
  double angle;  // counterclockwise from the base point, in [0, 2*pi)
  std::uint64_t numerator;
};

/// The d^k solutions of beta^k(z) = z0 on the circle, ordered counterclockwise
/// from the boundary fixed point z0; entry j carries coordinate j / d^k. On
/// these points the circle map acts as t -> d t (mod 1).
class CircleCoordinateTable {
 public:
  CircleCoordinateTable(Complex base, int degree, int depth, std::vector<CoordinateEntry> entries);

  Complex base() const { return base_; }
  int degree() const { return degree_; }
  int depth() const { return depth_; }
  std::uint64_t denominator() const { return static_cast<std::uint64_t>(entries_.size()); }
  const std::vector<CoordinateEntry>& entries() const { return entries_; }

  /// Index of the entry closest in angle to z (|z| = 1).
  std::size_t nearest(Complex z) const;

 private:
  Complex base_;
  int degree_;
  int depth_;
  std::vector<CoordinateEntry> entries_;
};

inline constexpr std::uint64_t kDefaultMaxTable = std::uint64_t{1} << 20;

/// Builds the depth-k table. The base point is the boundary fixed point with
/// the smallest nonnegative argument, or the one at `base_index` in that
/// order. Requires an interior fixed point. BudgetError if d^k > max_table.
CircleCoordinateTable build_coordinate_table(const BlaschkeProduct& b, int depth, int base_index = 0,
                                             std::uint64_t max_table = kDefaultMaxTable);

struct CoordinateEstimate {
  double value;        // in [0, 1)
  double error_bound;  // width of the bracketing gap, 1 / d^k
};

/// Coordinate of a circle point by linear interpolation between the
/// bracketing table entries.
CoordinateEstimate boundary_coordinate(const CircleCoordinateTable& table, Complex z);

/// Counterclockwise arc starting at `start`; half-open [start, start+length).
class ArcInterval {
 public:
  ArcInterval(double start, double end);
  static ArcInterval from_length(double start, double length);
  static ArcInterval full_circle(double start = 0.0);

  double start() const { return start_; }
  double end() const { return start_ + length_; }
  double length() const { return length_; }

  /// Membership weight of the point at angle theta: 1 inside, 0 outside, and
  /// 1/2 within `tie` radians of either endpoint. The symmetric tie weight
  /// keeps counts additive over adjacent arcs when a preimage lands on a
  /// shared endpoint up to rounding.
  double weight(double theta, double tie = 1e-12) const;

 private:
  double start_, length_;
};

/// All d^k solutions of beta^k(u) = target (|target| = 1), counterclockwise
/// from 1. BudgetError above max_points.
std::vector<Complex> iterated_preimages(const BlaschkeProduct& b, Complex target, int depth,
                                        std::uint64_t max_points = kDefaultMaxTable);

/// Counting measure N(k)/d^k of the depth-k preimages of the point 1; the
/// preimage set is built once and reused for every arc.
class InvariantMeasure {
 public:
  InvariantMeasure(const BlaschkeProduct& b, int depth, std::uint64_t max_points = kDefaultMaxTable);
  double operator()(const ArcInterval& arc) const;
  int depth() const { return depth_; }
  int degree() const { return degree_; }
  const std::vector<double>& angles() const { return angles_; }

 private:
  int degree_, depth_;
  std::vector<double> angles_;
};

double invariant_measure(const BlaschkeProduct& b, const ArcInterval& arc, int depth);

struct BalanceReport {
  double measure;                           // l(I)
  std::vector<ArcInterval> components;      // the d arcs of beta^{-1}(I)
  std::vector<double> component_measures;
  double max_deviation;                     // max |l(J) - l(I)/d|
};

/// Measures the d preimage components of I (length < pi) against l(I)/d.
BalanceReport verify_balanced(const BlaschkeProduct& b, const ArcInterval& arc, int depth);

/// Fixed points on the circle of a degree-`degree` covering map f, located by
/// scanning the lifted displacement on a dense grid and bisecting sign
/// changes. Counterclockwise from 1.
std::vector<Complex> circle_fixed_points_by_scan(const std::function<Complex(Complex)>& f, int degree,
                                                 int samples_per_degree = 256);

/// CSV with columns angle,re,im,t_numerator,t_denominator.
std::string coordinate_table_csv(const CircleCoordinateTable& table);

}  // namespace bmodel
