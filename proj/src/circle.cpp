#include "bmodel/circle.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace bmodel {

CircleCoordinateTable::CircleCoordinateTable(Complex base, int degree, int depth, std::vector<CoordinateEntry> entries)
    : base_(base), degree_(degree), depth_(depth), entries_(std::move(entries)) {}

std::size_t CircleCoordinateTable::nearest(Complex z) const {
  double t = ccw_angle(z, base_);
  auto it = std::lower_bound(entries_.begin(), entries_.end(), t,
                             [](const CoordinateEntry& e, double v) { return e.angle < v; });
  std::size_t hi = static_cast<std::size_t>(it - entries_.begin()) % entries_.size();
  std::size_t lo = (hi + entries_.size() - 1) % entries_.size();
  return std::abs(entries_[hi].point - z) <= std::abs(entries_[lo].point - z) ? hi : lo;
}

namespace {

std::uint64_t checked_power(int d, int k, std::uint64_t limit) {
  std::uint64_t n = 1;
  for (int i = 0; i < k; ++i) {
    n *= static_cast<std::uint64_t>(d);
    if (n > limit) throw BudgetError("circle: d^k exceeds the table budget");
  }
  return n;
}

std::vector<Complex> preimage_level(const BlaschkeProduct& b, Complex target, int depth, std::uint64_t limit) {
  if (depth < 0) throw DomainError("circle: depth must be nonnegative");
  checked_power(b.degree(), depth, limit);
  std::vector<Complex> level{unit(target)};
  for (int k = 0; k < depth; ++k) {
    std::vector<Complex> next;
    next.reserve(level.size() * static_cast<std::size_t>(b.degree()));
    for (Complex w : level) {
      auto pre = preimages(b, w);
      next.insert(next.end(), pre.begin(), pre.end());
    }
    level = std::move(next);
  }
  return level;
}

}  // namespace

std::vector<Complex> iterated_preimages(const BlaschkeProduct& b, Complex target, int depth, std::uint64_t max_points) {
  auto pts = preimage_level(b, target, depth, max_points);
  std::sort(pts.begin(), pts.end(), [](Complex x, Complex y) { return ccw_angle(x) < ccw_angle(y); });
  return pts;
}

CircleCoordinateTable build_coordinate_table(const BlaschkeProduct& b, int depth, int base_index,
                                             std::uint64_t max_table) {
  if (depth < 1) throw DomainError("build_coordinate_table: depth must be at least 1");
  const std::uint64_t n = checked_power(b.degree(), depth, max_table);
  FixedPointReport rep = fixed_points(b);
  if (!rep.interior) throw NoInteriorFixedPoint("build_coordinate_table: map has no interior fixed point");
  if (base_index < 0 || base_index >= static_cast<int>(rep.boundary.size()))
    throw DomainError("build_coordinate_table: base fixed point index out of range");
  const Complex base = rep.boundary[static_cast<std::size_t>(base_index)];

  auto pts = preimage_level(b, base, depth, max_table);
  std::vector<CoordinateEntry> entries;
  entries.reserve(pts.size());
  for (Complex z : pts) entries.push_back({z, ccw_angle(z, base, 1e-10), 0});
  std::sort(entries.begin(), entries.end(), [](const auto& x, const auto& y) { return x.angle < y.angle; });
  if (entries.size() != n) throw NumericalError("build_coordinate_table: wrong entry count");
  for (std::size_t j = 0; j < entries.size(); ++j) {
    entries[j].numerator = j;
    if (j > 0 && !(entries[j].angle > entries[j - 1].angle))
      throw NumericalError("build_coordinate_table: coincident preimages");
  }
  if (std::abs(entries.front().point - base) > tolerances().conj)
    throw NumericalError("build_coordinate_table: base point missing from its own preimage set");
  return CircleCoordinateTable(base, b.degree(), depth, std::move(entries));
}

CoordinateEstimate boundary_coordinate(const CircleCoordinateTable& table, Complex z) {
  require_finite(z, "boundary_coordinate");
  if (std::abs(std::abs(z) - 1.0) > tolerances().unimodular)
    throw DomainError("boundary_coordinate: point is not on the unit circle");
  const auto& e = table.entries();
  const double n = static_cast<double>(e.size());
  double t = ccw_angle(z, table.base());
  auto it = std::upper_bound(e.begin(), e.end(), t, [](double v, const CoordinateEntry& x) { return v < x.angle; });
  std::size_t hi = static_cast<std::size_t>(it - e.begin());
  std::size_t lo = hi - 1;  // e[0].angle == 0 <= t, so hi >= 1
  double a0 = e[lo].angle, a1 = hi < e.size() ? e[hi].angle : kTwoPi;
  double c0 = static_cast<double>(e[lo].numerator) / n, c1 = static_cast<double>(lo + 1) / n;
  double frac = a1 > a0 ? (t - a0) / (a1 - a0) : 0.0;
  double v = c0 + frac * (c1 - c0);
  if (v >= 1.0) v -= 1.0;
  return {v, 1.0 / n};
}

ArcInterval::ArcInterval(double start, double end) {
  if (!std::isfinite(start) || !std::isfinite(end)) throw DomainError("ArcInterval: non-finite angle");
  start_ = std::fmod(start, kTwoPi);
  if (start_ < 0) start_ += kTwoPi;
  double len = end - start;
  if (len > kTwoPi + 1e-12) throw DomainError("ArcInterval: length exceeds a full turn");
  len = std::min(len, kTwoPi);
  if (len <= 0) len = std::fmod(len, kTwoPi) + kTwoPi;
  length_ = len;
  if (!(length_ > 0)) throw DomainError("ArcInterval: empty arc");
}

ArcInterval ArcInterval::from_length(double start, double length) { return ArcInterval(start, start + length); }

ArcInterval ArcInterval::full_circle(double start) { return ArcInterval(start, start + kTwoPi); }

double ArcInterval::weight(double theta, double tie) const {
  if (length_ >= kTwoPi) return 1.0;
  double off = std::fmod(theta - start_, kTwoPi);
  if (off < 0) off += kTwoPi;
  if (off < tie || off > kTwoPi - tie) return 0.5;
  if (std::abs(off - length_) < tie) return 0.5;
  return off < length_ ? 1.0 : 0.0;
}

InvariantMeasure::InvariantMeasure(const BlaschkeProduct& b, int depth, std::uint64_t max_points)
    : degree_(b.degree()), depth_(depth) {
  auto pts = preimage_level(b, Complex(1.0), depth, max_points);
  angles_.reserve(pts.size());
  for (Complex z : pts) angles_.push_back(ccw_angle(z));
  std::sort(angles_.begin(), angles_.end());
}

double InvariantMeasure::operator()(const ArcInterval& arc) const {
  double count = 0.0;
  for (double t : angles_) count += arc.weight(t);
  return count / static_cast<double>(angles_.size());
}

double invariant_measure(const BlaschkeProduct& b, const ArcInterval& arc, int depth) {
  return InvariantMeasure(b, depth)(arc);
}

BalanceReport verify_balanced(const BlaschkeProduct& b, const ArcInterval& arc, int depth) {
  if (!(arc.length() < std::numbers::pi)) throw DomainError("verify_balanced: arc must be shorter than pi");
  InvariantMeasure ell(b, depth);
  const int d = b.degree();
  auto starts = preimages(b, std::polar(1.0, arc.start()));
  auto ends = preimages(b, std::polar(1.0, arc.end()));
  std::vector<double> end_angles;
  for (Complex e : ends) end_angles.push_back(ccw_angle(e));
  std::sort(end_angles.begin(), end_angles.end());

  BalanceReport rep;
  rep.measure = ell(arc);
  rep.max_deviation = 0.0;
  for (Complex s : starts) {
    double sa = ccw_angle(s);
    // first end preimage counterclockwise after s
    double best = kTwoPi + 1.0;
    for (double ea : end_angles) {
      double off = std::fmod(ea - sa + kTwoPi, kTwoPi);
      if (off > 0 && off < best) best = off;
    }
    ArcInterval comp(sa, sa + best);
    double m = ell(comp);
    rep.components.push_back(comp);
    rep.component_measures.push_back(m);
    rep.max_deviation = std::max(rep.max_deviation, std::abs(m - rep.measure / d));
  }
  return rep;
}

std::vector<Complex> circle_fixed_points_by_scan(const std::function<Complex(Complex)>& f, int degree,
                                                 int samples_per_degree) {
  const int n = std::max(64, samples_per_degree * degree);
  auto displacement = [&](double t) {
    Complex z = std::polar(1.0, t);
    return std::arg(f(z) * std::conj(z));
  };
  std::vector<Complex> out;
  double t0 = 0.0, g0 = displacement(0.0);
  if (std::abs(g0) < 1e-14) out.push_back(Complex(1.0));
  for (int i = 1; i <= n; ++i) {
    double t1 = kTwoPi * i / n;
    double g1 = displacement(t1);
    // The lifted displacement increases; a wrap shows up as a jump of about
    // -2*pi and is not a root.
    if (g0 < 0.0 && g1 >= 0.0 && g1 - g0 < std::numbers::pi) {
      double lo = t0, hi = t1;
      for (int it = 0; it < 100 && hi - lo > 1e-16; ++it) {
        double mid = 0.5 * (lo + hi);
        if (displacement(mid) < 0.0) lo = mid;
        else hi = mid;
      }
      double root = 0.5 * (lo + hi);
      if (root < kTwoPi - 1e-12 && !(out.size() == 1 && out[0] == Complex(1.0) && root < 1e-12))
        out.push_back(std::polar(1.0, root));
    }
    t0 = t1;
    g0 = g1;
  }
  return out;
}

std::string coordinate_table_csv(const CircleCoordinateTable& table) {
  std::ostringstream os;
  os << "angle,re,im,t_numerator,t_denominator\n";
  char buf[160];
  for (const auto& e : table.entries()) {
    std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%llu,%llu\n", e.angle, e.point.real(), e.point.imag(),
                  static_cast<unsigned long long>(e.numerator), static_cast<unsigned long long>(table.denominator()));
    os << buf;
  }
  return os.str();
}

}  // namespace bmodel
