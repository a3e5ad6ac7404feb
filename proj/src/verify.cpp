#include "bmodel/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "bmodel/barycenter.hpp"
#include "bmodel/blaschke.hpp"
#include "bmodel/circle.hpp"
#include "bmodel/model.hpp"
#include "bmodel/normal_forms.hpp"
#include "bmodel/random.hpp"
#include "bmodel/schema.hpp"
#include "bmodel/straighten.hpp"

namespace bmodel::verify {

namespace {

using Clock = std::chrono::steady_clock;

std::size_t idx(int v) { return static_cast<std::size_t>(v); }

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

class Recorder {
 public:
  Recorder(const char* name, const Options& o) : start_(Clock::now()) {
    r_.name = name;
    r_.seed = o.seed;
  }
  void check(bool ok, const std::string& line) {
    if (!ok) r_.pass = false;
    r_.lines.push_back(std::string(ok ? "ok   " : "FAIL ") + line);
  }
  void note(const std::string& line) { r_.lines.push_back("     " + line); }
  double elapsed() const { return std::chrono::duration<double>(Clock::now() - start_).count(); }
  Report finish() {
    r_.seconds = elapsed();
    return r_;
  }

 private:
  Report r_;
  Clock::time_point start_;
};

std::vector<int> degrees(const Options& o, int lo, int hi) {
  if (o.degree > 0) return {o.degree};
  std::vector<int> out;
  for (int d = lo; d <= hi; ++d) out.push_back(d);
  return out;
}

int trials(const Options& o, int fallback) { return o.trials > 0 ? o.trials : fallback; }

std::vector<MappingSchema> schemata_up_to(int w) {
  std::vector<MappingSchema> out;
  for (int k = 1; k <= w; ++k)
    for (auto& s : enumerate_schemata(k)) out.push_back(std::move(s));
  return out;
}

std::string describe(const MappingSchema& s) {
  std::string out = "F=(";
  for (int v = 0; v < s.size(); ++v) out += (v ? "," : "") + std::to_string(s.image[idx(v)]);
  out += ") w=(";
  for (int v = 0; v < s.size(); ++v) out += (v ? "," : "") + std::to_string(s.weight[idx(v)]);
  return out + ")";
}

double min_pairwise_distance(const std::vector<Complex>& z) {
  double m = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < z.size(); ++i)
    for (std::size_t j = i + 1; j < z.size(); ++j) m = std::min(m, std::abs(z[i] - z[j]));
  return m;
}

const Complex kProbes[] = {Complex(0.1, -0.2), Complex(-0.45, 0.3), Complex(0.6, 0.55), Complex(0.0, 0.8),
                           Complex(std::cos(1.0), std::sin(1.0)), Complex(std::cos(4.0), std::sin(4.0))};

// Brute-force count of boundary markings of the center map: permutations are
// filtered directly against F and w, and circle points are drawn from the L-th
// roots of unity with L a common multiple of every marking point's order.
std::uint64_t brute_force_center_markings(const MappingSchema& s) {
  const int n = s.size();
  CycleDecomposition dec = enumerate_cycles(s);
  std::int64_t L = 1;
  for (const auto& c : dec.cycles) L *= c.composite_degree - 1;
  for (int v = 0; v < n; ++v) L *= s.degree(v);
  std::vector<int> perm(idx(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t total = 0;
  do {
    bool aut = true;
    for (int v = 0; v < n && aut; ++v)
      aut = perm[idx(s.image[idx(v)])] == s.image[idx(perm[idx(v)])] && s.weight[idx(perm[idx(v)])] == s.weight[idx(v)];
    if (!aut) continue;
    // q(v) = exp(2 pi i k_v / L) with q(v)^{d(perm v)} = q(F v)
    std::vector<std::int64_t> k(idx(n), -1);
    std::function<void(int)> rec = [&](int v) {
      if (v == n) {
        ++total;
        return;
      }
      for (std::int64_t kv = 0; kv < L; ++kv) {
        k[idx(v)] = kv;
        bool ok = true;
        for (int u = 0; u <= v && ok; ++u) {
          int fu = s.image[idx(u)];
          if (fu <= v) ok = (k[idx(u)] * s.degree(perm[idx(u)])) % L == k[idx(fu)];
        }
        if (ok) rec(v + 1);
      }
      k[idx(v)] = -1;
    };
    rec(0);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

std::uint64_t formula_order(const MappingSchema& s) {
  const int n = s.size();
  CycleDecomposition dec = enumerate_cycles(s);
  std::vector<int> perm(idx(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t aut = 0;
  do {
    bool ok = true;
    for (int v = 0; v < n && ok; ++v)
      ok = perm[idx(s.image[idx(v)])] == s.image[idx(perm[idx(v)])] && s.weight[idx(perm[idx(v)])] == s.weight[idx(v)];
    if (ok) ++aut;
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::uint64_t order = aut;
  for (const auto& c : dec.cycles) order *= static_cast<std::uint64_t>(c.composite_degree - 1);
  for (int v : dec.tree_vertices) order *= static_cast<std::uint64_t>(s.degree(v));
  return order;
}

double marking_separation(const std::vector<BoundaryMarking>& ms) {
  double sep = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < ms.size(); ++i)
    for (std::size_t j = i + 1; j < ms.size(); ++j) {
      double d = ms[i].iota == ms[j].iota ? 0.0 : 1.0;
      for (std::size_t v = 0; v < ms[i].q.size(); ++v) d = std::max(d, std::abs(ms[i].q[v] - ms[j].q[v]));
      sep = std::min(sep, d);
    }
  return sep;
}

}  // namespace

Report boundary_fixed_points(const Options& o) {
  Recorder rec("lemma31", o);
  std::mt19937_64 rng(o.seed);
  const int n = trials(o, 50);
  for (int d : degrees(o, 2, 6)) {
    int good = 0;
    double min_mult = std::numeric_limits<double>::infinity();
    double min_sep = std::numeric_limits<double>::infinity();
    double max_res = 0.0;
    for (int t = 0; t < n; ++t) {
      auto b = random_fixed_point_centered(rng, d);
      Complex c = random_unimodular(rng);
      auto rep = fixed_points(b);
      bool ok = rep.interior.has_value() && std::abs(*rep.interior) < 1e-9 && static_cast<int>(rep.boundary.size()) == d - 1;
      for (double m : rep.boundary_multipliers) {
        min_mult = std::min(min_mult, m);
        ok = ok && m > 1.0 + 1e-6;
      }
      for (Complex z : rep.boundary) max_res = std::max(max_res, std::abs(b(z) - z));
      auto sol = preimages(b, c);
      ok = ok && static_cast<int>(sol.size()) == d;
      for (Complex z : sol) {
        max_res = std::max({max_res, std::abs(std::abs(z) - 1.0), std::abs(b(z) - c)});
      }
      double sep = std::min(min_pairwise_distance(sol), min_pairwise_distance(rep.boundary));
      min_sep = std::min(min_sep, sep);
      ok = ok && sep > 1e-9;
      if (ok) ++good;
    }
    rec.check(good == n && max_res < 1e-9,
              fmt("d=%d: %d/%d maps with one interior and %d distinct boundary fixed points and %d circle "
                  "solutions of beta=c; min multiplier %.6g, min separation %.3g, max residual %.3g",
                  d, good, n, d - 1, d, min_mult, min_sep, max_res));
  }
  double secs = rec.elapsed();
  rec.check(secs < 10.0, fmt("runtime %.2fs (limit 10s)", secs));
  return rec.finish();
}

Report circle_conjugacy(const Options& o) {
  Recorder rec("circle-conjugacy", o);
  std::mt19937_64 rng(o.seed);
  const int depth = o.depth > 0 ? o.depth : 10;
  const int n = trials(o, 10);
  for (int d : o.degree > 0 ? std::vector<int>{o.degree} : std::vector<int>{2, 3}) {
    double worst = 0.0;
    std::uint64_t mismatches = 0, entries = 0;
    for (int t = 0; t < n; ++t) {
      auto b = random_fixed_point_centered(rng, d, 0.8);
      auto table = build_coordinate_table(b, depth);
      const auto& e = table.entries();
      const std::uint64_t N = table.denominator();
      for (std::uint64_t j = 0; j < N; ++j) {
        Complex image = b(e[j].point);
        std::uint64_t target = (j * static_cast<std::uint64_t>(d)) % N;
        worst = std::max(worst, std::abs(image - e[target].point));
        if (table.nearest(image) != target) ++mismatches;
        ++entries;
      }
    }
    rec.check(mismatches == 0 && worst < 1e-7,
              fmt("d=%d depth=%d: %llu entries over %d maps, index mismatches %llu, max matching residual %.3g", d,
                  depth, static_cast<unsigned long long>(entries), n, static_cast<unsigned long long>(mismatches),
                  worst));
  }
  double secs = rec.elapsed();
  rec.check(secs < 30.0, fmt("runtime %.2fs (limit 30s)", secs));
  return rec.finish();
}

Report measure(const Options& o) {
  Recorder rec("measure", o);
  std::mt19937_64 rng(o.seed);
  const int depth = o.depth > 0 ? o.depth : 12;
  std::uniform_real_distribution<double> angle(0.0, kTwoPi);
  for (int d : o.degree > 0 ? std::vector<int>{o.degree} : std::vector<int>{2, 3}) {
    auto b = random_fixed_point_centered(rng, d, 0.8);
    // total mass and additivity, in exact half-integer counts
    bool total_ok = true, additive_ok = true;
    for (int k = 1; k <= depth; ++k) {
      InvariantMeasure ell(b, k);
      auto count = [&](const ArcInterval& arc) {
        double c = 0.0;
        for (double t : ell.angles()) c += arc.weight(t);
        return c;
      };
      const double N = static_cast<double>(ell.angles().size());
      total_ok = total_ok && N == std::pow(static_cast<double>(d), k) && ell(ArcInterval::full_circle(angle(rng))) == 1.0;
      std::vector<double> cuts{angle(rng), angle(rng), angle(rng)};
      std::sort(cuts.begin(), cuts.end());
      double c0 = count(ArcInterval(cuts[0], cuts[1])), c1 = count(ArcInterval(cuts[1], cuts[2])),
             c2 = count(ArcInterval(cuts[2], cuts[0] + kTwoPi));
      additive_ok = additive_ok && c0 + c1 + c2 == N && c0 + c1 == count(ArcInterval(cuts[0], cuts[2]));
    }
    rec.check(total_ok, fmt("d=%d: l(circle) = 1 exactly at depths 1..%d", d, depth));
    rec.check(additive_ok, fmt("d=%d: preimage counts additive over adjacent arcs at depths 1..%d", d, depth));

    const double bound = 10.0 * std::pow(static_cast<double>(d), 1 - depth);
    double worst = 0.0;
    for (int t = 0; t < 3; ++t) {
      std::uniform_real_distribution<double> len(0.1, 3.0);
      auto rep = verify_balanced(b, ArcInterval::from_length(angle(rng), len(rng)), depth);
      worst = std::max(worst, rep.max_deviation);
    }
    rec.check(worst < bound, fmt("d=%d depth=%d: balanced-preimage deviation %.3g (bound %.3g)", d, depth, worst, bound));

    auto power = BlaschkeProduct::power(d);
    InvariantMeasure ell(power, depth);
    double err = 0.0;
    for (int t = 0; t < 20; ++t) {
      std::uniform_real_distribution<double> len(0.01, kTwoPi - 0.01);
      double l = len(rng);
      err = std::max(err, std::abs(ell(ArcInterval::from_length(angle(rng), l)) - l / kTwoPi));
    }
    rec.check(err < 1e-3, fmt("z^%d depth=%d: |l(I) - |I|/2pi| max %.3g", d, depth, err));
  }
  return rec.finish();
}

Report fixed_point_normal_form(const Options& o) {
  Recorder rec("lemma32", o);
  std::mt19937_64 rng(o.seed);
  const int n = trials(o, 50);
  for (int d : degrees(o, 2, 5)) {
    int good = 0;
    double worst = 0.0;
    for (int t = 0; t < n; ++t) {
      auto g = random_automorphism(rng, 0.6);
      auto phi = conjugate(random_fixed_point_centered(rng, d, 0.85), g);
      auto forms = normalize_fixed_point_centered(phi);
      bool ok = static_cast<int>(forms.size()) == d - 1;
      std::vector<Complex> roots;
      for (const auto& f : forms) {
        double r = std::max(std::abs(f.map(Complex(0.0))), std::abs(f.map(Complex(1.0)) - 1.0));
        for (Complex z : kProbes) r = std::max(r, std::abs(f.map(z) - f.h.inverse()(phi(f.h(z)))));
        worst = std::max(worst, r);
        ok = ok && r < 1e-9;
        roots.push_back(f.h(Complex(1.0)));
      }
      ok = ok && (roots.size() < 2 || min_pairwise_distance(roots) > 1e-9);
      if (ok) ++good;
    }
    rec.check(good == n, fmt("d=%d: %d/%d inputs gave exactly %d distinct fixed-point-centered forms; max residual %.3g",
                             d, good, n, d - 1, worst));
  }
  return rec.finish();
}

Report critical_normal_form(const Options& o) {
  Recorder rec("lemma33", o);
  std::mt19937_64 rng(o.seed);
  const int n = trials(o, 50);
  for (int d : degrees(o, 2, 5)) {
    int good = 0;
    double worst = 0.0;
    for (int t = 0; t < n; ++t) {
      auto phi = random_blaschke(rng, d, 0.85);
      auto forms = normalize_critically_centered(phi);
      bool ok = static_cast<int>(forms.size()) == d;
      std::vector<Complex> roots;
      for (const auto& f : forms) {
        double r = std::max(std::abs(f.map.c() - 1.0), critical_sum_residual(f.map));
        for (Complex z : kProbes) r = std::max(r, std::abs(f.map(z) - phi(f.h(z))));
        worst = std::max(worst, r);
        ok = ok && r < 1e-9;
        roots.push_back(f.h(Complex(1.0)));
      }
      ok = ok && min_pairwise_distance(roots) > 1e-9;
      if (ok) ++good;
    }
    rec.check(good == n, fmt("d=%d: %d/%d inputs gave exactly %d distinct critically centered forms; max residual %.3g",
                             d, good, n, d, worst));
  }
  return rec.finish();
}

Report barycenter(const Options& o) {
  Recorder rec("lemma34", o);
  std::mt19937_64 rng(o.seed);
  const int n = trials(o, 100);
  std::uniform_int_distribution<int> size(1, 6);
  double res = 0.0, equi = 0.0;
  for (int t = 0; t < n; ++t) {
    auto pts = random_disk_points(rng, size(rng), 0.9);
    auto g = random_automorphism(rng, 0.7);
    Barycenter p = conformal_barycenter(pts);
    std::vector<Complex> moved;
    for (Complex z : pts) moved.push_back(g(z));
    Barycenter q = conformal_barycenter(moved);
    res = std::max({res, std::abs(barycenter_residual(pts, p.point)), std::abs(barycenter_residual(moved, q.point))});
    equi = std::max(equi, std::abs(q.point - g(p.point)));
  }
  rec.check(res < 1e-10, fmt("%d configurations: max barycenter residual %.3g (bound 1e-10)", n, res));
  rec.check(equi < 1e-9, fmt("%d configurations: max equivariance error %.3g (bound 1e-9)", n, equi));

  double sym = 0.0;
  for (int t = 0; t < n; ++t) {
    std::uniform_int_distribution<int> k(2, 6);
    int m = k(rng);
    Complex z = random_disk_point(rng, 0.95);
    std::vector<Complex> pts;
    for (int j = 0; j < m; ++j) pts.push_back(z * std::polar(1.0, kTwoPi * j / m));
    if (t % 2) {
      Complex w = random_disk_point(rng, 0.95);
      pts.push_back(w);
      pts.push_back(-w);
    }
    sym = std::max(sym, std::abs(conformal_barycenter(pts).point));
  }
  rec.check(sym < 1e-10, fmt("%d symmetric configurations: max |p| %.3g (bound 1e-10)", n, sym));
  return rec.finish();
}

Report marking_count(const Options& o) {
  Recorder rec("lemma44", o);
  std::mt19937_64 rng(o.seed);
  const int members = trials(o, 10);
  for (const auto& s : schemata_up_to(3)) {
    const std::uint64_t formula = formula_order(s);
    const std::uint64_t brute = brute_force_center_markings(s);
    const std::uint64_t order = symmetry_group_order(s);
    auto center = boundary_markings(center_map(s));
    bool ok = brute == formula && order == formula && center.size() == formula;
    double res = 0.0, sep = marking_separation(center);
    for (int t = 0; t < members; ++t) {
      auto m = random_member(s, rng);
      auto ms = boundary_markings(m);
      ok = ok && ms.size() == formula;
      for (const auto& q : ms) res = std::max(res, marking_residual(m, q));
      sep = std::min(sep, marking_separation(ms));
    }
    ok = ok && res < 1e-9 && sep > 1e-6;
    rec.check(ok, fmt("%s: brute force %llu, formula %llu, |G| %llu, center %zu, %d members; max residual %.3g, "
                      "min separation %.3g",
                      describe(s).c_str(), static_cast<unsigned long long>(brute),
                      static_cast<unsigned long long>(formula), static_cast<unsigned long long>(order), center.size(),
                      members, res, sep));
  }
  double secs = rec.elapsed();
  rec.check(secs < 60.0, fmt("runtime %.2fs (limit 60s)", secs));
  return rec.finish();
}

Report center_uniqueness(const Options& o) {
  Recorder rec("center-uniqueness", o);
  std::mt19937_64 rng(o.seed);
  const int n = trials(o, 1000);
  const double tol = tolerances().pcf;
  for (const auto& s : schemata_up_to(3)) {
    bool ok = is_post_critically_finite(center_map(s)) &&
              is_post_critically_finite(sample(s, std::vector<double>(parameter_count(s), 0.0)));
    int positives = 0, violations = 0;
    auto norm = [](const std::vector<double>& p) { return std::sqrt(std::inner_product(p.begin(), p.end(), p.begin(), 0.0)); };
    auto probe = [&](const std::vector<double>& p) {
      bool pcf = is_post_critically_finite(sample(s, p));
      if (pcf) ++positives;
      if (pcf && norm(p) >= tol) ++violations;
      if (!pcf && norm(p) < tol * 1e-2) ++violations;
    };
    for (int t = 0; t < n; ++t) probe(random_parameters(s, rng));
    // near the center: far inside and well outside the tolerance ball
    for (double scale : {1e-4, 1e-6, 1e-12}) {
      for (int t = 0; t < 10; ++t) {
        auto p = random_parameters(s, rng);
        for (double& x : p) x *= scale;
        probe(p);
      }
    }
    ok = ok && violations == 0;
    rec.check(ok, fmt("%s: center PCF, %d random + 30 near-center samples, %d PCF-positive, %d violations",
                      describe(s).c_str(), n, positives, violations));
  }
  return rec.finish();
}

Report roundtrip(const Options& o) {
  Recorder rec("roundtrip", o);
  std::mt19937_64 rng(o.seed);
  const int n = trials(o, 10);
  for (const auto& s : schemata_up_to(3)) {
    const std::size_t order = symmetry_group_order(s);
    int good = 0;
    double worst = 0.0;
    for (int t = 0; t < n; ++t) {
      auto m = random_member(s, rng);
      std::vector<MobiusAutomorphism> g;
      for (int v = 0; v < s.size(); ++v) g.push_back(random_automorphism(rng, 0.7));
      auto b = scramble(m, g);
      auto outs = straighten(b);
      bool ok = outs.size() == order;
      for (const auto& st : outs) {
        double r = conjugacy_residual(b, st);
        for (const auto& mr : membership_residuals(st.model)) r = std::max({r, mr.root, mr.center});
        worst = std::max(worst, r);
        ok = ok && r < 1e-7 && conjugacy_equivalent(st.model, m, 1e-7);
      }
      if (ok) ++good;
    }
    rec.check(good == n, fmt("%s: %d/%d scrambled samples gave %zu conjugacies, all equivalent; max residual %.3g",
                             describe(s).c_str(), good, n, order, worst));
  }
  return rec.finish();
}

Report action(const Options& o) {
  Recorder rec("action", o);
  std::mt19937_64 rng(o.seed);
  const int probes = trials(o, 20);
  for (const auto& s : schemata_up_to(3)) {
    auto group = symmetry_group(s);
    std::uniform_int_distribution<std::size_t> pick(0, group.size() - 1);
    std::vector<ModelMap> probe;
    for (int i = 0; i < probes; ++i) probe.push_back(random_member(s, rng));

    double ident = 0.0, comp = 0.0;
    for (const auto& m : probe) ident = std::max(ident, map_distance(act(identity_element(s), m), m));
    for (int i = 0; i < probes; ++i) {
      const auto& m = probe[idx(i)];
      for (int t = 0; t < 5; ++t) {
        const auto& g1 = group[pick(rng)];
        const auto& g2 = group[pick(rng)];
        comp = std::max(comp, map_distance(act(g1, act(g2, m)), act(multiply(g1, g2), m)));
      }
    }
    rec.check(ident < 1e-8 && comp < 1e-8,
              fmt("%s: identity %.3g, compositionality %.3g over %d probes", describe(s).c_str(), ident, comp, probes));

    // half the set are images of the other half; those pairs and only those
    // must be equivalent
    const int half = probes / 2;
    std::vector<ModelMap> set(probe.begin(), probe.begin() + half);
    for (int i = 0; i < half; ++i) set.push_back(act(group[pick(rng)], probe[idx(i)]));
    int wrong = 0;
    for (int i = 0; i < static_cast<int>(set.size()); ++i)
      for (int j = i + 1; j < static_cast<int>(set.size()); ++j) {
        bool expect = i % half == j % half;
        if (conjugacy_equivalent(set[idx(i)], set[idx(j)], 1e-8) != expect) ++wrong;
      }
    rec.check(wrong == 0, fmt("%s: orbit partition of %zu members, %d disagreements with conjugacy_equivalent",
                              describe(s).c_str(), set.size(), wrong));

    auto kernel = kernel_N0(s, o.seed);
    std::set<SymmetryElement> k(kernel.begin(), kernel.end());
    bool sub = k.count(identity_element(s)) == 1;
    for (const auto& a : kernel) {
      sub = sub && k.count(inverse(a)) == 1;
      for (const auto& b : kernel) sub = sub && k.count(multiply(a, b)) == 1;
    }
    rec.check(sub && group.size() % kernel.size() == 0,
              fmt("%s: |N0| = %zu, |G| = %zu, subgroup %s", describe(s).c_str(), kernel.size(), group.size(),
                  sub ? "yes" : "no"));
  }
  return rec.finish();
}

Report dimension(const Options& o) {
  Recorder rec("dimension", o);
  std::mt19937_64 rng(o.seed);
  const int n = trials(o, 10);
  for (const auto& s : schemata_up_to(4)) {
    const std::size_t dim = parameter_count(s);
    bool ok = dim == 2 * static_cast<std::size_t>(s.total_weight());
    for (std::size_t bad : {dim - 1, dim + 1}) {
      try {
        sample(s, std::vector<double>(bad, 0.0));
        ok = false;
      } catch (const DomainError&) {
      }
    }
    double worst = 0.0;
    for (int t = 0; t < n; ++t) {
      auto p = random_parameters(s, rng);
      auto m = sample(s, p);
      validate_membership(m);
      auto q = parameters_of(m);
      ok = ok && q.size() == dim;
      for (std::size_t i = 0; i < std::min(p.size(), q.size()); ++i) worst = std::max(worst, std::abs(p[i] - q[i]));
    }
    ok = ok && worst < 1e-9;
    rec.check(ok, fmt("%s: dimension %zu, %d round trips, max error %.3g", describe(s).c_str(), dim, n, worst));
  }
  return rec.finish();
}

const std::vector<Suite>& suites() {
  static const std::vector<Suite> all = {
      {"lemma31", boundary_fixed_points},
      {"circle-conjugacy", circle_conjugacy},
      {"measure", measure},
      {"lemma32", fixed_point_normal_form},
      {"lemma33", critical_normal_form},
      {"lemma34", barycenter},
      {"lemma44", marking_count},
      {"center-uniqueness", center_uniqueness},
      {"roundtrip", roundtrip},
      {"action", action},
      {"dimension", dimension},
  };
  return all;
}

std::string format(const Report& r) {
  std::ostringstream out;
  out << (r.pass ? "PASS " : "FAIL ") << r.name << " seed=" << r.seed << " time=" << fmt("%.2fs", r.seconds) << "\n";
  for (const auto& l : r.lines) out << "  " << l << "\n";
  return out.str();
}

}  // namespace bmodel::verify
