#include "bmodel/model.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "bmodel/normal_forms.hpp"
#include "bmodel/return_map.hpp"
#include "bmodel/symmetric.hpp"

namespace bmodel {

namespace {

std::size_t idx(int v) { return static_cast<std::size_t>(v); }

}  // namespace

ModelMap center_map(const MappingSchema& s) {
  validate(s);
  ModelMap m{s, {}};
  for (int v = 0; v < s.size(); ++v) m.factor.push_back(BlaschkeProduct::power(s.degree(v)));
  return m;
}

std::vector<MembershipResidual> membership_residuals(const ModelMap& m) {
  validate(m.schema);
  if (m.factor.size() != idx(m.schema.size())) throw MembershipError("membership: factor count differs from vertex count");
  CycleDecomposition dec = enumerate_cycles(m.schema);
  std::vector<MembershipResidual> out;
  for (int v = 0; v < m.schema.size(); ++v) {
    const auto& f = m.at(v);
    MembershipResidual r{v, std::abs(f.c() - 1.0), 0.0, dec.periodic(v), f.degree() == m.schema.degree(v)};
    if (r.periodic) {
      r.center = std::abs(f(Complex(0.0)));
    } else if (r.degree_ok) {
      auto crit = critical_points(f);
      r.center = std::abs(std::accumulate(crit.begin(), crit.end(), Complex(0.0)));
    }
    out.push_back(r);
  }
  return out;
}

void validate_membership(const ModelMap& m) {
  const auto& tol = tolerances();
  for (const auto& r : membership_residuals(m)) {
    const std::string& id = m.schema.ids[idx(r.vertex)];
    if (!r.degree_ok) throw MembershipError("membership: degree of factor at vertex " + id + " differs from d(v)");
    if (r.root > tol.eval) throw MembershipError("membership: factor at vertex " + id + " is not boundary-rooted");
    if (r.periodic && r.center > tol.eval)
      throw MembershipError("membership: factor at periodic vertex " + id + " does not fix 0");
    if (!r.periodic && r.center > tol.barycenter)
      throw MembershipError("membership: factor at non-periodic vertex " + id + " is not critically centered");
  }
}

ModelMap sample(const MappingSchema& s, const std::vector<double>& parameters) {
  validate(s);
  if (parameters.size() != parameter_count(s))
    throw DomainError("sample: expected " + std::to_string(parameter_count(s)) + " parameters, got " +
                      std::to_string(parameters.size()));
  CycleDecomposition dec = enumerate_cycles(s);
  ModelMap m{s, {}};
  std::size_t pos = 0;
  for (int v = 0; v < s.size(); ++v) {
    const int w = s.weight[idx(v)];
    std::vector<Complex> free;
    for (int j = 0; j < w; ++j, pos += 2) free.emplace_back(parameters[pos], parameters[pos + 1]);
    for (Complex a : free) {
      require_finite(a, "sample");
      if (std::abs(a) >= 1.0) throw DomainError("sample: parameter zero outside the disk at vertex " + s.ids[idx(v)]);
    }
    if (dec.periodic(v)) {
      std::vector<Complex> zeros{Complex(0.0)};
      zeros.insert(zeros.end(), free.begin(), free.end());
      m.factor.emplace_back(Complex(1.0), std::move(zeros));
    } else {
      Complex sum = std::accumulate(free.begin(), free.end(), Complex(0.0));
      if (std::abs(sum) >= 1.0) throw DomainError("sample: balancing zero outside the disk at vertex " + s.ids[idx(v)]);
      free.push_back(-sum);
      m.factor.push_back(zero_sum_to_critically_centered(BlaschkeProduct(Complex(1.0), free)).map);
    }
  }
  return m;
}

std::vector<double> parameters_of(const ModelMap& m) {
  validate(m.schema);
  CycleDecomposition dec = enumerate_cycles(m.schema);
  std::vector<double> out;
  out.reserve(parameter_count(m.schema));
  for (int v = 0; v < m.schema.size(); ++v) {
    const int w = m.schema.weight[idx(v)];
    std::vector<Complex> zeros;
    if (dec.periodic(v)) {
      zeros = m.at(v).zeros();
      std::size_t k = 0;
      for (std::size_t j = 1; j < zeros.size(); ++j)
        if (std::abs(zeros[j]) < std::abs(zeros[k])) k = j;
      zeros.erase(zeros.begin() + static_cast<std::ptrdiff_t>(k));
    } else {
      zeros = critically_centered_to_zero_sum(m.at(v)).map.zeros();
      zeros.resize(idx(w));
    }
    if (static_cast<int>(zeros.size()) != w) throw DomainError("parameters_of: factor degree differs from d(v)");
    for (Complex a : zeros) {
      out.push_back(a.real());
      out.push_back(a.imag());
    }
  }
  return out;
}

std::vector<double> random_parameters(const MappingSchema& s, std::mt19937_64& rng, double radius) {
  CycleDecomposition dec = enumerate_cycles(s);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<double> out;
  for (int v = 0; v < s.size(); ++v) {
    const int w = s.weight[idx(v)];
    const double r = dec.periodic(v) ? radius : radius / std::max(1, w);
    for (int j = 0; j < w; ++j) {
      double rho = r * std::sqrt(u(rng));
      double t = kTwoPi * u(rng);
      out.push_back(rho * std::cos(t));
      out.push_back(rho * std::sin(t));
    }
  }
  return out;
}

ModelMap random_member(const MappingSchema& s, std::mt19937_64& rng, double radius) {
  return sample(s, random_parameters(s, rng, radius));
}

bool is_post_critically_finite(const ModelMap& m) {
  const double tol = tolerances().pcf;
  for (const auto& f : m.factor)
    for (Complex a : f.zeros())
      if (std::abs(a) > tol) return false;
  return true;
}

std::vector<CriticalOrbit> critical_orbits(const ModelMap& m, double threshold, int max_iterations) {
  CycleDecomposition dec = enumerate_cycles(m.schema);
  std::vector<CriticalOrbit> out;
  for (int v = 0; v < m.schema.size(); ++v) {
    if (m.schema.degree(v) < 2) continue;
    for (Complex c : critical_points(m.at(v))) {
      CriticalOrbit o{v, c, 0, 0.0, false};
      int u = v;
      Complex z = c;
      for (int it = 0; it <= max_iterations; ++it) {
        if (dec.periodic(u) && std::abs(z) < threshold) {
          o.iterations = it;
          o.converged = true;
          break;
        }
        if (it == max_iterations) {
          o.iterations = it;
          break;
        }
        z = m.at(u)(z);
        u = m.schema.image[idx(u)];
      }
      o.final_distance = dec.periodic(u) ? std::abs(z) : 1.0;
      out.push_back(o);
    }
  }
  return out;
}

MarkingSolver::MarkingSolver(const ModelMap& m) : m_(m), dec_(enumerate_cycles(m.schema)) {
  for (const auto& cyc : dec_.cycles) {
    std::vector<BlaschkeProduct> chain;
    for (int v : cyc.vertices) chain.push_back(m_.at(v));
    ReturnMap r(std::move(chain));
    auto pts = r.boundary_fixed_points();
    if (static_cast<std::int64_t>(pts.size()) != cyc.composite_degree - 1)
      throw NumericalError("boundary_markings: return map has " + std::to_string(pts.size()) +
                           " circle fixed points, expected " + std::to_string(cyc.composite_degree - 1));
    fixed_.push_back(std::move(pts));
  }
}

std::vector<Complex> MarkingSolver::points(const RotationElement& theta) const {
  const auto& s = m_.schema;
  std::vector<Complex> p(idx(s.size()));
  for (std::size_t ci = 0; ci < dec_.cycles.size(); ++ci) {
    const auto& cyc = dec_.cycles[ci];
    const Angle& a = theta.angle[idx(cyc.vertices.front())];
    const std::int64_t j = a.num * (cyc.composite_degree - 1) / a.den;
    Complex z = fixed_[ci][static_cast<std::size_t>(j)];
    for (int v : cyc.vertices) {
      p[idx(v)] = z;
      z = unit(m_.at(v)(z));
    }
  }
  for (int u : dec_.tree_vertices) {
    const Angle& a = theta.angle[idx(u)];
    const std::int64_t k = a.num * s.degree(u) / a.den;
    auto pre = preimages(m_.at(u), p[idx(s.image[idx(u)])]);
    p[idx(u)] = pre[static_cast<std::size_t>(k)];
  }
  return p;
}

BoundaryMarking MarkingSolver::marking(const SymmetryElement& g) const {
  auto p = points(g.rotation);
  BoundaryMarking q{g, g.iota, std::vector<Complex>(p.size())};
  for (std::size_t v = 0; v < p.size(); ++v) q.q[v] = p[idx(g.iota[v])];
  return q;
}

std::vector<BoundaryMarking> MarkingSolver::all() const {
  std::vector<BoundaryMarking> out;
  auto rot = rotation_group(m_.schema);
  std::vector<std::vector<Complex>> pts;
  for (const auto& r : rot) pts.push_back(points(r));
  for (const auto& iota : automorphism_group(m_.schema)) {
    for (std::size_t k = 0; k < rot.size(); ++k) {
      BoundaryMarking q{{iota, rot[k]}, iota, std::vector<Complex>(iota.size())};
      for (std::size_t v = 0; v < iota.size(); ++v) q.q[v] = pts[k][idx(iota[v])];
      out.push_back(std::move(q));
    }
  }
  return out;
}

std::vector<BoundaryMarking> boundary_markings(const ModelMap& m) { return MarkingSolver(m).all(); }

BoundaryMarking marking_for(const ModelMap& m, const SymmetryElement& g) {
  if (!is_symmetry_element(m.schema, g)) throw DomainError("marking_for: not an element of G(S)");
  return MarkingSolver(m).marking(g);
}

double marking_residual(const ModelMap& m, const BoundaryMarking& q) {
  double r = 0.0;
  for (int v = 0; v < m.schema.size(); ++v) {
    Complex lhs = m.at(q.iota[idx(v)])(q.q[idx(v)]);
    r = std::max(r, std::abs(lhs - q.q[idx(m.schema.image[idx(v)])]));
  }
  return r;
}

ModelMap conjugate_by_marking(const ModelMap& m, const BoundaryMarking& q) {
  ModelMap out{m.schema, {}};
  for (int v = 0; v < m.schema.size(); ++v) {
    const auto& f = m.at(q.iota[idx(v)]);
    const Complex qv = q.q[idx(v)];
    const Complex qf = q.q[idx(m.schema.image[idx(v)])];
    std::vector<Complex> zeros;
    zeros.reserve(f.zeros().size());
    for (Complex a : f.zeros()) zeros.push_back(std::conj(qv) * a);
    Complex c = unit(std::conj(qf) * f(qv));
    out.factor.emplace_back(c, std::move(zeros));
  }
  return out;
}

ModelMap act(const SymmetryElement& g, const ModelMap& m) {
  if (!is_symmetry_element(m.schema, g)) throw DomainError("act: not an element of G(S)");
  ModelMap out = conjugate_by_marking(m, MarkingSolver(m).marking(inverse(g)));
  const auto& tol = tolerances();
  for (const auto& r : membership_residuals(out)) {
    if (r.root > tol.eval || (r.periodic && r.center > tol.eval))
      throw MembershipError("act: conjugate left B(S) at vertex " + out.schema.ids[idx(r.vertex)]);
  }
  return out;
}

double map_distance(const ModelMap& a, const ModelMap& b) {
  if (a.factor.size() != b.factor.size()) return std::numeric_limits<double>::infinity();
  double d = 0.0;
  for (std::size_t v = 0; v < a.factor.size(); ++v) {
    if (a.factor[v].degree() != b.factor[v].degree()) return std::numeric_limits<double>::infinity();
    d = std::max(d, std::abs(a.factor[v].c() - b.factor[v].c()));
    d = std::max(d, monic_distance(a.factor[v].zeros(), b.factor[v].zeros()));
  }
  return d;
}

bool same_map(const ModelMap& a, const ModelMap& b, double tol) {
  return a.schema.image == b.schema.image && a.schema.weight == b.schema.weight && map_distance(a, b) <= tol;
}

std::vector<SymmetryElement> kernel_N0(const MappingSchema& s, std::uint64_t seed, int probes) {
  std::mt19937_64 rng(seed);
  std::vector<ModelMap> probe;
  std::vector<MarkingSolver> solvers;
  for (int i = 0; i < probes; ++i) probe.push_back(random_member(s, rng));
  for (const auto& m : probe) solvers.emplace_back(m);
  const double tol = tolerances().eval;
  std::vector<SymmetryElement> out;
  for (const auto& g : symmetry_group(s)) {
    SymmetryElement ginv = inverse(g);
    bool trivial = true;
    for (std::size_t i = 0; i < probe.size() && trivial; ++i)
      trivial = same_map(conjugate_by_marking(probe[i], solvers[i].marking(ginv)), probe[i], tol);
    if (trivial) out.push_back(g);
  }
  return out;
}

std::uint64_t effective_group_order(const MappingSchema& s, std::uint64_t seed) {
  return symmetry_group_order(s) / kernel_N0(s, seed).size();
}

bool conjugacy_equivalent(const ModelMap& m1, const ModelMap& m2, std::optional<double> tol) {
  if (m1.schema.image != m2.schema.image || m1.schema.weight != m2.schema.weight) return false;
  const double t = tol.value_or(tolerances().eval);
  for (const auto& q : MarkingSolver(m1).all())
    if (same_map(conjugate_by_marking(m1, q), m2, t)) return true;
  return false;
}

}  // namespace bmodel
