#include "bmodel/straighten.hpp"

#include <set>

#include "bmodel/barycenter.hpp"
#include "bmodel/return_map.hpp"

namespace bmodel {

namespace {

std::size_t idx(int v) { return static_cast<std::size_t>(v); }

// Lexicographic successor of a mixed-radix counter; false after the last.
bool advance(std::vector<int>& digit, const std::vector<int>& radix) {
  for (std::size_t k = digit.size(); k-- > 0;) {
    if (++digit[k] < radix[k]) return true;
    digit[k] = 0;
  }
  return false;
}

}  // namespace

BlaschkeProduct BasinSystem::map_on(int sigma) const {
  const auto s = idx(sigma);
  return compose_left(post[s], compose_right(core[s], pre[s]));
}

void validate(const BasinSystem& b) {
  const std::size_t n = b.labels.size();
  if (n == 0) throw ValidationError("basin: no components");
  if (b.image.size() != n || b.core.size() != n || b.pre.size() != n || b.post.size() != n)
    throw ValidationError("basin: component arrays differ in length");
  std::set<std::string> seen;
  for (std::size_t s = 0; s < n; ++s) {
    if (!seen.insert(b.labels[s]).second) throw ValidationError("basin: duplicate label " + b.labels[s]);
    if (b.image[s] < 0 || idx(b.image[s]) >= n) throw ValidationError("basin: image of " + b.labels[s] + " out of range");
  }
}

MappingSchema derive_schema(const BasinSystem& b) {
  validate(b);
  MappingSchema s;
  s.ids = b.labels;
  s.image = b.image;
  for (int sigma = 0; sigma < b.size(); ++sigma) {
    int d = b.core[idx(sigma)].degree();
    if (d < 2) throw ValidationError("basin: component " + b.labels[idx(sigma)] + " has degree < 2");
    s.weight.push_back(d - 1);
  }
  return s;
}

BasinSystem scramble(const ModelMap& m, const std::vector<MobiusAutomorphism>& g) {
  const int n = m.schema.size();
  if (static_cast<int>(g.size()) != n) throw DomainError("scramble: one automorphism per vertex required");
  BasinSystem b;
  b.labels = m.schema.ids;
  b.image = m.schema.image;
  b.core = m.factor;
  for (int v = 0; v < n; ++v) {
    b.pre.push_back(g[idx(v)].inverse());
    b.post.push_back(g[idx(m.schema.image[idx(v)])]);
  }
  return b;
}

std::vector<Straightening> straighten(const BasinSystem& b, StraightenMode mode) {
  const MappingSchema schema = derive_schema(b);
  const int n = b.size();
  const CycleDecomposition dec = enumerate_cycles(schema);
  std::vector<BlaschkeProduct> phi;
  for (int s = 0; s < n; ++s) phi.push_back(b.map_on(s));

  // interior fixed points pushed around each cycle, then the cycle's circle
  // fixed points of the return map at its base
  std::vector<Complex> center(idx(n));
  std::vector<std::vector<Complex>> cycle_points;
  for (const auto& cyc : dec.cycles) {
    std::vector<BlaschkeProduct> chain;
    for (int v : cyc.vertices) chain.push_back(phi[idx(v)]);
    ReturnMap r(std::move(chain));
    auto p = r.attracting_fixed_point();
    if (!p)
      throw NoInteriorFixedPoint("straighten: return map of the cycle through " + b.labels[idx(cyc.vertices.front())] +
                                 " has no attracting interior fixed point");
    Complex z = *p;
    for (int v : cyc.vertices) {
      center[idx(v)] = z;
      z = phi[idx(v)](z);
    }
    auto pts = r.boundary_fixed_points();
    if (static_cast<std::int64_t>(pts.size()) != cyc.composite_degree - 1)
      throw NumericalError("straighten: return map has " + std::to_string(pts.size()) +
                           " circle fixed points, expected " + std::to_string(cyc.composite_degree - 1));
    cycle_points.push_back(std::move(pts));
  }
  for (int u : dec.tree_vertices) center[idx(u)] = conformal_barycenter(critical_points(phi[idx(u)])).point;

  std::vector<int> radix;
  for (const auto& pts : cycle_points) radix.push_back(static_cast<int>(pts.size()));
  for (int u : dec.tree_vertices) radix.push_back(schema.degree(u));

  // one normalized map per choice sequence, independent of the relabeling
  struct Normalized {
    std::vector<BlaschkeProduct> beta;
    std::vector<MobiusAutomorphism> h;
  };
  std::vector<Normalized> normalized;
  std::vector<int> digit(radix.size(), 0);
  do {
    std::vector<Complex> marked(idx(n));
    for (std::size_t ci = 0; ci < dec.cycles.size(); ++ci) {
      Complex z = cycle_points[ci][idx(digit[ci])];
      for (int v : dec.cycles[ci].vertices) {
        marked[idx(v)] = z;
        z = unit(phi[idx(v)](z));
      }
    }
    for (std::size_t ti = 0; ti < dec.tree_vertices.size(); ++ti) {
      int u = dec.tree_vertices[ti];
      auto pre = preimages(phi[idx(u)], marked[idx(schema.image[idx(u)])]);
      marked[idx(u)] = pre[idx(digit[dec.cycles.size() + ti])];
    }
    Normalized nm;
    for (int s = 0; s < n; ++s) nm.h.push_back(mobius_from_specs(center[idx(s)], marked[idx(s)]));
    for (int s = 0; s < n; ++s) {
      const auto& hf = nm.h[idx(schema.image[idx(s)])];
      BlaschkeProduct beta = compose_left(hf, compose_right(phi[idx(s)], nm.h[idx(s)].inverse()));
      // the normalization makes these exact; remove rounding drift
      std::vector<Complex> zeros = beta.zeros();
      if (dec.periodic(s)) {
        std::size_t k = 0;
        for (std::size_t j = 1; j < zeros.size(); ++j)
          if (std::abs(zeros[j]) < std::abs(zeros[k])) k = j;
        zeros[k] = Complex(0.0);
      }
      nm.beta.emplace_back(Complex(1.0), std::move(zeros));
    }
    normalized.push_back(std::move(nm));
    if (mode == StraightenMode::first) break;
  } while (advance(digit, radix));

  std::vector<Straightening> out;
  for (const auto& iota : automorphism_group(schema)) {
    for (const auto& nm : normalized) {
      Straightening st;
      st.model.schema = schema;
      st.component_of.assign(idx(n), 0);
      st.model.factor.assign(idx(n), BlaschkeProduct::power(1));
      for (int s = 0; s < n; ++s) {
        st.component_of[idx(iota[idx(s)])] = s;
        st.model.factor[idx(iota[idx(s)])] = nm.beta[idx(s)];
      }
      st.h = nm.h;
      out.push_back(std::move(st));
      if (mode == StraightenMode::first) return out;
    }
  }
  return out;
}

double conjugacy_residual(const BasinSystem& b, const Straightening& s) {
  static const Complex probes[] = {Complex(0.0), Complex(0.3, 0.2), Complex(-0.5, 0.4), Complex(0.0, -0.7),
                                   Complex(1.0), Complex(0.0, 1.0), Complex(-0.6, -0.8), Complex(0.8, -0.6)};
  double r = 0.0;
  for (int v = 0; v < s.model.schema.size(); ++v) {
    const int sigma = s.component_of[idx(v)];
    const auto phi = b.map_on(sigma);
    const auto& h = s.h[idx(sigma)];
    const auto& hf = s.h[idx(b.image[idx(sigma)])];
    for (Complex z : probes) r = std::max(r, std::abs(s.model.at(v)(z) - hf(phi(h.inverse()(z)))));
  }
  return r;
}

}  // namespace bmodel
