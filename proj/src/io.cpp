#include "bmodel/io.hpp"

#include <algorithm>
#include <fstream>

namespace bmodel::io {

namespace {

std::size_t idx(int v) { return static_cast<std::size_t>(v); }

const json& field(const json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) throw ValidationError(std::string("json: missing field \"") + name + "\"");
  return j.at(name);
}

template <class T>
T get(const json& j, const char* what) {
  try {
    return j.get<T>();
  } catch (const json::exception&) {
    throw ValidationError(std::string("json: bad value for ") + what);
  }
}

int vertex(const MappingSchema& s, const std::string& id) {
  int v = s.index_of(id);
  if (v < 0) throw ValidationError("json: unknown vertex " + id);
  return v;
}

}  // namespace

json to_json(Complex z) { return json::array({z.real(), z.imag()}); }

Complex complex_from_json(const json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw ValidationError("json: complex numbers are [re, im]");
  return {j[0].get<double>(), j[1].get<double>()};
}

json to_json(const MobiusAutomorphism& m) { return {{"a", to_json(m.a())}, {"rotation", to_json(m.rotation())}}; }

MobiusAutomorphism mobius_from_json(const json& j) {
  Complex rot = j.is_object() && j.contains("rotation") ? complex_from_json(j.at("rotation")) : Complex(1.0);
  return MobiusAutomorphism(complex_from_json(field(j, "a")), rot);
}

json to_json(const BlaschkeProduct& b) {
  json zeros = json::array();
  for (Complex a : b.zeros()) zeros.push_back(to_json(a));
  return {{"c", to_json(b.c())}, {"zeros", zeros}};
}

BlaschkeProduct blaschke_from_json(const json& j) {
  Complex c = complex_from_json(field(j, "c"));
  const json& zs = field(j, "zeros");
  if (!zs.is_array()) throw ValidationError("json: zeros must be an array");
  std::vector<Complex> zeros;
  for (const auto& z : zs) zeros.push_back(complex_from_json(z));
  return BlaschkeProduct(c, std::move(zeros));
}

json to_json(const MappingSchema& s) {
  json vs = json::array();
  for (int v = 0; v < s.size(); ++v)
    vs.push_back({{"id", s.ids[idx(v)]}, {"weight", s.weight[idx(v)]}, {"image", s.ids[idx(s.image[idx(v)])]}});
  return {{"vertices", vs}};
}

MappingSchema schema_from_json(const json& j) {
  const json& vs = field(j, "vertices");
  if (!vs.is_array()) throw ValidationError("json: vertices must be an array");
  MappingSchema s;
  std::vector<std::string> images;
  for (const auto& v : vs) {
    s.ids.push_back(get<std::string>(field(v, "id"), "id"));
    s.weight.push_back(get<int>(field(v, "weight"), "weight"));
    images.push_back(get<std::string>(field(v, "image"), "image"));
  }
  for (const auto& id : images) {
    int k = -1;
    for (int v = 0; v < static_cast<int>(s.ids.size()); ++v)
      if (s.ids[idx(v)] == id) k = v;
    if (k < 0) throw ValidationError("json: image " + id + " is not a vertex");
    s.image.push_back(k);
  }
  validate(s);
  return s;
}

json to_json(const ModelMap& m) {
  json f = json::object();
  for (int v = 0; v < m.schema.size(); ++v) f[m.schema.ids[idx(v)]] = to_json(m.at(v));
  return {{"schema", to_json(m.schema)}, {"factors", f}};
}

ModelMap model_from_json(const json& j) {
  ModelMap m{schema_from_json(field(j, "schema")), {}};
  const json& f = field(j, "factors");
  for (const auto& id : m.schema.ids) m.factor.push_back(blaschke_from_json(field(f, id.c_str())));
  return m;
}

json to_json(const BasinSystem& b) {
  json comps = json::array();
  json f = json::object();
  for (int s = 0; s < b.size(); ++s) {
    comps.push_back({{"label", b.labels[idx(s)]}, {"image", b.labels[idx(b.image[idx(s)])]}});
    json e = to_json(b.core[idx(s)]);
    e["pre"] = to_json(b.pre[idx(s)]);
    e["post"] = to_json(b.post[idx(s)]);
    f[b.labels[idx(s)]] = e;
  }
  return {{"components", comps}, {"factors", f}};
}

BasinSystem basin_from_json(const json& j) {
  const json& comps = field(j, "components");
  if (!comps.is_array()) throw ValidationError("json: components must be an array");
  BasinSystem b;
  std::vector<std::string> images;
  for (const auto& c : comps) {
    b.labels.push_back(get<std::string>(field(c, "label"), "label"));
    images.push_back(get<std::string>(field(c, "image"), "image"));
  }
  for (const auto& id : images) {
    auto it = std::find(b.labels.begin(), b.labels.end(), id);
    if (it == b.labels.end()) throw ValidationError("json: image " + id + " is not a component");
    b.image.push_back(static_cast<int>(it - b.labels.begin()));
  }
  const json& f = field(j, "factors");
  for (const auto& l : b.labels) {
    const json& e = field(f, l.c_str());
    b.core.push_back(blaschke_from_json(e));
    b.pre.push_back(e.contains("pre") ? mobius_from_json(e.at("pre")) : MobiusAutomorphism());
    b.post.push_back(e.contains("post") ? mobius_from_json(e.at("post")) : MobiusAutomorphism());
  }
  validate(b);
  return b;
}

json to_json(const MappingSchema& s, const SymmetryElement& g) {
  json iota = json::object(), rot = json::object();
  for (int v = 0; v < s.size(); ++v) {
    iota[s.ids[idx(v)]] = s.ids[idx(g.iota[idx(v)])];
    rot[s.ids[idx(v)]] = to_string(g.rotation.angle[idx(v)]);
  }
  return {{"iota", iota}, {"rotation", rot}};
}

SymmetryElement element_from_json(const MappingSchema& s, const json& j) {
  SymmetryElement g = identity_element(s);
  if (j.contains("iota")) {
    const json& iota = j.at("iota");
    for (int v = 0; v < s.size(); ++v)
      if (iota.contains(s.ids[idx(v)])) g.iota[idx(v)] = vertex(s, get<std::string>(iota.at(s.ids[idx(v)]), "iota"));
  }
  if (j.contains("rotation")) {
    const json& rot = j.at("rotation");
    for (int v = 0; v < s.size(); ++v) {
      if (!rot.contains(s.ids[idx(v)])) continue;
      std::string text = get<std::string>(rot.at(s.ids[idx(v)]), "rotation");
      auto slash = text.find('/');
      try {
        std::int64_t p = std::stoll(text.substr(0, slash));
        std::int64_t q = slash == std::string::npos ? 1 : std::stoll(text.substr(slash + 1));
        if (q <= 0) throw ValidationError("json: rotation denominators must be positive");
        g.rotation.angle[idx(v)] = Angle::make(p, q);
      } catch (const std::logic_error&) {
        throw ValidationError("json: rotation angles are \"p/q\" strings");
      }
    }
  }
  if (!is_symmetry_element(s, g)) throw ValidationError("json: element is not in G(S)");
  return g;
}

json to_json(const MappingSchema& s, const BoundaryMarking& q) {
  json pts = json::object();
  for (int v = 0; v < s.size(); ++v) pts[s.ids[idx(v)]] = to_json(q.q[idx(v)]);
  json e = to_json(s, q.label);
  return {{"label", e}, {"q", pts}};
}

json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ValidationError(path + ": " + e.what());
  }
}

}  // namespace bmodel::io
