// bmodel: command-line driver for the Blaschke model-space library.

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "bmodel/barycenter.hpp"
#include "bmodel/circle.hpp"
#include "bmodel/io.hpp"
#include "bmodel/model.hpp"
#include "bmodel/normal_forms.hpp"
#include "bmodel/straighten.hpp"
#include "bmodel/symmetric.hpp"
#include "bmodel/verify.hpp"

using namespace bmodel;
using io::json;

namespace {

struct Config {
  std::uint64_t seed = 1;
  std::vector<std::string> tol;
  int depth = 0;
  std::string format = "json";
  std::string out;
};

struct VerificationFailed {};

std::size_t idx(int v) { return static_cast<std::size_t>(v); }

Complex parse_complex(const std::string& text) {
  std::istringstream in(text);
  double re = 0.0, im = 0.0;
  char comma = 0;
  if (!(in >> re)) throw ValidationError("cannot parse complex number \"" + text + "\"");
  if (in >> comma) {
    if (comma != ',' || !(in >> im)) throw ValidationError("complex numbers are written re,im");
  }
  return {re, im};
}

// accepts a bare model or the {"parameters", "model"} output of model sample
ModelMap read_model(const std::string& path) {
  json j = io::read_file(path);
  if (j.is_object() && j.contains("model") && !j.contains("schema")) return io::model_from_json(j.at("model"));
  return io::model_from_json(j);
}

std::vector<Complex> points_from_json(const json& j) {
  const json& arr = j.is_object() && j.contains("points") ? j.at("points") : j;
  if (!arr.is_array()) throw ValidationError("expected an array of points or {\"points\": [...]}");
  std::vector<Complex> out;
  for (const auto& z : arr) out.push_back(io::complex_from_json(z));
  return out;
}

json complex_list(const std::vector<Complex>& zs) {
  json a = json::array();
  for (Complex z : zs) a.push_back(io::to_json(z));
  return a;
}

class Output {
 public:
  explicit Output(const Config& c) : cfg_(c) {}
  void emit(const std::string& text) {
    if (cfg_.out.empty()) {
      std::cout << text;
    } else {
      std::ofstream f(cfg_.out);
      if (!f) throw ValidationError("cannot write " + cfg_.out);
      f << text;
    }
  }
  void emit(const json& j) { emit(j.dump(2) + "\n"); }

 private:
  const Config& cfg_;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Blaschke products, circle dynamics and model spaces B(S)"};
  app.require_subcommand(1);
  app.fallthrough();
  Config cfg;
  app.add_option("--seed", cfg.seed, "seed for every random choice");
  app.add_option("--tol", cfg.tol, "tolerance override name=value (repeatable)");
  app.add_option("--depth", cfg.depth, "depth for circle tables and measures")->check(CLI::PositiveNumber);
  app.add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--out", cfg.out, "write output to this file");
  Output out(cfg);

  std::string file, file2, schema_file, element_file;
  int weight = 1;
  std::vector<std::string> zs;
  double arc_start = 0.0, arc_end = 0.0;
  bool all = false, first = false;
  verify::Options vopt;

  // schema
  auto* schema = app.add_subcommand("schema", "mapping schemata and their symmetry groups");
  schema->require_subcommand(1);
  auto* s_validate = schema->add_subcommand("validate", "check a schema file");
  s_validate->add_option("file", file)->required();
  auto* s_groups = schema->add_subcommand("groups", "orders of Aut(S), N(S), G(S), N0(S) and G(S)/N0(S)");
  s_groups->add_option("file", file)->required();
  auto* s_enum = schema->add_subcommand("enumerate", "all reduced schemata of a total weight");
  s_enum->add_option("--weight", weight)->required();

  // blaschke
  auto* bl = app.add_subcommand("blaschke", "single Blaschke products");
  bl->require_subcommand(1);
  auto* b_eval = bl->add_subcommand("eval", "evaluate at points");
  b_eval->add_option("file", file)->required();
  b_eval->add_option("--z", zs, "point re,im (repeatable)")->required();
  auto* b_fixed = bl->add_subcommand("fixed-points", "classify fixed points");
  b_fixed->add_option("file", file)->required();
  auto* b_crit = bl->add_subcommand("critical", "critical points in the disk");
  b_crit->add_option("file", file)->required();
  auto* b_fpc = bl->add_subcommand("normalize-fpc", "all fixed-point-centered conjugates");
  b_fpc->add_option("file", file)->required();
  auto* b_cc = bl->add_subcommand("normalize-cc", "all critically centered right-compositions");
  b_cc->add_option("file", file)->required();
  auto* b_bary = bl->add_subcommand("barycenter", "conformal barycenter of a point list");
  b_bary->add_option("file", file)->required();

  // circle
  auto* circ = app.add_subcommand("circle", "boundary dynamics");
  circ->require_subcommand(1);
  auto* c_table = circ->add_subcommand("table", "coordinate table of iterated preimages");
  c_table->add_option("file", file)->required();
  int base_index = 0;
  c_table->add_option("--base-index", base_index, "which boundary fixed point, counterclockwise from angle 0, is z0")
      ->check(CLI::NonNegativeNumber);
  auto* c_measure = circ->add_subcommand("measure", "invariant measure of an arc");
  c_measure->add_option("file", file)->required();
  c_measure->add_option("--start", arc_start, "arc start angle (radians)")->required();
  c_measure->add_option("--end", arc_end, "arc end angle (radians)")->required();
  auto* c_bal = circ->add_subcommand("balanced", "measure of the preimage components of an arc");
  c_bal->add_option("file", file)->required();
  c_bal->add_option("--start", arc_start)->required();
  c_bal->add_option("--end", arc_end)->required();

  // model
  auto* model = app.add_subcommand("model", "members of B(S)");
  model->require_subcommand(1);
  auto* m_center = model->add_subcommand("center", "the center map");
  m_center->add_option("--schema", schema_file)->required();
  auto* m_sample = model->add_subcommand("sample", "chart point to member");
  m_sample->add_option("--schema", schema_file)->required();
  m_sample->add_option("--params", file, "JSON array of 2w reals; random if omitted");
  auto* m_validate = model->add_subcommand("validate", "membership residuals");
  m_validate->add_option("file", file)->required();
  auto* m_markings = model->add_subcommand("markings", "all boundary markings");
  m_markings->add_option("file", file)->required();
  auto* m_pcf = model->add_subcommand("pcf", "post-critical finiteness");
  m_pcf->add_option("file", file)->required();
  auto* m_orbit = model->add_subcommand("orbit", "critical orbits");
  m_orbit->add_option("file", file)->required();
  auto* m_params = model->add_subcommand("params", "member to chart point");
  m_params->add_option("file", file)->required();
  auto* m_act = model->add_subcommand("act", "action of an element of G(S)");
  m_act->add_option("file", file)->required();
  m_act->add_option("--element", element_file, "element JSON {\"iota\", \"rotation\"}")->required();
  auto* m_equiv = model->add_subcommand("equivalent", "conformal conjugacy test");
  m_equiv->add_option("first", file)->required();
  m_equiv->add_option("second", file2)->required();

  // basin
  auto* basin = app.add_subcommand("basin", "disjoint unions of disks");
  basin->require_subcommand(1);
  auto* ba_schema = basin->add_subcommand("derive-schema", "schema of a basin system");
  ba_schema->add_option("file", file)->required();
  auto* ba_straight = basin->add_subcommand("straighten", "conjugacies onto B(S)");
  ba_straight->add_option("file", file)->required();
  auto* mode = ba_straight->add_option_group("mode");
  mode->add_flag("--all", all, "every conjugacy (default)");
  mode->add_flag("--first", first, "only the first conjugacy");
  mode->require_option(0, 1);

  // verify
  auto* ver = app.add_subcommand("verify", "property suites");
  ver->require_subcommand(1);
  for (const auto& s : verify::suites()) {
    auto* sub = ver->add_subcommand(s.name, std::string("run the ") + s.name + " suite");
    sub->add_option("--degree", vopt.degree)->check(CLI::Range(2, 12));
    sub->add_option("--trials", vopt.trials)->check(CLI::PositiveNumber);
  }
  auto* ver_all = ver->add_subcommand("all", "run every suite");

  // util
  auto* util = app.add_subcommand("util", "debugging helpers");
  util->require_subcommand(1);
  auto* sym = util->add_subcommand("sym", "symmetric-function chart");
  sym->require_subcommand(1);
  auto* sym_to = sym->add_subcommand("to-monic", "points to monic coefficients b_1..b_n");
  sym_to->add_option("--z", zs, "point re,im (repeatable)")->required();
  auto* sym_from = sym->add_subcommand("from-monic", "coefficients b_1..b_n to roots");
  sym_from->add_option("--b", zs, "coefficient re,im (repeatable)")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    Tolerances t = tolerances();
    for (const auto& kv : cfg.tol) {
      auto eq = kv.find('=');
      if (eq == std::string::npos) throw ValidationError("--tol expects name=value");
      double value = 0.0;
      try {
        value = std::stod(kv.substr(eq + 1));
      } catch (const std::logic_error&) {
        throw ValidationError("--tol: bad value in " + kv);
      }
      if (!(value > 0)) throw ValidationError("--tol: values must be positive");
      if (!t.set(kv.substr(0, eq), value)) throw ValidationError("--tol: unknown tolerance " + kv.substr(0, eq));
    }
    set_tolerances(t);
    std::mt19937_64 rng(cfg.seed);
    const int depth = cfg.depth > 0 ? cfg.depth : 8;

    if (s_validate->parsed()) {
      auto s = io::schema_from_json(io::read_file(file));
      out.emit(json{{"valid", true}, {"vertices", s.size()}, {"total_weight", s.total_weight()}});
    } else if (s_groups->parsed()) {
      auto s = io::schema_from_json(io::read_file(file));
      auto aut = automorphism_group(s).size();
      auto n = rotation_group_order(s);
      auto n0 = kernel_N0(s, cfg.seed).size();
      out.emit(json{{"aut", aut}, {"n", n}, {"g", aut * n}, {"n0", n0}, {"g_bar", aut * n / n0}});
    } else if (s_enum->parsed()) {
      json arr = json::array();
      for (const auto& s : enumerate_schemata(weight)) arr.push_back(io::to_json(s));
      out.emit(arr);
    } else if (b_eval->parsed()) {
      auto b = io::blaschke_from_json(io::read_file(file));
      std::vector<Complex> pts;
      for (const auto& z : zs) pts.push_back(parse_complex(z));
      json arr = json::array();
      for (Complex z : pts) arr.push_back({{"z", io::to_json(z)}, {"value", io::to_json(b(z))}});
      out.emit(arr);
    } else if (b_fixed->parsed()) {
      auto rep = fixed_points(io::blaschke_from_json(io::read_file(file)));
      json j{{"interior", rep.interior ? io::to_json(*rep.interior) : json(nullptr)},
             {"boundary", complex_list(rep.boundary)},
             {"multipliers", rep.boundary_multipliers},
             {"warnings", rep.warnings}};
      out.emit(j);
    } else if (b_crit->parsed()) {
      out.emit(json{{"critical_points", complex_list(critical_points(io::blaschke_from_json(io::read_file(file))))}});
    } else if (b_fpc->parsed() || b_cc->parsed()) {
      auto phi = io::blaschke_from_json(io::read_file(file));
      auto forms = b_fpc->parsed() ? normalize_fixed_point_centered(phi) : normalize_critically_centered(phi);
      json arr = json::array();
      for (const auto& f : forms) arr.push_back({{"map", io::to_json(f.map)}, {"h", io::to_json(f.h)}});
      out.emit(arr);
    } else if (b_bary->parsed()) {
      auto pts = points_from_json(io::read_file(file));
      auto p = conformal_barycenter(pts);
      out.emit(json{{"point", io::to_json(p.point)}, {"residual", p.residual}, {"iterations", p.iterations}});
    } else if (c_table->parsed()) {
      auto table = build_coordinate_table(io::blaschke_from_json(io::read_file(file)), depth, base_index);
      if (cfg.format == "json") {
        json arr = json::array();
        for (const auto& e : table.entries())
          arr.push_back({{"angle", e.angle}, {"point", io::to_json(e.point)}, {"t", {e.numerator, table.denominator()}}});
        out.emit(json{{"base", io::to_json(table.base())}, {"degree", table.degree()}, {"depth", table.depth()}, {"entries", arr}});
      } else {
        out.emit(coordinate_table_csv(table));
      }
    } else if (c_measure->parsed()) {
      auto b = io::blaschke_from_json(io::read_file(file));
      double l = invariant_measure(b, ArcInterval(arc_start, arc_end), depth);
      out.emit(json{{"measure", l}, {"depth", depth}});
    } else if (c_bal->parsed()) {
      auto b = io::blaschke_from_json(io::read_file(file));
      auto rep = verify_balanced(b, ArcInterval(arc_start, arc_end), depth);
      json comps = json::array();
      for (std::size_t i = 0; i < rep.components.size(); ++i)
        comps.push_back({{"start", rep.components[i].start()}, {"end", rep.components[i].end()},
                         {"measure", rep.component_measures[i]}});
      out.emit(json{{"measure", rep.measure}, {"components", comps}, {"max_deviation", rep.max_deviation}});
    } else if (m_center->parsed()) {
      out.emit(io::to_json(center_map(io::schema_from_json(io::read_file(schema_file)))));
    } else if (m_sample->parsed()) {
      auto s = io::schema_from_json(io::read_file(schema_file));
      std::vector<double> p;
      if (file.empty()) {
        p = random_parameters(s, rng);
      } else {
        try {
          p = io::read_file(file).get<std::vector<double>>();
        } catch (const json::exception&) {
          throw ValidationError("--params expects a JSON array of reals");
        }
      }
      out.emit(json{{"parameters", p}, {"model", io::to_json(sample(s, p))}});
    } else if (m_validate->parsed()) {
      auto m = read_model(file);
      json arr = json::array();
      for (const auto& r : membership_residuals(m))
        arr.push_back({{"vertex", m.schema.ids[idx(r.vertex)]}, {"periodic", r.periodic}, {"degree_ok", r.degree_ok},
                       {"root_residual", r.root}, {"center_residual", r.center}});
      std::string error;
      try {
        validate_membership(m);
      } catch (const MembershipError& e) {
        error = e.what();
      }
      out.emit(json{{"valid", error.empty()}, {"error", error}, {"residuals", arr}});
      if (!error.empty()) return 2;
    } else if (m_markings->parsed()) {
      auto m = read_model(file);
      validate_membership(m);
      json arr = json::array();
      for (const auto& q : boundary_markings(m)) {
        json e = io::to_json(m.schema, q);
        e["residual"] = marking_residual(m, q);
        arr.push_back(e);
      }
      out.emit(json{{"count", arr.size()}, {"group_order", symmetry_group_order(m.schema)}, {"markings", arr}});
    } else if (m_pcf->parsed()) {
      auto m = read_model(file);
      validate_membership(m);
      out.emit(json{{"post_critically_finite", is_post_critically_finite(m)}});
    } else if (m_orbit->parsed()) {
      auto m = read_model(file);
      validate_membership(m);
      json arr = json::array();
      for (const auto& o : critical_orbits(m))
        arr.push_back({{"vertex", m.schema.ids[idx(o.vertex)]}, {"critical_point", io::to_json(o.critical_point)},
                       {"converged", o.converged}, {"iterations", o.iterations}, {"distance", o.final_distance}});
      out.emit(arr);
    } else if (m_params->parsed()) {
      out.emit(json(parameters_of(read_model(file))));
    } else if (m_act->parsed()) {
      auto m = read_model(file);
      validate_membership(m);
      auto g = io::element_from_json(m.schema, io::read_file(element_file));
      out.emit(io::to_json(act(g, m)));
    } else if (m_equiv->parsed()) {
      auto a = read_model(file);
      auto b = read_model(file2);
      out.emit(json{{"equivalent", conjugacy_equivalent(a, b)}});
    } else if (ba_schema->parsed()) {
      out.emit(io::to_json(derive_schema(io::basin_from_json(io::read_file(file)))));
    } else if (ba_straight->parsed()) {
      auto b = io::basin_from_json(io::read_file(file));
      auto res = straighten(b, first ? StraightenMode::first : StraightenMode::all);
      json arr = json::array();
      for (const auto& st : res) {
        json h = json::object(), at = json::object();
        for (int s = 0; s < b.size(); ++s) h[b.labels[idx(s)]] = io::to_json(st.h[idx(s)]);
        for (int v = 0; v < st.model.schema.size(); ++v)
          at[st.model.schema.ids[idx(v)]] = b.labels[idx(st.component_of[idx(v)])];
        arr.push_back({{"model", io::to_json(st.model)}, {"component_of", at}, {"h", h},
                       {"residual", conjugacy_residual(b, st)}});
      }
      out.emit(json{{"count", res.size()}, {"conjugacies", arr}});
    } else if (ver->parsed()) {
      vopt.seed = cfg.seed;
      vopt.depth = cfg.depth;
      bool pass = true;
      std::string text;
      json arr = json::array();
      for (const auto& s : verify::suites()) {
        auto* sub = ver->get_subcommand(s.name);
        if (!ver_all->parsed() && !sub->parsed()) continue;
        auto r = s.run(vopt);
        pass = pass && r.pass;
        text += verify::format(r);
        arr.push_back({{"suite", r.name}, {"pass", r.pass}, {"seed", r.seed}, {"lines", r.lines}});
      }
      if (cfg.format == "json")
        out.emit(json{{"seed", cfg.seed}, {"pass", pass}, {"suites", arr}});
      else
        out.emit("seed " + std::to_string(cfg.seed) + "\n" + text);
      if (!pass) return 2;
    } else if (sym_to->parsed()) {
      std::vector<Complex> pts;
      for (const auto& z : zs) pts.push_back(parse_complex(z));
      out.emit(json{{"coefficients", complex_list(to_monic(pts))}});
    } else if (sym_from->parsed()) {
      std::vector<Complex> b;
      for (const auto& z : zs) b.push_back(parse_complex(z));
      out.emit(json{{"roots", complex_list(from_monic(b))}});
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
