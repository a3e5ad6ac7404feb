#pragma once

#include <string>

#include "json.hpp"

#include "bmodel/blaschke.hpp"
#include "bmodel/mobius.hpp"
#include "bmodel/model.hpp"
#include "bmodel/schema.hpp"
#include "bmodel/straighten.hpp"

// JSON formats:
//   complex   [re, im]
//   mobius    {"a": complex, "rotation": complex}
//   blaschke  {"c": complex, "zeros": [complex, ...]}
//   schema    {"vertices": [{"id": str, "weight": int, "image": str}, ...]}
//   model     {"schema": schema, "factors": {id: blaschke, ...}}
//   basin     {"components": [{"label": str, "image": str}, ...],
//              "factors": {label: {"c", "zeros", "pre"?: mobius, "post"?: mobius}}}
//   element   {"iota": {id: id}, "rotation": {id: "p/q"}}
// Malformed input raises ValidationError.

namespace bmodel::io {

using json = nlohmann::ordered_json;

json to_json(Complex z);
Complex complex_from_json(const json& j);

json to_json(const MobiusAutomorphism& m);
MobiusAutomorphism mobius_from_json(const json& j);

json to_json(const BlaschkeProduct& b);
BlaschkeProduct blaschke_from_json(const json& j);

json to_json(const MappingSchema& s);
MappingSchema schema_from_json(const json& j);

json to_json(const ModelMap& m);
ModelMap model_from_json(const json& j);

json to_json(const BasinSystem& b);
BasinSystem basin_from_json(const json& j);

json to_json(const MappingSchema& s, const SymmetryElement& g);
SymmetryElement element_from_json(const MappingSchema& s, const json& j);

json to_json(const MappingSchema& s, const BoundaryMarking& q);

json read_file(const std::string& path);

}  // namespace bmodel::io
