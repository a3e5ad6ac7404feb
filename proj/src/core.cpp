#include "bmodel/core.hpp"

namespace bmodel {

namespace {
Tolerances g_tolerances;
}

const Tolerances& tolerances() { return g_tolerances; }

void set_tolerances(const Tolerances& t) { g_tolerances = t; }

bool Tolerances::set(const std::string& name, double value) {
  if (!(value > 0) || !std::isfinite(value)) return false;
  if (name == "boundary") boundary = value;
  else if (name == "eval") eval = value;
  else if (name == "unimodular") unimodular = value;
  else if (name == "singular") singular = value;
  else if (name == "barycenter") barycenter = value;
  else if (name == "multiplicity") multiplicity = value;
  else if (name == "circle_snap") circle_snap = value;
  else if (name == "conj") conj = value;
  else if (name == "pcf") pcf = value;
  else if (name == "chart") chart = value;
  else return false;
  return true;
}

}  // namespace bmodel
