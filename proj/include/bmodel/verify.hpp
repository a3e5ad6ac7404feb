#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace bmodel::verify {

struct Options {
  std::uint64_t seed = 1;
  int trials = 0;   // 0: suite default
  int degree = 0;   // 0: all degrees of the suite
  int depth = 0;    // 0: suite default
};

struct Report {
  std::string name;
  bool pass = true;
  std::uint64_t seed = 0;
  double seconds = 0.0;
  std::vector<std::string> lines;
};

Report boundary_fixed_points(const Options& o);   // fixed points of fixed-point-centered maps
Report circle_conjugacy(const Options& o);        // coordinate tables, t(beta z) = d t(z)
Report measure(const Options& o);                 // invariant measure
Report fixed_point_normal_form(const Options& o); // fixed-point-centered normal forms
Report critical_normal_form(const Options& o);    // critically centered normal forms
Report barycenter(const Options& o);              // conformal barycenter
Report marking_count(const Options& o);           // marking counts against |G(S)|
Report center_uniqueness(const Options& o);       // post-critical finiteness
Report roundtrip(const Options& o);               // straightening of scrambled members
Report action(const Options& o);                  // G(S) action axioms and kernel
Report dimension(const Options& o);               // chart dimension and round trip

struct Suite {
  const char* name;
  Report (*run)(const Options&);
};
const std::vector<Suite>& suites();

std::string format(const Report& r);

}  // namespace bmodel::verify
