#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "regge/assembly.hpp"

namespace regge {

/// Expected cohomology dimensions, from the simplicial Betti oracle only.
std::array<int, 4> expected_cohomology(ComplexId id, const SimplicialComplex3& mesh);

struct CheckResult {
  std::string name;
  std::string anchor;        // short statement of what is being checked
  nlohmann::json expected;
  nlohmann::json computed;
  bool pass = false;
  bool informational = false;  // reported, never fails the suite
  double seconds = 0;          // text report only
};

struct VerdictReport {
  std::string mesh;
  std::uint64_t seed = 0;
  std::vector<CheckResult> checks;

  /// True when every non-informational check passed.
  bool pass() const;
  /// Deterministic: no timings, stable key order.
  nlohmann::json to_json() const;
  void write_text(std::ostream& out) const;
};

/// Names accepted by run_checks, in execution order.
const std::vector<std::string>& check_names();

/// Runs the named checks (all of them when `names` is empty). A name may
/// also be a prefix group such as "cohomology" or "commutes". Throws
/// InvalidParams for a name matching nothing.
VerdictReport run_checks(const SimplicialComplex3& mesh, const std::string& mesh_name, std::uint64_t seed,
                         const std::vector<std::string>& names = {});

inline VerdictReport run_all(const SimplicialComplex3& mesh, const std::string& mesh_name, std::uint64_t seed) {
  return run_checks(mesh, mesh_name, seed);
}

}  // namespace regge
