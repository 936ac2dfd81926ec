#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "foliage/json_io.hpp"

namespace foliage {

/// Outcome of one suite on one surface. Every failed check carries a
/// counterexample; `reported` counts documented deviations that are not
/// failures.
struct SuiteReport {
  std::string suite;
  SurfaceType surface;
  Json parameters = Json::object();
  long long passed = 0;
  long long failed = 0;
  long long reported = 0;
  Json counterexamples = Json::array();
  Json findings = Json::array();
  double wall_seconds = 0;

  bool ok() const { return failed == 0; }

  /// Counts one check; the payload is only built on failure.
  void check(bool ok, const std::function<Json()>& counterexample);
  void report(Json finding);
  Json to_json() const;
};

struct SuiteOptions {
  std::optional<SurfaceType> surface;
  std::optional<int> depth;
  /// Runs only this convention where a suite covers both.
  std::optional<BoundaryParallel> convention;
  int word_length = 4;  // faithfulness
  Execution execution = Execution::parallel;
};

/// Suites in dependency order.
const std::vector<std::string>& suite_names();

/// Surfaces a suite covers when none is given.
std::vector<SurfaceType> default_surfaces(const std::string& suite);

/// Word-length bound of the curve universe a suite uses by default.
int default_depth(const std::string& suite, SurfaceType s);

/// Runs one suite on one surface. Throws Parse for an unknown suite.
SuiteReport run_suite(const std::string& suite, SurfaceType s, const SuiteOptions& options);

/// Runs a suite on the given surface, or on each default surface.
std::vector<SuiteReport> run_suites(const std::string& suite, const SuiteOptions& options);

/// The relations checked by the braid suite, as (name, lhs, rhs).
struct Relation {
  std::string name;
  MappingClass lhs, rhs;
};
std::vector<Relation> generator_relations(SurfaceType s);

}  // namespace foliage
