// Prints one pass/fail line per acceptance criterion; exits 1 on any failure.
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "foliage/error.hpp"
#include "foliage/intersection.hpp"
#include "foliage/verify.hpp"

using namespace foliage;

namespace {

constexpr SurfaceType S05{0, 5};

struct Outcome {
  bool ok = false;
  std::string detail;
};

bool suites_ok(const std::string& suite, const SuiteOptions& options, std::string& detail) {
  bool ok = true;
  for (const auto& r : run_suites(suite, options)) {
    ok = ok && r.ok();
    detail += "S(" + std::to_string(r.surface.genus) + "," + std::to_string(r.surface.punctures) + ") " +
              std::to_string(r.passed) + " passed " + std::to_string(r.failed) + " failed " +
              std::to_string(r.reported) + " reported; ";
  }
  return ok;
}

Outcome intersection_cross_validation() {
  const auto start = std::chrono::steady_clock::now();
  const auto& u = standard_universe(S05, 5);
  const auto geometric = intersection_matrix(u.curves, IntersectionAlgorithm::geometric);
  const auto oracle = intersection_matrix(u.curves, IntersectionAlgorithm::oracle);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  long long mismatches = 0;
  for (std::size_t i = 0; i < geometric.size(); ++i) mismatches += geometric[i] != oracle[i];
  return {mismatches == 0 && secs < 60,
          std::to_string(u.size()) + " curves, " + std::to_string(mismatches) + " mismatches, " +
              std::to_string(secs) + " s"};
}

Outcome spot_values() {
  const auto a12 = named_curve(S05, "a12"), a23 = named_curve(S05, "a23"), a34 = named_curve(S05, "a34");
  const auto twisted = apply(parse_word(S05, "s2 s2"), a12);
  bool ok = true;
  std::string detail;
  for (const auto& [a, b, want] : {std::tuple{a12, a23, 2LL}, std::tuple{a12, a34, 0LL}, std::tuple{twisted, a12, 4LL}}) {
    const long long g = geometric_intersection(a, b), o = oracle_intersection(a, b);
    ok = ok && g == want && o == want;
    detail += std::to_string(g) + "/" + std::to_string(o) + " ";
  }
  return {ok, "geometric/oracle: " + detail};
}

Outcome suite(const std::string& name, SuiteOptions options = {}) {
  std::string detail;
  const bool ok = suites_ok(name, options, detail);
  return {ok, detail};
}

Outcome generator_relations_on_s05() {
  SuiteOptions options;
  options.surface = S05;
  options.depth = 5;
  return suite("braid", options);
}

Outcome prop34() {
  SuiteOptions forbidden;
  forbidden.convention = BoundaryParallel::forbidden;
  std::string detail = "forbidden: ";
  bool ok = suites_ok("prop34", forbidden, detail);
  SuiteOptions allowed;
  allowed.convention = BoundaryParallel::allowed;
  allowed.surface = S05;
  const auto r = run_suite("prop34", S05, allowed);
  ok = ok && r.ok() && r.reported > 0;
  detail += "allowed: " + std::to_string(r.reported) + " minimal classes reported at the annular maximum";
  return {ok, detail};
}

Outcome curve_complex_structure() {
  const auto& u = standard_universe(S05, 5);
  const auto g = build_graph(u);
  const int omega = clique_number(g);
  const long long triangles = k_simplex_count(g, 2);
  bool simplicial = check_simplicial(reflection(S05), g);
  for (const auto& mc : generators(S05)) simplicial = simplicial && check_simplicial(mc, g);
  long long systems = 0;
  for (int i = 0; i < u.size(); ++i)
    for (int j = i + 1; j < u.size(); ++j) {
      try {
        const auto cs = curve_system_from(u.curves[i] + u.curves[j]);
        systems += cs.size() == 2 && cs.contains(u.curves[i]) && cs.contains(u.curves[j]);
      } catch (const Error&) {
      }
    }
  const long long edges = k_simplex_count(g, 1);
  return {omega == 2 && triangles == 0 && simplicial && edges == systems,
          std::to_string(u.size()) + " vertices, clique " + std::to_string(omega) + ", triangles " +
              std::to_string(triangles) + ", edges " + std::to_string(edges) + " vs 2-systems " +
              std::to_string(systems)};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"intersection cross-validation", intersection_cross_validation},
      {"spot values", spot_values},
      {"transport and flip soundness", [] { return suite("transport"); }},
      {"generator relations", generator_relations_on_s05},
      {"lemma31", [] { return suite("lemma31"); }},
      {"prop33", [] { return suite("prop33"); }},
      {"prop34", prop34},
      {"prop37", [] { return suite("prop37"); }},
      {"faithfulness", [] { return suite("faithfulness"); }},
      {"curve complex structure", curve_complex_structure},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("threw: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    failures += !o.ok;
    std::printf("%s %2zu %s (%.1f s): %s\n", o.ok ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), secs,
                o.detail.c_str());
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
