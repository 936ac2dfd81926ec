// Serial reference against the OpenMP kernels: timings and an equality check.
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include <CLI11.hpp>

#include "foliage/adherence.hpp"
#include "foliage/kernels.hpp"

using namespace foliage;

namespace {

template <class F>
auto timed(F&& f, double& seconds) {
  const auto start = std::chrono::steady_clock::now();
  auto result = f();
  seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

template <class F>
bool compare(const std::string& name, int size, F&& run) {
  double serial_s = 0, parallel_s = 0;
  const auto serial = timed([&] { return run(Execution::serial); }, serial_s);
  const auto parallel = timed([&] { return run(Execution::parallel); }, parallel_s);
  const bool same = serial == parallel;
  std::printf("%-24s %6d %10.3f %10.3f %8.2fx %s\n", name.c_str(), size, serial_s, parallel_s,
              parallel_s > 0 ? serial_s / parallel_s : 0.0, same ? "equal" : "MISMATCH");
  return same;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Serial vs parallel kernel benchmark"};
  bool quick = false;
  int depth = 4;
  app.add_flag("--quick", quick, "Small universes, for smoke testing");
  app.add_option("--depth", depth, "Word-length bound of the S(0,5) universe");
  CLI11_PARSE(app, argc, argv);
  if (quick) depth = 2;

  const SurfaceType s{0, 5};
  const auto& u = standard_universe(s, depth);
  std::printf("threads %d, S(0,5) depth %d, %d curves\n", configured_threads(), depth, u.size());
  std::printf("%-24s %6s %10s %10s %9s %s\n", "kernel", "n", "serial s", "omp s", "speedup", "check");

  bool ok = true;
  ok &= compare("intersection geometric", u.size(), [&](Execution ex) {
    return intersection_matrix(u.curves, IntersectionAlgorithm::geometric, ex);
  });
  const auto& small = standard_universe(s, quick ? 1 : depth - 1);
  ok &= compare("intersection oracle", small.size(), [&](Execution ex) {
    return intersection_matrix(small.curves, IntersectionAlgorithm::oracle, ex);
  });
  ok &= compare("disjointness", u.size(), [&](Execution ex) { return disjointness_matrix(u.curves, ex); });

  const auto& cu = standard_universe(s, quick ? 1 : 2);
  const auto g = build_graph(cu);
  std::vector<int> all(cu.size());
  for (int i = 0; i < cu.size(); ++i) all[i] = i;
  const auto classes = saturated_universe(g, all, 2, BoundaryParallel::allowed);
  ok &= compare("adherence", classes.size(), [&](Execution ex) { return adherence_matrix(classes, ex); });
  return ok ? 0 : 1;
}
