#include "foliage/kernels.hpp"

#include <cstdlib>
#include <string>

#ifdef FOLIAGE_HAVE_OPENMP
#include <omp.h>
#endif

#include "foliage/intersection.hpp"

namespace foliage {

int configured_threads() {
  if (const char* env = std::getenv("FOLIAGE_THREADS")) {
    try {
      const int n = std::stoi(env);
      if (n > 0) return n;
    } catch (const std::exception&) {
    }
  }
#ifdef FOLIAGE_HAVE_OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

void for_each_index(std::size_t n, Execution execution, const std::function<void(std::size_t)>& body) {
  const long long count = static_cast<long long>(n);
#ifdef FOLIAGE_HAVE_OPENMP
  if (execution == Execution::parallel) {
#pragma omp parallel for schedule(dynamic, 1) num_threads(configured_threads())
    for (long long i = 0; i < count; ++i) body(i);
    return;
  }
#endif
  (void)execution;
  for (long long i = 0; i < count; ++i) body(i);
}

void for_each_pair(std::size_t n, Execution execution, const std::function<void(std::size_t, std::size_t)>& body) {
  const long long rows = static_cast<long long>(n);
  if (execution == Execution::serial) {
    for (long long i = 0; i < rows; ++i)
      for (long long j = i + 1; j < rows; ++j) body(i, j);
    return;
  }
#ifdef FOLIAGE_HAVE_OPENMP
#pragma omp parallel for schedule(dynamic, 1) num_threads(configured_threads())
  for (long long i = 0; i < rows; ++i)
    for (long long j = i + 1; j < rows; ++j) body(i, j);
#else
  for (long long i = 0; i < rows; ++i)
    for (long long j = i + 1; j < rows; ++j) body(i, j);
#endif
}

std::vector<long long> intersection_matrix(std::span<const NormalVector> curves, IntersectionAlgorithm algorithm,
                                           Execution execution) {
  const std::size_t n = curves.size();
  std::vector<long long> m(n * n, 0);
  if (n == 0) return m;
  if (algorithm == IntersectionAlgorithm::geometric) {
    const IdealTriangulation& t = curves.front().triangulation();
    std::vector<IndexedPath> path(n);
    for (std::size_t i = 0; i < n; ++i) path[i] = index_path(t, curve_path(curves[i]));
    for_each_pair(n, execution, [&](std::size_t i, std::size_t j) {
      m[i * n + j] = m[j * n + i] = curves[i] == curves[j] ? 0 : path_intersection(t, path[i], path[j]);
    });
  } else {
    for_each_pair(n, execution, [&](std::size_t i, std::size_t j) {
      m[i * n + j] = m[j * n + i] = oracle_intersection(curves[i], curves[j]);
    });
  }
  return m;
}

std::vector<char> disjointness_matrix(std::span<const NormalVector> curves, Execution execution) {
  const std::size_t n = curves.size();
  std::vector<char> m(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) m[i * n + i] = 1;
  for_each_pair(n, execution, [&](std::size_t i, std::size_t j) {
    m[i * n + j] = m[j * n + i] = haken_disjoint(curves[i], curves[j]) ? 1 : 0;
  });
  return m;
}

}  // namespace foliage
