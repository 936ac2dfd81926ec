#include <doctest.h>

#include <atomic>

#include "support.hpp"

using namespace testing;

TEST_SUITE("kernels") {
  TEST_CASE("for_each_index and for_each_pair visit everything once") {
    for (const auto ex : {Execution::serial, Execution::parallel}) {
      std::vector<std::atomic<int>> hits(50);
      for_each_index(hits.size(), ex, [&](std::size_t i) { ++hits[i]; });
      for (auto& h : hits) CHECK(h == 1);
      std::atomic<long long> pairs{0};
      for_each_pair(20, ex, [&](std::size_t i, std::size_t j) {
        CHECK(i < j);
        ++pairs;
      });
      CHECK(pairs == 190);
    }
  }

  TEST_CASE("serial and parallel matrices agree") {
    for (const SurfaceType s : {S05, SurfaceType{1, 2}}) {
      const auto& u = standard_universe(s, 2);
      const auto geometric = intersection_matrix(u.curves, IntersectionAlgorithm::geometric, Execution::serial);
      CHECK(geometric == intersection_matrix(u.curves, IntersectionAlgorithm::geometric, Execution::parallel));
      const auto disjoint = disjointness_matrix(u.curves, Execution::serial);
      CHECK(disjoint == disjointness_matrix(u.curves, Execution::parallel));
      const std::size_t n = u.curves.size();
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
          CHECK(geometric[i * n + j] == geometric[j * n + i]);
          if (i != j) CHECK((disjoint[i * n + j] != 0) == (geometric[i * n + j] == 0));
        }
    }
  }

  TEST_CASE("oracle matrix agrees with the geometric one") {
    const auto& u = standard_universe(S05, 1);
    CHECK(intersection_matrix(u.curves, IntersectionAlgorithm::oracle, Execution::parallel) ==
          intersection_matrix(u.curves, IntersectionAlgorithm::geometric, Execution::serial));
  }

  TEST_CASE("configured threads is positive") { CHECK(configured_threads() >= 1); }
}
