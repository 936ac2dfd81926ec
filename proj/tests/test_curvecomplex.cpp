#include <doctest.h>

#include "support.hpp"

using namespace testing;

TEST_SUITE("curvecomplex") {
  TEST_CASE("depth zero is the seed set") {
    const auto seeds = standard_seeds(S05);
    const auto u = enumerate_curves(S05, seeds, 0);
    CHECK(u.curves == seeds);
    CHECK(u.interior_count() == 0);
  }

  TEST_CASE("property: universes grow with depth and are nested") {
    int previous = 0;
    for (int L = 0; L <= 4; ++L) {
      const auto& u = standard_universe(S05, L);
      CHECK(u.size() > previous);
      previous = u.size();
      if (L > 0)
        for (const auto& c : standard_universe(S05, L - 1).curves) CHECK(u.index_of(c) >= 0);
    }
  }

  TEST_CASE("graph examples on S(0,5)") {
    const auto& u = standard_universe(S05, 3);
    const auto g = build_graph(u);
    const int a12 = u.index_of(curve(S05, "a12")), a23 = u.index_of(curve(S05, "a23")),
              a34 = u.index_of(curve(S05, "a34"));
    REQUIRE(a12 >= 0);
    CHECK(g.adjacent(a12, a34));
    CHECK_FALSE(g.adjacent(a12, a23));
    CHECK(clique_number(g) == 2);
    CHECK(k_simplex_count(g, 0) == u.size());
    CHECK(k_simplex_count(g, 2) == 0);
    CHECK(k_simplex_count(g, 1) == g.edge_count());
  }

  TEST_CASE("edge count matches independently traced 2-systems") {
    const auto& u = standard_universe(S05, 3);
    const auto g = build_graph(u);
    long long systems = 0;
    for (int i = 0; i < u.size(); ++i)
      for (int j = i + 1; j < u.size(); ++j) {
        // Disjoint curves are exactly those whose sum resolves back into themselves.
        try {
          const auto cs = curve_system_from(u.curves[i] + u.curves[j]);
          systems += cs.size() == 2 && cs.contains(u.curves[i]) && cs.contains(u.curves[j]);
        } catch (const Error&) {
        }
      }
    CHECK(k_simplex_count(g, 1) == systems);
  }

  TEST_CASE("clique number equals complexity") {
    CHECK(clique_number(build_graph(standard_universe(S06, 2))) == 3);
    CHECK(clique_number(build_graph(standard_universe({1, 3}, 3))) == 3);
  }

  TEST_CASE("simplicial action") {
    const auto& u = standard_universe(S05, 3);
    const auto g = build_graph(u);
    CHECK(check_simplicial(identity(S05), g));
    for (const auto& mc : generators(S05)) CHECK(check_simplicial(mc, g));
    CHECK(check_simplicial(reflection(S05), g));
  }

  TEST_CASE("a corrupted vertex map is rejected") {
    const auto& u = standard_universe(S05, 3);
    const auto g = build_graph(u);
    auto image = vertex_map(identity(S05), u);
    CHECK(check_vertex_map(g, image));
    // Swap an interior curve with one of different degree.
    int a = -1, b = -1;
    for (int i = 0; i < u.size() && b < 0; ++i)
      for (int j = i + 1; j < u.size(); ++j)
        if (u.interior(i) && u.interior(j) && g.neighbours(i).size() != g.neighbours(j).size()) {
          a = i;
          b = j;
          break;
        }
    REQUIRE(b >= 0);
    std::swap(image[a], image[b]);
    CHECK_FALSE(check_vertex_map(g, image));
    image = vertex_map(identity(S05), u);
    image[1] = image[0];
    CHECK_FALSE(check_vertex_map(g, image));
  }

  TEST_CASE("orbit: every curve is reached from a12") {
    const auto u = enumerate_curves(S05, {curve(S05, "a12")}, 4);
    const auto& standard = standard_universe(S05, 2);
    for (const auto& c : standard.curves) CHECK(u.index_of(c) >= 0);
  }

  TEST_CASE("curve systems and DOT export") {
    const auto& u = standard_universe(S05, 2);
    const auto g = build_graph(u);
    std::vector<int> all(u.size());
    std::iota(all.begin(), all.end(), 0);
    const auto systems = curve_systems(g, all, 2);
    CHECK(static_cast<long long>(systems.size()) == u.size() + g.edge_count());
    CHECK(std::is_sorted(systems.begin(), systems.end()));
    const auto dot = to_dot(g);
    CHECK(dot.rfind("graph curves {", 0) == 0);
    CHECK(std::count(dot.begin(), dot.end(), '\n') == 2 + u.size() + g.edge_count());
  }

  TEST_CASE("named curves") {
    CHECK(curve(S05, "a12") == curve(S05, "a1_2"));
    CHECK(curve(S05, "word:x1x2") == curve(S05, "a12"));
    CHECK_THROWS_AS(curve(S05, "a11"), Error);
    CHECK_THROWS_AS(curve(S05, "b12"), Error);
  }
}
