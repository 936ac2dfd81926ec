#include <doctest.h>

#include <set>

#include "support.hpp"

using namespace testing;

TEST_SUITE("triangulation") {
  TEST_CASE("standard triangulations have the Euler counts") {
    CHECK(tri({0, 5})->num_edges() == 9);
    CHECK(tri({0, 5})->num_triangles() == 6);
    CHECK(tri({1, 1})->num_edges() == 3);
    CHECK(tri({1, 1})->num_triangles() == 2);
    CHECK(tri({0, 4})->num_edges() == 6);
    CHECK(tri({0, 4})->num_triangles() == 4);
    CHECK_THROWS_AS(standard_triangulation({2, 0}), Error);
    CHECK_THROWS_AS(standard_triangulation({0, 3}), Error);
  }

  TEST_CASE("property: every tabulated surface is a valid ideal triangulation") {
    for (int g = 0; g <= 2; ++g)
      for (int p = 1; p <= 6; ++p) {
        const SurfaceType s{g, p};
        if (!admissibility(s).enumerable) continue;
        CAPTURE(to_string(s));
        const auto t = standard_triangulation(s);
        CHECK(t.num_edges() == 6 * g - 6 + 3 * p);
        CHECK(t.num_triangles() == 4 * g - 4 + 2 * p);
        CHECK(t.num_vertex_classes() == p);
        for (int i = 0; i < 3 * t.num_triangles(); ++i) {
          const Slot x{i / 3, i % 3};
          CHECK(t.glued(t.glued(x)) == x);
          CHECK_FALSE(t.glued(x) == x);
        }
        CHECK(standard_triangulation(s) == t);
      }
  }

  TEST_CASE("flip law on a quadrilateral") {
    // Weights are indexed by edge; the transport only touches the flipped edge.
    const auto& t = tri(S05);
    int e = 0;
    while (!t->flippable(e)) ++e;
    const auto ct = flip(t, e).second;
    std::vector<long long> w(t->num_edges(), 0);
    for (int k : ct.quad_edges) w[k] = 1;
    w[e] = 0;
    if (std::set<int>(ct.quad_edges.begin(), ct.quad_edges.end()).size() == 4) CHECK(ct.apply(w)[e] == 2);
    std::fill(w.begin(), w.end(), 0);
    w[ct.quad_edges[0]] = 2;
    w[ct.quad_edges[3]] = 2;
    w[e] = 2;
    if (std::set<int>(ct.quad_edges.begin(), ct.quad_edges.end()).size() == 4) CHECK(ct.apply(w)[e] == 0);
  }

  TEST_CASE("flip examples agree with the retracing oracle") {
    // Find enumerated curves whose quadrilateral reads (1,1,1,1 | 0) and
    // (2,0,0,2 | 2), then compare the formula with the retraced path.
    int found_cross = 0, found_corner = 0;
    for (SurfaceType s : {SurfaceType{0, 5}, SurfaceType{0, 6}, SurfaceType{1, 2}}) {
      const auto& t = tri(s);
      const auto& u = standard_universe(s, 3);
      for (int e = 0; e < t->num_edges(); ++e) {
        if (!t->flippable(e)) continue;
        const auto [target, ct] = flip(t, e);
        for (const auto& c : u.curves) {
          const auto& w = c.weights();
          const auto q = ct.quad_edges;
          const bool cross = w[q[0]] == 1 && w[q[1]] == 1 && w[q[2]] == 1 && w[q[3]] == 1 && w[e] == 0;
          const bool corner = w[q[0]] == 2 && w[q[1]] == 0 && w[q[2]] == 0 && w[q[3]] == 2 && w[e] == 2;
          if (!cross && !corner) continue;
          const auto retraced = path_weights(*target, retrace_path(ct, curve_path(c)));
          CHECK(retraced == ct.apply(w));
          CHECK(retraced[e] == (cross ? 2 : 0));
          (cross ? found_cross : found_corner)++;
        }
      }
    }
    CHECK(found_cross > 0);
    CHECK(found_corner > 0);
  }

  TEST_CASE("property: flipping twice restores every coordinate") {
    for (SurfaceType s : {SurfaceType{0, 5}, SurfaceType{1, 2}, SurfaceType{2, 1}}) {
      const auto& t = tri(s);
      const auto& u = standard_universe(s, 3);
      for (int e = 0; e < t->num_edges(); ++e) {
        if (!t->flippable(e)) continue;
        const auto [target, forward] = flip(t, e);
        const auto back = flip(target, e).second;
        for (const auto& c : u.curves) {
          const auto w = forward.apply(c.weights());
          CHECK(back.apply(w) == c.weights());
          CHECK_NOTHROW(validate_normal(target, w));
        }
      }
    }
  }

  TEST_CASE("self-glued edges refuse to flip") {
    // Random flips eventually create a folded triangle on S(0,4).
    std::mt19937 rng(7);
    TriangulationPtr t = tri({0, 4});
    bool seen = false;
    for (int step = 0; step < 400 && !seen; ++step) {
      for (int e = 0; e < t->num_edges(); ++e)
        if (!t->flippable(e)) {
          seen = true;
          try {
            flip(t, e);
            FAIL("flip of a self-glued edge succeeded");
          } catch (const Error& err) {
            CHECK(err.kind() == ErrorKind::NotFlippable);
          }
        }
      const int e = std::uniform_int_distribution<int>(0, t->num_edges() - 1)(rng);
      if (t->flippable(e)) t = flip(t, e).first;
    }
    CHECK(seen);
    CHECK_THROWS_AS(flip(tri(S05), 99), Error);
  }
}
