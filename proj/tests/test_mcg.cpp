#include <doctest.h>

#include "support.hpp"

using namespace testing;

TEST_SUITE("mcg") {
  TEST_CASE("generator set") {
    CHECK(generators(S05).size() == 4);
    CHECK(generators({1, 2}).size() == 3);
    CHECK_THROWS_AS(generators({0, 3}), Error);
    CHECK(reflection(S05).orientation_reversing());
    CHECK_FALSE(parse_word(S05, "s1 s2").orientation_reversing());
  }

  TEST_CASE("half-twist examples") {
    const auto a12 = curve(S05, "a12");
    CHECK(apply(parse_word(S05, "s1"), a12) == a12);
    const auto image = apply(parse_word(S05, "s2"), a12);
    CHECK_FALSE(image == a12);
    // The image encloses punctures 1 and 3.
    const auto pieces = complement_pieces(curve_system_from(image));
    CHECK(pieces[0].punctures == std::vector<int>{0, 2});
    CHECK(apply(identity(S05), a12) == a12);
  }

  TEST_CASE("word parsing") {
    CHECK(parse_word(S05, "s1 s2^-1 r").length() == 3);
    CHECK(parse_word(S05, "id").length() == 0);
    CHECK(parse_word(S05, "s1 s2^-1").to_string() == "s1 s2^-1");
    try {
      parse_word(S05, "s9");
      FAIL("unknown generator accepted");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::UnknownGenerator);
    }
    CHECK_THROWS_AS(parse_word(S05, "s1^x"), Error);
  }

  TEST_CASE("moves_some_vertex examples") {
    const auto& u = standard_universe(S05, 3);
    CHECK_FALSE(moves_some_vertex(identity(S05), u.curves).has_value());
    CHECK(moves_some_vertex(parse_word(S05, "s1"), u.curves).has_value());
    CHECK_FALSE(apply(parse_word(S05, "s1"), curve(S05, "a23")) == curve(S05, "a23"));
    CHECK_FALSE(moves_some_vertex(parse_word(S05, "s1 s2 s1 s2^-1 s1^-1 s2^-1"), u.curves).has_value());
  }

  TEST_CASE("relations act trivially on the universe") {
    const auto& u = standard_universe(S05, 3);
    for (const char* w : {"s1 s2 s1 s2^-1 s1^-1 s2^-1", "s1 s3 s1^-1 s3^-1", "r r", "s1 s2 s3 s4 s4 s3 s2 s1",
                          "s1 s2 s3 s4 s1 s2 s3 s4 s1 s2 s3 s4 s1 s2 s3 s4 s1 s2 s3 s4"}) {
      CAPTURE(w);
      const auto mc = parse_word(S05, w);
      CHECK(is_trivial(mc));
      for (const auto& c : u.curves) CHECK(apply(mc, c) == c);
    }
    CHECK_FALSE(is_trivial(parse_word(S05, "s1")));
    CHECK_FALSE(is_trivial(reflection(S05)));
  }

  TEST_CASE("handle twists satisfy the braid relation") {
    for (SurfaceType s : {SurfaceType{1, 1}, SurfaceType{1, 2}, SurfaceType{2, 1}}) {
      const auto mc = parse_word(s, "ta1 tc1 ta1 tc1^-1 ta1^-1 tc1^-1");
      CHECK(is_trivial(mc));
      for (const auto& c : standard_universe(s, 3).curves) CHECK(apply(mc, c) == c);
    }
  }

  TEST_CASE("puncture permutations") {
    CHECK(puncture_permutation(parse_word(S05, "s1")) == std::vector<int>{1, 0, 2, 3, 4});
    CHECK(puncture_permutation(parse_word(S05, "s4")) == std::vector<int>{0, 1, 2, 4, 3});
    CHECK(puncture_permutation(identity(S05)) == std::vector<int>{0, 1, 2, 3, 4});
    for (const auto& mc : reduced_words(S05, 2)) {
      auto perm = puncture_permutation(mc);
      std::sort(perm.begin(), perm.end());
      CHECK(perm == std::vector<int>{0, 1, 2, 3, 4});
    }
  }

  TEST_CASE("property: inverses and composition") {
    const auto& u = standard_universe(S05, 2);
    for (const auto& mc : reduced_words(S05, 2)) {
      CHECK(is_trivial(mc.compose(mc.inverse())));
      for (int i = 0; i < u.size(); i += 7) CHECK(apply(mc.inverse(), apply(mc, u.curves[i])) == u.curves[i]);
    }
    const auto a = parse_word(S05, "s1"), b = parse_word(S05, "s2");
    const auto c = curve(S05, "a23");
    CHECK(apply(a.compose(b), c) == apply(a, apply(b, c)));
  }

  TEST_CASE("property: multicurves map componentwise") {
    const auto a12 = curve(S05, "a12"), a34 = curve(S05, "a34");
    for (const auto& mc : reduced_words(S05, 2)) {
      const auto image = apply(mc, a12 + a34);
      CHECK(image == apply(mc, a12) + apply(mc, a34));
      CHECK(trace_components(image).size() == 2);
    }
  }
}
