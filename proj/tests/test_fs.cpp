#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "osx/fixtures.hpp"

using namespace osx;

TEST_CASE("face restriction rescales the kept subgraph") {
  CompletionPoint th = as_completion(theta2(Rat(1, 3), Rat(1, 3), Rat(1, 3)));
  CompletionPoint f = face(th, {1, 3});
  CHECK(validate_completion(f).empty());
  CHECK(f.m.g.edges[0].len == Rat(1, 2));
  CHECK(f.m.g.edges[1].len == Rat(0));
  CHECK(f.m.g.edges[2].len == Rat(1, 2));
  // restricting to everything is the identity
  CHECK(equals(face(th, {1, 2, 3}), th));
  // faces are idempotent
  CHECK(equals(face(f, {1, 3}), f));

  CHECK_THROWS_AS(face(th, std::vector<int>{}), InvalidFace);
  CompletionPoint zf = face(th, {1, 3});
  CHECK_THROWS_AS(face(zf, std::vector<int>{2}), InvalidFace);
}

TEST_CASE("distance to a candidate face is the reciprocal volume") {
  MarkedGraph r = rose2(Rat(1, 2), Rat(1, 2));
  CHECK(face_distance(r, {1}) == Rat(2));
  CHECK(face_distance(r, {2}) == Rat(2));
  CHECK(face_distance(r, {1, 2}) == Rat(1));

  MarkedGraph th = theta2(Rat(1, 3), Rat(1, 3), Rat(1, 3));
  CHECK(face_distance(th, {1, 3}) == Rat(3, 2));
  CHECK_THROWS_AS(face_distance(th, std::vector<int>{1}), NotACandidateImage);

  MarkedGraph db = dumbbell2(Rat(1, 4), Rat(1, 4), Rat(1, 2));
  CHECK(face_distance(db, {1}) == Rat(4));        // circle a
  CHECK(face_distance(db, {1, 2, 3}) == Rat(1));  // the barbell is everything
  CHECK_THROWS_AS(face_distance(db, std::vector<int>{2}), NotACandidateImage);
}

TEST_CASE("faces commute with the automorphism action") {
  EndoMap phi{2, {parse_word("ab", 2), parse_word("b", 2)}};
  MarkedGraph th = theta2(Rat(1, 2), Rat(1, 3), Rat(1, 6));
  CompletionPoint one = face(as_completion(act(th, phi)), {1, 3});
  CompletionPoint two = as_completion(act(face(as_completion(th), {1, 3}).m, phi));
  CHECK(equals(one, two));
}

TEST_CASE("common simplex recovery on shared topological types") {
  CompletionPoint x = as_completion(rose2(Rat(1, 2), Rat(1, 2)));
  CompletionPoint y = as_completion(rose2(Rat(3, 4), Rat(1, 4)));
  auto s = common_simplex(x, y);
  REQUIRE(s);
  Rat sx = 0, sy = 0;
  for (const auto& [id, l] : s->x_coords) sx += l;
  for (const auto& [id, l] : s->y_coords) sy += l;
  CHECK(sx == Rat(1));
  CHECK(sy == Rat(1));

  // a point and one of its faces share the bigger simplex
  CompletionPoint th = as_completion(theta2(Rat(1, 3), Rat(1, 3), Rat(1, 3)));
  auto t = common_simplex(th, face(th, {1, 3}));
  REQUIRE(t);
  bool has_zero = false;
  for (const auto& [id, l] : t->y_coords) has_zero = has_zero || l == 0;
  CHECK(has_zero);

  // incompatible markings share nothing
  EndoMap phi{2, {parse_word("ab", 2), parse_word("b", 2)}};
  CHECK_FALSE(common_simplex(x, as_completion(act(rose2(Rat(1, 2), Rat(1, 2)),
                                                  phi))));
}

TEST_CASE("euclidean balls within a simplex") {
  CompletionPoint x = as_completion(rose2(Rat(1, 2), Rat(1, 2)));
  CHECK(euclidean_ball_contains(x, as_completion(rose2(Rat(9, 16), Rat(7, 16))),
                                Rat(1, 8)));
  CHECK_FALSE(euclidean_ball_contains(
      x, as_completion(rose2(Rat(3, 4), Rat(1, 4))), Rat(1, 8)));
  EndoMap phi{2, {parse_word("ab", 2), parse_word("b", 2)}};
  CHECK_FALSE(euclidean_ball_contains(
      x, as_completion(act(rose2(Rat(1, 2), Rat(1, 2)), phi)), Rat(1, 2)));
}

TEST_CASE("axes vectors list exact translation lengths") {
  CompletionPoint th = as_completion(theta2(Rat(1, 2), Rat(1, 3), Rat(1, 6)));
  LengthVector v = axes_vector(th, {parse_word("a", 2), parse_word("b", 2),
                                    parse_word("aB", 2)});
  REQUIRE(v.values.size() == 3);
  CHECK(v.values[0] == Rat(2, 3));
  CHECK(v.values[1] == Rat(1, 2));
  CHECK(v.values[2] == Rat(5, 6));

  CompletionPoint la = loop_splitting_a();
  LengthVector w = axes_vector(la, {parse_word("a", 2), parse_word("b", 2)});
  CHECK(w.values[0] == Rat(1));
  CHECK(w.values[1] == Rat(0));
}

TEST_CASE("strictness family: axes-close yet Lipschitz-separated") {
  for (int i = 2; i <= 6; ++i) {
    StrictnessPair sp = strictness_family(i, 10);
    CHECK(validate_completion(sp.x).empty());
    CHECK(validate_completion(sp.y).empty());
    CHECK(sp.main_len + sp.small_len == Rat(1));
    CHECK(sp.small_len == Rat(Int(1), Int(i - 1) * Int(11)));
    LengthVector vx = axes_vector(sp.x, {parse_word("a", 2), parse_word("b", 2)});
    LengthVector vy = axes_vector(sp.y, {parse_word("a", 2), parse_word("b", 2)});
    for (size_t k = 0; k < 2; ++k) {
      Rat diff = vx.values[k] - vy.values[k];
      if (diff < 0) diff = -diff;
      CHECK(diff < Rat(1, 10));
    }
    DistanceResult d = distance_ext(sp.y, sp.x);
    REQUIRE_FALSE(d.factor.infinite);
    CHECK(d.factor.value == 1 / sp.main_len);
    CHECK(d.factor.value > 1);
  }
}

TEST_CASE("exact linear solving") {
  auto s = solve_linear({{Rat(2), Rat(0)}, {Rat(0), Rat(4)}}, {Rat(1), Rat(2)});
  REQUIRE(s);
  CHECK((*s)[0] == Rat(1, 2));
  CHECK((*s)[1] == Rat(1, 2));

  CHECK_FALSE(solve_linear({{Rat(1), Rat(1)}, {Rat(2), Rat(2)}},
                           {Rat(1), Rat(3)}));

  auto u = solve_linear({{Rat(1), Rat(1)}}, {Rat(5)});
  REQUIRE(u);
  CHECK((*u)[0] + (*u)[1] == Rat(5));
  CHECK((*u)[1] == Rat(0));  // free variables pinned to zero
}
