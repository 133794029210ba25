#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "osx/fixtures.hpp"
#include "osx/oracle.hpp"

using namespace osx;

namespace {

std::set<std::string> candidate_words(const MarkedGraph& x) {
  std::set<std::string> out;
  for (const Candidate& c : candidates(x)) out.insert(cyclic_str(c.word));
  return out;
}

}  // namespace

TEST_CASE("rose candidates are the four short loops") {
  MarkedGraph r = rose2(Rat(1, 2), Rat(1, 2));
  CHECK(candidate_words(r) == std::set<std::string>{"a", "b", "ab", "aB"});
  for (const Candidate& c : candidates(r))
    CHECK(tighten(c.loop, true) == c.loop);
}

TEST_CASE("theta candidates are the three embedded circles") {
  MarkedGraph th = theta2(Rat(1, 3), Rat(1, 3), Rat(1, 3));
  CHECK(candidate_words(th) == std::set<std::string>{"a", "b", "aB"});
  for (const Candidate& c : candidates(th))
    CHECK(c.kind == CandidateKind::Circle);
}

TEST_CASE("dumbbell candidates include the barbell") {
  MarkedGraph db = dumbbell2(Rat(1, 4), Rat(1, 4), Rat(1, 2));
  auto words = candidate_words(db);
  CHECK(words.count("a"));
  CHECK(words.count("b"));
  CHECK(words.count("ab"));
  CHECK(words.count("aB"));
  bool barbell = false;
  for (const Candidate& c : candidates(db))
    barbell = barbell || c.kind == CandidateKind::Barbell;
  CHECK(barbell);
}

TEST_CASE("hand-checked distances on roses") {
  MarkedGraph x = rose2(Rat(1, 2), Rat(1, 2));
  MarkedGraph y = rose2(Rat(3, 4), Rat(1, 4));
  DistanceResult fwd = distance(x, y);
  CHECK(fwd.factor == StretchFactor::of(Rat(3, 2)));
  REQUIRE(fwd.witness);
  CHECK(cyclic_str(fwd.witness->word) == "a");
  DistanceResult rev = distance(y, x);
  CHECK(rev.factor == StretchFactor::of(Rat(2)));
  REQUIRE(rev.witness);
  CHECK(cyclic_str(rev.witness->word) == "b");
  CHECK(sym_distance(x, y) == Rat(3));
  CHECK(distance(x, x).factor == StretchFactor::of(Rat(1)));
}

TEST_CASE("stretch of single words never exceeds the distance") {
  std::mt19937_64 rng(41);
  for (int t = 0; t < 60; ++t) {
    MarkedGraph x = random_point(rng, 2), y = random_point(rng, 2);
    Rat d = distance(x, y).factor.value;
    for (int k = 0; k < 5; ++k) {
      Word w = reduce(random_word(rng, 2, 7));
      if (w.empty()) continue;
      CHECK(stretch(x, y, w) <= d);
    }
  }
}

TEST_CASE("distance agrees with the exhaustive oracle") {
  std::mt19937_64 rng(47);
  for (int t = 0; t < 25; ++t) {
    MarkedGraph x = random_point(rng, 2), y = random_point(rng, 2);
    CHECK(distance(x, y).factor.value == brute_force_max_stretch(x, y, 12));
  }
  MarkedGraph x3 = random_point(rng, 3), y3 = random_point(rng, 3);
  CHECK(distance(x3, y3).factor.value == brute_force_max_stretch(x3, y3, 10));
}

TEST_CASE("distance across topologies is realized by a candidate") {
  MarkedGraph th = theta2(Rat(1, 3), Rat(1, 3), Rat(1, 3));
  MarkedGraph r = rose2(Rat(1, 2), Rat(1, 2));
  DistanceResult d = distance(th, r);
  REQUIRE(d.witness);
  CHECK(stretch(th, r, d.witness->word.word()) == d.factor.value);
  CHECK(d.factor.value >= 1);
  DistanceResult e = distance(r, th);
  CHECK(d.factor.value * e.factor.value >= 1);
}
