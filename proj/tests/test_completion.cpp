#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "osx/fixtures.hpp"

using namespace osx;

namespace {

// Rank-2 graph with a quotient-valence defect: two parallel positive edges
// plus a zero loop carrying the group, leaving a bare valence-2 vertex.
MarkedGraph valence_defect() {
  MarkedGraph x;
  x.rank = 2;
  x.g.vertex_ids = {1, 2};
  x.g.edges = {{1, 1, 2, Rat(1, 2)}, {2, 1, 2, Rat(1, 2)}, {3, 1, 1, Rat(0)}};
  x.marking.base_vertex = 1;
  x.marking.images = {{dart(0, false), dart(1, true)}, {dart(2, false)}};
  return x;
}

}  // namespace

TEST_CASE("completion fixtures validate; defects are reported") {
  for (const CompletionPoint& T :
       {loop_splitting_a(), loop_splitting_b(), amalgam_ab(),
        pinched_barbell_splitting()}) {
    CHECK(validate_completion(T).empty());
    CHECK(qvol(T) == Rat(1));
  }
  bool valence = false;
  for (const auto& i : validate_completion(as_completion(valence_defect())))
    valence = valence || i.code == "QuotientValenceViolation";
  CHECK(valence);

  MarkedGraph all_zero = rose2(Rat(0), Rat(0));
  bool proper = false;
  for (const auto& i : validate_completion(as_completion(all_zero)))
    proper = proper || i.code == "ZeroPartNotProper";
  CHECK(proper);
}

TEST_CASE("translation lengths ignore the zero part") {
  CompletionPoint am = amalgam_ab();
  CHECK(translation_length_ext(am, parse_word("a", 2)) == Rat(0));
  CHECK(translation_length_ext(am, parse_word("b", 2)) == Rat(0));
  CHECK(translation_length_ext(am, parse_word("ab", 2)) == Rat(2));
  CHECK(translation_length_ext(am, parse_word("aB", 2)) == Rat(2));
  CHECK(translation_length_ext(am, parse_word("abaB", 2)) == Rat(4));
  CHECK(translation_length_ext(am, parse_word("abA", 2)) == Rat(0));
  CHECK(translation_length_ext(am, Word()) == Rat(0));

  CompletionPoint la = loop_splitting_a();
  CHECK(translation_length_ext(la, parse_word("a", 2)) == Rat(1));
  CHECK(translation_length_ext(la, parse_word("b", 2)) == Rat(0));
  CHECK(translation_length_ext(la, parse_word("ab", 2)) == Rat(1));
  CHECK(translation_length_ext(la, parse_word("abaB", 2)) == Rat(2));
}

TEST_CASE("ellipticity follows the fixed-point criterion") {
  CompletionPoint am = amalgam_ab();
  CHECK(is_elliptic(am, {parse_word("a", 2)}));
  CHECK(is_elliptic(am, {parse_word("b", 2)}));
  CHECK(is_elliptic(am, {parse_word("abA", 2)}));
  CHECK_FALSE(is_elliptic(am, {parse_word("a", 2), parse_word("b", 2)}));
  CHECK_FALSE(is_elliptic(am, {parse_word("ab", 2)}));
  CHECK(is_elliptic(am, {}));

  CompletionPoint la = loop_splitting_a();
  CHECK(is_elliptic(la, {parse_word("b", 2)}));
  CHECK_FALSE(is_elliptic(la, {parse_word("a", 2)}));
}

TEST_CASE("the quotient view exposes vertex groups") {
  GoGView v = collapse_zero(amalgam_ab());
  CHECK(v.vertices.size() == 2);
  CHECK(v.edges.size() == 1);
  CHECK(v.edges[0].len == Rat(1));
  int nontrivial = 0;
  for (const GoGVertex& gv : v.vertices)
    if (!gv.group.empty()) ++nontrivial;
  CHECK(nontrivial == 2);

  GoGView w = collapse_zero(loop_splitting_a());
  CHECK(w.vertices.size() == 1);
  REQUIRE(w.vertices[0].group.size() == 1);
  CHECK(cyclic_reduce(w.vertices[0].group[0]).first ==
        CyclicWord::canonical({2}));
}

TEST_CASE("extended candidates include the pinched shapes") {
  bool pinched_ab = false;
  for (const Candidate& c : candidates_ext(amalgam_ab())) {
    CHECK_FALSE(c.word.empty());
    if (c.kind == CandidateKind::PinchedBarbell &&
        cyclic_str(c.word) == "ab")
      pinched_ab = true;
  }
  CHECK(pinched_ab);

  bool half = false;
  for (const Candidate& c : candidates_ext(pinched_barbell_splitting()))
    half = half || c.kind == CandidateKind::HalfPinchedBarbell;
  CHECK(half);

  bool pfe = false;
  for (const Candidate& c : candidates_ext(loop_splitting_a()))
    pfe = pfe || c.kind == CandidateKind::PinchedFigureEight;
  CHECK(pfe);
}

TEST_CASE("extended distance: finite, infinite, and equal cases") {
  CompletionPoint rose = as_completion(rose2(Rat(1, 2), Rat(1, 2)));
  CompletionPoint la = loop_splitting_a();
  DistanceResult d = distance_ext(rose, la);
  CHECK(d.factor == StretchFactor::of(Rat(2)));
  REQUIRE(d.witness);
  CHECK(cyclic_str(d.witness->word) == "a");

  DistanceResult inf = distance_ext(la, loop_splitting_b());
  CHECK(inf.factor.infinite);
  REQUIRE(inf.elliptic_failure);

  DistanceResult fin = distance_ext(la, amalgam_ab());
  CHECK(fin.factor == StretchFactor::of(Rat(2)));

  CHECK(equals(la, la));
  CHECK(equals(amalgam_ab(), amalgam_ab()));
  CHECK_FALSE(equals(la, loop_splitting_b()));
  CHECK_FALSE(equals(rose, la));
}

TEST_CASE("interior approximation blows the zero part back up") {
  CompletionPoint am = amalgam_ab();
  MarkedGraph x = approximate_from_interior(am, Rat(1, 4));
  CHECK(validate(x).empty());
  Rat zeros = 0, pos = 0;
  for (const Edge& e : x.g.edges)
    (am.m.g.edges[x.g.eindex(e.id)].len == 0 ? zeros : pos) += e.len;
  CHECK(pos == Rat(3, 4));
  CHECK(zeros == Rat(1, 4));
  DistanceResult d = distance_ext(as_completion(x), am);
  CHECK_FALSE(d.factor.infinite);
  CHECK(d.factor.value >= 1);
  CHECK(d.factor.value <= Rat(4, 3));

  // interior points pass through unchanged
  MarkedGraph r = rose2(Rat(1, 2), Rat(1, 2));
  MarkedGraph same = approximate_from_interior(as_completion(r), Rat(1, 8));
  CHECK(same.g.edges[0].len == Rat(1, 2));
  CHECK_THROWS_AS(approximate_from_interior(am, Rat(2)), DomainError);
  CHECK_THROWS_AS(approximate_from_interior(am, Rat(0)), DomainError);
}

TEST_CASE("pinch sequences follow the schedule exactly") {
  MarkedGraph r = rose2(Rat(1, 2), Rat(1, 2));
  std::vector<MarkedGraph> seq = pinch_sequence(r, {2}, {Rat(1, 4), Rat(1, 8)});
  REQUIRE(seq.size() == 2);
  for (const MarkedGraph& g : seq) CHECK(validate(g).empty());
  CHECK(seq[0].g.edges[1].len == Rat(1, 4));
  CHECK(seq[0].g.edges[0].len == Rat(3, 4));
  CHECK(seq[1].g.edges[1].len == Rat(1, 8));
  CHECK(seq[1].g.edges[0].len == Rat(7, 8));

  CHECK_THROWS_AS(pinch_sequence(r, {2}, {Rat(1, 4), Rat(1, 4)}),
                  ScheduleNotDecreasing);
  CHECK_THROWS_AS(pinch_sequence(r, {2}, {Rat(1, 4), Rat(1, 2)}),
                  ScheduleNotDecreasing);
  CHECK_THROWS_AS(pinch_sequence(r, {1, 2}, {Rat(1, 4)}), DomainError);
}
