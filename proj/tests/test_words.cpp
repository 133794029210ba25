#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "osx/words.hpp"

using namespace osx;

namespace {

Word rand_unreduced(std::mt19937_64& rng, int rank, int len) {
  std::uniform_int_distribution<int> d(0, 2 * rank - 1);
  std::vector<Letter> l;
  for (int i = 0; i < len; ++i) {
    int k = d(rng);
    l.push_back(k % 2 == 0 ? k / 2 + 1 : -(k / 2 + 1));
  }
  return Word(l);
}

// Quadratic reference reduction: scan until no adjacent inverse pair remains.
Word slow_reduce(Word w) {
  bool again = true;
  while (again) {
    again = false;
    for (size_t i = 0; i + 1 < w.l.size(); ++i) {
      if (w.l[i] == -w.l[i + 1]) {
        w.l.erase(w.l.begin() + i, w.l.begin() + i + 2);
        again = true;
        break;
      }
    }
  }
  return w;
}

}  // namespace

TEST_CASE("word parsing round-trips and rejects junk") {
  CHECK(word_str(parse_word("abA", 2)) == "abA");
  CHECK(parse_word("", 2).empty());
  CHECK(word_str(word_inverse(parse_word("abC", 3))) == "cBA");
  CHECK_THROWS_AS(parse_word("abc", 2), MalformedInput);
  CHECK(parse_word("a b", 2) == parse_word("ab", 2));  // whitespace ignored
  CHECK_THROWS_AS(parse_word("a-b", 2), MalformedInput);
}

TEST_CASE("reduce agrees with the slow scanner") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 500; ++t) {
    Word w = rand_unreduced(rng, 3, t % 20);
    CHECK(reduce(w) == slow_reduce(w));
  }
  CHECK(reduce(parse_word("abBA", 2)).empty());
  CHECK(word_str(reduce(parse_word("aBbA", 2))) == "");
  CHECK(word_str(concat(parse_word("ab", 2), parse_word("Ba", 2))) == "aa");
}

TEST_CASE("cyclic words: canonical rotation and reduction") {
  auto [c1, u1] = cyclic_reduce(parse_word("bab", 2));
  auto [c2, u2] = cyclic_reduce(parse_word("abb", 2));
  CHECK(c1 == c2);
  CHECK(cyclic_str(c1) == "abb");
  // conjugator recovers the input
  CHECK(reduce(concat(concat(u1, c1.word()), word_inverse(u1))) ==
        reduce(parse_word("bab", 2)));

  auto [c3, u3] = cyclic_reduce(parse_word("aBAbab", 2));  // conjugate of ab... reduce
  Word back = reduce(concat(concat(u3, c3.word()), word_inverse(u3)));
  CHECK(back == reduce(parse_word("aBAbab", 2)));

  // all rotations share the canonical form
  CyclicWord c = CyclicWord::canonical({1, 2, -1, 2});
  for (size_t k = 0; k < c.size(); ++k) {
    CyclicWord r = rotate(c, k);
    CHECK(cyclic_reduce(r.word()).first == c);
  }
  CHECK_FALSE(CyclicWord::canonical({1}) < CyclicWord::canonical({1}));
  CHECK(CyclicWord::canonical({1}) < CyclicWord::canonical({-1}));
  CHECK(CyclicWord::canonical({-1}) < CyclicWord::canonical({2}));
}

TEST_CASE("endomorphism application and composition") {
  EndoMap phi;  // a -> ab, b -> b
  phi.rank = 2;
  phi.images = {parse_word("ab", 2), parse_word("b", 2)};
  CHECK(word_str(apply_endo(phi, parse_word("aB", 2))) == "a");
  EndoMap id = EndoMap::identity(2);
  CHECK(compose_endo(phi, id) == phi);
  CHECK(compose_endo(id, phi) == phi);

  std::mt19937_64 rng(5);
  for (int t = 0; t < 100; ++t) {
    EndoMap f{2, {rand_unreduced(rng, 2, 3), rand_unreduced(rng, 2, 3)}};
    EndoMap g{2, {rand_unreduced(rng, 2, 3), rand_unreduced(rng, 2, 3)}};
    f.images[0] = reduce(f.images[0]);
    f.images[1] = reduce(f.images[1]);
    g.images[0] = reduce(g.images[0]);
    g.images[1] = reduce(g.images[1]);
    Word w = reduce(rand_unreduced(rng, 2, 6));
    CHECK(apply_endo(compose_endo(f, g), w) == apply_endo(f, apply_endo(g, w)));
  }
}

TEST_CASE("automorphism inversion round-trips") {
  EndoMap phi{2, {parse_word("ab", 2), parse_word("b", 2)}};
  EndoMap inv = invert_automorphism(phi);
  CHECK(compose_endo(phi, inv) == EndoMap::identity(2));
  CHECK(compose_endo(inv, phi) == EndoMap::identity(2));

  EndoMap bad{2, {parse_word("ab", 2), parse_word("ba", 2)}};
  CHECK_FALSE(is_automorphism(bad));
  CHECK_THROWS_AS(invert_automorphism(bad), NotAnAutomorphism);

  EndoMap proj{2, {parse_word("a", 2), parse_word("a", 2)}};
  CHECK_FALSE(is_automorphism(proj));
}

TEST_CASE("random Nielsen products invert exactly") {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> move(0, 2);
  for (int t = 0; t < 60; ++t) {
    int rank = 2 + t % 2;
    EndoMap phi = EndoMap::identity(rank);
    for (int s = 0; s < 6; ++s) {
      EndoMap m = EndoMap::identity(rank);
      std::uniform_int_distribution<int> gi(0, rank - 1);
      int i = gi(rng), j = gi(rng);
      switch (move(rng)) {
        case 0:
          m.images[i] = word_inverse(m.images[i]);
          break;
        case 1:
          if (i != j) m.images[i] = concat(m.images[i], m.images[j]);
          break;
        default:
          std::swap(m.images[i], m.images[j]);
      }
      phi = compose_endo(m, phi);
    }
    EndoMap inv = invert_automorphism(phi);
    CHECK(compose_endo(phi, inv) == EndoMap::identity(rank));
  }
}

TEST_CASE("subgroup graphs answer membership like brute force") {
  std::vector<Word> gens = {parse_word("aa", 2), parse_word("b", 2)};
  SubgroupGraph h = stallings_graph(gens, 2);
  CHECK(contains(h, parse_word("aabaa", 2)));
  CHECK(contains(h, parse_word("bb", 2)));
  CHECK_FALSE(contains(h, parse_word("a", 2)));
  CHECK_FALSE(contains(h, parse_word("aba", 2)));
  CHECK(contains(h, Word()));

  // index-2 subgroup: conjugation detection
  CyclicWord odd = CyclicWord::canonical({1});
  CHECK_FALSE(conjugate_into(h, odd));
  CHECK(conjugate_into(h, CyclicWord::canonical({1, 1})));
  CHECK_FALSE(conjugate_into(h, cyclic_reduce(parse_word("abaB", 2)).first));
  CHECK(conjugate_into(h, CyclicWord::canonical({1, 1, 2})));

  // <aba^-1>: membership only of powers of the conjugate
  SubgroupGraph k = stallings_graph({parse_word("abA", 2)}, 2);
  CHECK(contains(k, parse_word("abbA", 2)));
  CHECK_FALSE(contains(k, parse_word("b", 2)));
  CHECK(conjugate_into(k, CyclicWord::canonical({2, 2})));
  CHECK_FALSE(conjugate_into(k, CyclicWord::canonical({1})));
}

TEST_CASE("stallings enumeration matches closure on random instances") {
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<int> nlen(1, 4);
  for (int t = 0; t < 40; ++t) {
    std::vector<Word> gens;
    for (int k = 0; k < 2; ++k) {
      Word g = reduce(rand_unreduced(rng, 2, nlen(rng)));
      if (!g.empty()) gens.push_back(g);
    }
    if (gens.empty()) continue;
    SubgroupGraph h = stallings_graph(gens, 2);
    // every product of two generators or inverses must be contained
    for (const Word& u : gens)
      for (const Word& v : gens) {
        CHECK(contains(h, reduce(concat(u, v))));
        CHECK(contains(h, reduce(concat(u, word_inverse(v)))));
      }
  }
}
