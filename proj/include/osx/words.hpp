#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "osx/error.hpp"

namespace osx {

// A letter is a nonzero int: +g is the g-th basis generator (1-based),
// -g its inverse. Serialized as lowercase/uppercase ASCII ("abA" = a b a^-1).
using Letter = int;

inline Letter inv(Letter x) { return -x; }

// Letter order a < a^-1 < b < b^-1 < ...; used for canonical rotations
// and witness tie-breaking.
inline int letter_key(Letter x) {
  int g = x > 0 ? x : -x;
  return 2 * (g - 1) + (x < 0 ? 1 : 0);
}

struct Word {
  std::vector<Letter> l;

  Word() = default;
  explicit Word(std::vector<Letter> ls) : l(std::move(ls)) {}

  size_t size() const { return l.size(); }
  bool empty() const { return l.empty(); }
  bool operator==(const Word& o) const = default;
};

Word parse_word(const std::string& s, int rank);
std::string word_str(const Word& w);

Word word_inverse(const Word& w);
Word concat(const Word& a, const Word& b);  // free reduction applied

// Freely reduced form of w.
Word reduce(const Word& w);

// Cyclically reduced conjugacy-class representative: no wrap-around
// cancellation, lexicographically least rotation in the letter order above.
struct CyclicWord {
  std::vector<Letter> l;

  CyclicWord() = default;
  static CyclicWord canonical(std::vector<Letter> cyclically_reduced);

  size_t size() const { return l.size(); }
  bool empty() const { return l.empty(); }
  Word word() const { return Word(l); }
  bool operator==(const CyclicWord& o) const = default;
  bool operator<(const CyclicWord& o) const;  // length, then letter order
};

// w = u * c * u^-1 after free reduction.
std::pair<CyclicWord, Word> cyclic_reduce(const Word& w);

std::string cyclic_str(const CyclicWord& c);

// Rotation of the canonical form by k (test helper and oracle input).
CyclicWord rotate(const CyclicWord& c, size_t k);

struct EndoMap {
  int rank = 0;
  std::vector<Word> images;  // images[i] = image of generator i+1

  static EndoMap identity(int rank);
  bool operator==(const EndoMap& o) const = default;
};

Word apply_endo(const EndoMap& phi, const Word& w);
// (f . g)(x) = f(g(x))
EndoMap compose_endo(const EndoMap& f, const EndoMap& g);

// Inverse by Nielsen reduction of the image tuple with move recording.
// Throws NotAnAutomorphism when reduction terminates away from a
// permuted-inverted basis.
EndoMap invert_automorphism(const EndoMap& phi);

bool is_automorphism(const EndoMap& phi);

// Folded core graph of a finitely generated subgroup (Stallings graph).
// Vertex 0 is the basepoint; next[v][slot] is the endpoint of the edge
// labeled by the letter with letter_key == slot, or -1.
struct SubgroupGraph {
  int rank = 0;
  std::vector<std::vector<int>> next;  // size 2*rank per vertex
  std::vector<bool> core;              // vertex lies on the core

  int step(int v, Letter x) const { return next[v][letter_key(x)]; }
  size_t vertex_count() const { return next.size(); }
};

SubgroupGraph stallings_graph(const std::vector<Word>& gens, int rank);

// w must be reduced; true iff w labels a closed path at the basepoint.
bool contains(const SubgroupGraph& h, const Word& w);

// True iff some rotation of c labels a closed path at some core vertex.
bool conjugate_into(const SubgroupGraph& h, const CyclicWord& c);

}  // namespace osx
