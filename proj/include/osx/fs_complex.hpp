#pragma once

#include "osx/completion.hpp"

namespace osx {

// A shared simplex: one topological type carrying both points as length
// assignments over its edges (zero entries mean the point sits on a face).
struct SimplexCoords {
  CompletionPoint ref;
  std::map<int, Rat> x_coords;  // edge id -> length
  std::map<int, Rat> y_coords;
};

struct LengthVector {
  std::vector<CyclicWord> probes;
  std::vector<Rat> values;
};

// Collapse everything outside E (edge ids) and rescale E to volume 1.
CompletionPoint face(const CompletionPoint& x, const std::vector<int>& keep);

// Distance from x to the face spanned by the candidate-image subgraph H:
// the reciprocal of H's volume, cross-checked against the candidate maximum.
Rat face_distance(const MarkedGraph& x, const std::vector<int>& H);

std::optional<SimplexCoords> common_simplex(const CompletionPoint& x,
                                            const CompletionPoint& y);

bool euclidean_ball_contains(const CompletionPoint& x, const CompletionPoint& y,
                             const Rat& eps);

LengthVector axes_vector(const CompletionPoint& T, const std::vector<Word>& P);

// The rank-2 separation example: a one-loop splitting x with vertex group on
// the second generator, and a rose y whose length-function vector on {a, b}
// is 1/m-close to x's while the stretch factor from y to x stays away from 1.
struct StrictnessPair {
  CompletionPoint x;
  CompletionPoint y;
  Rat main_len;   // rose length of the first edge
  Rat small_len;  // rose length of the second edge
};

StrictnessPair strictness_family(int i, int m);

// Exact particular solution of A v = b (free variables set to zero), or
// nothing when inconsistent.
std::optional<std::vector<Rat>> solve_linear(std::vector<std::vector<Rat>> A,
                                             std::vector<Rat> b);

}  // namespace osx
