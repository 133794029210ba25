#pragma once

#include "osx/metric.hpp"

namespace osx {

// A point of the simplicial completion: same data as a marked graph but edge
// lengths may vanish; the zero part encodes vertex groups of a splitting.
struct CompletionPoint {
  MarkedGraph m;
};

struct GoGVertex {
  int id;                    // representative original vertex id
  std::vector<Word> group;   // generators of the vertex group (may be empty)
};

struct GoGEdge {
  int id;  // original edge id
  int from, to;  // GoGVertex ids
  Rat len;
};

struct GoGView {
  std::vector<GoGVertex> vertices;
  std::vector<GoGEdge> edges;
};

CompletionPoint as_completion(const MarkedGraph& x);

std::vector<ValidationIssue> validate_completion(const CompletionPoint& T);

GoGView collapse_zero(const CompletionPoint& T);

// Sum of the positive lengths; 1 on every valid point.
Rat qvol(const CompletionPoint& T);

// Length of the immersed loop of w, zero-length edges contributing nothing.
Rat translation_length_ext(const CompletionPoint& T, const Word& w);

// True iff the subgroup generated by gens fixes a point of the splitting:
// every generator and every pairwise product has zero length.
bool is_elliptic(const CompletionPoint& T, const std::vector<Word>& gens);

std::vector<Candidate> candidates_ext(const CompletionPoint& S);
std::vector<Candidate> candidates_ext(const CompletionPoint& S,
                                      const GroupChooser& choose);

// INFINITE iff some vertex group of S is not elliptic in T; otherwise the
// maximal candidate stretch.
DistanceResult distance_ext(const CompletionPoint& S, const CompletionPoint& T);

bool equals(const CompletionPoint& S, const CompletionPoint& T);

// Blow the zero part back up: positive lengths scaled by 1-eps, each zero
// edge given eps / (number of zero edges).
MarkedGraph approximate_from_interior(const CompletionPoint& T, const Rat& eps);

// Shrink the subgraph Z (edge ids) along a strictly decreasing positive
// schedule; term i gives Z total length schedule[i], rest rescaled so the
// volume stays 1.
std::vector<MarkedGraph> pinch_sequence(const MarkedGraph& x,
                                        const std::vector<int>& zedges,
                                        const std::vector<Rat>& schedule);

}  // namespace osx
