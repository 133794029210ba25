#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "osx/graph.hpp"
#include "osx/words.hpp"

namespace osx {

// Identification of the fundamental group with the free group: each basis
// generator maps to a closed edge path at the base vertex.
struct Marking {
  int base_vertex = 0;  // vertex id
  std::vector<EdgePath> images;  // one closed path per generator
};

// Labels realizing the reverse identification: a spanning tree plus one
// word per non-tree edge, read off when a loop crosses it forward.
struct EdgeLabels {
  std::vector<char> in_tree;      // per edge index
  std::vector<Word> label;        // per edge index, empty on tree edges
  std::vector<int> parent_dart;   // per vertex index, toward the base, -1 there
  std::vector<int> depth;         // per vertex index
};

struct MarkedGraph {
  int rank = 0;
  MetricGraph g;
  Marking marking;
  // Optional user-supplied labels, keyed by edge id; when absent they are
  // derived from the marking.
  std::optional<std::map<int, Word>> given_labels;

  mutable std::optional<EdgeLabels> labels_cache;
};

struct ValidationIssue {
  std::string code;
  std::string detail;
};

// Interior point checks: connectivity, rank, positive lengths, unit volume,
// valence at least three, marking closed and pi1-invertible.
std::vector<ValidationIssue> validate(const MarkedGraph& x);

// Same structural and marking checks but lengths may vanish; the quotient
// valence condition replaces the plain one and the zero part must be a
// proper subgraph.
std::vector<ValidationIssue> validate_ext(const MarkedGraph& x);

// Tree path between two vertex indices through the labeling tree.
EdgePath tree_path(const MarkedGraph& x, int from_vidx, int to_vidx);

const EdgeLabels& edge_labels(const MarkedGraph& x);

// Conjugacy class read off a closed edge path (basepoint irrelevant).
CyclicWord loop_word(const MarkedGraph& x, const EdgePath& loop);

// Word labeling a path rel endpoints, conjugated back to the base vertex.
Word path_word_based(const MarkedGraph& x, const EdgePath& p);

// Tightened closed path at the base vertex representing w.
EdgePath word_to_path(const MarkedGraph& x, const Word& w);

// Length of the immersed loop representing the conjugacy class of w.
Rat translation_length(const MarkedGraph& x, const Word& w);

// Right action by an automorphism: precompose the marking.
MarkedGraph act(const MarkedGraph& x, const EndoMap& phi);

// Collapse each component of the forest (given by edge ids) to a vertex and
// rescale the survivors back to unit volume.
MarkedGraph collapse_forest(const MarkedGraph& x, const std::vector<int>& forest);

// Labels for the complement of a chosen spanning tree (edge id -> word).
std::map<int, Word> spanning_tree_basis(const MarkedGraph& x,
                                        const std::vector<int>& tree);

}  // namespace osx
