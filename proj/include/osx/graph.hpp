#pragma once

#include <map>
#include <vector>

#include "osx/error.hpp"
#include "osx/rational.hpp"

namespace osx {

struct Edge {
  int id;
  int from, to;  // vertex ids
  Rat len;
};

struct MetricGraph {
  std::vector<int> vertex_ids;
  std::vector<Edge> edges;

  size_t nv() const { return vertex_ids.size(); }
  size_t ne() const { return edges.size(); }

  int vindex(int id) const;
  int eindex(int id) const;
  bool connected() const;
  Rat volume() const;
  int valence(int vidx) const;  // darts incident to the vertex
};

// A dart is a directed edge traversal: 2*edge_index + (reversed ? 1 : 0).
inline int dart(int eidx, bool rev) { return 2 * eidx + (rev ? 1 : 0); }
inline int dart_edge(int d) { return d / 2; }
inline bool dart_rev(int d) { return d & 1; }
inline int dart_opp(int d) { return d ^ 1; }

int dart_src(const MetricGraph& g, int d);  // vertex index
int dart_dst(const MetricGraph& g, int d);

// Sequence of darts; consecutive darts share endpoints.
using EdgePath = std::vector<int>;

bool is_path(const MetricGraph& g, const EdgePath& p);
EdgePath path_inverse(const EdgePath& p);

// Immersed representative: free homotopy rel endpoints, or free homotopy
// of loops when cyclic.
EdgePath tighten(const EdgePath& p, bool cyclic);

// Appends q to p with cancellation at the junction (p stays tightened if
// both inputs are).
void append_tight(EdgePath& p, const EdgePath& q);

Rat path_length(const MetricGraph& g, const EdgePath& p);

}  // namespace osx
