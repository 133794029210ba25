#include "osx/graph.hpp"

#include <algorithm>
#include <numeric>

namespace osx {

int MetricGraph::vindex(int id) const {
  for (size_t i = 0; i < vertex_ids.size(); ++i)
    if (vertex_ids[i] == id) return (int)i;
  throw MalformedInput("unknown vertex id " + std::to_string(id));
}

int MetricGraph::eindex(int id) const {
  for (size_t i = 0; i < edges.size(); ++i)
    if (edges[i].id == id) return (int)i;
  throw MalformedInput("unknown edge id " + std::to_string(id));
}

bool MetricGraph::connected() const {
  if (vertex_ids.empty()) return false;
  std::vector<char> seen(nv(), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (const Edge& e : edges) {
      int a = vindex(e.from), b = vindex(e.to);
      if (a == v && !seen[b]) seen[b] = 1, stack.push_back(b);
      if (b == v && !seen[a]) seen[a] = 1, stack.push_back(a);
    }
  }
  return std::all_of(seen.begin(), seen.end(), [](char c) { return c != 0; });
}

Rat MetricGraph::volume() const {
  Rat v = 0;
  for (const Edge& e : edges) v += e.len;
  return v;
}

int MetricGraph::valence(int vidx) const {
  int id = vertex_ids[vidx];
  int n = 0;
  for (const Edge& e : edges) {
    if (e.from == id) ++n;
    if (e.to == id) ++n;  // a loop contributes twice
  }
  return n;
}

int dart_src(const MetricGraph& g, int d) {
  const Edge& e = g.edges[dart_edge(d)];
  return g.vindex(dart_rev(d) ? e.to : e.from);
}

int dart_dst(const MetricGraph& g, int d) {
  const Edge& e = g.edges[dart_edge(d)];
  return g.vindex(dart_rev(d) ? e.from : e.to);
}

bool is_path(const MetricGraph& g, const EdgePath& p) {
  for (size_t i = 0; i + 1 < p.size(); ++i)
    if (dart_dst(g, p[i]) != dart_src(g, p[i + 1])) return false;
  return true;
}

EdgePath path_inverse(const EdgePath& p) {
  EdgePath q(p.rbegin(), p.rend());
  for (int& d : q) d = dart_opp(d);
  return q;
}

EdgePath tighten(const EdgePath& p, bool cyclic) {
  EdgePath out;
  out.reserve(p.size());
  for (int d : p) {
    if (!out.empty() && out.back() == dart_opp(d))
      out.pop_back();
    else
      out.push_back(d);
  }
  if (cyclic) {
    size_t lo = 0, hi = out.size();
    while (hi - lo >= 2 && out[lo] == dart_opp(out[hi - 1])) ++lo, --hi;
    out = EdgePath(out.begin() + lo, out.begin() + hi);
  }
  return out;
}

void append_tight(EdgePath& p, const EdgePath& q) {
  for (int d : q) {
    if (!p.empty() && p.back() == dart_opp(d))
      p.pop_back();
    else
      p.push_back(d);
  }
}

Rat path_length(const MetricGraph& g, const EdgePath& p) {
  Rat s = 0;
  for (int d : p) s += g.edges[dart_edge(d)].len;
  return s;
}

}  // namespace osx
