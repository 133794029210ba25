#include "osx/completion.hpp"

#include <algorithm>

namespace osx {

CompletionPoint as_completion(const MarkedGraph& x) { return CompletionPoint{x}; }

std::vector<ValidationIssue> validate_completion(const CompletionPoint& T) {
  std::vector<ValidationIssue> out = validate_ext(T.m);
  bool has_positive = false;
  for (const Edge& e : T.m.g.edges) has_positive |= (e.len > 0);
  if (!has_positive)
    out.push_back({"ZeroPartNotProper", "no positive-length edge remains"});
  if (!out.empty()) return out;

  ZeroParts z = zero_parts(T.m.g);
  std::vector<int> val(z.ncomp, 0);
  for (size_t e = 0; e < T.m.g.ne(); ++e) {
    if (z.zero_edge[e]) continue;
    val[z.comp[T.m.g.vindex(T.m.g.edges[e].from)]]++;
    val[z.comp[T.m.g.vindex(T.m.g.edges[e].to)]]++;
  }
  for (int c = 0; c < z.ncomp; ++c) {
    int bonus = z.group_loops[c].empty() ? 0 : 2;
    if (val[c] + bonus < 3)
      out.push_back({"QuotientValenceViolation",
                     "collapsed vertex " + std::to_string(c) +
                         " has valence " + std::to_string(val[c]) +
                         (bonus ? " with a nontrivial group" : "")});
  }
  return out;
}

GoGView collapse_zero(const CompletionPoint& T) {
  const MetricGraph& g = T.m.g;
  ZeroParts z = zero_parts(g);
  std::vector<int> rep_id(z.ncomp, -1), root_vidx(z.ncomp, -1);
  for (size_t v = 0; v < g.nv(); ++v) {
    int c = z.comp[v];
    if (rep_id[c] < 0 || g.vertex_ids[v] < rep_id[c]) rep_id[c] = g.vertex_ids[v];
    if (z.zparent[v] < 0) root_vidx[c] = (int)v;
  }
  GoGView out;
  for (int c = 0; c < z.ncomp; ++c) {
    GoGVertex v{rep_id[c], {}};
    for (size_t j = 0; j < z.group_loops[c].size(); ++j) {
      EdgePath p = group_element_path(g, z, c, root_vidx[c],
                                      GroupChoice{(int)j, 1});
      v.group.push_back(path_word_based(T.m, p));
    }
    out.vertices.push_back(std::move(v));
  }
  for (const Edge& e : g.edges)
    if (e.len > 0)
      out.edges.push_back({e.id, rep_id[z.comp[g.vindex(e.from)]],
                           rep_id[z.comp[g.vindex(e.to)]], e.len});
  return out;
}

Rat qvol(const CompletionPoint& T) {
  Rat s = 0;
  for (const Edge& e : T.m.g.edges)
    if (e.len > 0) s += e.len;
  return s;
}

Rat translation_length_ext(const CompletionPoint& T, const Word& w) {
  if (reduce(w).empty()) return 0;
  return translation_length(T.m, w);
}

bool is_elliptic(const CompletionPoint& T, const std::vector<Word>& gens) {
  std::vector<Word> gs;
  for (const Word& g : gens) {
    Word r = reduce(g);
    if (!r.empty()) gs.push_back(r);
  }
  for (const Word& g : gs)
    if (translation_length_ext(T, g) != 0) return false;
  for (size_t i = 0; i < gs.size(); ++i)
    for (size_t j = i + 1; j < gs.size(); ++j)
      if (translation_length_ext(T, concat(gs[i], gs[j])) != 0) return false;
  return true;
}

std::vector<Candidate> candidates_ext(const CompletionPoint& S) {
  return candidates_ext(S.m);
}
std::vector<Candidate> candidates_ext(const CompletionPoint& S,
                                      const GroupChooser& choose) {
  return candidates_ext(S.m, choose);
}

DistanceResult distance_ext(const CompletionPoint& S, const CompletionPoint& T) {
  GoGView gog = collapse_zero(S);
  for (const GoGVertex& v : gog.vertices) {
    if (v.group.empty() || is_elliptic(T, v.group)) continue;
    DistanceResult r;
    r.factor = StretchFactor::inf();
    for (const Word& g : v.group)
      if (translation_length_ext(T, g) != 0) {
        r.elliptic_failure = g;
        break;
      }
    if (!r.elliptic_failure) {
      // a pairwise product must be the offender
      for (size_t i = 0; i < v.group.size() && !r.elliptic_failure; ++i)
        for (size_t j = i + 1; j < v.group.size(); ++j)
          if (translation_length_ext(T, concat(v.group[i], v.group[j])) != 0) {
            r.elliptic_failure = concat(v.group[i], v.group[j]);
            break;
          }
    }
    return r;
  }
  return max_stretch_over(S.m, T.m, candidates_ext(S.m));
}

bool equals(const CompletionPoint& S, const CompletionPoint& T) {
  DistanceResult a = distance_ext(S, T);
  if (a.factor.infinite || a.factor.value != 1) return false;
  DistanceResult b = distance_ext(T, S);
  return !b.factor.infinite && b.factor.value == 1;
}

MarkedGraph approximate_from_interior(const CompletionPoint& T, const Rat& eps) {
  if (eps <= 0 || eps >= 1) throw DomainError("eps must lie in (0,1)");
  int zeros = 0;
  for (const Edge& e : T.m.g.edges) zeros += (e.len == 0);
  if (zeros == 0) return T.m;
  MarkedGraph y = T.m;
  y.labels_cache.reset();
  for (Edge& e : y.g.edges)
    e.len = (e.len == 0) ? Rat(eps / zeros) : Rat(e.len * (1 - eps));
  return y;
}

std::vector<MarkedGraph> pinch_sequence(const MarkedGraph& x,
                                        const std::vector<int>& zedges,
                                        const std::vector<Rat>& schedule) {
  std::vector<char> in_z(x.g.ne(), 0);
  for (int id : zedges) {
    int e = x.g.eindex(id);
    if (in_z[e]) throw DomainError("repeated edge in the pinched subgraph");
    in_z[e] = 1;
  }
  Rat volz = 0;
  for (size_t e = 0; e < x.g.ne(); ++e)
    if (in_z[e]) volz += x.g.edges[e].len;
  if (zedges.empty() || volz >= x.g.volume())
    throw DomainError("pinched subgraph must be proper and nonempty");
  for (size_t i = 0; i < schedule.size(); ++i) {
    if (schedule[i] <= 0 || schedule[i] >= 1) throw ScheduleNotDecreasing();
    if (i > 0 && schedule[i] >= schedule[i - 1]) throw ScheduleNotDecreasing();
  }
  std::vector<MarkedGraph> out;
  for (const Rat& s : schedule) {
    MarkedGraph y = x;
    y.labels_cache.reset();
    for (size_t e = 0; e < x.g.ne(); ++e)
      y.g.edges[e].len = in_z[e] ? Rat(x.g.edges[e].len * s / volz)
                                 : Rat(x.g.edges[e].len * (1 - s) / (1 - volz));
    out.push_back(std::move(y));
  }
  return out;
}

}  // namespace osx
