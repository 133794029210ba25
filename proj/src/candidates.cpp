#include "osx/candidates.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>

namespace osx {

const char* kind_name(CandidateKind k) {
  switch (k) {
    case CandidateKind::Circle: return "circle";
    case CandidateKind::FigureEight: return "figure_eight";
    case CandidateKind::Barbell: return "barbell";
    case CandidateKind::PinchedBarbell: return "pinched_barbell";
    case CandidateKind::HalfPinchedBarbell: return "half_pinched_barbell";
    case CandidateKind::PinchedFigureEight: return "pinched_figure_eight";
  }
  return "?";
}

ZeroParts zero_parts(const MetricGraph& g) {
  ZeroParts z;
  z.zero_edge.assign(g.ne(), 0);
  for (size_t e = 0; e < g.ne(); ++e) z.zero_edge[e] = (g.edges[e].len == 0);
  z.comp.assign(g.nv(), -1);
  z.zparent.assign(g.nv(), -1);
  std::vector<char> tree_edge(g.ne(), 0);
  for (size_t v0 = 0; v0 < g.nv(); ++v0) {
    if (z.comp[v0] >= 0) continue;
    int c = z.ncomp++;
    z.comp[v0] = c;
    std::vector<int> queue{(int)v0};
    for (size_t qi = 0; qi < queue.size(); ++qi) {
      int v = queue[qi];
      for (size_t e = 0; e < g.ne(); ++e) {
        if (!z.zero_edge[e]) continue;
        for (bool rev : {false, true}) {
          int d = dart((int)e, rev);
          if (dart_src(g, d) != v) continue;
          int w = dart_dst(g, d);
          if (z.comp[w] >= 0) continue;
          z.comp[w] = c;
          z.zparent[w] = dart_opp(d);
          tree_edge[e] = 1;
          queue.push_back(w);
        }
      }
    }
  }
  z.group_loops.assign(z.ncomp, {});
  for (size_t e = 0; e < g.ne(); ++e)
    if (z.zero_edge[e] && !tree_edge[e])
      z.group_loops[z.comp[g.vindex(g.edges[e].from)]].push_back((int)e);
  return z;
}

EdgePath zero_tree_path(const MetricGraph& g, const ZeroParts& z, int u_vidx,
                        int v_vidx) {
  invariant(z.comp[u_vidx] == z.comp[v_vidx],
            "zero_tree_path endpoints in different components");
  auto to_root = [&](int v) {
    EdgePath p;
    while (z.zparent[v] >= 0) {
      p.push_back(z.zparent[v]);
      v = dart_dst(g, z.zparent[v]);
    }
    return p;
  };
  EdgePath p = to_root(u_vidx);
  append_tight(p, path_inverse(to_root(v_vidx)));
  return p;
}

EdgePath group_element_path(const MetricGraph& g, const ZeroParts& z, int comp,
                            int anchor_vidx, GroupChoice c) {
  const auto& loops = z.group_loops[comp];
  invariant(!loops.empty(), "group element requested at a trivial group");
  invariant(c.power != 0, "group element power must be nonzero");
  int e = loops[((c.loop_index % (int)loops.size()) + (int)loops.size()) %
                (int)loops.size()];
  int zd = dart(e, false);
  EdgePath unit = zero_tree_path(g, z, anchor_vidx, dart_src(g, zd));
  unit.push_back(zd);
  append_tight(unit, zero_tree_path(g, z, dart_dst(g, zd), anchor_vidx));
  unit = tighten(unit, false);
  if (c.power < 0) unit = path_inverse(unit);
  EdgePath out;
  for (int i = 0; i < std::abs(c.power); ++i) append_tight(out, unit);
  return out;
}

namespace {

// Quotient multigraph: vertices are zero components, edges the positive ones.
struct QView {
  const MarkedGraph& x;
  ZeroParts z;
  std::vector<int> pe;        // positive edge indices
  std::vector<int> qa, qb;    // component endpoints, parallel to pe

  explicit QView(const MarkedGraph& mg) : x(mg), z(zero_parts(mg.g)) {
    for (size_t e = 0; e < mg.g.ne(); ++e)
      if (!z.zero_edge[e]) {
        pe.push_back((int)e);
        qa.push_back(z.comp[mg.g.vindex(mg.g.edges[e].from)]);
        qb.push_back(z.comp[mg.g.vindex(mg.g.edges[e].to)]);
      }
  }

  int nq() const { return z.ncomp; }
  int qsrc(int qd) const { return dart_rev(qd) ? qb[dart_edge(qd)] : qa[dart_edge(qd)]; }
  int qdst(int qd) const { return dart_rev(qd) ? qa[dart_edge(qd)] : qb[dart_edge(qd)]; }
  // full-graph dart of a quotient dart
  int full(int qd) const { return dart(pe[dart_edge(qd)], dart_rev(qd)); }
  bool nontrivial(int comp) const { return !z.group_loops[comp].empty(); }
};

using QPath = std::vector<int>;  // quotient darts

QPath qreverse(const QPath& p) {
  QPath q(p.rbegin(), p.rend());
  for (int& d : q) d = dart_opp(d);
  return q;
}

QPath canonical_cycle(const QPath& c) {
  QPath best;
  for (const QPath& base : {c, qreverse(c)}) {
    for (size_t r = 0; r < base.size(); ++r) {
      QPath rot(base.begin() + r, base.end());
      rot.insert(rot.end(), base.begin(), base.begin() + r);
      if (best.empty() || rot < best) best = rot;
    }
  }
  return best;
}

std::vector<QPath> embedded_circles(const QView& q) {
  std::set<QPath> seen;
  std::vector<QPath> out;
  QPath path;
  std::vector<char> vis(q.nq(), 0), used((q.pe.size()) ? q.pe.size() : 1, 0);
  std::function<void(int, int)> dfs = [&](int s, int cur) {
    for (int i = 0; i < (int)q.pe.size(); ++i) {
      if (used[i]) continue;
      for (bool rev : {false, true}) {
        int qd = dart(i, rev);
        if (q.qsrc(qd) != cur) continue;
        int w = q.qdst(qd);
        if (w == s) {
          path.push_back(qd);
          QPath can = canonical_cycle(path);
          if (seen.insert(can).second) out.push_back(can);
          path.pop_back();
        } else if (!vis[w]) {
          vis[w] = 1;
          used[i] = 1;
          path.push_back(qd);
          dfs(s, w);
          path.pop_back();
          used[i] = 0;
          vis[w] = 0;
        }
      }
    }
  };
  for (int s = 0; s < q.nq(); ++s) {
    vis.assign(q.nq(), 0);
    vis[s] = 1;
    dfs(s, s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Vertex-simple quotient paths from u to v avoiding `forbidden` vertices.
std::vector<QPath> embedded_paths(const QView& q, int u, int v,
                                  const std::set<int>& forbidden) {
  std::vector<QPath> out;
  QPath path;
  std::vector<char> vis(q.nq(), 0);
  vis[u] = 1;
  std::function<void(int)> dfs = [&](int cur) {
    for (int i = 0; i < (int)q.pe.size(); ++i) {
      for (bool rev : {false, true}) {
        int qd = dart(i, rev);
        if (q.qsrc(qd) != cur) continue;
        int w = q.qdst(qd);
        if (w == v && v != u) {
          path.push_back(qd);
          out.push_back(path);
          path.pop_back();
        } else if (w != u && !vis[w] && !forbidden.count(w)) {
          vis[w] = 1;
          path.push_back(qd);
          dfs(w);
          path.pop_back();
          vis[w] = 0;
        }
      }
    }
  };
  dfs(u);
  std::sort(out.begin(), out.end());
  return out;
}

std::set<int> cycle_vertices(const QView& q, const QPath& c) {
  std::set<int> s;
  for (int qd : c) s.insert(q.qsrc(qd));
  return s;
}

std::set<int> cycle_edges(const QPath& c) {
  std::set<int> s;
  for (int qd : c) s.insert(dart_edge(qd));
  return s;
}

QPath rotate_at(const QView& q, const QPath& c, int comp) {
  for (size_t r = 0; r < c.size(); ++r)
    if (q.qsrc(c[r]) == comp) {
      QPath rot(c.begin() + r, c.end());
      rot.insert(rot.end(), c.begin(), c.begin() + r);
      return rot;
    }
  throw InternalInvariant("rotate_at: component not on the cycle");
}

struct Assembler {
  const QView& q;
  int cur;  // full vertex index

  int fsrc(int qd) const { return dart_src(q.x.g, q.full(qd)); }
  int fdst(int qd) const { return dart_dst(q.x.g, q.full(qd)); }

  void walk(EdgePath& out, const QPath& p) {
    for (int qd : p) {
      append_tight(out, zero_tree_path(q.x.g, q.z, cur, fsrc(qd)));
      int fd = q.full(qd);
      if (!out.empty() && out.back() == dart_opp(fd))
        out.pop_back();
      else
        out.push_back(fd);
      cur = fdst(qd);
    }
  }

  // Closed circuit of the cycle based at the current full vertex.
  void circuit(EdgePath& out, const QPath& cycle) {
    int home = cur;
    walk(out, cycle);
    append_tight(out, zero_tree_path(q.x.g, q.z, cur, home));
    cur = home;
  }

  void insert_group(EdgePath& out, int comp, GroupChoice c) {
    append_tight(out, group_element_path(q.x.g, q.z, comp, cur, c));
  }
};

void emit(const MarkedGraph& x, CandidateKind kind, EdgePath loop,
          std::map<CyclicWord, Candidate>& acc) {
  loop = tighten(loop, /*cyclic=*/true);
  CyclicWord w = loop_word(x, loop);
  invariant(!w.empty(), "candidate loop is nullhomotopic");
  acc.emplace(w, Candidate{kind, std::move(loop), w});
}

}  // namespace

std::vector<Candidate> candidates_ext(const MarkedGraph& x,
                                      const GroupChooser& choose) {
  QView q(x);
  std::map<CyclicWord, Candidate> acc;
  std::vector<QPath> circles = embedded_circles(q);

  auto anchor_of = [&](const QPath& p) {
    return dart_src(x.g, q.full(p.front()));
  };

  for (const QPath& c : circles) {
    Assembler a{q, anchor_of(c)};
    EdgePath loop;
    a.circuit(loop, c);
    emit(x, CandidateKind::Circle, loop, acc);
  }

  for (size_t i = 0; i < circles.size(); ++i) {
    for (size_t j = i + 1; j < circles.size(); ++j) {
      const QPath &c1 = circles[i], &c2 = circles[j];
      std::set<int> e1 = cycle_edges(c1), e2 = cycle_edges(c2);
      std::vector<int> shared_e;
      std::set_intersection(e1.begin(), e1.end(), e2.begin(), e2.end(),
                            std::back_inserter(shared_e));
      if (!shared_e.empty()) continue;
      std::set<int> v1 = cycle_vertices(q, c1), v2 = cycle_vertices(q, c2);
      std::vector<int> shared_v;
      std::set_intersection(v1.begin(), v1.end(), v2.begin(), v2.end(),
                            std::back_inserter(shared_v));
      if (shared_v.size() == 1) {
        int v = shared_v[0];
        for (const QPath& second : {rotate_at(q, c2, v),
                                    rotate_at(q, qreverse(c2), v)}) {
          QPath first = rotate_at(q, c1, v);
          Assembler a{q, anchor_of(first)};
          EdgePath loop;
          a.circuit(loop, first);
          a.circuit(loop, second);
          emit(x, CandidateKind::FigureEight, loop, acc);
        }
      } else if (shared_v.empty()) {
        std::set<int> forb;
        for (int v : v1) forb.insert(v);
        for (int v : v2) forb.insert(v);
        for (int u : v1) {
          for (int v : v2) {
            std::set<int> interior_forb = forb;
            interior_forb.erase(u);
            interior_forb.erase(v);
            for (const QPath& bar : embedded_paths(q, u, v, interior_forb)) {
              for (const QPath& second : {rotate_at(q, c2, v),
                                          rotate_at(q, qreverse(c2), v)}) {
                QPath first = rotate_at(q, c1, u);
                Assembler a{q, anchor_of(first)};
                EdgePath loop;
                a.circuit(loop, first);
                EdgePath barpath;
                a.walk(barpath, bar);
                append_tight(loop, barpath);
                a.circuit(loop, second);
                append_tight(loop, path_inverse(barpath));
                a.cur = anchor_of(first);
                emit(x, CandidateKind::Barbell, loop, acc);
              }
            }
          }
        }
      }
    }
  }

  // Pinched shapes need nontrivial groups.
  for (int u = 0; u < q.nq(); ++u) {
    if (!q.nontrivial(u)) continue;

    // Bar that is a single positive loop edge at u.
    for (int i = 0; i < (int)q.pe.size(); ++i) {
      if (q.qa[i] != u || q.qb[i] != u) continue;
      int fd = dart(q.pe[i], false);
      int a0 = dart_src(x.g, fd), a1 = dart_dst(x.g, fd);
      EdgePath loop = group_element_path(x.g, q.z, u, a0, choose(u, 0));
      loop.push_back(fd);
      append_tight(loop, group_element_path(x.g, q.z, u, a1, choose(u, 1)));
      loop.push_back(dart_opp(fd));
      emit(x, CandidateKind::PinchedBarbell, loop, acc);
    }

    // Bar between two pinched bells.
    for (int v = u + 1; v < q.nq(); ++v) {
      if (!q.nontrivial(v)) continue;
      for (const QPath& bar : embedded_paths(q, u, v, {})) {
        Assembler a{q, anchor_of(bar)};
        EdgePath loop =
            group_element_path(x.g, q.z, u, a.cur, choose(u, 0));
        EdgePath barpath;
        a.walk(barpath, bar);
        append_tight(loop, barpath);
        append_tight(loop,
                     group_element_path(x.g, q.z, v, a.cur, choose(v, 1)));
        append_tight(loop, path_inverse(barpath));
        emit(x, CandidateKind::PinchedBarbell, loop, acc);
      }
    }

    for (const QPath& c : circles) {
      std::set<int> cv = cycle_vertices(q, c);
      if (cv.count(u)) {
        // Circle through the group's own vertex.
        for (const QPath& circ : {rotate_at(q, c, u),
                                  rotate_at(q, qreverse(c), u)}) {
          Assembler a{q, anchor_of(circ)};
          EdgePath loop;
          a.circuit(loop, circ);
          append_tight(loop,
                       group_element_path(x.g, q.z, u, a.cur, choose(u, 0)));
          emit(x, CandidateKind::PinchedFigureEight, loop, acc);
        }
      } else {
        // Bar from the pinched bell out to the circle.
        std::set<int> forb(cv.begin(), cv.end());
        for (int b : cv) {
          std::set<int> interior_forb = forb;
          interior_forb.erase(b);
          for (const QPath& bar : embedded_paths(q, u, b, interior_forb)) {
            for (const QPath& circ : {rotate_at(q, c, b),
                                      rotate_at(q, qreverse(c), b)}) {
              Assembler a{q, anchor_of(bar)};
              EdgePath loop =
                  group_element_path(x.g, q.z, u, a.cur, choose(u, 0));
              EdgePath barpath;
              a.walk(barpath, bar);
              append_tight(loop, barpath);
              a.circuit(loop, circ);
              append_tight(loop, path_inverse(barpath));
              emit(x, CandidateKind::HalfPinchedBarbell, loop, acc);
            }
          }
        }
      }
    }
  }

  std::vector<Candidate> out;
  for (auto& [w, cand] : acc) out.push_back(std::move(cand));
  return out;
}

std::vector<Candidate> candidates_ext(const MarkedGraph& x) {
  return candidates_ext(x, [](int, int) { return GroupChoice{0, 1}; });
}

std::vector<Candidate> candidates(const MarkedGraph& x) {
  return candidates_ext(x);
}

}  // namespace osx
