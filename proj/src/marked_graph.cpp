#include "osx/marked_graph.hpp"

#include <algorithm>
#include <numeric>

namespace osx {

namespace {

struct UF {
  std::vector<int> p;
  explicit UF(size_t n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  int find(int a) { return p[a] == a ? a : p[a] = find(p[a]); }
  bool join(int a, int b) {
    a = find(a), b = find(b);
    if (a == b) return false;
    p[b] = a;
    return true;
  }
};

// Spanning tree preferring zero-length edges, so the tree restricted to the
// degenerate part spans each of its components.
std::vector<char> default_tree(const MetricGraph& g) {
  std::vector<int> order(g.ne());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return (g.edges[a].len == 0) > (g.edges[b].len == 0);
  });
  UF uf(g.nv());
  std::vector<char> in_tree(g.ne(), 0);
  for (int e : order) {
    int a = g.vindex(g.edges[e].from), b = g.vindex(g.edges[e].to);
    if (uf.join(a, b)) in_tree[e] = 1;
  }
  return in_tree;
}

void root_tree(const MarkedGraph& x, EdgeLabels& lab) {
  const MetricGraph& g = x.g;
  lab.parent_dart.assign(g.nv(), -1);
  lab.depth.assign(g.nv(), -1);
  int base = g.vindex(x.marking.base_vertex);
  lab.depth[base] = 0;
  std::vector<int> queue{base};
  for (size_t qi = 0; qi < queue.size(); ++qi) {
    int v = queue[qi];
    for (size_t e = 0; e < g.ne(); ++e) {
      if (!lab.in_tree[e]) continue;
      for (bool rev : {false, true}) {
        int d = dart((int)e, rev);
        if (dart_src(g, d) != v) continue;
        int w = dart_dst(g, d);
        if (lab.depth[w] >= 0) continue;
        lab.depth[w] = lab.depth[v] + 1;
        lab.parent_dart[w] = dart_opp(d);  // points from w toward the base
        queue.push_back(w);
      }
    }
  }
  for (int d : lab.depth)
    if (d < 0) throw DomainError("spanning tree does not reach every vertex");
}

Word theta_word(const MarkedGraph& x, const EdgeLabels& lab,
                const std::vector<int>& symbol_of_edge, const EdgePath& p) {
  Word w;
  for (int d : p) {
    int e = dart_edge(d);
    if (lab.in_tree[e]) continue;
    Letter y = symbol_of_edge[e];
    w = concat(w, Word({dart_rev(d) ? -y : y}));
  }
  return w;
}

EdgeLabels derive_labels(const MarkedGraph& x, std::vector<char> in_tree) {
  EdgeLabels lab;
  lab.in_tree = std::move(in_tree);
  root_tree(x, lab);

  std::vector<int> symbol_of_edge(x.g.ne(), 0);
  std::vector<int> edge_of_symbol;
  for (size_t e = 0; e < x.g.ne(); ++e)
    if (!lab.in_tree[e]) {
      edge_of_symbol.push_back((int)e);
      symbol_of_edge[e] = (int)edge_of_symbol.size();
    }
  if ((int)edge_of_symbol.size() != x.rank)
    throw DomainError("graph rank does not match the marking rank");

  EndoMap psi;
  psi.rank = x.rank;
  for (const EdgePath& img : x.marking.images)
    psi.images.push_back(theta_word(x, lab, symbol_of_edge, img));
  EndoMap iota = invert_automorphism(psi);

  lab.label.assign(x.g.ne(), Word());
  for (size_t e = 0; e < x.g.ne(); ++e)
    if (!lab.in_tree[e]) lab.label[e] = iota.images[symbol_of_edge[e] - 1];
  return lab;
}

EdgeLabels labels_from_given(const MarkedGraph& x) {
  const auto& given = *x.given_labels;
  EdgeLabels lab;
  lab.in_tree.assign(x.g.ne(), 1);
  for (const auto& [id, w] : given) lab.in_tree[x.g.eindex(id)] = 0;
  int tree_edges = 0;
  for (char t : lab.in_tree) tree_edges += t;
  if (tree_edges + x.rank != (int)x.g.ne())
    throw DomainError("labeled edges must be the complement of a spanning tree");
  UF uf(x.g.nv());
  for (size_t e = 0; e < x.g.ne(); ++e)
    if (lab.in_tree[e] &&
        !uf.join(x.g.vindex(x.g.edges[e].from), x.g.vindex(x.g.edges[e].to)))
      throw DomainError("labeled edges must be the complement of a spanning tree");
  root_tree(x, lab);
  lab.label.assign(x.g.ne(), Word());
  for (const auto& [id, w] : given) lab.label[x.g.eindex(id)] = reduce(w);
  return lab;
}

// Solves w_i = u x_i u^-1 for a single u, exactly: u is pinned down by w_1
// up to a power of x_1 and w_2 fixes that power.
std::optional<Word> common_conjugator(const std::vector<Word>& w, int rank) {
  auto check = [&](const Word& u) {
    Word ui = word_inverse(u);
    for (int i = 0; i < rank; ++i)
      if (concat(concat(ui, w[i]), u) != Word({i + 1})) return false;
    return true;
  };
  if (rank == 0) return Word();
  auto [c1, u1] = cyclic_reduce(w[0]);
  if (c1.l != std::vector<Letter>{1}) return std::nullopt;
  if (rank == 1) return check(u1) ? std::optional<Word>(u1) : std::nullopt;
  // v = x_1^k x_2 x_1^-k when a solution exists
  Word v = concat(concat(word_inverse(u1), w[1]), u1);
  if (v.size() % 2 == 0) return std::nullopt;
  long k = ((long)v.size() - 1) / 2;
  if (!v.empty() && v.l[0] == -1) k = -k;
  Word u = u1;
  for (long j = 0; j < (k >= 0 ? k : -k); ++j)
    u = concat(u, Word({k >= 0 ? 1 : -1}));
  return check(u) ? std::optional<Word>(u) : std::nullopt;
}

void check_marking_shape(const MarkedGraph& x, std::vector<ValidationIssue>& out) {
  if ((int)x.marking.images.size() != x.rank) {
    out.push_back({"MarkingRankMismatch",
                   "expected " + std::to_string(x.rank) + " generator images"});
    return;
  }
  int base = -1;
  try {
    base = x.g.vindex(x.marking.base_vertex);
  } catch (const MalformedInput&) {
    out.push_back({"MarkingNotClosed", "base vertex is not in the graph"});
    return;
  }
  for (int i = 0; i < x.rank; ++i) {
    const EdgePath& p = x.marking.images[i];
    bool ok = is_path(x.g, p) && !p.empty() &&
              dart_src(x.g, p.front()) == base && dart_dst(x.g, p.back()) == base;
    for (int d : p)
      if (d < 0 || dart_edge(d) >= (int)x.g.ne()) ok = false;
    if (!ok)
      out.push_back({"MarkingNotClosed",
                     "generator " + std::to_string(i + 1) +
                         " image is not a closed path at the base vertex"});
  }
}

void check_marking_equivalence(const MarkedGraph& x,
                               std::vector<ValidationIssue>& out) {
  try {
    EdgeLabels own = derive_labels(x, default_tree(x.g));
    (void)own;
  } catch (const DomainError& e) {
    out.push_back({"MarkingNotEquivalence", e.what()});
    return;
  }
  if (!x.given_labels) return;
  try {
    EdgeLabels lab = labels_from_given(x);
    std::vector<int> symbol_of_edge(x.g.ne(), 0);
    int next = 1;
    for (size_t e = 0; e < x.g.ne(); ++e)
      if (!lab.in_tree[e]) symbol_of_edge[e] = next++;
    std::vector<Word> sigma_tau;
    for (const EdgePath& img : x.marking.images) {
      Word raw = theta_word(x, lab, symbol_of_edge, img);
      EndoMap m;
      m.rank = x.rank;
      m.images.assign(x.rank, Word());
      for (size_t e = 0; e < x.g.ne(); ++e)
        if (!lab.in_tree[e]) m.images[symbol_of_edge[e] - 1] = lab.label[e];
      sigma_tau.push_back(apply_endo(m, raw));
    }
    if (!common_conjugator(sigma_tau, x.rank))
      out.push_back({"LabelMismatch",
                     "labels do not invert the marking up to conjugation"});
  } catch (const DomainError& e) {
    out.push_back({"LabelMismatch", e.what()});
  }
}

}  // namespace

const EdgeLabels& edge_labels(const MarkedGraph& x) {
  if (!x.labels_cache) {
    if (x.given_labels)
      x.labels_cache = labels_from_given(x);
    else
      x.labels_cache = derive_labels(x, default_tree(x.g));
  }
  return *x.labels_cache;
}

EdgePath tree_path(const MarkedGraph& x, int from_vidx, int to_vidx) {
  const EdgeLabels& lab = edge_labels(x);
  EdgePath up, down;
  int a = from_vidx, b = to_vidx;
  while (lab.depth[a] > lab.depth[b]) {
    up.push_back(lab.parent_dart[a]);
    a = dart_dst(x.g, lab.parent_dart[a]);
  }
  while (lab.depth[b] > lab.depth[a]) {
    down.push_back(lab.parent_dart[b]);
    b = dart_dst(x.g, lab.parent_dart[b]);
  }
  while (a != b) {
    up.push_back(lab.parent_dart[a]);
    a = dart_dst(x.g, lab.parent_dart[a]);
    down.push_back(lab.parent_dart[b]);
    b = dart_dst(x.g, lab.parent_dart[b]);
  }
  append_tight(up, path_inverse(down));
  return up;
}

Word path_word_based(const MarkedGraph& x, const EdgePath& p) {
  invariant(is_path(x.g, p), "path_word_based on a non-path");
  const EdgeLabels& lab = edge_labels(x);
  int base = x.g.vindex(x.marking.base_vertex);
  EdgePath q = p.empty() ? EdgePath()
                         : tree_path(x, base, dart_src(x.g, p.front()));
  append_tight(q, p);
  if (!p.empty()) append_tight(q, tree_path(x, dart_dst(x.g, p.back()), base));
  Word w;
  for (int d : q) {
    int e = dart_edge(d);
    if (lab.in_tree[e]) continue;
    w = concat(w, dart_rev(d) ? word_inverse(lab.label[e]) : lab.label[e]);
  }
  return w;
}

CyclicWord loop_word(const MarkedGraph& x, const EdgePath& loop) {
  invariant(is_path(x.g, loop), "loop_word on a non-path");
  invariant(loop.empty() || dart_src(x.g, loop.front()) ==
                                dart_dst(x.g, loop.back()),
            "loop_word on a non-closed path");
  const EdgeLabels& lab = edge_labels(x);
  Word w;
  for (int d : loop) {
    int e = dart_edge(d);
    if (lab.in_tree[e]) continue;
    w = concat(w, dart_rev(d) ? word_inverse(lab.label[e]) : lab.label[e]);
  }
  return cyclic_reduce(w).first;
}

EdgePath word_to_path(const MarkedGraph& x, const Word& w) {
  EdgePath p;
  for (Letter ch : reduce(w).l) {
    const EdgePath& img = x.marking.images[(ch > 0 ? ch : -ch) - 1];
    if (ch > 0)
      append_tight(p, img);
    else
      append_tight(p, path_inverse(img));
  }
  return p;
}

Rat translation_length(const MarkedGraph& x, const Word& w) {
  if (reduce(w).empty()) throw IdentityWord();
  return path_length(x.g, tighten(word_to_path(x, w), /*cyclic=*/true));
}

MarkedGraph act(const MarkedGraph& x, const EndoMap& phi) {
  EndoMap inv = invert_automorphism(phi);  // rejects non-automorphisms
  MarkedGraph y;
  y.rank = x.rank;
  y.g = x.g;
  y.marking.base_vertex = x.marking.base_vertex;
  for (int i = 0; i < x.rank; ++i)
    y.marking.images.push_back(word_to_path(x, phi.images[i]));
  if (x.given_labels) {
    std::map<int, Word> relabeled;
    for (const auto& [id, w] : *x.given_labels)
      relabeled[id] = apply_endo(inv, w);
    y.given_labels = std::move(relabeled);
  }
  return y;
}

MarkedGraph collapse_forest(const MarkedGraph& x, const std::vector<int>& forest) {
  std::vector<char> in_forest(x.g.ne(), 0);
  UF uf(x.g.nv());
  for (int id : forest) {
    int e = x.g.eindex(id);
    if (in_forest[e]) throw NotAForest();
    in_forest[e] = 1;
    if (!uf.join(x.g.vindex(x.g.edges[e].from), x.g.vindex(x.g.edges[e].to)))
      throw NotAForest();
  }
  Rat dropped = 0;
  for (size_t e = 0; e < x.g.ne(); ++e)
    if (in_forest[e]) dropped += x.g.edges[e].len;
  Rat remaining = x.g.volume() - dropped;
  if (remaining <= 0)
    throw DomainError("collapse would leave a graph of zero volume");

  // Representative id per merged class: the smallest original vertex id.
  std::vector<int> rep_id(x.g.nv());
  for (size_t v = 0; v < x.g.nv(); ++v) rep_id[v] = x.g.vertex_ids[v];
  for (size_t v = 0; v < x.g.nv(); ++v) {
    int r = uf.find((int)v);
    rep_id[r] = std::min(rep_id[r], x.g.vertex_ids[v]);
  }

  MarkedGraph y;
  y.rank = x.rank;
  for (size_t v = 0; v < x.g.nv(); ++v)
    if (uf.find((int)v) == (int)v) y.g.vertex_ids.push_back(rep_id[v]);
  std::vector<int> new_eidx(x.g.ne(), -1);
  for (size_t e = 0; e < x.g.ne(); ++e) {
    if (in_forest[e]) continue;
    const Edge& old = x.g.edges[e];
    new_eidx[e] = (int)y.g.edges.size();
    y.g.edges.push_back({old.id, rep_id[uf.find(x.g.vindex(old.from))],
                         rep_id[uf.find(x.g.vindex(old.to))],
                         old.len / remaining});
  }
  y.marking.base_vertex = rep_id[uf.find(x.g.vindex(x.marking.base_vertex))];
  for (const EdgePath& img : x.marking.images) {
    EdgePath q;
    for (int d : img) {
      int e = dart_edge(d);
      if (in_forest[e]) continue;
      int nd = dart(new_eidx[e], dart_rev(d));
      if (!q.empty() && q.back() == dart_opp(nd))
        q.pop_back();
      else
        q.push_back(nd);
    }
    y.marking.images.push_back(q);
  }
  return y;
}

std::map<int, Word> spanning_tree_basis(const MarkedGraph& x,
                                        const std::vector<int>& tree) {
  std::vector<char> in_tree(x.g.ne(), 0);
  UF uf(x.g.nv());
  for (int id : tree) {
    int e = x.g.eindex(id);
    if (in_tree[e]) throw NotAForest();
    in_tree[e] = 1;
    if (!uf.join(x.g.vindex(x.g.edges[e].from), x.g.vindex(x.g.edges[e].to)))
      throw NotAForest();
  }
  if ((int)tree.size() != (int)x.g.nv() - 1)
    throw DomainError("edge set is not a spanning tree");
  EdgeLabels lab = derive_labels(x, in_tree);
  std::map<int, Word> out;
  for (size_t e = 0; e < x.g.ne(); ++e)
    if (!lab.in_tree[e]) out[x.g.edges[e].id] = lab.label[e];
  return out;
}

static void validate_common(const MarkedGraph& x,
                            std::vector<ValidationIssue>& out) {
  if (x.g.nv() == 0 || !x.g.connected())
    out.push_back({"Disconnected", "graph must be connected and nonempty"});
  {
    std::vector<int> seen_v, seen_e;
    for (int id : x.g.vertex_ids) seen_v.push_back(id);
    for (const Edge& e : x.g.edges) seen_e.push_back(e.id);
    std::sort(seen_v.begin(), seen_v.end());
    std::sort(seen_e.begin(), seen_e.end());
    if (std::adjacent_find(seen_v.begin(), seen_v.end()) != seen_v.end())
      out.push_back({"DuplicateId", "repeated vertex id"});
    if (std::adjacent_find(seen_e.begin(), seen_e.end()) != seen_e.end())
      out.push_back({"DuplicateId", "repeated edge id"});
  }
  if ((int)x.g.ne() - (int)x.g.nv() + 1 != x.rank)
    out.push_back({"RankMismatch",
                   "first Betti number differs from the marking rank"});
  if (x.g.volume() != 1)
    out.push_back({"VolumeNotOne", "total length is " + rat_str(x.g.volume())});
  if (out.empty()) {
    check_marking_shape(x, out);
    if (out.empty()) check_marking_equivalence(x, out);
  }
}

std::vector<ValidationIssue> validate(const MarkedGraph& x) {
  std::vector<ValidationIssue> out;
  for (const Edge& e : x.g.edges)
    if (e.len <= 0)
      out.push_back({"NonpositiveLength",
                     "edge " + std::to_string(e.id) + " has length " +
                         rat_str(e.len)});
  for (size_t v = 0; v < x.g.nv(); ++v)
    if (x.g.valence((int)v) < 3)
      out.push_back({"ValenceViolation",
                     "vertex " + std::to_string(x.g.vertex_ids[v]) +
                         " has valence " + std::to_string(x.g.valence((int)v))});
  validate_common(x, out);
  return out;
}

std::vector<ValidationIssue> validate_ext(const MarkedGraph& x) {
  std::vector<ValidationIssue> out;
  for (const Edge& e : x.g.edges)
    if (e.len < 0)
      out.push_back({"NegativeLength",
                     "edge " + std::to_string(e.id) + " has length " +
                         rat_str(e.len)});
  validate_common(x, out);
  return out;
}

}  // namespace osx
