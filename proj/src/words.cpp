#include "osx/words.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

namespace osx {

Word parse_word(const std::string& s, int rank) {
  std::vector<Letter> ls;
  for (char ch : s) {
    if (ch == ' ' || ch == '\t') continue;
    int g;
    bool inverse;
    if (ch >= 'a' && ch <= 'z') {
      g = ch - 'a' + 1;
      inverse = false;
    } else if (ch >= 'A' && ch <= 'Z') {
      g = ch - 'A' + 1;
      inverse = true;
    } else {
      throw MalformedInput(std::string("bad letter '") + ch + "' in word");
    }
    if (g > rank)
      throw MalformedInput(std::string("letter '") + ch +
                           "' exceeds rank " + std::to_string(rank));
    ls.push_back(inverse ? -g : g);
  }
  return Word(std::move(ls));
}

std::string word_str(const Word& w) {
  std::string s;
  s.reserve(w.size());
  for (Letter x : w.l)
    s.push_back(x > 0 ? char('a' + x - 1) : char('A' - x - 1));
  return s;
}

std::string cyclic_str(const CyclicWord& c) { return word_str(c.word()); }

Word word_inverse(const Word& w) {
  std::vector<Letter> ls(w.l.rbegin(), w.l.rend());
  for (Letter& x : ls) x = -x;
  return Word(std::move(ls));
}

Word reduce(const Word& w) {
  std::vector<Letter> out;
  out.reserve(w.size());
  for (Letter x : w.l) {
    if (!out.empty() && out.back() == -x)
      out.pop_back();
    else
      out.push_back(x);
  }
  return Word(std::move(out));
}

Word concat(const Word& a, const Word& b) {
  std::vector<Letter> out = a.l;
  for (Letter x : b.l) {
    if (!out.empty() && out.back() == -x)
      out.pop_back();
    else
      out.push_back(x);
  }
  return Word(std::move(out));
}

namespace {
// true if rotation at i is lexicographically smaller than rotation at j
bool rot_less(const std::vector<Letter>& v, size_t i, size_t j) {
  size_t n = v.size();
  for (size_t k = 0; k < n; ++k) {
    int a = letter_key(v[(i + k) % n]);
    int b = letter_key(v[(j + k) % n]);
    if (a != b) return a < b;
  }
  return false;
}
}  // namespace

CyclicWord CyclicWord::canonical(std::vector<Letter> v) {
  if (v.size() > 1) {
    size_t best = 0;
    for (size_t i = 1; i < v.size(); ++i)
      if (rot_less(v, i, best)) best = i;
    std::rotate(v.begin(), v.begin() + static_cast<long>(best), v.end());
  }
  CyclicWord c;
  c.l = std::move(v);
  return c;
}

bool CyclicWord::operator<(const CyclicWord& o) const {
  if (l.size() != o.l.size()) return l.size() < o.l.size();
  for (size_t i = 0; i < l.size(); ++i) {
    int a = letter_key(l[i]), b = letter_key(o.l[i]);
    if (a != b) return a < b;
  }
  return false;
}

CyclicWord rotate(const CyclicWord& c, size_t k) {
  std::vector<Letter> v = c.l;
  if (!v.empty())
    std::rotate(v.begin(), v.begin() + static_cast<long>(k % v.size()),
                v.end());
  CyclicWord out;
  out.l = std::move(v);  // deliberately not re-canonicalized
  return out;
}

std::pair<CyclicWord, Word> cyclic_reduce(const Word& w) {
  Word r = reduce(w);
  std::vector<Letter> u;
  size_t lo = 0, hi = r.size();
  while (hi - lo >= 2 && r.l[lo] == -r.l[hi - 1]) {
    u.push_back(r.l[lo]);
    ++lo;
    --hi;
  }
  std::vector<Letter> core(r.l.begin() + static_cast<long>(lo),
                           r.l.begin() + static_cast<long>(hi));
  CyclicWord c = CyclicWord::canonical(core);
  // fold the canonicalizing rotation into the conjugator: if the canonical
  // form starts k letters in, w = (u * core[0..k)) * c * (u * core[0..k))^-1
  for (size_t k = 0; k < core.size(); ++k) {
    std::vector<Letter> rot(core.begin() + static_cast<long>(k), core.end());
    rot.insert(rot.end(), core.begin(), core.begin() + static_cast<long>(k));
    if (rot == c.l) {
      u.insert(u.end(), core.begin(), core.begin() + static_cast<long>(k));
      break;
    }
  }
  return {std::move(c), reduce(Word(std::move(u)))};
}

EndoMap EndoMap::identity(int rank) {
  EndoMap e;
  e.rank = rank;
  for (int i = 1; i <= rank; ++i) e.images.push_back(Word({i}));
  return e;
}

Word apply_endo(const EndoMap& phi, const Word& w) {
  std::vector<Letter> out;
  for (Letter x : w.l) {
    int g = x > 0 ? x : -x;
    invariant(g <= phi.rank, "letter outside endomorphism rank");
    const Word& im = phi.images[static_cast<size_t>(g - 1)];
    if (x > 0) {
      for (Letter y : im.l) {
        if (!out.empty() && out.back() == -y)
          out.pop_back();
        else
          out.push_back(y);
      }
    } else {
      for (auto it = im.l.rbegin(); it != im.l.rend(); ++it) {
        Letter y = -*it;
        if (!out.empty() && out.back() == -y)
          out.pop_back();
        else
          out.push_back(y);
      }
    }
  }
  return Word(std::move(out));
}

EndoMap compose_endo(const EndoMap& f, const EndoMap& g) {
  invariant(f.rank == g.rank, "rank mismatch in composition");
  EndoMap h;
  h.rank = f.rank;
  for (const Word& w : g.images) h.images.push_back(apply_endo(f, w));
  return h;
}

namespace {

// Elementary Nielsen move on the basis: x_i -> x_i x_j^s (right) or
// x_i -> x_j^s x_i (left).
struct Move {
  bool left;
  int i, j, s;

  EndoMap endo(int rank) const {
    EndoMap e = EndoMap::identity(rank);
    Word xj({s > 0 ? j + 1 : -(j + 1)});
    Word& xi = e.images[static_cast<size_t>(i)];
    xi = left ? concat(xj, xi) : concat(xi, xj);
    return e;
  }
};

using Tuple = std::vector<Word>;

Tuple apply_move(const Tuple& t, const Move& m) {
  Tuple out = t;
  Word wj = m.s > 0 ? t[static_cast<size_t>(m.j)]
                    : word_inverse(t[static_cast<size_t>(m.j)]);
  Word& wi = out[static_cast<size_t>(m.i)];
  wi = m.left ? concat(wj, wi) : concat(wi, wj);
  return out;
}

size_t total_len(const Tuple& t) {
  size_t n = 0;
  for (const Word& w : t) n += w.size();
  return n;
}

std::vector<Move> all_moves(int rank) {
  std::vector<Move> ms;
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j) {
      if (i == j) continue;
      for (int s : {1, -1})
        for (bool left : {false, true}) ms.push_back(Move{left, i, j, s});
    }
  return ms;
}

bool is_perm_inv_basis(const Tuple& t) {
  std::set<int> seen;
  for (const Word& w : t) {
    if (w.size() != 1) return false;
    int g = w.l[0] > 0 ? w.l[0] : -w.l[0];
    if (!seen.insert(g).second) return false;
  }
  return true;
}

std::string tuple_key(const Tuple& t) {
  std::string k;
  for (const Word& w : t) {
    for (Letter x : w.l) k.push_back(static_cast<char>(x + 64));
    k.push_back('|');
  }
  return k;
}

}  // namespace

EndoMap invert_automorphism(const EndoMap& phi) {
  const int rank = phi.rank;
  Tuple t;
  for (const Word& w : phi.images) t.push_back(reduce(w));
  const std::vector<Move> moves = all_moves(rank);
  std::vector<Move> applied;

  // Greedy length reduction; on a plateau, BFS over length-preserving
  // moves to find a state from which strict reduction resumes.
  constexpr size_t kPlateauCap = 50000;
  while (!is_perm_inv_basis(t)) {
    bool reduced = false;
    for (const Move& m : moves) {
      Tuple t2 = apply_move(t, m);
      if (total_len(t2) < total_len(t) &&
          !t2[static_cast<size_t>(m.i)].empty()) {
        t = std::move(t2);
        applied.push_back(m);
        reduced = true;
        break;
      }
    }
    if (reduced) continue;

    size_t len = total_len(t);
    std::set<std::string> seen{tuple_key(t)};
    std::deque<std::pair<Tuple, std::vector<Move>>> queue;
    queue.emplace_back(t, std::vector<Move>{});
    bool escaped = false;
    while (!queue.empty() && seen.size() < kPlateauCap) {
      auto [cur, path] = std::move(queue.front());
      queue.pop_front();
      for (const Move& m : moves) {
        Tuple t2 = apply_move(cur, m);
        if (t2[static_cast<size_t>(m.i)].empty()) continue;
        size_t len2 = total_len(t2);
        if (len2 > len) continue;
        auto path2 = path;
        path2.push_back(m);
        if (len2 < len || is_perm_inv_basis(t2)) {
          t = std::move(t2);
          for (const Move& pm : path2) applied.push_back(pm);
          escaped = true;
          break;
        }
        if (seen.insert(tuple_key(t2)).second) queue.emplace_back(t2, path2);
      }
      if (escaped) break;
    }
    if (!escaped) throw NotAnAutomorphism();
  }

  // t = phi . applied on the basis, a permuted-inverted basis rho.
  // phi^-1 = applied_1 . ... . applied_r . rho^-1.
  EndoMap rho_inv;
  rho_inv.rank = rank;
  rho_inv.images.resize(static_cast<size_t>(rank));
  for (int i = 0; i < rank; ++i) {
    Letter x = t[static_cast<size_t>(i)].l[0];
    int g = x > 0 ? x : -x;
    rho_inv.images[static_cast<size_t>(g - 1)] =
        Word({x > 0 ? i + 1 : -(i + 1)});
  }
  EndoMap result = rho_inv;
  for (auto it = applied.rbegin(); it != applied.rend(); ++it)
    result = compose_endo(it->endo(rank), result);
  return result;
}

bool is_automorphism(const EndoMap& phi) {
  try {
    invert_automorphism(phi);
    return true;
  } catch (const NotAnAutomorphism&) {
    return false;
  }
}

SubgroupGraph stallings_graph(const std::vector<Word>& gens, int rank) {
  // Build a wedge of loops at the basepoint, then fold with union-find.
  struct HalfEdge {
    int u, v, g;  // u --g--> v, g > 0
  };
  std::vector<HalfEdge> edges;
  int nverts = 1;
  for (const Word& raw : gens) {
    Word w = reduce(raw);
    if (w.empty()) continue;
    int prev = 0;
    for (size_t k = 0; k < w.size(); ++k) {
      int nextv = (k + 1 == w.size()) ? 0 : nverts++;
      Letter x = w.l[k];
      if (x > 0)
        edges.push_back({prev, nextv, x});
      else
        edges.push_back({nextv, prev, -x});
      prev = nextv;
    }
  }

  std::vector<int> parent(static_cast<size_t>(nverts));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[static_cast<size_t>(v)] != v) {
      parent[static_cast<size_t>(v)] =
          parent[static_cast<size_t>(parent[static_cast<size_t>(v)])];
      v = parent[static_cast<size_t>(v)];
    }
    return v;
  };
  auto unite = [&](int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[static_cast<size_t>(std::max(a, b))] = std::min(a, b);
  };

  bool changed = true;
  while (changed) {
    changed = false;
    // out-fold: same source, same label -> merge targets; in-fold dually
    std::map<std::pair<int, int>, int> out, in;
    for (const HalfEdge& e : edges) {
      int u = find(e.u), v = find(e.v);
      auto [ito, okO] = out.try_emplace({u, e.g}, v);
      if (!okO && find(ito->second) != v) {
        unite(ito->second, v);
        changed = true;
      }
      auto [iti, okI] = in.try_emplace({v, e.g}, u);
      if (!okI && find(iti->second) != u) {
        unite(iti->second, u);
        changed = true;
      }
    }
  }

  // compact vertices, dedupe edges
  std::map<int, int> newid;
  auto id_of = [&](int v) {
    v = find(v);
    auto [it, fresh] = newid.try_emplace(v, static_cast<int>(newid.size()));
    (void)fresh;
    return it->second;
  };
  id_of(0);  // basepoint first
  std::set<std::tuple<int, int, int>> uniq;
  for (const HalfEdge& e : edges) uniq.insert({id_of(e.u), id_of(e.v), e.g});

  SubgroupGraph h;
  h.rank = rank;
  h.next.assign(newid.size(), std::vector<int>(static_cast<size_t>(2 * rank), -1));
  for (auto [u, v, g] : uniq) {
    h.next[static_cast<size_t>(u)][static_cast<size_t>(letter_key(g))] = v;
    h.next[static_cast<size_t>(v)][static_cast<size_t>(letter_key(-g))] = u;
  }

  // Core = vertices surviving iterated removal of degree-1 vertices
  // (basepoint not protected); if nothing survives, the basepoint alone.
  size_t n = h.next.size();
  std::vector<bool> dead(n, false);
  std::vector<std::tuple<int, int, int>> elist(uniq.begin(), uniq.end());
  bool trimmed = true;
  while (trimmed) {
    trimmed = false;
    std::vector<int> deg(n, 0);
    for (auto [u, v, g] : elist) {
      (void)g;
      if (!dead[static_cast<size_t>(u)] && !dead[static_cast<size_t>(v)]) {
        deg[static_cast<size_t>(u)]++;
        deg[static_cast<size_t>(v)]++;
      }
    }
    for (size_t v = 0; v < n; ++v)
      if (!dead[v] && deg[v] <= 1) {
        bool incident = deg[v] == 1;
        if (incident || deg[v] == 0) {
          dead[v] = true;
          trimmed = true;
        }
      }
  }
  h.core.assign(n, false);
  bool any = false;
  for (size_t v = 0; v < n; ++v)
    if (!dead[v]) {
      h.core[v] = true;
      any = true;
    }
  if (!any) h.core[0] = true;
  return h;
}

bool contains(const SubgroupGraph& h, const Word& w) {
  int v = 0;
  for (Letter x : w.l) {
    v = h.step(v, x);
    if (v < 0) return false;
  }
  return v == 0;
}

bool conjugate_into(const SubgroupGraph& h, const CyclicWord& c) {
  if (c.empty()) return true;
  size_t n = c.size();
  for (size_t r = 0; r < n; ++r) {
    for (size_t v0 = 0; v0 < h.vertex_count(); ++v0) {
      if (!h.core[v0]) continue;
      int v = static_cast<int>(v0);
      bool ok = true;
      for (size_t k = 0; k < n && ok; ++k) {
        v = h.step(v, c.l[(r + k) % n]);
        ok = v >= 0;
      }
      if (ok && v == static_cast<int>(v0)) return true;
    }
  }
  return false;
}

}  // namespace osx
