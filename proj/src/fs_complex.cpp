#include "osx/fs_complex.hpp"

#include <algorithm>
#include <set>

namespace osx {

CompletionPoint face(const CompletionPoint& x, const std::vector<int>& keep) {
  std::vector<char> in_keep(x.m.g.ne(), 0);
  for (int id : keep) in_keep[x.m.g.eindex(id)] = 1;
  Rat vol = 0;
  for (size_t e = 0; e < x.m.g.ne(); ++e)
    if (in_keep[e]) vol += x.m.g.edges[e].len;
  if (keep.empty() || vol <= 0)
    throw InvalidFace("kept edges must carry positive length");
  CompletionPoint y{x.m};
  y.m.labels_cache.reset();
  for (size_t e = 0; e < y.m.g.ne(); ++e)
    y.m.g.edges[e].len = in_keep[e] ? y.m.g.edges[e].len / vol : Rat(0);
  auto issues = validate_completion(y);
  if (!issues.empty())
    throw InvalidFace("collapse leaves an invalid splitting: " +
                      issues.front().code);
  return y;
}

Rat face_distance(const MarkedGraph& x, const std::vector<int>& H) {
  std::set<int> want;
  for (int id : H) want.insert(x.g.eindex(id));
  bool found = false;
  for (const Candidate& c : candidates(x)) {
    std::set<int> support;
    for (int d : c.loop) support.insert(dart_edge(d));
    if (support == want) {
      found = true;
      break;
    }
  }
  if (!found) throw NotACandidateImage();
  Rat vol = 0;
  for (int e : want) vol += x.g.edges[e].len;
  Rat expected = 1 / vol;
  std::vector<int> ids(H.begin(), H.end());
  DistanceResult d = distance_ext(as_completion(x), face(as_completion(x), ids));
  invariant(!d.factor.infinite && d.factor.value == expected,
            "face distance disagrees with the candidate maximum");
  return expected;
}

std::optional<std::vector<Rat>> solve_linear(std::vector<std::vector<Rat>> A,
                                             std::vector<Rat> b) {
  size_t rows = A.size(), cols = rows ? A[0].size() : 0;
  std::vector<int> pivot_col;
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t p = r;
    while (p < rows && A[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(A[p], A[r]);
    std::swap(b[p], b[r]);
    Rat inv = 1 / A[r][c];
    for (size_t j = c; j < cols; ++j) A[r][j] *= inv;
    b[r] *= inv;
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || A[i][c] == 0) continue;
      Rat f = A[i][c];
      for (size_t j = c; j < cols; ++j) A[i][j] -= f * A[r][j];
      b[i] -= f * b[r];
    }
    pivot_col.push_back((int)c);
    ++r;
  }
  for (size_t i = r; i < rows; ++i)
    if (b[i] != 0) return std::nullopt;
  std::vector<Rat> v(cols, 0);
  for (size_t i = 0; i < r; ++i) v[pivot_col[i]] = b[i];
  return v;
}

namespace {

// Edge crossing counts of the immersed loop of w in ref; tightening is
// combinatorial, so lengths in ref are linear functions of edge lengths.
std::vector<Rat> crossing_row(const MarkedGraph& ref, const Word& w) {
  std::vector<Rat> row(ref.g.ne(), 0);
  if (reduce(w).empty()) return row;
  for (int d : tighten(word_to_path(ref, w), /*cyclic=*/true))
    row[dart_edge(d)] += 1;
  return row;
}

// Lengths on ref's topological graph placing it at the same point as `other`,
// when such an assignment exists.
std::optional<std::vector<Rat>> fit_lengths(const CompletionPoint& ref,
                                            const CompletionPoint& other) {
  std::vector<Word> probes;
  for (const Candidate& c : candidates_ext(ref.m)) probes.push_back(c.word.word());
  for (int i = 1; i <= ref.m.rank; ++i) {
    probes.push_back(Word({i}));
    for (int j = i + 1; j <= ref.m.rank; ++j) probes.push_back(Word({i, j}));
  }
  std::vector<std::vector<Rat>> A;
  std::vector<Rat> b;
  for (const Word& w : probes) {
    A.push_back(crossing_row(ref.m, w));
    b.push_back(translation_length_ext(other, w));
  }
  auto sol = solve_linear(std::move(A), std::move(b));
  if (!sol) return std::nullopt;
  Rat total = 0;
  for (const Rat& v : *sol) {
    if (v < 0) return std::nullopt;
    total += v;
  }
  if (total != 1) return std::nullopt;
  CompletionPoint moved{ref.m};
  moved.m.labels_cache.reset();
  for (size_t e = 0; e < moved.m.g.ne(); ++e) moved.m.g.edges[e].len = (*sol)[e];
  if (!validate_completion(moved).empty()) return std::nullopt;
  if (!equals(moved, other)) return std::nullopt;
  return sol;
}

}  // namespace

std::optional<SimplexCoords> common_simplex(const CompletionPoint& x,
                                            const CompletionPoint& y) {
  if (auto fit = fit_lengths(x, y)) {
    SimplexCoords sc{x, {}, {}};
    for (size_t e = 0; e < x.m.g.ne(); ++e) {
      sc.x_coords[x.m.g.edges[e].id] = x.m.g.edges[e].len;
      sc.y_coords[x.m.g.edges[e].id] = (*fit)[e];
    }
    return sc;
  }
  if (auto fit = fit_lengths(y, x)) {
    SimplexCoords sc{y, {}, {}};
    for (size_t e = 0; e < y.m.g.ne(); ++e) {
      sc.x_coords[y.m.g.edges[e].id] = (*fit)[e];
      sc.y_coords[y.m.g.edges[e].id] = y.m.g.edges[e].len;
    }
    return sc;
  }
  return std::nullopt;
}

bool euclidean_ball_contains(const CompletionPoint& x, const CompletionPoint& y,
                             const Rat& eps) {
  auto sc = common_simplex(x, y);
  if (!sc) return false;
  for (const auto& [id, vx] : sc->x_coords) {
    Rat diff = vx - sc->y_coords.at(id);
    if (diff < 0) diff = -diff;
    if (!(diff < eps)) return false;
  }
  return true;
}

LengthVector axes_vector(const CompletionPoint& T, const std::vector<Word>& P) {
  LengthVector out;
  for (const Word& w : P) {
    out.probes.push_back(cyclic_reduce(w).first);
    out.values.push_back(translation_length_ext(T, w));
  }
  return out;
}

StrictnessPair strictness_family(int i, int m) {
  if (i < 2 || m < 1) throw DomainError("need i >= 2 and m >= 1");
  StrictnessPair out;

  MarkedGraph x;
  x.rank = 2;
  x.g.vertex_ids = {1};
  x.g.edges = {{1, 1, 1, Rat(1)}, {2, 1, 1, Rat(0)}};
  x.marking.base_vertex = 1;
  x.marking.images = {{dart(0, false)}, {dart(1, false)}};
  out.x = as_completion(x);

  // Rose marked by (a b^i, b), the small loop sized so both probe lengths
  // land within 1/m of x's while the backward stretch stays above 1.
  out.small_len = Rat(Int(1), Int(i - 1) * Int(m + 1));
  out.main_len = 1 - out.small_len;
  MarkedGraph y;
  y.rank = 2;
  y.g.vertex_ids = {1};
  y.g.edges = {{1, 1, 1, out.main_len}, {2, 1, 1, out.small_len}};
  y.marking.base_vertex = 1;
  EdgePath a_img{dart(0, false)};
  for (int k = 0; k < i; ++k) a_img.push_back(dart(1, false));
  y.marking.images = {a_img, {dart(1, false)}};
  out.y = as_completion(y);
  return out;
}

}  // namespace osx
