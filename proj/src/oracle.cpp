#include "osx/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>

namespace osx {

namespace {

// One graph's incremental state: a dart stack for the tightened path of the
// word built so far, with integer lengths over a common denominator.
struct GraphState {
  std::vector<std::vector<int>> letter_path;  // per letter_key, tightened
  std::vector<int64_t> ilen;                  // per edge index
  std::vector<int> stack;
  int64_t len = 0;

  struct Undo {
    int npushed = 0;
    std::vector<int> popped;
  };

  void init(const MarkedGraph& g, int rank) {
    Int den = 1;
    for (const Edge& e : g.g.edges)
      den = lcm(den, Int(denominator(e.len)));
    for (const Edge& e : g.g.edges) {
      Int v = Int(numerator(e.len)) * (den / Int(denominator(e.len)));
      ilen.push_back(v.convert_to<int64_t>());
    }
    letter_path.resize(2 * rank);
    for (int gen = 1; gen <= rank; ++gen) {
      EdgePath p = tighten(g.marking.images[gen - 1], false);
      letter_path[letter_key(gen)] = p;
      letter_path[letter_key(-gen)] = path_inverse(p);
    }
  }

  Undo push_letter(Letter c) {
    Undo u;
    for (int d : letter_path[letter_key(c)]) {
      if (!stack.empty() && stack.back() == dart_opp(d)) {
        if (u.npushed > 0) {
          --u.npushed;
        } else {
          u.popped.push_back(stack.back());
        }
        len -= ilen[dart_edge(stack.back())];
        stack.pop_back();
      } else {
        ++u.npushed;
        len += ilen[dart_edge(d)];
        stack.push_back(d);
      }
    }
    return u;
  }

  void undo(const Undo& u) {
    for (int i = 0; i < u.npushed; ++i) {
      len -= ilen[dart_edge(stack.back())];
      stack.pop_back();
    }
    for (auto it = u.popped.rbegin(); it != u.popped.rend(); ++it) {
      len += ilen[dart_edge(*it)];
      stack.push_back(*it);
    }
  }

  // Cyclic length: strip matched ends of the based path.
  int64_t cyclic_len() const {
    int64_t out = len;
    int i = 0, j = (int)stack.size() - 1;
    while (i < j && stack[i] == dart_opp(stack[j])) {
      out -= ilen[dart_edge(stack[i])] + ilen[dart_edge(stack[j])];
      ++i;
      --j;
    }
    return out;
  }
};

}  // namespace

Rat brute_force_max_stretch(const MarkedGraph& x, const MarkedGraph& y,
                            int maxlen) {
  invariant(x.rank == y.rank, "rank mismatch in stretch oracle");
  int rank = x.rank;
  GraphState sx, sy;
  sx.init(x, rank);
  sy.init(y, rank);

  // best = by/bx as a fraction
  int64_t bx = 1, by = 0;
  auto consider = [&]() {
    int64_t lx = sx.cyclic_len(), ly = sy.cyclic_len();
    if (lx == 0 && ly == 0) return;  // elliptic probes cannot be witnesses
    invariant(lx > 0, "oracle found zero length in the source");
    if ((__int128)ly * bx > (__int128)by * lx) {
      bx = lx;
      by = ly;
    }
  };

  std::vector<Letter> letters;
  for (int g = 1; g <= rank; ++g) {
    letters.push_back(g);
    letters.push_back(-g);
  }
  std::sort(letters.begin(), letters.end(),
            [](Letter a, Letter b) { return letter_key(a) < letter_key(b); });

  // first letter minimal in the word: the alphabet shrinks as it grows
  std::function<void(int, Letter, Letter)> dfs = [&](int depth, Letter first,
                                                     Letter prev) {
    if (depth == maxlen) return;
    for (Letter c : letters) {
      if (letter_key(c) < letter_key(first)) continue;
      if (c == -prev) continue;
      auto ux = sx.push_letter(c);
      auto uy = sy.push_letter(c);
      consider();
      dfs(depth + 1, first, c);
      sy.undo(uy);
      sx.undo(ux);
    }
  };

  for (Letter f : letters) {
    auto ux = sx.push_letter(f);
    auto uy = sy.push_letter(f);
    consider();
    dfs(1, f, f);
    sy.undo(uy);
    sx.undo(ux);
  }

  Int dx = 1, dy = 1;
  for (const Edge& e : x.g.edges) dx = lcm(dx, Int(denominator(e.len)));
  for (const Edge& e : y.g.edges) dy = lcm(dy, Int(denominator(e.len)));
  // ratio of true lengths: (by/dy) / (bx/dx)
  return Rat(Int(by) * dx, Int(bx) * dy);
}

}  // namespace osx
