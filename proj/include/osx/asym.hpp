#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "osx/error.hpp"
#include "osx/rational.hpp"

namespace osx {

// Nonnegative distance value that may be infinite.
struct ExtRat {
  bool infinite = false;
  Rat value = 0;

  static ExtRat inf() { return {true, 0}; }
  static ExtRat of(Rat v) { return {false, std::move(v)}; }
  bool ge(const Rat& eps) const { return infinite || value >= eps; }
  bool operator==(const ExtRat& o) const = default;
};

// A set with an asymmetric distance over integer point handles. Distances
// are memoized; the axioms are the caller's responsibility.
struct AsymSpace {
  std::function<ExtRat(int, int)> raw;
  std::shared_ptr<std::map<std::pair<int, int>, ExtRat>> cache =
      std::make_shared<std::map<std::pair<int, int>, ExtRat>>();

  ExtRat d(int a, int b) const {
    auto key = std::make_pair(a, b);
    auto it = cache->find(key);
    if (it != cache->end()) return it->second;
    ExtRat v = raw(a, b);
    (*cache)[key] = v;
    return v;
  }
};

// First window elements are index 1, matching the certificate records.
struct SequenceWindow {
  AsymSpace space;
  std::vector<int> points;  // handles into the space

  int size() const { return (int)points.size(); }
  ExtRat d(int i, int j) const {  // 1-based
    return space.d(points[i - 1], points[j - 1]);
  }
};

// Toy asymmetric space on rationals: d(x,y) = max(y-x, 2(x-y)).
AsymSpace toy_space(std::shared_ptr<std::vector<Rat>> values);
SequenceWindow toy_window(const std::vector<Rat>& values);

struct Violation {
  Rat eps;
  int n, k;
};

struct EpsRecord {
  Rat eps;
  int N;                  // least admissible tail start
  std::map<int, int> K;   // per probed n > N (admissibility checks only)
};

struct Certificate {
  bool holds = false;
  std::vector<EpsRecord> records;
  std::optional<Violation> witness;
  std::string detail;  // window-scale caveats, human-readable
};

// eps_list must be positive and strictly decreasing.
Certificate check_forwards_cauchy(const SequenceWindow& s,
                                  const std::vector<Rat>& eps_list);

Certificate check_admissible(const SequenceWindow& s,
                             const std::vector<Rat>& eps_list);

// Indices following the halving recurrence n_{j+1} =
// max(N(2^-(j+1)), K(n_j, 2^-j)); stops where the window ends.
std::vector<int> extract_cauchy_subsequence(const SequenceWindow& s);

SequenceWindow interlace(const SequenceWindow& a, const SequenceWindow& b);

struct CLimitResult {
  bool diverges = false;
  Rat estimate = 0;        // meaningful when not diverging
  Rat scale = 0;           // smallest schedule eps: resolution of the claim
  std::string detail;
};

// Window-scale estimate of lim_n lim_k d(a_n, b_k); DIVERGES when the inner
// values blow past `bound` or fail to settle at schedule resolution.
CLimitResult c_limit(const SequenceWindow& a, const SequenceWindow& b,
                     const std::vector<Rat>& eps_list, const Rat& bound);

// Both directional c-limits vanish at window scale; cross-checked against
// admissibility of the interlaced window.
Certificate equivalent(const SequenceWindow& a, const SequenceWindow& b,
                       const std::vector<Rat>& eps_list);

}  // namespace osx
