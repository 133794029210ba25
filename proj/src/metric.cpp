#include "osx/metric.hpp"

#include <limits>

namespace osx {

std::string factor_str(const StretchFactor& f) {
  return f.infinite ? "INFINITE" : rat_str(f.value);
}

double factor_log(const StretchFactor& f) {
  if (f.infinite) return std::numeric_limits<double>::infinity();
  return rat_log(f.value);
}

Rat stretch(const MarkedGraph& x, const MarkedGraph& y, const Word& w) {
  Rat lx = translation_length(x, w);  // throws IdentityWord on trivial w
  Rat ly = translation_length(y, w);
  invariant(lx > 0, "stretch denominator vanished on an interior point");
  return ly / lx;
}

// Shared by the interior and extended distances: max of length ratios over a
// candidate list whose denominators are positive.
DistanceResult max_stretch_over(const MarkedGraph& x, const MarkedGraph& y,
                                const std::vector<Candidate>& cands) {
  invariant(!cands.empty(), "empty candidate list");
  DistanceResult best;
  bool first = true;
  for (const Candidate& c : cands) {
    Word w = c.word.word();
    Rat lx = translation_length(x, w);
    invariant(lx > 0, "candidate has zero length in its own graph");
    Rat r = translation_length(y, w) / lx;
    // candidates are sorted by canonical word, so strict improvement keeps
    // the least witness on ties
    if (first || r > best.factor.value) {
      best.factor = StretchFactor::of(r);
      best.witness = c;
      first = false;
    }
  }
  return best;
}

DistanceResult distance(const MarkedGraph& x, const MarkedGraph& y) {
  return max_stretch_over(x, y, candidates(x));
}

Rat sym_distance(const MarkedGraph& x, const MarkedGraph& y) {
  DistanceResult a = distance(x, y), b = distance(y, x);
  invariant(!a.factor.infinite && !b.factor.infinite,
            "interior distance cannot be infinite");
  return a.factor.value * b.factor.value;
}

}  // namespace osx
