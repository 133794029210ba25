#pragma once

#include <optional>

#include "osx/candidates.hpp"
#include "osx/marked_graph.hpp"

namespace osx {

struct StretchFactor {
  bool infinite = false;
  Rat value = 0;  // meaningful when finite

  static StretchFactor inf() { return {true, 0}; }
  static StretchFactor of(Rat v) { return {false, std::move(v)}; }
  bool operator==(const StretchFactor& o) const = default;
};

std::string factor_str(const StretchFactor& f);
double factor_log(const StretchFactor& f);

struct DistanceResult {
  StretchFactor factor;
  std::optional<Candidate> witness;     // maximizer when finite
  std::optional<Word> elliptic_failure; // an element forcing INFINITE
};

// translation_length(y,w) / translation_length(x,w); w must be nontrivial.
Rat stretch(const MarkedGraph& x, const MarkedGraph& y, const Word& w);

// Maximal stretch factor over the candidates of x, with witness; ties go to
// the least canonical word.
DistanceResult distance(const MarkedGraph& x, const MarkedGraph& y);

// Max of length ratios over an explicit candidate list (list must be sorted
// by word and have positive lengths in x).
DistanceResult max_stretch_over(const MarkedGraph& x, const MarkedGraph& y,
                                const std::vector<Candidate>& cands);

// Product of the two one-way factors.
Rat sym_distance(const MarkedGraph& x, const MarkedGraph& y);

}  // namespace osx
