#pragma once

#include "osx/marked_graph.hpp"

namespace osx {

// Exhaustive maximum of l(w,y)/l(w,x) over nontrivial cyclic words of length
// at most maxlen. Enumerates reduced words whose first letter is minimal in
// the letter order, which reaches every conjugacy class once per class up to
// rotation. Integer arithmetic over a common denominator keeps this fast
// enough for rank 3 at length 12.
Rat brute_force_max_stretch(const MarkedGraph& x, const MarkedGraph& y,
                            int maxlen);

}  // namespace osx
