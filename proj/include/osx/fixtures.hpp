#pragma once

#include <random>

#include "osx/fs_complex.hpp"

namespace osx {

// Interior points
MarkedGraph rose2(const Rat& la, const Rat& lb);
MarkedGraph rose3(const Rat& la, const Rat& lb, const Rat& lc);
// Two vertices joined by three parallel edges; a = e1*e3^-1, b = e2*e3^-1.
MarkedGraph theta2(const Rat& l1, const Rat& l2, const Rat& l3);
// Loop, bar, loop; a = left loop, b = bar*right loop*bar^-1.
MarkedGraph dumbbell2(const Rat& lleft, const Rat& lbar, const Rat& lright);
// Two vertices, four parallel edges; rank 3.
MarkedGraph theta3(const Rat& l1, const Rat& l2, const Rat& l3, const Rat& l4);
// Two loops joined by two parallel bars; rank 3.
MarkedGraph spectacles3(const Rat& lleft, const Rat& lbar1, const Rat& lbar2,
                        const Rat& lright);

// Completion points (rank 2)
CompletionPoint loop_splitting_a();  // positive a-loop, vertex group <b>
CompletionPoint loop_splitting_b();  // positive b-loop, vertex group <a>
CompletionPoint amalgam_ab();        // one positive edge, groups <a> and <b>
// Positive circle a plus a bar to a vertex with group <b>.
CompletionPoint pinched_barbell_splitting();

// Pairwise distinct points for the zero-distance rigidity check.
std::vector<CompletionPoint> rigidity_family();
// Targets at infinite distance from loop_splitting_a.
std::vector<CompletionPoint> infinity_targets();

Word random_word(std::mt19937_64& rng, int rank, int maxlen);
// Product of `nmoves` random elementary Nielsen maps.
EndoMap random_nielsen_product(std::mt19937_64& rng, int rank, int nmoves);
// Random topology (by rank), small-denominator lengths, light marking twist.
MarkedGraph random_point(std::mt19937_64& rng, int rank);

}  // namespace osx
