#pragma once

#include "osx/asym.hpp"
#include "osx/completion.hpp"

namespace osx {

// Window over completion points with d(x,y) = stretch factor minus one (the
// excess stretch; exact rational, vanishing exactly on equal points).
SequenceWindow os_window(std::vector<CompletionPoint> pts);

// Extends an existing window's space with more points (shared cache), so
// cross-window comparisons stay within one space.
SequenceWindow os_windows_pair(std::vector<CompletionPoint> a,
                               std::vector<CompletionPoint> b,
                               SequenceWindow& second);

}  // namespace osx
