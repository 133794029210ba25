#pragma once

#include <functional>
#include <vector>

#include "osx/marked_graph.hpp"

namespace osx {

// Shapes whose loops realize the maximal stretch. The pinched kinds arise
// only when some zero-length component carries a nontrivial group: a pinched
// bell contributes a group element instead of a circle.
enum class CandidateKind {
  Circle,
  FigureEight,
  Barbell,
  PinchedBarbell,       // both bells are group elements
  HalfPinchedBarbell,   // one bell a circle, the other a group element
  PinchedFigureEight,   // a circle with one group element attached
};

const char* kind_name(CandidateKind k);

struct Candidate {
  CandidateKind kind;
  EdgePath loop;   // tightened closed path in the full graph
  CyclicWord word;
};

// Zero-length subgraph decomposition: components, a forest inside each, and
// the leftover zero edges generating the component's group.
struct ZeroParts {
  std::vector<char> zero_edge;  // per edge index
  std::vector<int> comp;        // per vertex index
  int ncomp = 0;
  std::vector<int> zparent;     // dart toward the component root, -1 there
  std::vector<std::vector<int>> group_loops;  // per component, edge indices
};

ZeroParts zero_parts(const MetricGraph& g);

// Path through the zero forest; endpoints must share a component.
EdgePath zero_tree_path(const MetricGraph& g, const ZeroParts& z, int u_vidx,
                        int v_vidx);

// Which group element a pinched bell carries: a forest-complement loop of the
// component, raised to a power.
struct GroupChoice {
  int loop_index = 0;
  int power = 1;  // nonzero
};
using GroupChooser = std::function<GroupChoice(int comp, int slot)>;

// Closed path at anchor representing the chosen element of the component's
// group (stays inside the zero subgraph).
EdgePath group_element_path(const MetricGraph& g, const ZeroParts& z, int comp,
                            int anchor_vidx, GroupChoice c);

std::vector<Candidate> candidates_ext(const MarkedGraph& x,
                                      const GroupChooser& choose);
std::vector<Candidate> candidates_ext(const MarkedGraph& x);

// Interior points: no zero edges, so only the classical three kinds appear.
std::vector<Candidate> candidates(const MarkedGraph& x);

}  // namespace osx
