#ifndef JDM_CONSTRUCTOR_HPP
#define JDM_CONSTRUCTOR_HPP

#include <vector>

#include "jdm/graph.hpp"
#include "jdm/jdm.hpp"

namespace jdm {

// Distributes `total` units over `parts` slots so counts differ by at most 1.
// The slots receiving the extra unit are chosen in rotation starting at
// `cursor` (queue pop/reinsert semantics); the cursor advances by
// total mod parts.
std::vector<long long> near_regular_split(long long total, int parts, int& cursor);

// Simple bipartite graph with side degree sequences x and y. The x side gets
// vertices 0..|x|-1, the y side |x|..|x|+|y|-1. Requires sum(x) == sum(y),
// max(x) <= |y|, max(y) <= |x|, and each side nearly regular.
SimpleGraph build_bipartite_block(const std::vector<long long>& x,
                                  const std::vector<long long>& y);

// Simple graph realizing degree sequence x via Havel-Hakimi. Throws
// Infeasible if x is not graphical.
SimpleGraph havel_hakimi_block(const std::vector<long long>& x);

// Deterministic O(m) realization of a graphical JDM on the canonical vertex
// layout. Throws NotGraphical if the input fails the graphicality conditions.
// With audit enabled, the balanced residual-degree invariant and residual
// feasibility are checked after every degree-pair block.
SimpleGraph greedy_construct(const JointDegreeMatrix& j, bool audit = false);

}  // namespace jdm

#endif
