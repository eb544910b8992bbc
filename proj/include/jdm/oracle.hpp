#ifndef JDM_ORACLE_HPP
#define JDM_ORACLE_HPP

#include <map>
#include <vector>

#include "jdm/graph.hpp"
#include "jdm/jdm.hpp"
#include "jdm/rational.hpp"

namespace jdm {

// Exhaustive ground truth for small instances: every labeled simple graph on
// the canonical vertex set realizing a JDM.
struct RealizationSet {
  JointDegreeMatrix jdm;
  std::vector<SimpleGraph> graphs;               // canonical edge sets, sorted
  std::vector<std::vector<int>> swap_adjacency;  // filled by swap_graph_connected
};

// All labeled simple realizations of j on the canonical vertex layout.
// Refuses instances with more than 12 edges (TooLarge) and stops with
// LimitExceeded past `limit` realizations.
RealizationSet enumerate_realizations(const JointDegreeMatrix& j,
                                      long long limit = 1000000);

struct SwapGraphReport {
  bool connected = false;
  long long diameter = 0;  // over the largest component when disconnected
};

// Builds adjacency between realizations that differ by one same-degree-class
// endpoint swap, then reports connectivity and BFS diameter.
SwapGraphReport swap_graph_connected(RealizationSet& r);

// Fraction of realizations containing each vertex pair, exact.
std::map<Edge, Rational> exact_edge_means(const RealizationSet& r);

}  // namespace jdm

#endif
