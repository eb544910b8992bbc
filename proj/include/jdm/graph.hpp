#ifndef JDM_GRAPH_HPP
#define JDM_GRAPH_HPP

#include <utility>
#include <vector>

namespace jdm {

using Edge = std::pair<int, int>;

// Labeled undirected graph without self-loops or multi-edges.
// Edges are stored canonically: first < second, sorted ascending, unique.
struct SimpleGraph {
  int vertex_count = 0;
  std::vector<Edge> edges;

  // Validates indices, loop-freedom and multi-edge-freedom; canonicalizes.
  static SimpleGraph make(int vertex_count, std::vector<Edge> edges);

  bool has_edge(int u, int v) const;
  std::vector<int> degrees() const;

  friend bool operator==(const SimpleGraph&, const SimpleGraph&) = default;
};

// Labeled undirected multigraph; self-loops and duplicate edges permitted.
// Edges stored with first <= second, sorted ascending (duplicates kept).
struct Pseudograph {
  int vertex_count = 0;
  std::vector<Edge> edges;

  static Pseudograph make(int vertex_count, std::vector<Edge> edges);
  static Pseudograph from_simple(const SimpleGraph& g);

  // A self-loop contributes 2 to its vertex's degree.
  std::vector<int> degrees() const;
  bool is_simple() const;
  // Fails with jdm::Error if the pseudograph has a loop or multi-edge.
  SimpleGraph to_simple() const;

  friend bool operator==(const Pseudograph&, const Pseudograph&) = default;
};

}  // namespace jdm

#endif
