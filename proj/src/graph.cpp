#include "jdm/graph.hpp"

#include <algorithm>

#include "jdm/errors.hpp"

namespace jdm {

SimpleGraph SimpleGraph::make(int vertex_count, std::vector<Edge> edges) {
  for (auto& [u, v] : edges) {
    if (u == v) throw Error("self-loop " + std::to_string(u) + "-" + std::to_string(v));
    if (u > v) std::swap(u, v);
    if (u < 0 || v >= vertex_count)
      throw Error("vertex index out of range: " + std::to_string(u) + "-" + std::to_string(v));
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
    throw Error("duplicate edge");
  return SimpleGraph{vertex_count, std::move(edges)};
}

bool SimpleGraph::has_edge(int u, int v) const {
  if (u > v) std::swap(u, v);
  return std::binary_search(edges.begin(), edges.end(), Edge{u, v});
}

std::vector<int> SimpleGraph::degrees() const {
  std::vector<int> deg(vertex_count, 0);
  for (auto [u, v] : edges) {
    ++deg[u];
    ++deg[v];
  }
  return deg;
}

Pseudograph Pseudograph::make(int vertex_count, std::vector<Edge> edges) {
  for (auto& [u, v] : edges) {
    if (u > v) std::swap(u, v);
    if (u < 0 || v >= vertex_count)
      throw Error("vertex index out of range: " + std::to_string(u) + "-" + std::to_string(v));
  }
  std::sort(edges.begin(), edges.end());
  return Pseudograph{vertex_count, std::move(edges)};
}

Pseudograph Pseudograph::from_simple(const SimpleGraph& g) {
  return Pseudograph{g.vertex_count, g.edges};
}

std::vector<int> Pseudograph::degrees() const {
  std::vector<int> deg(vertex_count, 0);
  for (auto [u, v] : edges) {
    deg[u] += (u == v) ? 2 : 1;
    if (u != v) ++deg[v];
  }
  return deg;
}

bool Pseudograph::is_simple() const {
  for (size_t i = 0; i < edges.size(); ++i) {
    if (edges[i].first == edges[i].second) return false;
    if (i > 0 && edges[i] == edges[i - 1]) return false;
  }
  return true;
}

SimpleGraph Pseudograph::to_simple() const {
  if (!is_simple()) throw Error("pseudograph is not simple");
  return SimpleGraph{vertex_count, edges};
}

}  // namespace jdm
