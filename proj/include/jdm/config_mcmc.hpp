#ifndef JDM_CONFIG_MCMC_HPP
#define JDM_CONFIG_MCMC_HPP

#include <array>
#include <cstdint>
#include <functional>
#include <random>
#include <unordered_map>
#include <vector>

#include "jdm/graph.hpp"
#include "jdm/jdm.hpp"

namespace jdm {

enum class ChainKind { A, B };

struct SamplerSchedule {
  long long burn_in = 0;
  long long gap = 1;
  long long sample_count = 0;
  std::uint64_t seed = 0;
};

// Deterministic 64-bit generator with platform-independent bounded draws.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}
  std::uint64_t bounded(std::uint64_t n);  // uniform in [0, n)
  bool coin() { return (gen_() & 1) != 0; }

 private:
  std::mt19937_64 gen_;
};

// Independent stream seed for a replica index.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t replica);

// The JDM configuration model state: per degree class, k mini-vertices per
// degree-k vertex and one endpoint per class-k endpoint of every edge, with a
// perfect matching between them. Collapsing the matching yields a pseudograph
// whose JDM equals the one the state was built from.
class Configuration {
 public:
  struct Endpoint {
    int edge;  // edge id
    int side;  // 0 or 1
    friend bool operator==(const Endpoint&, const Endpoint&) = default;
  };
  struct DegreeClass {
    int degree;
    std::vector<int> mini_owner;        // mini index -> parent vertex
    std::vector<Endpoint> endpoints;    // endpoint index -> (edge, side)
    std::vector<int> endpoint_to_mini;  // perfect matching
    std::vector<int> mini_to_endpoint;  // inverse
    friend bool operator==(const DegreeClass&, const DegreeClass&) = default;
  };

  static Configuration from_graph(const Pseudograph& g);

  Pseudograph collapse() const;
  int vertex_count() const { return vertex_count_; }
  long long edge_count() const { return static_cast<long long>(edge_vertex_.size()); }
  bool is_simple() const;

  const std::vector<DegreeClass>& classes() const { return classes_; }
  int class_index(int degree) const;  // throws UnknownDegreeClass
  Edge edge_vertices(int edge) const {
    return {edge_vertex_[edge][0], edge_vertex_[edge][1]};
  }
  // Multiplicity of the unordered pair {u,v} in the collapsed graph.
  long long pair_multiplicity(int u, int v) const;
  // Edge ids whose collapsed endpoints changed in the last applied swap;
  // {-1,-1} when the last step left the graph unchanged.
  std::pair<int, int> last_swap_edges() const { return {last_changed_[0], last_changed_[1]}; }

  // One lazy-chain transition. Returns true iff a swap was applied.
  bool step(ChainKind kind, Rng& rng);

  // Would swapping endpoints e1, e2 of class ci keep the collapsed graph
  // simple? Same-edge and same-vertex swaps leave the graph unchanged and
  // are always feasible.
  bool swap_keeps_simple(int ci, int e1, int e2) const;
  void apply_swap(int ci, int e1, int e2);

  friend bool operator==(const Configuration& a, const Configuration& b) {
    return a.vertex_count_ == b.vertex_count_ && a.classes_ == b.classes_ &&
           a.edge_vertex_ == b.edge_vertex_;
  }

 private:
  int vertex_count_ = 0;
  std::vector<DegreeClass> classes_;
  std::vector<std::array<int, 2>> edge_vertex_;      // current collapsed endpoints
  std::vector<std::pair<int, int>> endpoint_index_;  // flat (class, endpoint), size 2m
  std::unordered_map<std::uint64_t, int> pair_count_;  // collapsed edge multiset
  std::array<int, 2> last_changed_{-1, -1};

  std::uint64_t pair_key(int u, int v) const;
  void set_edge_vertex(int edge, int side, int v);
};

Configuration build_configuration(const Pseudograph& g);
Configuration build_configuration(const SimpleGraph& g);

// Pure transition: copies, steps once, returns the new state.
Configuration transition_step(const Configuration& c, ChainKind kind, Rng& rng);

// Number of unordered endpoint pairs in the given degree class whose swap
// keeps the collapsed graph simple.
long long feasible_swap_count(const Configuration& c, int degree);

Pseudograph collapse(const Configuration& c);

// Runs the chain from the deterministic greedy realization of j and invokes
// `emit` for each retained sample. Chain B samples are always simple.
void sample(const JointDegreeMatrix& j, ChainKind kind, const SamplerSchedule& schedule,
            const std::function<void(const Pseudograph&)>& emit);

std::vector<Pseudograph> sample_all(const JointDegreeMatrix& j, ChainKind kind,
                                    const SamplerSchedule& schedule);

}  // namespace jdm

#endif
