#include "jdm/config_mcmc.hpp"

#include <algorithm>

#include "jdm/constructor.hpp"
#include "jdm/errors.hpp"

namespace jdm {

std::uint64_t Rng::bounded(std::uint64_t n) {
  // Rejection sampling keeps the draw exactly uniform and reproducible.
  std::uint64_t rem = (0 - n) % n;  // 2^64 mod n
  std::uint64_t x = gen_();
  if (rem != 0) {
    std::uint64_t limit = 0 - rem;  // largest multiple of n
    while (x >= limit) x = gen_();
  }
  return x % n;
}

namespace {
std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}
}  // namespace

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t replica) {
  return seed ^ splitmix64(replica + 1);
}

std::uint64_t Configuration::pair_key(int u, int v) const {
  if (u > v) std::swap(u, v);
  return (static_cast<std::uint64_t>(u) << 32) | static_cast<std::uint32_t>(v);
}

Configuration Configuration::from_graph(const Pseudograph& g) {
  if (g.edges.empty()) throw EmptyGraph();
  Configuration c;
  c.vertex_count_ = g.vertex_count;
  auto deg = g.degrees();

  std::map<int, int> class_of_degree;
  for (int v = 0; v < g.vertex_count; ++v)
    if (deg[v] > 0) class_of_degree.emplace(deg[v], 0);
  int ci = 0;
  for (auto& [k, idx] : class_of_degree) {
    idx = ci++;
    c.classes_.push_back(DegreeClass{k, {}, {}, {}, {}});
  }
  // k minis per degree-k vertex, in vertex order.
  std::vector<int> next_mini(g.vertex_count, 0);  // first free mini slot per vertex
  std::vector<int> mini_base(g.vertex_count, 0);
  for (int v = 0; v < g.vertex_count; ++v) {
    if (deg[v] == 0) continue;
    auto& cls = c.classes_[class_of_degree[deg[v]]];
    mini_base[v] = static_cast<int>(cls.mini_owner.size());
    for (int i = 0; i < deg[v]; ++i) cls.mini_owner.push_back(v);
  }
  // One endpoint per edge side; initial matching pairs each endpoint with the
  // next free mini of the vertex it touches.
  c.edge_vertex_.resize(g.edges.size());
  for (auto& cls : c.classes_) cls.endpoint_to_mini.resize(cls.mini_owner.size());
  for (int e = 0; e < static_cast<int>(g.edges.size()); ++e) {
    auto [u, v] = g.edges[e];
    c.edge_vertex_[e] = {u, v};
    int sides[2] = {u, v};
    for (int side = 0; side < 2; ++side) {
      int w = sides[side];
      auto& cls = c.classes_[class_of_degree[deg[w]]];
      int ep = static_cast<int>(cls.endpoints.size());
      cls.endpoints.push_back({e, side});
      cls.endpoint_to_mini[ep] = mini_base[w] + next_mini[w]++;
    }
    ++c.pair_count_[c.pair_key(u, v)];
  }
  for (auto& cls : c.classes_) {
    cls.endpoint_to_mini.resize(cls.endpoints.size());
    cls.mini_to_endpoint.assign(cls.mini_owner.size(), -1);
    for (int ep = 0; ep < static_cast<int>(cls.endpoints.size()); ++ep)
      cls.mini_to_endpoint[cls.endpoint_to_mini[ep]] = ep;
    for (int ep = 0; ep < static_cast<int>(cls.endpoints.size()); ++ep) {
      auto& p = cls.endpoints[ep];
      c.endpoint_index_.emplace_back(&cls - c.classes_.data(), ep);
      (void)p;
    }
  }
  return c;
}

int Configuration::class_index(int degree) const {
  for (int i = 0; i < static_cast<int>(classes_.size()); ++i)
    if (classes_[i].degree == degree) return i;
  throw UnknownDegreeClass(degree);
}

Pseudograph Configuration::collapse() const {
  std::vector<Edge> edges;
  edges.reserve(edge_vertex_.size());
  for (auto& ev : edge_vertex_) edges.emplace_back(ev[0], ev[1]);
  return Pseudograph::make(vertex_count_, std::move(edges));
}

bool Configuration::is_simple() const {
  for (auto& ev : edge_vertex_)
    if (ev[0] == ev[1]) return false;
  for (auto& [key, count] : pair_count_)
    if (count > 1) return false;
  return true;
}

bool Configuration::swap_keeps_simple(int ci, int e1, int e2) const {
  const auto& cls = classes_[ci];
  const Endpoint& p1 = cls.endpoints[e1];
  const Endpoint& p2 = cls.endpoints[e2];
  if (p1.edge == p2.edge) return true;  // relabels the matching only
  int v1 = cls.mini_owner[cls.endpoint_to_mini[e1]];
  int v2 = cls.mini_owner[cls.endpoint_to_mini[e2]];
  if (v1 == v2) return true;
  int wa = edge_vertex_[p1.edge][1 - p1.side];
  int wb = edge_vertex_[p2.edge][1 - p2.side];
  if (wa == v2 || wb == v1) return false;  // self-loop

  std::uint64_t new_a = pair_key(wa, v2), new_b = pair_key(wb, v1);
  if (new_a == new_b) return false;
  std::uint64_t old_a = pair_key(wa, v1), old_b = pair_key(wb, v2);
  auto count_excluding = [&](std::uint64_t key) {
    auto it = pair_count_.find(key);
    long long n = it == pair_count_.end() ? 0 : it->second;
    if (key == old_a) --n;
    if (key == old_b) --n;
    return n;
  };
  return count_excluding(new_a) == 0 && count_excluding(new_b) == 0;
}

void Configuration::set_edge_vertex(int edge, int side, int v) {
  edge_vertex_[edge][side] = v;
}

long long Configuration::pair_multiplicity(int u, int v) const {
  auto it = pair_count_.find(pair_key(u, v));
  return it == pair_count_.end() ? 0 : it->second;
}

void Configuration::apply_swap(int ci, int e1, int e2) {
  last_changed_ = {-1, -1};
  auto& cls = classes_[ci];
  int m1 = cls.endpoint_to_mini[e1];
  int m2 = cls.endpoint_to_mini[e2];
  std::swap(cls.endpoint_to_mini[e1], cls.endpoint_to_mini[e2]);
  cls.mini_to_endpoint[m1] = e2;
  cls.mini_to_endpoint[m2] = e1;

  const Endpoint& p1 = cls.endpoints[e1];
  const Endpoint& p2 = cls.endpoints[e2];
  int v1 = cls.mini_owner[m1];  // previous vertex of e1, new vertex of e2
  int v2 = cls.mini_owner[m2];
  if (v1 == v2) return;  // collapsed graph unchanged

  auto remove_pair = [&](int edge) {
    auto it = pair_count_.find(pair_key(edge_vertex_[edge][0], edge_vertex_[edge][1]));
    if (--it->second == 0) pair_count_.erase(it);
  };
  if (p1.edge == p2.edge) {
    // Both endpoints of one edge: the unordered pair is unchanged.
    remove_pair(p1.edge);
    set_edge_vertex(p1.edge, p1.side, v2);
    set_edge_vertex(p2.edge, p2.side, v1);
    ++pair_count_[pair_key(edge_vertex_[p1.edge][0], edge_vertex_[p1.edge][1])];
    return;
  }
  remove_pair(p1.edge);
  remove_pair(p2.edge);
  set_edge_vertex(p1.edge, p1.side, v2);
  set_edge_vertex(p2.edge, p2.side, v1);
  ++pair_count_[pair_key(edge_vertex_[p1.edge][0], edge_vertex_[p1.edge][1])];
  ++pair_count_[pair_key(edge_vertex_[p2.edge][0], edge_vertex_[p2.edge][1])];
  last_changed_ = {p1.edge, p2.edge};
}

bool Configuration::step(ChainKind kind, Rng& rng) {
  last_changed_ = {-1, -1};
  if (rng.coin()) return false;  // lazy step
  std::uint64_t total = endpoint_index_.size();
  auto [ci, e1] = endpoint_index_[rng.bounded(total)];
  const auto& cls = classes_[ci];
  std::uint64_t size = cls.endpoints.size();
  if (size < 2) return false;  // no other endpoint in this class
  int e2 = static_cast<int>(rng.bounded(size - 1));
  if (e2 >= e1) ++e2;
  if (kind == ChainKind::B && !swap_keeps_simple(ci, e1, e2)) return false;
  apply_swap(ci, e1, e2);
  return true;
}

Configuration build_configuration(const Pseudograph& g) {
  return Configuration::from_graph(g);
}

Configuration build_configuration(const SimpleGraph& g) {
  return Configuration::from_graph(Pseudograph::from_simple(g));
}

Configuration transition_step(const Configuration& c, ChainKind kind, Rng& rng) {
  Configuration next = c;
  next.step(kind, rng);
  return next;
}

long long feasible_swap_count(const Configuration& c, int degree) {
  int ci = c.class_index(degree);
  int size = static_cast<int>(c.classes()[ci].endpoints.size());
  long long count = 0;
  for (int i = 0; i < size; ++i)
    for (int j = i + 1; j < size; ++j)
      if (c.swap_keeps_simple(ci, i, j)) ++count;
  return count;
}

Pseudograph collapse(const Configuration& c) { return c.collapse(); }

void sample(const JointDegreeMatrix& j, ChainKind kind, const SamplerSchedule& schedule,
            const std::function<void(const Pseudograph&)>& emit) {
  SimpleGraph seed_graph = greedy_construct(j);  // throws NotGraphical
  Configuration c = build_configuration(seed_graph);
  Rng rng(schedule.seed);
  for (long long i = 0; i < schedule.burn_in; ++i) c.step(kind, rng);
  for (long long s = 0; s < schedule.sample_count; ++s) {
    for (long long i = 0; i < schedule.gap; ++i) c.step(kind, rng);
    emit(c.collapse());
  }
}

std::vector<Pseudograph> sample_all(const JointDegreeMatrix& j, ChainKind kind,
                                    const SamplerSchedule& schedule) {
  std::vector<Pseudograph> out;
  out.reserve(static_cast<size_t>(schedule.sample_count));
  sample(j, kind, schedule, [&](const Pseudograph& g) { out.push_back(g); });
  return out;
}

}  // namespace jdm
