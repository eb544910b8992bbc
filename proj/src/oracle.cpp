#include "jdm/oracle.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "jdm/errors.hpp"

namespace jdm {

namespace {

struct EntryPlan {
  int k, l;
  long long count;
  std::vector<Edge> candidates;  // all (k,l) vertex pairs, ascending
};

struct Enumerator {
  std::vector<EntryPlan> entries;
  std::vector<std::map<int, long long>> suffix_demand;  // endpoint demand per degree
  std::vector<long long> capacity;                      // residual degree per vertex
  std::map<int, long long> cap_sum;                     // residual per degree class
  const CanonicalLayout* layout = nullptr;
  long long limit = 0;
  std::vector<Edge> chosen;
  std::vector<SimpleGraph>* out = nullptr;

  bool demand_satisfiable(size_t entry) const {
    for (auto& [k, need] : suffix_demand[entry])
      if (need > cap_sum.at(k)) return false;
    return true;
  }

  void take(Edge e, int k, int l) {
    --capacity[e.first];
    --capacity[e.second];
    --cap_sum[k];
    --cap_sum[l];
    chosen.push_back(e);
  }
  void untake(Edge e, int k, int l) {
    ++capacity[e.first];
    ++capacity[e.second];
    ++cap_sum[k];
    ++cap_sum[l];
    chosen.pop_back();
  }

  void recurse_entry(size_t entry) {
    if (entry == entries.size()) {
      out->push_back(SimpleGraph::make(layout->vertex_count(), chosen));
      if (static_cast<long long>(out->size()) > limit)
        throw LimitExceeded("more than " + std::to_string(limit) + " realizations");
      return;
    }
    recurse_pick(entry, 0, entries[entry].count);
  }

  void recurse_pick(size_t entry, size_t start, long long need) {
    if (need == 0) {
      if (demand_satisfiable(entry + 1)) recurse_entry(entry + 1);
      return;
    }
    auto& plan = entries[entry];
    if (static_cast<long long>(plan.candidates.size() - start) < need) return;
    for (size_t i = start; i < plan.candidates.size(); ++i) {
      Edge e = plan.candidates[i];
      if (capacity[e.first] == 0 || capacity[e.second] == 0) continue;
      take(e, plan.k, plan.l);
      recurse_pick(entry, i + 1, need - 1);
      untake(e, plan.k, plan.l);
    }
  }
};

}  // namespace

RealizationSet enumerate_realizations(const JointDegreeMatrix& j, long long limit) {
  long long m = edge_count(j);
  if (m > 12) throw TooLarge("oracle handles at most 12 edges, got " + std::to_string(m));
  RealizationSet result;
  result.jdm = j;
  DegreeVector d;
  try {
    d = derive_degree_vector(j);
  } catch (const NonIntegerDegreeCount&) {
    return result;  // no realizations possible
  }
  CanonicalLayout layout = CanonicalLayout::from(d);

  Enumerator en;
  en.layout = &layout;
  en.limit = limit;
  en.out = &result.graphs;
  en.capacity.assign(layout.degree_of.begin(), layout.degree_of.end());
  for (auto& [k, c] : d.counts) en.cap_sum[k] = k * c;
  for (auto& [kl, c] : j.entries) {
    EntryPlan plan{kl.first, kl.second, c, {}};
    auto ks = layout.class_vertices(kl.first);
    if (kl.first == kl.second) {
      for (size_t a = 0; a < ks.size(); ++a)
        for (size_t b = a + 1; b < ks.size(); ++b)
          plan.candidates.emplace_back(ks[a], ks[b]);
    } else {
      auto ls = layout.class_vertices(kl.second);
      for (int u : ks)
        for (int v : ls) plan.candidates.emplace_back(std::min(u, v), std::max(u, v));
      std::sort(plan.candidates.begin(), plan.candidates.end());
    }
    en.entries.push_back(std::move(plan));
  }
  en.suffix_demand.assign(en.entries.size() + 1, {});
  for (size_t i = en.entries.size(); i-- > 0;) {
    en.suffix_demand[i] = en.suffix_demand[i + 1];
    en.suffix_demand[i][en.entries[i].k] += en.entries[i].count;
    en.suffix_demand[i][en.entries[i].l] += en.entries[i].count;
  }
  if (en.demand_satisfiable(0)) en.recurse_entry(0);
  std::sort(result.graphs.begin(), result.graphs.end(),
            [](const SimpleGraph& a, const SimpleGraph& b) { return a.edges < b.edges; });
  return result;
}

SwapGraphReport swap_graph_connected(RealizationSet& r) {
  if (r.graphs.empty()) return {false, 0};
  size_t n = r.graphs.size();
  std::map<std::vector<Edge>, int> index;
  for (size_t i = 0; i < n; ++i) index[r.graphs[i].edges] = static_cast<int>(i);
  auto degrees = r.graphs.front().degrees();

  r.swap_adjacency.assign(n, {});
  for (size_t g = 0; g < n; ++g) {
    const auto& edges = r.graphs[g].edges;
    for (size_t a = 0; a < edges.size(); ++a) {
      for (size_t b = a + 1; b < edges.size(); ++b) {
        int ea[2] = {edges[a].first, edges[a].second};
        int eb[2] = {edges[b].first, edges[b].second};
        for (int i = 0; i < 2; ++i) {
          for (int k = 0; k < 2; ++k) {
            int q = ea[i], s = eb[k];        // exchanged endpoints
            int p = ea[1 - i], t = eb[1 - k];  // kept endpoints
            if (degrees[q] != degrees[s]) continue;
            if (p == s || t == q) continue;  // self-loop
            Edge na{std::min(p, s), std::max(p, s)};
            Edge nb{std::min(t, q), std::max(t, q)};
            if (na == nb) continue;
            std::vector<Edge> next;
            next.reserve(edges.size());
            for (size_t x = 0; x < edges.size(); ++x)
              if (x != a && x != b) next.push_back(edges[x]);
            next.push_back(na);
            next.push_back(nb);
            std::sort(next.begin(), next.end());
            if (std::adjacent_find(next.begin(), next.end()) != next.end()) continue;
            if (next == edges) continue;
            auto it = index.find(next);
            if (it != index.end()) r.swap_adjacency[g].push_back(it->second);
          }
        }
      }
    }
    auto& adj = r.swap_adjacency[g];
    std::sort(adj.begin(), adj.end());
    adj.erase(std::unique(adj.begin(), adj.end()), adj.end());
  }

  // BFS eccentricities.
  SwapGraphReport report;
  std::vector<int> dist(n);
  long long diameter = 0;
  size_t reached_from_0 = 0;
  for (size_t s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    std::deque<int> queue{static_cast<int>(s)};
    dist[s] = 0;
    size_t reached = 0;
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      ++reached;
      diameter = std::max(diameter, static_cast<long long>(dist[u]));
      for (int v : r.swap_adjacency[u])
        if (dist[v] < 0) {
          dist[v] = dist[u] + 1;
          queue.push_back(v);
        }
    }
    if (s == 0) reached_from_0 = reached;
  }
  report.connected = reached_from_0 == n;
  report.diameter = diameter;
  return report;
}

std::map<Edge, Rational> exact_edge_means(const RealizationSet& r) {
  std::map<Edge, long long> counts;
  for (const auto& g : r.graphs)
    for (auto e : g.edges) ++counts[e];
  std::map<Edge, Rational> means;
  long long n = static_cast<long long>(r.graphs.size());
  for (auto& [e, c] : counts) means[e] = Rational::of(c, n);
  return means;
}

}  // namespace jdm
