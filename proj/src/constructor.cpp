#include "jdm/constructor.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

#include "jdm/errors.hpp"

namespace jdm {

std::vector<long long> near_regular_split(long long total, int parts, int& cursor) {
  std::vector<long long> counts(parts, total / parts);
  long long rem = total % parts;
  for (long long i = 0; i < rem; ++i) ++counts[(cursor + i) % parts];
  cursor = static_cast<int>((cursor + rem) % parts);
  return counts;
}

namespace {

// Round-robin unit assignment between two nearly regular quota vectors.
// The y units are laid out in rounds with higher-quota vertices first, so any
// window of at most |y| consecutive units touches distinct vertices.
std::vector<std::pair<int, int>> assign_units(const std::vector<long long>& x,
                                              const std::vector<long long>& y) {
  std::vector<int> order(y.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return y[a] > y[b]; });
  std::vector<int> units;
  long long ymax = y.empty() ? 0 : *std::max_element(y.begin(), y.end());
  for (long long r = 0; r < ymax; ++r)
    for (int idx : order)
      if (y[idx] > r) units.push_back(idx);

  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(units.size());
  size_t pos = 0;
  for (size_t xi = 0; xi < x.size(); ++xi) {
    std::unordered_set<int> taken;
    for (long long q = 0; q < x[xi]; ++q) {
      int yi = units[pos++];
      if (!taken.insert(yi).second)
        throw Infeasible("duplicate pair in bipartite block assignment");
      pairs.emplace_back(static_cast<int>(xi), yi);
    }
  }
  return pairs;
}

void check_nearly_regular(const std::vector<long long>& q, const char* side) {
  if (q.empty()) return;
  auto [lo, hi] = std::minmax_element(q.begin(), q.end());
  if (*hi - *lo > 1)
    throw Infeasible(std::string(side) + " side degree sequence is not nearly regular");
}

}  // namespace

SimpleGraph build_bipartite_block(const std::vector<long long>& x,
                                  const std::vector<long long>& y) {
  long long sx = std::accumulate(x.begin(), x.end(), 0LL);
  long long sy = std::accumulate(y.begin(), y.end(), 0LL);
  if (sx != sy) throw Infeasible("side degree sums differ");
  check_nearly_regular(x, "x");
  check_nearly_regular(y, "y");
  if (!x.empty() && *std::max_element(x.begin(), x.end()) > static_cast<long long>(y.size()))
    throw Infeasible("x degree exceeds y side size");
  if (!y.empty() && *std::max_element(y.begin(), y.end()) > static_cast<long long>(x.size()))
    throw Infeasible("y degree exceeds x side size");

  int nx = static_cast<int>(x.size());
  std::vector<Edge> edges;
  for (auto [xi, yi] : assign_units(x, y)) edges.emplace_back(xi, nx + yi);
  return SimpleGraph::make(nx + static_cast<int>(y.size()), std::move(edges));
}

SimpleGraph havel_hakimi_block(const std::vector<long long>& x) {
  int n = static_cast<int>(x.size());
  std::vector<std::pair<long long, int>> residual;  // (remaining degree, vertex)
  for (int i = 0; i < n; ++i) {
    if (x[i] < 0) throw Infeasible("negative degree");
    if (x[i] > 0) residual.emplace_back(x[i], i);
  }
  std::vector<Edge> edges;
  while (!residual.empty()) {
    std::stable_sort(residual.begin(), residual.end(),
                     [](const auto& a, const auto& b) { return a.first > b.first; });
    auto [d, v] = residual.front();
    residual.erase(residual.begin());
    if (d > static_cast<long long>(residual.size()))
      throw Infeasible("degree sequence not graphical");
    for (long long i = 0; i < d; ++i) {
      edges.emplace_back(v, residual[i].second);
      --residual[i].first;
    }
    residual.erase(std::remove_if(residual.begin(), residual.end(),
                                  [](const auto& p) { return p.first == 0; }),
                   residual.end());
  }
  return SimpleGraph::make(n, std::move(edges));
}

namespace {

// Residual feasibility of the unprocessed tail: J-hat bounded by the slot
// counts over vertices that still have residual degree.
void check_residual_feasibility(
    const std::map<std::pair<int, int>, long long>& remaining,
    const CanonicalLayout& layout, const std::vector<long long>& residual) {
  std::map<int, long long> live;  // D-hat per degree
  for (auto& [k, range] : layout.degree_range) {
    long long c = 0;
    for (int v = range.first; v < range.second; ++v)
      if (residual[v] > 0) ++c;
    live[k] = c;
  }
  for (auto& [kl, c] : remaining) {
    auto [k, l] = kl;
    long long cap = (k == l) ? live[k] * (live[k] - 1) / 2 : live[k] * live[l];
    if (c > cap)
      throw Infeasible("residual matrix infeasible at (" + std::to_string(k) + "," +
                       std::to_string(l) + ")");
  }
}

}  // namespace

SimpleGraph greedy_construct(const JointDegreeMatrix& j, bool audit) {
  auto report = is_graphical(j);
  if (!report.graphical)
    throw NotGraphical(report.violations.empty() ? "" : report.violations.front().detail);

  DegreeVector d = derive_degree_vector(j);
  CanonicalLayout layout = CanonicalLayout::from(d);
  std::vector<long long> residual(layout.degree_of.begin(), layout.degree_of.end());
  std::map<int, int> cursor;  // persistent rotation position per degree class

  // Degree pairs largest-first: descending by larger degree, then smaller.
  std::vector<std::pair<int, int>> order;
  for (auto& [kl, c] : j.entries) order.push_back(kl);
  std::sort(order.begin(), order.end(), [](auto a, auto b) {
    return std::pair{a.second, a.first} > std::pair{b.second, b.first};
  });

  std::map<std::pair<int, int>, long long> remaining = j.entries;
  std::vector<Edge> edges;
  for (auto kl : order) {
    auto [a, b] = kl;  // a <= b
    long long count = j.at(a, b);
    auto vb = layout.class_vertices(b);
    if (a != b) {
      auto va = layout.class_vertices(a);
      auto qb = near_regular_split(count, static_cast<int>(vb.size()), cursor[b]);
      auto qa = near_regular_split(count, static_cast<int>(va.size()), cursor[a]);
      for (auto [bi, ai] : assign_units(qb, qa)) edges.emplace_back(vb[bi], va[ai]);
      for (size_t i = 0; i < va.size(); ++i) residual[va[i]] -= qa[i];
      for (size_t i = 0; i < vb.size(); ++i) residual[vb[i]] -= qb[i];
    } else {
      auto q = near_regular_split(2 * count, static_cast<int>(vb.size()), cursor[b]);
      SimpleGraph block = havel_hakimi_block(q);
      for (auto [u, v] : block.edges) edges.emplace_back(vb[u], vb[v]);
      for (size_t i = 0; i < vb.size(); ++i) residual[vb[i]] -= q[i];
    }
    remaining.erase(kl);

    if (audit) {
      for (int deg : {a, b}) {
        auto range = layout.degree_range.at(deg);
        long long lo = residual[range.first], hi = lo;
        for (int v = range.first; v < range.second; ++v) {
          lo = std::min(lo, residual[v]);
          hi = std::max(hi, residual[v]);
        }
        if (hi - lo > 1)
          throw Infeasible("balanced residual invariant violated in class " +
                           std::to_string(deg));
      }
      check_residual_feasibility(remaining, layout, residual);
    }
  }
  for (long long r : residual)
    if (r != 0) throw Infeasible("nonzero residual degree after construction");
  return SimpleGraph::make(layout.vertex_count(), std::move(edges));
}

}  // namespace jdm
