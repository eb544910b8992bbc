#include "jdm/jdm.hpp"

#include <algorithm>
#include <numeric>
#include <tuple>

#include "jdm/errors.hpp"

namespace jdm {

long long DegreeVector::vertex_count() const {
  long long n = 0;
  for (auto& [k, c] : counts) n += c;
  return n;
}

long long DegreeVector::at(int degree) const {
  auto it = counts.find(degree);
  return it == counts.end() ? 0 : it->second;
}

JointDegreeMatrix JointDegreeMatrix::from_entries(
    const std::vector<std::tuple<int, int, long long>>& entries) {
  JointDegreeMatrix j;
  for (auto& [k, l, c] : entries) j.add(k, l, c);
  return j;
}

void JointDegreeMatrix::add(int k, int l, long long count) {
  if (k < 1 || l < 1) throw Error("degrees must be positive");
  if (k > l) std::swap(k, l);
  auto [it, inserted] = entries.try_emplace({k, l}, count);
  if (!inserted) it->second += count;
  if (it->second < 0) throw Error("negative edge count at (" + std::to_string(k) + "," +
                                  std::to_string(l) + ")");
  if (it->second == 0) entries.erase(it);
}

long long JointDegreeMatrix::at(int k, int l) const {
  if (k > l) std::swap(k, l);
  auto it = entries.find({k, l});
  return it == entries.end() ? 0 : it->second;
}

DegreeVector derive_degree_vector(const JointDegreeMatrix& j) {
  // Endpoint totals per class: a (k,k) edge contributes two class-k endpoints.
  std::map<int, long long> endpoints;
  for (auto& [kl, c] : j.entries) {
    endpoints[kl.first] += c;
    endpoints[kl.second] += c;
  }
  DegreeVector d;
  for (auto& [k, total] : endpoints) {
    if (total % k != 0) throw NonIntegerDegreeCount(k, total);
    d.counts[k] = total / k;
  }
  return d;
}

long long edge_count(const JointDegreeMatrix& j) {
  long long m = 0;
  for (auto& [kl, c] : j.entries) m += c;
  return m;
}

GraphicalityReport is_graphical(const JointDegreeMatrix& j) {
  GraphicalityReport report;
  DegreeVector d;
  try {
    d = derive_degree_vector(j);
  } catch (const NonIntegerDegreeCount& e) {
    report.violations.push_back({"non-integer-degree-count",
                                 {e.degree, e.degree},
                                 std::to_string(e.numerator) + " endpoints of degree " +
                                     std::to_string(e.degree)});
    // Remaining classes may still divide cleanly; report every offender.
    std::map<int, long long> endpoints;
    for (auto& [kl, c] : j.entries) {
      endpoints[kl.first] += c;
      endpoints[kl.second] += c;
    }
    for (auto& [k, total] : endpoints) {
      if (total % k != 0 && k != e.degree)
        report.violations.push_back({"non-integer-degree-count",
                                     {k, k},
                                     std::to_string(total) + " endpoints of degree " +
                                         std::to_string(k)});
    }
    report.graphical = false;
    return report;
  }
  for (auto& [kl, c] : j.entries) {
    auto [k, l] = kl;
    long long cap = slot_count(d, k, l);
    if (c > cap) {
      report.violations.push_back({k == l ? "same-pair-bound" : "cross-pair-bound",
                                   kl,
                                   "J=" + std::to_string(c) + " > " + std::to_string(cap) +
                                       " available slots"});
    }
  }
  report.graphical = report.violations.empty();
  return report;
}

bool erdos_gallai_check(const DegreeVector& d) {
  std::vector<long long> seq;
  for (auto it = d.counts.rbegin(); it != d.counts.rend(); ++it)
    seq.insert(seq.end(), static_cast<size_t>(it->second), it->first);
  long long n = static_cast<long long>(seq.size());
  long long total = std::accumulate(seq.begin(), seq.end(), 0LL);
  if (total % 2 != 0) return false;

  std::vector<long long> prefix(n + 1, 0);
  for (long long i = 0; i < n; ++i) prefix[i + 1] = prefix[i] + seq[i];
  for (long long k = 1; k <= n; ++k) {
    // sum_{i>k} min(d_i, k): entries >= k contribute k, the rest their value.
    auto split = std::lower_bound(seq.begin() + k, seq.end(), k,
                                  [](long long a, long long b) { return a > b; });
    long long big = split - (seq.begin() + k);
    long long rhs = k * (k - 1) + big * k + (prefix[n] - prefix[k + big]);
    if (prefix[k] > rhs) return false;
  }
  return true;
}

JointDegreeMatrix extract_jdm(const SimpleGraph& g) {
  if (g.edges.empty()) throw EmptyGraph();
  auto deg = g.degrees();
  JointDegreeMatrix j;
  for (auto [u, v] : g.edges) j.add(deg[u], deg[v], 1);
  return j;
}

JointDegreeMatrix extract_jdm(const Pseudograph& g) {
  if (g.edges.empty()) throw EmptyGraph();
  auto deg = g.degrees();
  JointDegreeMatrix j;
  for (auto [u, v] : g.edges) j.add(deg[u], deg[v], 1);
  return j;
}

long long slot_count(const DegreeVector& d, int k, int l) {
  long long dk = d.at(k);
  if (k == l) return dk * (dk - 1) / 2;
  return dk * d.at(l);
}

Rational edge_mean(const JointDegreeMatrix& j, int k, int l) {
  auto report = is_graphical(j);
  if (!report.graphical) throw NotGraphical();
  long long c = j.at(k, l);
  if (c == 0) return Rational{0, 1};
  return Rational::of(c, slot_count(derive_degree_vector(j), k, l));
}

CanonicalLayout CanonicalLayout::from(const DegreeVector& d) {
  CanonicalLayout layout;
  int next = 0;
  for (auto it = d.counts.rbegin(); it != d.counts.rend(); ++it) {
    auto [k, c] = *it;
    layout.degree_range[k] = {next, next + static_cast<int>(c)};
    for (long long i = 0; i < c; ++i) layout.degree_of.push_back(k);
    next += static_cast<int>(c);
  }
  return layout;
}

std::vector<int> CanonicalLayout::class_vertices(int degree) const {
  auto it = degree_range.find(degree);
  if (it == degree_range.end()) throw UnknownDegreeClass(degree);
  std::vector<int> out;
  for (int v = it->second.first; v < it->second.second; ++v) out.push_back(v);
  return out;
}

}  // namespace jdm
