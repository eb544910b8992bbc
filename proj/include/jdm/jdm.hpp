#ifndef JDM_JDM_HPP
#define JDM_JDM_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "jdm/graph.hpp"
#include "jdm/rational.hpp"

namespace jdm {

// Counts of vertices per degree. Degree-0 vertices are never represented;
// all stored counts are strictly positive.
struct DegreeVector {
  std::map<int, long long> counts;

  long long vertex_count() const;  // n, non-isolated vertices
  long long at(int degree) const;  // 0 if absent

  friend bool operator==(const DegreeVector&, const DegreeVector&) = default;
};

// Symmetric edge counts between degree classes, keyed by unordered pair
// canonicalized to first <= second. All stored counts strictly positive.
struct JointDegreeMatrix {
  std::map<std::pair<int, int>, long long> entries;

  static JointDegreeMatrix from_entries(
      const std::vector<std::tuple<int, int, long long>>& entries);

  void add(int k, int l, long long count);  // accumulates; drops zero results
  long long at(int k, int l) const;         // 0 if absent

  friend bool operator==(const JointDegreeMatrix&, const JointDegreeMatrix&) = default;
};

struct GraphicalityReport {
  struct Violation {
    std::string condition;     // "non-integer-degree-count", "cross-pair-bound", "same-pair-bound"
    std::pair<int, int> pair;  // degree pair involved
    std::string detail;
  };
  bool graphical = false;
  std::vector<Violation> violations;
};

// D_k = (J_{k,k} + sum_l J_{k,l}) / k. Throws NonIntegerDegreeCount if any
// class's endpoint total is not divisible by its degree.
DegreeVector derive_degree_vector(const JointDegreeMatrix& j);

// m = sum over canonical pairs of J_{k,l}.
long long edge_count(const JointDegreeMatrix& j);

// Necessary-and-sufficient simple-realizability test. Collects every failed
// condition instead of stopping at the first.
GraphicalityReport is_graphical(const JointDegreeMatrix& j);

// Erdos-Gallai test on the expanded non-increasing degree sequence.
bool erdos_gallai_check(const DegreeVector& d);

JointDegreeMatrix extract_jdm(const SimpleGraph& g);
JointDegreeMatrix extract_jdm(const Pseudograph& g);

// Number of potential labeled (k,l) edge slots: D_k*D_l, or C(D_k,2) if k == l.
long long slot_count(const DegreeVector& d, int k, int l);

// Exact occupancy probability of a fixed labeled (k,l) slot under the uniform
// distribution: J_{k,l} / slot_count. Throws NotGraphical if j is not.
Rational edge_mean(const JointDegreeMatrix& j, int k, int l);

// Canonical vertex numbering shared by the constructor, the enumeration oracle
// and the sampler: vertices sorted by descending degree, contiguous per class.
struct CanonicalLayout {
  std::vector<int> degree_of;                        // per vertex
  std::map<int, std::pair<int, int>> degree_range;   // degree -> [begin, end)

  static CanonicalLayout from(const DegreeVector& d);
  int vertex_count() const { return static_cast<int>(degree_of.size()); }
  std::vector<int> class_vertices(int degree) const;
};

}  // namespace jdm

#endif
