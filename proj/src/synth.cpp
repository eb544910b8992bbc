#include "jdm/synth.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "jdm/errors.hpp"

namespace jdm {

JointDegreeMatrix generate_synthetic(const SynthSpec& spec) {
  if (spec.k_degrees.size() * spec.l_degrees.size() < 20)
    throw InfeasibleSpec("need at least 20 K x L cells");
  std::set<int> seen;
  for (int d : spec.k_degrees)
    if (d <= 1 || !seen.insert(d).second) throw InfeasibleSpec("bad K degree");
  for (int d : spec.l_degrees)
    if (d <= 1 || !seen.insert(d).second) throw InfeasibleSpec("bad L degree");

  std::map<int, long long> mult;
  for (int k : spec.k_degrees) mult[k] = 4;
  for (int l : spec.l_degrees) mult[l] = 5;

  // Values 1..20 over the K x L cells in row-major order (k asc, l asc).
  JointDegreeMatrix j;
  std::map<int, long long> allocated;  // endpoints used per degree
  long long value = 1;
  std::vector<int> ks = spec.k_degrees, ls = spec.l_degrees;
  std::sort(ks.begin(), ks.end());
  std::sort(ls.begin(), ls.end());
  for (int k : ks) {
    for (int l : ls) {
      if (value > 20) break;
      j.add(k, l, value);
      allocated[k] += value;
      allocated[l] += value;
      ++value;
    }
  }

  std::map<int, long long> deficit;
  for (auto& [d, c] : mult) {
    long long need = static_cast<long long>(d) * c;
    if (allocated[d] > need) throw InfeasibleSpec("degree " + std::to_string(d) +
                                                  " over-allocated by the mean cells");
    deficit[d] = need - allocated[d];
  }

  if (spec.fill == SynthSpec::Fill::Dense) {
    // Pack K x K and L x L cells first, then fall back to degree-1 edges.
    auto absorb = [&](const std::vector<int>& degrees) {
      for (size_t a = 0; a < degrees.size(); ++a) {
        for (size_t b = a + 1; b < degrees.size(); ++b) {
          int da = degrees[a], db = degrees[b];
          long long cap = mult[da] * mult[db] - j.at(da, db);
          long long t = std::min({deficit[da], deficit[db], cap});
          if (t > 0) {
            j.add(da, db, t);
            deficit[da] -= t;
            deficit[db] -= t;
          }
        }
      }
    };
    absorb(ks);
    absorb(ls);
  }
  for (auto& [d, gap] : deficit)
    if (gap > 0) j.add(1, d, gap);

  auto report = is_graphical(j);
  if (!report.graphical)
    throw InfeasibleSpec("fill produced a non-graphical matrix: " +
                         (report.violations.empty() ? std::string("unknown")
                                                    : report.violations.front().detail));
  return j;
}

}  // namespace jdm
