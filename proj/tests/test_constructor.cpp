#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "jdm/constructor.hpp"
#include "jdm/errors.hpp"
#include "jdm/jdm.hpp"

using namespace jdm;

namespace {

std::vector<long long> sorted_degrees(const SimpleGraph& g) {
  auto d = g.degrees();
  std::vector<long long> out(d.begin(), d.end());
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

}  // namespace

TEST_CASE("near_regular_split distributes the remainder in rotation") {
  int cursor = 0;
  CHECK(near_regular_split(7, 3, cursor) == std::vector<long long>{3, 2, 2});
  CHECK(cursor == 1);

  cursor = 1;
  CHECK(near_regular_split(6, 3, cursor) == std::vector<long long>{2, 2, 2});
  CHECK(cursor == 1);

  cursor = 2;
  auto split = near_regular_split(4, 3, cursor);
  CHECK(split == std::vector<long long>{1, 1, 2});
  CHECK(cursor == 0);
}

TEST_CASE("near_regular_split conserves the total over arbitrary sequences") {
  std::mt19937_64 gen(11);
  int cursor = 0;
  for (int i = 0; i < 200; ++i) {
    int parts = 1 + static_cast<int>(gen() % 7);
    long long total = static_cast<long long>(gen() % 40);
    int before = cursor;
    auto split = near_regular_split(total, parts, cursor);
    long long sum = 0;
    long long lo = total / parts, hi = (total + parts - 1) / parts;
    for (long long c : split) {
      sum += c;
      CHECK(c >= lo);
      CHECK(c <= hi);
    }
    CHECK(sum == total);
    CHECK(cursor == static_cast<int>((before + total) % parts));
  }
}

TEST_CASE("build_bipartite_block on frozen shapes") {
  SimpleGraph matching = build_bipartite_block({1, 1}, {1, 1});
  CHECK(matching.edges.size() == 2);
  CHECK(sorted_degrees(matching) == std::vector<long long>{1, 1, 1, 1});

  SimpleGraph cycle = build_bipartite_block({2, 2}, {2, 2});
  CHECK(cycle.edges.size() == 4);
  CHECK(sorted_degrees(cycle) == std::vector<long long>{2, 2, 2, 2});

  SimpleGraph mixed = build_bipartite_block({2, 1}, {1, 1, 1});
  CHECK(mixed.edges.size() == 3);
  auto d = mixed.degrees();
  CHECK(d[0] == 2);
  CHECK(d[1] == 1);
  CHECK(d[2] + d[3] + d[4] == 3);
}

TEST_CASE("build_bipartite_block is simple and bipartite over random feasible inputs") {
  std::mt19937_64 gen(23);
  for (int trial = 0; trial < 200; ++trial) {
    int nx = 1 + static_cast<int>(gen() % 6);
    int ny = 1 + static_cast<int>(gen() % 6);
    // Near-regular sequences with equal sums and degrees capped by the
    // opposite side size.
    long long total = gen() % (static_cast<long long>(nx) * ny + 1);
    int cx = 0, cy = 0;
    auto x = near_regular_split(total, nx, cx);
    auto y = near_regular_split(total, ny, cy);
    if (*std::max_element(x.begin(), x.end()) > ny) continue;
    if (*std::max_element(y.begin(), y.end()) > nx) continue;
    SimpleGraph g = build_bipartite_block(x, y);
    auto d = g.degrees();
    for (int i = 0; i < nx; ++i) CHECK(d[i] == x[i]);
    for (int i = 0; i < ny; ++i) CHECK(d[nx + i] == y[i]);
    for (auto [u, v] : g.edges) {
      CHECK(u < nx);
      CHECK(v >= nx);
    }
  }
}

TEST_CASE("havel_hakimi_block on frozen shapes") {
  SimpleGraph tri = havel_hakimi_block({2, 2, 2});
  CHECK(tri.edges == std::vector<Edge>{{0, 1}, {0, 2}, {1, 2}});

  SimpleGraph edge = havel_hakimi_block({1, 1});
  CHECK(edge.edges == std::vector<Edge>{{0, 1}});

  CHECK_THROWS_AS(havel_hakimi_block({3, 3}), Infeasible);
}

TEST_CASE("greedy_construct realizes the triangle") {
  auto j = JointDegreeMatrix::from_entries({{2, 2, 3}});
  SimpleGraph g = greedy_construct(j);
  CHECK(g.edges == std::vector<Edge>{{0, 1}, {0, 2}, {1, 2}});
}

TEST_CASE("greedy_construct realizes the 4-path matrix") {
  auto j = JointDegreeMatrix::from_entries({{1, 2, 2}, {2, 2, 1}});
  SimpleGraph g = greedy_construct(j, /*audit=*/true);
  CHECK(extract_jdm(g) == j);
  CHECK(sorted_degrees(g) == std::vector<long long>{2, 2, 1, 1});
}

TEST_CASE("greedy_construct rejects non-graphical input up front") {
  CHECK_THROWS_AS(greedy_construct(JointDegreeMatrix::from_entries({{2, 2, 2}})),
                  NotGraphical);
  CHECK_THROWS_AS(greedy_construct(JointDegreeMatrix::from_entries({{1, 2, 1}})),
                  NotGraphical);
}

TEST_CASE("greedy_construct is deterministic") {
  auto j = JointDegreeMatrix::from_entries({{1, 3, 3}, {3, 3, 3}, {2, 3, 2}, {2, 2, 1}});
  if (!is_graphical(j).graphical) return;  // guard; instance chosen graphical
  CHECK(greedy_construct(j) == greedy_construct(j));
}

TEST_CASE("round-trip with audit over matrices of random graphs") {
  std::mt19937_64 gen(31);
  int constructed = 0;
  for (int trial = 0; trial < 300; ++trial) {
    int n = 3 + static_cast<int>(gen() % 6);
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (gen() % 2) edges.push_back({u, v});
    if (edges.empty()) continue;
    auto j = extract_jdm(SimpleGraph::make(n, edges));
    SimpleGraph g = greedy_construct(j, /*audit=*/true);
    CHECK(extract_jdm(g) == j);
    ++constructed;
  }
  CHECK(constructed > 100);
}

TEST_CASE("round-trip on complete and complete-bipartite matrices") {
  CHECK(extract_jdm(greedy_construct(
            JointDegreeMatrix::from_entries({{4, 4, 10}}), true)) ==
        JointDegreeMatrix::from_entries({{4, 4, 10}}));
  CHECK(extract_jdm(greedy_construct(
            JointDegreeMatrix::from_entries({{3, 4, 12}}), true)) ==
        JointDegreeMatrix::from_entries({{3, 4, 12}}));
}
