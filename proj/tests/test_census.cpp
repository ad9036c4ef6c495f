#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "cosys/errors.hpp"
#include "cosys/graph.hpp"

using namespace cosys;

namespace {

// Labeled simple 3-regular graphs on n vertices, counted by adding vertices
// one at a time and tracking how many earlier vertices still need 1, 2, or 3
// more edges. Independent of the backtracking generator.
std::uint64_t labeled_cubic(int n) {
  static const std::uint64_t choose[13][4] = {
      {1, 0, 0, 0},  {1, 1, 0, 0},  {1, 2, 1, 0},   {1, 3, 3, 1},
      {1, 4, 6, 4},  {1, 5, 10, 10}, {1, 6, 15, 20}, {1, 7, 21, 35},
      {1, 8, 28, 56}, {1, 9, 36, 84}, {1, 10, 45, 120}, {1, 11, 55, 165},
      {1, 12, 66, 220}};
  std::map<std::tuple<int, int, int, int>, std::uint64_t> memo;
  auto rec = [&](auto&& self, int placed, int c1, int c2, int c3) -> std::uint64_t {
    if (placed == n) return (c1 == 0 && c2 == 0 && c3 == 0) ? 1 : 0;
    auto key = std::make_tuple(placed, c1, c2, c3);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    std::uint64_t total = 0;
    for (int k1 = 0; k1 <= std::min(c1, 3); ++k1)
      for (int k2 = 0; k2 + k1 <= 3 && k2 <= c2; ++k2)
        for (int k3 = 0; k3 + k2 + k1 <= 3 && k3 <= c3; ++k3) {
          int r = 3 - k1 - k2 - k3;  // residual demand of the new vertex
          std::uint64_t ways =
              choose[c1][k1] * choose[c2][k2] * choose[c3][k3];
          total += ways * self(self, placed + 1, c1 - k1 + k2 + (r == 1),
                               c2 - k2 + k3 + (r == 2), c3 - k3 + (r == 3));
        }
    memo[key] = total;
    return total;
  };
  return rec(rec, 0, 0, 0, 0);
}

std::uint64_t binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (std::uint64_t)(n - k + i) / i;
  return r;
}

// Connected labeled cubic graphs via the component-of-vertex-1 recurrence.
std::uint64_t labeled_cubic_connected(int n) {
  std::map<int, std::uint64_t> conn;
  for (int m = 4; m <= n; m += 2) {
    std::uint64_t total = labeled_cubic(m);
    for (int k = 4; k < m; k += 2)
      total -= binom(m - 1, k - 1) * conn[k] * labeled_cubic(m - k);
    conn[m] = total;
  }
  return conn[n];
}

}  // namespace

TEST_CASE("labeled counting oracles agree with known values") {
  CHECK(labeled_cubic(4) == 1);
  CHECK(labeled_cubic(6) == 70);
  CHECK(labeled_cubic(8) == 19355);
  CHECK(labeled_cubic(10) == 11180820);
  CHECK(labeled_cubic(12) == 11555272575ull);
  CHECK(labeled_cubic_connected(4) == 1);
  CHECK(labeled_cubic_connected(6) == 70);
  CHECK(labeled_cubic_connected(8) == 19320);
  CHECK(labeled_cubic_connected(10) == 11166120);
}

TEST_CASE("isomorphism class counts") {
  CHECK(generate_cubic_connected(4).size() == 1);
  CHECK(generate_cubic_connected(6).size() == 2);
  CHECK(generate_cubic_connected(8).size() == 5);
  CHECK(generate_cubic_connected(10).size() == 19);
  CHECK(generate_cubic_connected(12).size() == 85);
  CHECK(generate_cubic_connected(5).empty());
  CHECK(generate_cubic_connected(9).empty());
  CHECK_THROWS_AS((void)generate_cubic_connected(2), Error);
  CHECK_THROWS_AS((void)generate_cubic_connected(14), Error);
}

TEST_CASE("orbit counting ties classes to the labeled census") {
  // sum of n!/|Aut| over isomorphism classes = number of connected labeled
  // graphs; validates both the generator and the automorphism counter.
  auto factorial = [](int n) {
    std::uint64_t r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
  };
  for (int n : {4, 6, 8, 10}) {
    std::uint64_t sum = 0;
    for (const auto& g : generate_cubic_connected(n))
      sum += factorial(n) / (std::uint64_t)automorphism_count(g);
    CHECK(sum == labeled_cubic_connected(n));
  }
}

TEST_CASE("every generated graph is cubic, connected, canonical-distinct") {
  for (int n : {8, 10}) {
    std::set<std::string> forms;
    for (const auto& g : generate_cubic_connected(n)) {
      std::vector<int> deg(n, 0);
      for (const auto& e : g.edges()) ++deg[e.u], ++deg[e.v];
      for (int d : deg) CHECK(d == 3);
      CHECK(is_connected(g));
      forms.insert(graph_canonical_form(g));
    }
    CHECK((int)forms.size() == (int)generate_cubic_connected(n).size());
  }
}

TEST_CASE("n=8 exhaustive edge-subset cross-check") {
  // every 12-subset of E(K8), filtered to 3-regular: must recover the labeled
  // counts and, after canonical dedup, the 5 isomorphism classes.
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < 8; ++u)
    for (int v = u + 1; v < 8; ++v) edges.emplace_back(u, v);
  REQUIRE(edges.size() == 28);

  std::uint64_t cubic = 0, connected = 0;
  std::set<std::string> forms;
  std::uint64_t mask = (1u << 12) - 1;
  const std::uint64_t limit = 1ull << 28;
  while (mask < limit) {
    int deg[8] = {0};
    std::uint64_t m = mask;
    bool ok = true;
    while (m) {
      int b = __builtin_ctzll(m);
      m &= m - 1;
      if (++deg[edges[b].first] > 3 || ++deg[edges[b].second] > 3) {
        ok = false;
        break;
      }
    }
    if (ok) {
      for (int u = 0; u < 8; ++u) ok = ok && deg[u] == 3;
      if (ok) {
        ++cubic;
        std::vector<std::pair<int, int>> sel;
        std::uint64_t mm = mask;
        while (mm) {
          sel.push_back(edges[__builtin_ctzll(mm)]);
          mm &= mm - 1;
        }
        Graph g = graph_from_pairs(8, sel);
        if (is_connected(g)) {
          ++connected;
          forms.insert(graph_canonical_form(g));
        }
      }
    }
    // Gosper's hack: next mask with the same popcount
    std::uint64_t c = mask & (~mask + 1), r = mask + c;
    mask = (((r ^ mask) >> 2) / c) | r;
  }
  CHECK(cubic == 19355);
  CHECK(connected == 19320);
  CHECK(forms.size() == 5);
}

TEST_CASE("filtered census") {
  auto eight = census_msr_cographic(8);
  REQUIRE(eight.size() == 2);
  std::multiset<int> girths;
  for (const auto& g : eight) {
    girths.insert(girth(g));
    CHECK(is_three_edge_connected(g));
    CHECK(!is_planar(g));
  }
  CHECK(girths == std::multiset<int>{3, 4});

  auto ten = census_msr_cographic(10);
  REQUIRE(ten.size() == 9);
  int girth5 = 0;
  for (const auto& g : ten) {
    CHECK(is_three_edge_connected(g));
    CHECK(!is_planar(g));
    girth5 += (girth(g) == 5);
  }
  CHECK(girth5 == 1);

  CHECK_THROWS_AS((void)census_msr_cographic(6), Error);
  CHECK_THROWS_AS((void)census_msr_cographic(12), Error);
}

TEST_CASE("generation is deterministic") {
  auto a = generate_cubic_connected(10);
  auto b = generate_cubic_connected(10);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    CHECK(to_text(a[i]) == to_text(b[i]));
  // output is ordered by canonical form
  std::vector<std::string> forms;
  for (const auto& g : a) forms.push_back(graph_canonical_form(g));
  CHECK(std::is_sorted(forms.begin(), forms.end()));
}
