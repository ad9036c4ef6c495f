#include <algorithm>
#include <map>
#include <set>

#include "cosys/errors.hpp"
#include "cosys/graph.hpp"

namespace cosys {

namespace {

// Backtracking generator for connected cubic graphs on n labeled vertices.
// The lowest-index deficient vertex u picks its next neighbor among touched
// vertices above u's previously added neighbor (or the next fresh index), so
// vertices enter in first-use order and each labeled completion is built
// exactly once; every isomorphism class appears at least once.
struct CubicGen {
  int n;
  std::vector<std::set<int>> adj;
  std::vector<Graph> out;

  explicit CubicGen(int n) : n(n), adj((std::size_t)n) {}

  int deg(int v) const { return (int)adj[(std::size_t)v].size(); }

  void emit() {
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u)
      for (int v : adj[(std::size_t)u])
        if (v > u) pairs.emplace_back(u, v);
    out.push_back(graph_from_pairs(n, pairs));
  }

  void add_edge(int u, int v, int touched) {
    adj[(std::size_t)u].insert(v);
    adj[(std::size_t)v].insert(u);
    int new_touched = std::max(touched, v + 1);
    extend(new_touched, deg(u) < 3 ? v : -1);
    adj[(std::size_t)u].erase(v);
    adj[(std::size_t)v].erase(u);
  }

  void extend(int touched, int last_nb) {
    int u = -1;
    for (int x = 0; x < touched; ++x)
      if (deg(x) < 3) {
        u = x;
        break;
      }
    if (u < 0) {
      if (touched == n) emit();
      return;
    }
    for (int v = 0; v < touched; ++v)
      if (v != u && v > last_nb && deg(v) < 3 && !adj[(std::size_t)u].count(v))
        add_edge(u, v, touched);
    if (touched < n && touched > last_nb) add_edge(u, touched, touched);
  }

  std::vector<Graph> run() {
    extend(1, -1);
    return std::move(out);
  }
};

}  // namespace

std::vector<Graph> generate_cubic_connected(int n) {
  if (n < 4 || n > 12) throw Error(ErrorKind::OutOfRange, "vertex count must be in 4..12");
  if (n % 2 != 0) return {};  // no cubic graph on an odd vertex count
  std::vector<Graph> raw = CubicGen(n).run();
  std::map<std::string, Graph> by_form;
  for (auto& g : raw) {
    std::string form = graph_canonical_form(g);
    by_form.try_emplace(std::move(form), std::move(g));
  }
  std::vector<Graph> out;
  out.reserve(by_form.size());
  for (auto& [form, g] : by_form) out.push_back(std::move(g));
  return out;  // ordered by canonical form via the map
}

std::vector<Graph> census_msr_cographic(int n) {
  if (n != 8 && n != 10)
    throw Error(ErrorKind::OutOfRange, "census is defined for 8 or 10 vertices");
  std::vector<Graph> out;
  for (auto& g : generate_cubic_connected(n))
    if (is_three_edge_connected(g) && !is_planar(g)) out.push_back(std::move(g));
  return out;
}

}  // namespace cosys
