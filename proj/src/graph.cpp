#include "cosys/graph.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <sstream>

#include "cosys/errors.hpp"

namespace cosys {

Graph::Graph(int vertex_count, std::vector<Edge> edges)
    : n_(vertex_count), edges_(std::move(edges)) {
  if (n_ < 0) throw Error(ErrorKind::Parse, "negative vertex count");
  std::set<std::pair<int, int>> seen;
  std::set<std::string> labels;
  for (const auto& e : edges_) {
    if (e.u < 0 || e.v < 0 || e.u >= n_ || e.v >= n_)
      throw Error(ErrorKind::Parse, "edge endpoint out of range");
    if (e.u == e.v) throw Error(ErrorKind::Parse, "self-loops not allowed");
    auto key = std::minmax(e.u, e.v);
    if (!seen.insert(key).second)
      throw Error(ErrorKind::Parse, "repeated edge " + e.label);
    if (!labels.insert(e.label).second)
      throw Error(ErrorKind::Parse, "repeated edge label " + e.label);
  }
}

std::vector<std::vector<int>> Graph::adjacency() const {
  std::vector<std::vector<int>> adj(n_);
  for (const auto& e : edges_) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  return adj;
}

Graph graph_from_pairs(int n, const std::vector<std::pair<int, int>>& pairs) {
  std::vector<Edge> edges;
  for (auto [u, v] : pairs)
    edges.push_back({u, v, std::to_string(u) + "-" + std::to_string(v)});
  return Graph(n, std::move(edges));
}

Graph complete_graph(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  return graph_from_pairs(n, pairs);
}

Graph complete_bipartite(int a, int b) {
  std::vector<std::pair<int, int>> pairs;
  for (int u = 0; u < a; ++u)
    for (int v = 0; v < b; ++v) pairs.emplace_back(u, a + v);
  return graph_from_pairs(a + b, pairs);
}

int girth(const Graph& g) {
  auto adj = g.adjacency();
  int n = g.vertex_count();
  int best = -1;
  for (int s = 0; s < n; ++s) {  // shortest cycle through each BFS root
    std::vector<int> dist(n, -1), parent(n, -1);
    std::queue<int> q;
    dist[s] = 0;
    q.push(s);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int w : adj[u]) {
        if (dist[w] < 0) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          q.push(w);
        } else if (w != parent[u]) {
          int len = dist[u] + dist[w] + 1;
          if (best < 0 || len < best) best = len;
        }
      }
    }
  }
  if (best < 0) throw Error(ErrorKind::Acyclic, "graph has no cycle");
  return best;
}

namespace {

bool connected_masked(const std::vector<std::vector<int>>& adj, int n,
                      const std::set<std::pair<int, int>>& removed) {
  if (n == 0) return true;
  std::vector<bool> vis(n, false);
  std::queue<int> q;
  q.push(0);
  vis[0] = true;
  int cnt = 1;
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (int w : adj[u]) {
      if (vis[w]) continue;
      if (removed.count(std::minmax(u, w))) continue;
      vis[w] = true;
      ++cnt;
      q.push(w);
    }
  }
  return cnt == n;
}

}  // namespace

bool is_connected(const Graph& g) {
  return connected_masked(g.adjacency(), g.vertex_count(), {});
}

bool is_three_edge_connected(const Graph& g) {
  auto adj = g.adjacency();
  int n = g.vertex_count();
  if (!connected_masked(adj, n, {})) return false;
  const auto& es = g.edges();
  for (std::size_t i = 0; i < es.size(); ++i) {
    std::set<std::pair<int, int>> rm = {std::minmax(es[i].u, es[i].v)};
    if (!connected_masked(adj, n, rm)) return false;
    for (std::size_t j = i + 1; j < es.size(); ++j) {
      rm.insert(std::minmax(es[j].u, es[j].v));
      if (!connected_masked(adj, n, rm)) return false;
      rm.erase(std::minmax(es[j].u, es[j].v));
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Planarity: search for a K5 or K33 subdivision (Kuratowski).

namespace {

struct SubdivisionSearch {
  int n;
  std::vector<std::vector<int>> adj;
  std::vector<bool> is_branch, used;  // used = internal vertex of a placed path
  std::vector<std::pair<int, int>> pairs;

  // enumerate simple a->b paths whose internal vertices avoid branch/used
  bool path_dfs(int at, int target, std::size_t pair_idx) {
    for (int w : adj[at]) {
      if (w == target) {
        if (place_rest(pair_idx + 1)) return true;
        continue;
      }
      if (is_branch[w] || used[w]) continue;
      used[w] = true;
      if (path_dfs(w, target, pair_idx)) return true;
      used[w] = false;
    }
    return false;
  }

  bool place_rest(std::size_t pair_idx) {
    if (pair_idx == pairs.size()) return true;
    auto [a, b] = pairs[pair_idx];
    return path_dfs(a, b, pair_idx);
  }

  bool run() { return place_rest(0); }
};

bool has_subdivision(const Graph& g, const std::vector<int>& branch,
                     const std::vector<std::pair<int, int>>& pairs) {
  SubdivisionSearch s;
  s.n = g.vertex_count();
  s.adj = g.adjacency();
  s.is_branch.assign(s.n, false);
  s.used.assign(s.n, false);
  for (int v : branch) s.is_branch[v] = true;
  s.pairs = pairs;
  return s.run();
}

bool has_k5_subdivision(const Graph& g) {
  int n = g.vertex_count();
  auto adj = g.adjacency();
  std::vector<int> cand;
  for (int v = 0; v < n; ++v)
    if (adj[v].size() >= 4) cand.push_back(v);
  if (cand.size() < 5) return false;
  std::vector<int> pick;
  std::vector<std::pair<int, int>> pairs;
  auto rec = [&](auto&& self, std::size_t from) -> bool {
    if (pick.size() == 5) {
      pairs.clear();
      for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j) pairs.emplace_back(pick[i], pick[j]);
      return has_subdivision(g, pick, pairs);
    }
    for (std::size_t i = from; i < cand.size(); ++i) {
      pick.push_back(cand[i]);
      if (self(self, i + 1)) return true;
      pick.pop_back();
    }
    return false;
  };
  return rec(rec, 0);
}

bool has_k33_subdivision(const Graph& g) {
  int n = g.vertex_count();
  auto adj = g.adjacency();
  std::vector<int> cand;
  for (int v = 0; v < n; ++v)
    if (adj[v].size() >= 3) cand.push_back(v);
  if (cand.size() < 6) return false;
  std::vector<int> pick;
  auto rec = [&](auto&& self, std::size_t from) -> bool {
    if (pick.size() == 6) {
      // split 6 branch vertices into two sides; fix pick[0] on side A
      for (int mask = 0; mask < 32; ++mask) {
        std::vector<int> a = {pick[0]}, b;
        for (int i = 1; i < 6; ++i)
          ((mask >> (i - 1)) & 1 ? a : b).push_back(pick[i]);
        if (a.size() != 3) continue;
        std::vector<std::pair<int, int>> pairs;
        for (int x : a)
          for (int y : b) pairs.emplace_back(x, y);
        if (has_subdivision(g, pick, pairs)) return true;
      }
      return false;
    }
    for (std::size_t i = from; i < cand.size(); ++i) {
      pick.push_back(cand[i]);
      if (self(self, i + 1)) return true;
      pick.pop_back();
    }
    return false;
  };
  return rec(rec, 0);
}

}  // namespace

bool is_planar(const Graph& g) {
  return !has_k33_subdivision(g) && !has_k5_subdivision(g);
}

// ---------------------------------------------------------------------------

BinaryMatroid graphic_matroid(const Graph& g) {
  if (!is_connected(g)) throw Error(ErrorKind::Disconnected, "graph must be connected");
  std::size_t m = g.edges().size();
  Gf2Matrix inc(g.vertex_count(), m);
  std::vector<std::string> labels;
  for (std::size_t j = 0; j < m; ++j) {
    const Edge& e = g.edges()[j];
    inc.set(e.u, j, true);
    inc.set(e.v, j, true);
    labels.push_back(e.label);
  }
  return BinaryMatroid(inc, std::move(labels));  // rref drops the dependent row
}

BinaryMatroid cographic_matroid(const Graph& g) { return graphic_matroid(g).dual(); }

std::vector<std::vector<std::string>> cycles(const Graph& g) {
  BinaryMatroid m = graphic_matroid(g);
  std::vector<std::vector<std::string>> out;
  for (const auto& c : m.circuits()) {
    auto ls = m.labels_of(c);
    std::sort(ls.begin(), ls.end());
    out.push_back(std::move(ls));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

// ---------------------------------------------------------------------------
// Canonical form: lexicographically greatest upper-triangle adjacency string
// over all vertex orderings, found by backtracking with prefix pruning.

namespace {

struct CanonSearch {
  int n;
  std::vector<std::vector<bool>> adj;
  std::vector<int> best_rows;  // best encoding, one bit-row per placed vertex
  std::vector<int> cur_rows;
  std::vector<int> perm;
  std::vector<bool> used;
  bool have_best = false;
  long aut_count = 0;  // completions tying the best encoding

  // bit-row for placing vertex v at position i: adjacency to perm[0..i-1]
  int row_bits(int v, int i) const {
    int bits = 0;
    for (int k = 0; k < i; ++k) bits = (bits << 1) | (adj[v][perm[k]] ? 1 : 0);
    return bits;
  }

  void rec(int i) {
    if (i == n) {
      if (!have_best || cur_rows > best_rows) {
        best_rows = cur_rows;
        have_best = true;
        aut_count = 1;
      } else if (cur_rows == best_rows) {
        ++aut_count;
      }
      return;
    }
    for (int v = 0; v < n; ++v) {
      if (used[v]) continue;
      int bits = row_bits(v, i);
      if (have_best) {
        int cmp = bits - best_rows[i];
        bool prefix_eq = std::equal(cur_rows.begin(), cur_rows.begin() + i,
                                    best_rows.begin());
        if (prefix_eq && cmp < 0) continue;  // cannot beat or tie the best
      }
      used[v] = true;
      perm.push_back(v);
      cur_rows.push_back(bits);
      rec(i + 1);
      cur_rows.pop_back();
      perm.pop_back();
      used[v] = false;
    }
  }
};

}  // namespace

namespace {

CanonSearch run_canon(const Graph& g) {
  int n = g.vertex_count();
  CanonSearch s;
  s.n = n;
  s.adj.assign(n, std::vector<bool>(n, false));
  s.used.assign(n, false);
  s.perm.reserve(n);
  s.cur_rows.reserve(n);
  for (const auto& e : g.edges()) s.adj[e.u][e.v] = s.adj[e.v][e.u] = true;
  s.rec(0);
  return s;
}

}  // namespace

std::string graph_canonical_form(const Graph& g) {
  CanonSearch s = run_canon(g);
  std::ostringstream os;
  os << s.n << ":";
  for (int i = 1; i < s.n; ++i) os << s.best_rows[i] << ".";
  return os.str();
}

long automorphism_count(const Graph& g) { return run_canon(g).aut_count; }

// ---------------------------------------------------------------------------

std::string to_text(const Graph& g) {
  std::ostringstream os;
  os << "vertices " << g.vertex_count() << "\n";
  for (const auto& e : g.edges())
    os << "edge " << e.label << " " << e.u << " " << e.v << "\n";
  return os.str();
}

Graph graph_from_text(const std::string& text) {
  std::istringstream is(text);
  std::string word;
  int n = -1;
  if (!(is >> word) || word != "vertices" || !(is >> n))
    throw Error(ErrorKind::Parse, "graph file must start with 'vertices <n>'");
  std::vector<Edge> edges;
  while (is >> word) {
    if (word != "edge") throw Error(ErrorKind::Parse, "expected 'edge' line");
    Edge e;
    if (!(is >> e.label >> e.u >> e.v))
      throw Error(ErrorKind::Parse, "bad edge line");
    edges.push_back(std::move(e));
  }
  return Graph(n, std::move(edges));
}

}  // namespace cosys
