#pragma once

#include <string>
#include <vector>

#include "cosys/matroid.hpp"

namespace cosys {

struct Edge {
  int u, v;
  std::string label;
};

// Simple undirected graph with labeled edges.
class Graph {
 public:
  Graph(int vertex_count, std::vector<Edge> edges);

  int vertex_count() const { return n_; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::vector<std::vector<int>> adjacency() const;

 private:
  int n_;
  std::vector<Edge> edges_;
};

// Edge list (u,v) pairs with labels "u-v"; K_n and K_{a,b} builders.
Graph complete_graph(int n);
Graph complete_bipartite(int a, int b);
Graph graph_from_pairs(int n, const std::vector<std::pair<int, int>>& pairs);

int girth(const Graph& g);  // throws Acyclic
bool is_connected(const Graph& g);
bool is_three_edge_connected(const Graph& g);
bool is_planar(const Graph& g);  // K5/K33 subdivision search

// All simple-cycle edge-label sets = circuits(graphic_matroid(g)),
// sorted by (size, lexicographic).
std::vector<std::vector<std::string>> cycles(const Graph& g);

BinaryMatroid graphic_matroid(const Graph& g);    // throws Disconnected
BinaryMatroid cographic_matroid(const Graph& g);  // dual of graphic

// One representative per isomorphism class of connected cubic simple graphs,
// deduplicated and ordered by canonical form. 4 <= n <= 12.
std::vector<Graph> generate_cubic_connected(int n);

// The above filtered to 3-edge-connected non-planar graphs; n in {8, 10}.
std::vector<Graph> census_msr_cographic(int n);

// Exact canonical encoding: equal iff isomorphic (refinement + backtracking).
std::string graph_canonical_form(const Graph& g);

// |Aut(g)|: the number of vertex orderings attaining the canonical encoding.
long automorphism_count(const Graph& g);

// Text format: `vertices <n>` then `edge <label> <u> <v>` lines.
std::string to_text(const Graph& g);
Graph graph_from_text(const std::string& text);

}  // namespace cosys
