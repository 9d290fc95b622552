#ifndef RAMSEY_GRAPH_HPP
#define RAMSEY_GRAPH_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ramsey/rational.hpp"

namespace ramsey {

// A vertex subset, kept sorted and duplicate-free.
using VertexSet = std::vector<int>;

// Simple undirected graph on vertices 0..n-1. Adjacency is stored as sorted
// neighbor lists; for n <= bitset_cap a one-word-per-row bitset mirror is kept
// to speed up the exhaustive searches (semantics are identical either way).
// Optionally bipartite with V1 = [0, k) and V2 = [k, n); every edge must cross.
class Graph {
 public:
  Graph() = default;

  int n() const { return n_; }
  long long m() const { return m_; }
  const std::vector<int>& neighbors(int v) const { return adj_[static_cast<size_t>(v)]; }
  int degree(int v) const { return static_cast<int>(adj_[static_cast<size_t>(v)].size()); }
  bool adjacent(int u, int v) const;

  bool has_bits() const { return !bits_.empty(); }
  uint64_t row_bits(int v) const { return bits_[static_cast<size_t>(v)]; }

  bool is_bipartite() const { return bipartite_k_ >= 0; }
  int bipartite_k() const { return bipartite_k_; }
  VertexSet part1() const;
  VertexSet part2() const;

  bool operator==(const Graph&) const = default;

  friend Graph build_graph(int n, const std::vector<std::pair<int, int>>& edges,
                           int bipartite_k, int bitset_cap);

 private:
  int n_ = 0;
  long long m_ = 0;
  std::vector<std::vector<int>> adj_;
  std::vector<uint64_t> bits_;
  int bipartite_k_ = -1;
};

// Rejects out-of-range endpoints and self-loops; collapses duplicate edges.
Graph build_graph(int n, const std::vector<std::pair<int, int>>& edges,
                  int bipartite_k = -1, int bitset_cap = 64);

// Validates entries are distinct and in range; returns a sorted copy.
VertexSet normalize_vertex_set(const Graph& g, const VertexSet& s);

// Vertices adjacent to every member of t; the empty set maps to all of V.
VertexSet common_neighborhood(const Graph& g, const VertexSet& t);

struct DensityReport {
  Ratio pair_density;
  Ratio multi_density;
  long long edge_count = 0;
};

// Edge density between two disjoint non-empty sets: e(W1,W2)/(|W1||W2|).
DensityReport density_between(const Graph& g, const VertexSet& w1, const VertexSet& w2);

// Density across t >= 2 pairwise-disjoint non-empty parts:
// sum_{i<j} e(Wi,Wj) / sum_{i<j} |Wi||Wj|.
DensityReport multi_density(const Graph& g, const std::vector<VertexSet>& parts);

// Lexicographic index of the unordered pair (u,v) among all pairs of [0,n).
long long pair_count(int n);
long long pair_index(int u, int v, int n);
std::pair<int, int> pair_from_index(long long idx, int n);

// Graph whose edge set is given by bits of mask over lexicographic pair order.
Graph graph_from_mask(int n, uint64_t edge_mask);

// Text format: optional "# bipartite k" header, then "n m", then m lines "u v".
std::string to_edge_list(const Graph& g);
Graph parse_edge_list(const std::string& text);

// JSON mirrors the same fields: {"n":..., "edges":[[u,v],...], "bipartite_k":...}.
std::string graph_to_json(const Graph& g);
Graph graph_from_json(const std::string& text);

Graph complete_graph(int n);
Graph cycle_graph(int n);
Graph path_graph(int n);
Graph star_graph(int leaves);
Graph complete_bipartite(int a, int b);
Graph complete_multipartite(const std::vector<int>& part_sizes);

}  // namespace ramsey

#endif
