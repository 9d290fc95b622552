#include "ramsey/graph.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace ramsey {

bool Graph::adjacent(int u, int v) const {
  if (has_bits()) return (bits_[static_cast<size_t>(u)] >> v) & 1ULL;
  const auto& a = adj_[static_cast<size_t>(u)];
  return std::binary_search(a.begin(), a.end(), v);
}

VertexSet Graph::part1() const {
  VertexSet s;
  for (int v = 0; v < bipartite_k_; ++v) s.push_back(v);
  return s;
}

VertexSet Graph::part2() const {
  VertexSet s;
  for (int v = bipartite_k_; v < n_; ++v) s.push_back(v);
  return s;
}

Graph build_graph(int n, const std::vector<std::pair<int, int>>& edges,
                  int bipartite_k, int bitset_cap) {
  if (n < 0) throw std::invalid_argument("build_graph: negative vertex count");
  if (bipartite_k > n)
    throw std::invalid_argument("build_graph: bipartition size exceeds vertex count");
  Graph g;
  g.n_ = n;
  g.bipartite_k_ = bipartite_k < 0 ? -1 : bipartite_k;
  g.adj_.assign(static_cast<size_t>(n), {});
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw std::invalid_argument("build_graph: endpoint out of range: (" +
                                  std::to_string(u) + "," + std::to_string(v) + ")");
    if (u == v)
      throw std::invalid_argument("build_graph: self-loop at vertex " + std::to_string(u));
    if (g.bipartite_k_ >= 0) {
      bool u1 = u < g.bipartite_k_, v1 = v < g.bipartite_k_;
      if (u1 == v1)
        throw std::invalid_argument("build_graph: edge (" + std::to_string(u) + "," +
                                    std::to_string(v) + ") does not cross the bipartition");
    }
    g.adj_[static_cast<size_t>(u)].push_back(v);
    g.adj_[static_cast<size_t>(v)].push_back(u);
  }
  long long m2 = 0;
  for (auto& a : g.adj_) {
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
    m2 += static_cast<long long>(a.size());
  }
  g.m_ = m2 / 2;
  if (n <= std::min(bitset_cap, 64)) {
    g.bits_.assign(static_cast<size_t>(n), 0);
    for (int v = 0; v < n; ++v)
      for (int u : g.adj_[static_cast<size_t>(v)]) g.bits_[static_cast<size_t>(v)] |= 1ULL << u;
  }
  return g;
}

VertexSet normalize_vertex_set(const Graph& g, const VertexSet& s) {
  VertexSet out = s;
  std::sort(out.begin(), out.end());
  for (size_t i = 0; i < out.size(); ++i) {
    if (out[i] < 0 || out[i] >= g.n())
      throw std::invalid_argument("vertex set: index out of range: " + std::to_string(out[i]));
    if (i > 0 && out[i] == out[i - 1])
      throw std::invalid_argument("vertex set: duplicate vertex " + std::to_string(out[i]));
  }
  return out;
}

VertexSet common_neighborhood(const Graph& g, const VertexSet& t) {
  VertexSet ts = normalize_vertex_set(g, t);
  if (ts.empty()) {
    VertexSet all(static_cast<size_t>(g.n()));
    for (int v = 0; v < g.n(); ++v) all[static_cast<size_t>(v)] = v;
    return all;
  }
  // start from the smallest adjacency list and intersect the rest
  int smallest = ts[0];
  for (int v : ts)
    if (g.degree(v) < g.degree(smallest)) smallest = v;
  VertexSet cur = g.neighbors(smallest);
  for (int v : ts) {
    if (v == smallest) continue;
    const auto& a = g.neighbors(v);
    VertexSet next;
    std::set_intersection(cur.begin(), cur.end(), a.begin(), a.end(), std::back_inserter(next));
    cur.swap(next);
    if (cur.empty()) break;
  }
  return cur;
}

namespace {

void require_disjoint(const std::vector<VertexSet>& parts, int n) {
  std::vector<char> seen(static_cast<size_t>(n), 0);
  for (const auto& p : parts)
    for (int v : p) {
      if (seen[static_cast<size_t>(v)])
        throw std::invalid_argument("density: parts overlap at vertex " + std::to_string(v));
      seen[static_cast<size_t>(v)] = 1;
    }
}

}  // namespace

DensityReport density_between(const Graph& g, const VertexSet& w1, const VertexSet& w2) {
  VertexSet a = normalize_vertex_set(g, w1), b = normalize_vertex_set(g, w2);
  if (a.empty() || b.empty()) throw std::invalid_argument("density_between: empty set");
  require_disjoint({a, b}, g.n());
  std::vector<char> in_b(static_cast<size_t>(g.n()), 0);
  for (int v : b) in_b[static_cast<size_t>(v)] = 1;
  long long e = 0;
  for (int u : a)
    for (int v : g.neighbors(u)) e += in_b[static_cast<size_t>(v)];
  Ratio dens(e, static_cast<long long>(a.size()) * static_cast<long long>(b.size()));
  return DensityReport{dens, dens, e};
}

DensityReport multi_density(const Graph& g, const std::vector<VertexSet>& parts) {
  if (parts.size() < 2) throw std::invalid_argument("multi_density: need at least 2 parts");
  std::vector<VertexSet> norm;
  norm.reserve(parts.size());
  for (const auto& p : parts) {
    norm.push_back(normalize_vertex_set(g, p));
    if (norm.back().empty()) throw std::invalid_argument("multi_density: empty part");
  }
  require_disjoint(norm, g.n());
  std::vector<int> label(static_cast<size_t>(g.n()), -1);
  long long total = 0, sum_sq = 0;
  for (size_t i = 0; i < norm.size(); ++i) {
    for (int v : norm[i]) label[static_cast<size_t>(v)] = static_cast<int>(i);
    long long s = static_cast<long long>(norm[i].size());
    total += s;
    sum_sq += s * s;
  }
  long long cross_pairs = (total * total - sum_sq) / 2;
  long long e = 0;
  for (int u = 0; u < g.n(); ++u) {
    if (label[static_cast<size_t>(u)] < 0) continue;
    for (int v : g.neighbors(u))
      if (v > u && label[static_cast<size_t>(v)] >= 0 &&
          label[static_cast<size_t>(v)] != label[static_cast<size_t>(u)])
        ++e;
  }
  Ratio dens(e, cross_pairs);
  return DensityReport{dens, dens, e};
}

long long pair_count(int n) { return static_cast<long long>(n) * (n - 1) / 2; }

long long pair_index(int u, int v, int n) {
  if (u > v) std::swap(u, v);
  return static_cast<long long>(u) * n - static_cast<long long>(u) * (u + 1) / 2 + (v - u - 1);
}

std::pair<int, int> pair_from_index(long long idx, int n) {
  for (int u = 0; u < n - 1; ++u) {
    long long row = n - 1 - u;
    if (idx < row) return {u, u + 1 + static_cast<int>(idx)};
    idx -= row;
  }
  throw std::invalid_argument("pair_from_index: index out of range");
}

Graph graph_from_mask(int n, uint64_t edge_mask) {
  std::vector<std::pair<int, int>> edges;
  long long pc = pair_count(n);
  for (long long k = 0; k < pc; ++k)
    if ((edge_mask >> k) & 1ULL) edges.push_back(pair_from_index(k, n));
  return build_graph(n, edges);
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  if (g.is_bipartite()) out << "# bipartite " << g.bipartite_k() << "\n";
  out << g.n() << " " << g.m() << "\n";
  for (int u = 0; u < g.n(); ++u)
    for (int v : g.neighbors(u))
      if (v > u) out << u << " " << v << "\n";
  return out.str();
}

Graph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int bipartite_k = -1;
  long long n = -1, m = -1;
  std::vector<std::pair<int, int>> edges;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line[0] == '#') {
      std::istringstream ls(line.substr(1));
      std::string word;
      if (ls >> word && word == "bipartite") {
        if (!(ls >> bipartite_k))
          throw std::invalid_argument("parse_edge_list: malformed bipartite header");
      }
      continue;
    }
    std::istringstream ls(line);
    if (n < 0) {
      if (!(ls >> n >> m)) throw std::invalid_argument("parse_edge_list: malformed size line");
      continue;
    }
    long long u, v;
    if (!(ls >> u >> v)) throw std::invalid_argument("parse_edge_list: malformed edge line: " + line);
    edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
  }
  if (n < 0) throw std::invalid_argument("parse_edge_list: missing size line");
  if (m >= 0 && m != static_cast<long long>(edges.size()))
    throw std::invalid_argument("parse_edge_list: edge count mismatch");
  return build_graph(static_cast<int>(n), edges, bipartite_k);
}

std::string graph_to_json(const Graph& g) {
  nlohmann::json j;
  j["n"] = g.n();
  auto edges = nlohmann::json::array();
  for (int u = 0; u < g.n(); ++u)
    for (int v : g.neighbors(u))
      if (v > u) edges.push_back({u, v});
  j["edges"] = edges;
  if (g.is_bipartite()) j["bipartite_k"] = g.bipartite_k();
  return j.dump();
}

Graph graph_from_json(const std::string& text) {
  auto j = nlohmann::json::parse(text);
  std::vector<std::pair<int, int>> edges;
  for (const auto& e : j.at("edges")) edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
  int k = j.contains("bipartite_k") ? j["bipartite_k"].get<int>() : -1;
  return build_graph(j.at("n").get<int>(), edges, k);
}

Graph complete_graph(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return build_graph(n, edges);
}

Graph cycle_graph(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u) edges.emplace_back(u, (u + 1) % n);
  return build_graph(n, edges);
}

Graph path_graph(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u + 1 < n; ++u) edges.emplace_back(u, u + 1);
  return build_graph(n, edges);
}

Graph star_graph(int leaves) {
  std::vector<std::pair<int, int>> edges;
  for (int v = 1; v <= leaves; ++v) edges.emplace_back(0, v);
  return build_graph(leaves + 1, edges);
}

Graph complete_bipartite(int a, int b) {
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < a; ++u)
    for (int v = 0; v < b; ++v) edges.emplace_back(u, a + v);
  return build_graph(a + b, edges, a);
}

Graph complete_multipartite(const std::vector<int>& part_sizes) {
  int n = 0;
  for (int s : part_sizes) n += s;
  std::vector<int> label;
  for (size_t i = 0; i < part_sizes.size(); ++i)
    for (int k = 0; k < part_sizes[i]; ++k) label.push_back(static_cast<int>(i));
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (label[static_cast<size_t>(u)] != label[static_cast<size_t>(v)]) edges.emplace_back(u, v);
  return build_graph(n, edges);
}

}  // namespace ramsey
