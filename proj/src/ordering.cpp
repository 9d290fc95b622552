#include "ramsey/ordering.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <stdexcept>

#include "json.hpp"

namespace ramsey {

VertexOrdering VertexOrdering::from_order(std::vector<int> order) {
  VertexOrdering o;
  int n = static_cast<int>(order.size());
  o.position.assign(static_cast<size_t>(n), -1);
  for (int i = 0; i < n; ++i) {
    int v = order[static_cast<size_t>(i)];
    if (v < 0 || v >= n || o.position[static_cast<size_t>(v)] != -1)
      throw std::invalid_argument("VertexOrdering: not a permutation");
    o.position[static_cast<size_t>(v)] = i;
  }
  o.order = std::move(order);
  return o;
}

VertexOrdering VertexOrdering::identity(int n) {
  std::vector<int> order(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) order[static_cast<size_t>(i)] = i;
  return from_order(std::move(order));
}

SparsenessCertificate measure_certificate(const Graph& g, const VertexOrdering& ord) {
  if (ord.n() != g.n()) throw std::invalid_argument("measure_certificate: ordering size mismatch");
  SparsenessCertificate cert;
  cert.ordering = ord;
  std::vector<int> stamp(static_cast<size_t>(g.n()), -1);
  for (int i = 0; i < g.n(); ++i) {
    int v = ord.order[static_cast<size_t>(i)];
    int back = 0;
    std::set<std::vector<int>> left_sets;
    int union_size = 0;
    for (int u : g.neighbors(v)) {
      if (ord.position[static_cast<size_t>(u)] < i) {
        ++back;
        continue;
      }
      // u is a later neighbor; collect N(u) ∩ L_i (contains v itself)
      std::vector<int> s;
      for (int w : g.neighbors(u))
        if (ord.position[static_cast<size_t>(w)] <= i) {
          s.push_back(w);
          if (stamp[static_cast<size_t>(w)] != i) {
            stamp[static_cast<size_t>(w)] = i;
            ++union_size;
          }
        }
      left_sets.insert(std::move(s));
    }
    cert.back_degree = std::max(cert.back_degree, back);
    cert.left_set_count = std::max(cert.left_set_count, static_cast<int>(left_sets.size()));
    cert.arrangeability = std::max(cert.arrangeability, union_size);
  }
  return cert;
}

std::string certificate_to_json(const SparsenessCertificate& c) {
  nlohmann::json j;
  j["ordering"] = c.ordering.order;
  j["d"] = c.back_degree;
  j["delta"] = c.left_set_count;
  j["p"] = c.arrangeability;
  return j.dump();
}

std::pair<VertexOrdering, int> degeneracy_ordering(const Graph& g) {
  int n = g.n();
  std::vector<int> deg(static_cast<size_t>(n));
  std::set<std::pair<int, int>> queue;  // (current degree, vertex)
  for (int v = 0; v < n; ++v) {
    deg[static_cast<size_t>(v)] = g.degree(v);
    queue.insert({deg[static_cast<size_t>(v)], v});
  }
  std::vector<char> removed(static_cast<size_t>(n), 0);
  std::vector<int> order(static_cast<size_t>(n));
  int degeneracy = 0;
  for (int step = 0; step < n; ++step) {
    auto [dv, v] = *queue.begin();
    queue.erase(queue.begin());
    removed[static_cast<size_t>(v)] = 1;
    degeneracy = std::max(degeneracy, dv);
    order[static_cast<size_t>(n - 1 - step)] = v;  // reverse removal order
    for (int u : g.neighbors(v)) {
      if (removed[static_cast<size_t>(u)]) continue;
      queue.erase({deg[static_cast<size_t>(u)], u});
      --deg[static_cast<size_t>(u)];
      queue.insert({deg[static_cast<size_t>(u)], u});
    }
  }
  return {VertexOrdering::from_order(std::move(order)), degeneracy};
}

PeelResult peel_ordering(const Graph& g, int s, int r) {
  if (s < 1 || r < 1) throw std::invalid_argument("peel_ordering: s and r must be >= 1");
  int n = g.n();
  std::vector<int> deg(static_cast<size_t>(n));
  std::vector<char> alive(static_cast<size_t>(n), 1);
  std::set<int> low;  // alive vertices of degree <= 1
  for (int v = 0; v < n; ++v) {
    deg[static_cast<size_t>(v)] = g.degree(v);
    if (deg[static_cast<size_t>(v)] <= 1) low.insert(v);
  }
  std::vector<int> order(static_cast<size_t>(n));
  for (int step = n; step >= 1; --step) {
    int pick = -1;
    if (!low.empty()) {
      pick = *low.begin();
    } else {
      for (int v = 0; v < n && pick < 0; ++v) {
        if (!alive[static_cast<size_t>(v)] || deg[static_cast<size_t>(v)] > s) continue;
        bool ok = true;
        for (int u : g.neighbors(v))
          if (alive[static_cast<size_t>(u)] && deg[static_cast<size_t>(u)] > r) {
            ok = false;
            break;
          }
        if (ok) pick = v;
      }
    }
    if (pick < 0) {
      PeelResult fail;
      for (int v = 0; v < n; ++v)
        if (alive[static_cast<size_t>(v)]) fail.residual.push_back(v);
      return fail;
    }
    order[static_cast<size_t>(step - 1)] = pick;
    alive[static_cast<size_t>(pick)] = 0;
    low.erase(pick);
    for (int u : g.neighbors(pick)) {
      if (!alive[static_cast<size_t>(u)]) continue;
      if (--deg[static_cast<size_t>(u)] <= 1) low.insert(u);
    }
  }
  PeelResult res;
  res.ok = true;
  res.ordering = VertexOrdering::from_order(std::move(order));
  return res;
}

bool LightVertexWitness::check(const Graph& g) const {
  if (vertex < 0 || vertex >= g.n()) return false;
  if (kind == Kind::DegreeAtMostOne) {
    if (g.degree(vertex) > 1) return false;
    return neighbors == g.neighbors(vertex);
  }
  if (g.degree(vertex) != 2) return false;
  if (neighbors != g.neighbors(vertex)) return false;
  for (int u : neighbors)
    if (g.degree(u) != 2) return false;
  return true;
}

std::optional<LightVertexWitness> find_light_vertex(const Graph& g) {
  for (int v = 0; v < g.n(); ++v)
    if (g.degree(v) <= 1)
      return LightVertexWitness{LightVertexWitness::Kind::DegreeAtMostOne, v, g.neighbors(v)};
  for (int v = 0; v < g.n(); ++v) {
    if (g.degree(v) != 2) continue;
    const auto& nb = g.neighbors(v);
    if (g.degree(nb[0]) == 2 && g.degree(nb[1]) == 2)
      return LightVertexWitness{LightVertexWitness::Kind::DegreeTwoBothNeighborsDegreeTwo, v, nb};
  }
  return std::nullopt;
}

namespace {

struct MinArrangeSearch {
  const Graph& g;
  int n;
  int best;
  std::vector<int> adj_bits;

  explicit MinArrangeSearch(const Graph& graph) : g(graph), n(graph.n()), best(0) {}

  void run() {
    // seed the bound with a full ordering so pruning can bite immediately
    best = measure_certificate(g, degeneracy_ordering(g).first).arrangeability;
    dfs(0ULL, 0, 0);
  }

  void dfs(uint64_t placed, int count, int cur_max) {
    if (cur_max >= best) return;  // extensions can only keep or raise the max
    if (count == n) {
      best = cur_max;
      return;
    }
    for (int v = 0; v < n; ++v) {
      if ((placed >> v) & 1ULL) continue;
      uint64_t left = placed | (1ULL << v);
      uint64_t later = g.row_bits(v) & ~placed;  // neighbors positioned after v
      uint64_t uni = 0;
      uint64_t it = later;
      while (it) {
        int u = std::countr_zero(it);
        it &= it - 1;
        uni |= g.row_bits(u) & left;
      }
      dfs(left, count + 1, std::max(cur_max, std::popcount(uni)));
    }
  }
};

}  // namespace

std::vector<int> greedy_coloring(const Graph& g, const VertexOrdering& ord) {
  if (ord.n() != g.n()) throw std::invalid_argument("greedy_coloring: ordering size mismatch");
  std::vector<int> color(static_cast<size_t>(g.n()), -1);
  std::vector<char> taken;
  for (int i = 0; i < g.n(); ++i) {
    int v = ord.order[static_cast<size_t>(i)];
    taken.assign(static_cast<size_t>(g.degree(v)) + 2, 0);
    for (int u : g.neighbors(v)) {
      int c = color[static_cast<size_t>(u)];
      if (c >= 0 && c < static_cast<int>(taken.size())) taken[static_cast<size_t>(c)] = 1;
    }
    int c = 0;
    while (taken[static_cast<size_t>(c)]) ++c;
    color[static_cast<size_t>(v)] = c;
  }
  return color;
}

int exact_min_arrangeability(const Graph& g, int n_cap) {
  if (g.n() > n_cap)
    throw std::invalid_argument(
        "exact_min_arrangeability: graph exceeds the exact-search cap (" +
        std::to_string(n_cap) + "); measure a heuristic ordering instead");
  if (g.n() > 64 || !g.has_bits())
    throw std::invalid_argument("exact_min_arrangeability: requires the bitset mirror (n <= 64)");
  if (g.n() == 0) return 0;
  MinArrangeSearch search(g);
  search.run();
  return search.best;
}

}  // namespace ramsey
