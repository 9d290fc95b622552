#include "ramsey/random_graph.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

#include "json.hpp"
#include "ramsey/detail/bitrows.hpp"
#include "ramsey/rng.hpp"

namespace ramsey {

Graph sample_gnp(const RandomGraphSpec& spec) {
  if (spec.n < 0) throw std::invalid_argument("sample_gnp: negative n");
  if (spec.p < 0.0 || spec.p > 1.0) throw std::invalid_argument("sample_gnp: p out of [0,1]");
  long long n = spec.n;
  long long total = spec.bipartite ? 2 * n : n;
  std::vector<std::pair<int, int>> edges;
  auto sample_row = [&](int u, long long base, long long count) {
    if (count <= 0 || spec.p <= 0.0) return;
    if (spec.p >= 1.0) {
      for (long long j = 0; j < count; ++j)
        edges.emplace_back(u, static_cast<int>(base + j));
      return;
    }
    double log_skip = std::log1p(-spec.p);
    CounterRng rng(spec.seed, static_cast<uint64_t>(u));
    long long j = -1;
    while (true) {
      double unit = rng.unit();
      j += 1 + static_cast<long long>(std::floor(std::log1p(-unit) / log_skip));
      if (j >= count) break;
      edges.emplace_back(u, static_cast<int>(base + j));
    }
  };
  if (spec.bipartite) {
    for (long long u = 0; u < n; ++u) sample_row(static_cast<int>(u), n, n);
    return build_graph(static_cast<int>(total), edges, static_cast<int>(n));
  }
  for (long long u = 0; u + 1 < n; ++u) sample_row(static_cast<int>(u), u + 1, n - 1 - u);
  return build_graph(static_cast<int>(total), edges);
}

Graph sample_degenerate(long long n, int d, uint64_t seed) {
  if (n < 0 || d < 0) throw std::invalid_argument("sample_degenerate: bad parameters");
  std::vector<std::pair<int, int>> edges;
  for (long long v = 1; v < n; ++v) {
    CounterRng rng(seed, static_cast<uint64_t>(v));
    long long want = std::min<long long>(d, v);
    std::vector<char> picked(static_cast<size_t>(v), 0);
    long long got = 0;
    while (got < want) {
      long long u = static_cast<long long>(rng.below(static_cast<uint64_t>(v)));
      if (picked[static_cast<size_t>(u)]) continue;
      picked[static_cast<size_t>(u)] = 1;
      edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
      ++got;
    }
  }
  return build_graph(static_cast<int>(n), edges);
}

std::vector<VertexSet> seeded_equal_partition(long long n, int q, uint64_t seed) {
  if (q < 1) throw std::invalid_argument("seeded_equal_partition: q must be >= 1");
  std::vector<int> perm(static_cast<size_t>(n));
  for (long long i = 0; i < n; ++i) perm[static_cast<size_t>(i)] = static_cast<int>(i);
  CounterRng rng(seed, 0xEA);
  rng.shuffle(perm);
  std::vector<VertexSet> parts(static_cast<size_t>(q));
  for (long long i = 0; i < n; ++i)
    parts[static_cast<size_t>(i % q)].push_back(perm[static_cast<size_t>(i)]);
  for (auto& p : parts) std::sort(p.begin(), p.end());
  return parts;
}

ClosureResult two_neighbor_closure(const Graph& g, const VertexSet& s) {
  VertexSet start = normalize_vertex_set(g, s);
  std::vector<char> in_f(static_cast<size_t>(g.n()), 0);
  std::vector<int> inside_count(static_cast<size_t>(g.n()), 0);
  for (int v : start) in_f[static_cast<size_t>(v)] = 1;
  std::set<int> pending;
  for (int v : start)
    for (int u : g.neighbors(v)) {
      if (in_f[static_cast<size_t>(u)]) continue;
      if (++inside_count[static_cast<size_t>(u)] == 2) pending.insert(u);
    }
  ClosureResult res;
  while (!pending.empty()) {
    int v = *pending.begin();
    pending.erase(pending.begin());
    in_f[static_cast<size_t>(v)] = 1;
    res.added.push_back(v);
    for (int u : g.neighbors(v)) {
      if (in_f[static_cast<size_t>(u)]) continue;
      if (++inside_count[static_cast<size_t>(u)] == 2) pending.insert(u);
    }
  }
  for (int v = 0; v < g.n(); ++v)
    if (in_f[static_cast<size_t>(v)]) res.closure.push_back(v);
  res.growth_ratio = start.empty()
                         ? 1.0
                         : static_cast<double>(res.closure.size()) / static_cast<double>(start.size());
  return res;
}

CoolOrderingResult high_degree_closure_ordering(const Graph& g, long long d) {
  if (d < 1) throw std::invalid_argument("high_degree_closure_ordering: d must be >= 1");
  long long threshold = 16 * d;
  VertexSet a;
  for (int v = 0; v < g.n(); ++v)
    if (g.degree(v) > threshold) a.push_back(v);
  CoolOrderingResult res;
  res.high_degree_count = static_cast<long long>(a.size());
  VertexSet f = two_neighbor_closure(g, a).closure;
  res.closure_size = static_cast<long long>(f.size());

  std::vector<int> head = f;  // index order fallback
  if (!f.empty()) {
    // peel the induced subgraph G[F] with (s,r) = (2,2)
    std::vector<int> local(static_cast<size_t>(g.n()), -1);
    for (size_t i = 0; i < f.size(); ++i) local[static_cast<size_t>(f[i])] = static_cast<int>(i);
    std::vector<std::pair<int, int>> sub_edges;
    for (int v : f)
      for (int u : g.neighbors(v))
        if (u > v && local[static_cast<size_t>(u)] >= 0)
          sub_edges.emplace_back(local[static_cast<size_t>(v)], local[static_cast<size_t>(u)]);
    Graph sub = build_graph(static_cast<int>(f.size()), sub_edges);
    PeelResult peel = peel_ordering(sub, 2, 2);
    if (peel.ok) {
      for (size_t i = 0; i < f.size(); ++i)
        head[i] = f[static_cast<size_t>(peel.ordering.order[i])];
    } else {
      res.peel_stuck = true;
    }
  }
  std::vector<char> in_f(static_cast<size_t>(g.n()), 0);
  for (int v : f) in_f[static_cast<size_t>(v)] = 1;
  std::vector<int> order = head;
  for (int v = 0; v < g.n(); ++v)
    if (!in_f[static_cast<size_t>(v)]) order.push_back(v);
  res.ordering = VertexOrdering::from_order(std::move(order));
  res.certificate = measure_certificate(g, res.ordering);
  return res;
}

long long count_high_degree(const Graph& g, long long threshold) {
  long long c = 0;
  for (int v = 0; v < g.n(); ++v)
    if (g.degree(v) > threshold) ++c;
  return c;
}

long long count_k23_pairs(const Graph& g) {
  long long wedge_total = 0;
  for (int w = 0; w < g.n(); ++w) {
    long long deg = g.degree(w);
    wedge_total += deg * (deg - 1) / 2;
  }
  if (wedge_total > 400'000'000LL)
    throw std::invalid_argument("count_k23_pairs: wedge count exceeds memory budget");
  std::vector<uint64_t> wedges;
  wedges.reserve(static_cast<size_t>(wedge_total));
  uint64_t n = static_cast<uint64_t>(g.n());
  for (int w = 0; w < g.n(); ++w) {
    const auto& nb = g.neighbors(w);
    for (size_t i = 0; i < nb.size(); ++i)
      for (size_t j = i + 1; j < nb.size(); ++j)
        wedges.push_back(static_cast<uint64_t>(nb[i]) * n + static_cast<uint64_t>(nb[j]));
  }
  std::sort(wedges.begin(), wedges.end());
  long long pairs = 0;
  size_t i = 0;
  while (i < wedges.size()) {
    size_t j = i;
    while (j < wedges.size() && wedges[j] == wedges[i]) ++j;
    if (j - i >= 3) ++pairs;
    i = j;
  }
  return pairs;
}

std::string report_to_json(const PropertyReport& r) {
  nlohmann::json j;
  j["lemma_id"] = r.lemma_id;
  j["samples"] = r.samples;
  j["successes"] = r.successes;
  j["statistic"] = r.statistic;
  j["threshold"] = r.threshold;
  j["pass"] = r.pass;
  j["exhaustive"] = r.exhaustive;
  j["budget_exceeded"] = r.budget_exceeded;
  if (!r.note.empty()) j["note"] = r.note;
  if (!r.witness.empty()) j["witness"] = r.witness;
  return j.dump();
}

namespace {

// Connected-subset enumeration (each connected induced subgraph of size
// <= cap visited exactly once): extension candidates carry an exclusion
// marker so no subset is generated twice.
struct ConnectedEnum {
  const Graph& g;
  int cap;
  long long budget;
  long long nodes = 0;
  bool budget_hit = false;
  int root = 0;
  long long edge_count = 0;
  std::vector<char> in_s;
  std::vector<char> known;
  std::vector<int> current;
  VertexSet violation;

  ConnectedEnum(const Graph& graph, int size_cap, long long node_budget)
      : g(graph), cap(size_cap), budget(node_budget),
        in_s(static_cast<size_t>(graph.n()), 0), known(static_cast<size_t>(graph.n()), 0) {}

  bool violating() const {
    return 8 * edge_count >= 9 * static_cast<long long>(current.size());
  }

  // returns true when a violation was found or the budget tripped
  bool extend(const std::vector<int>& ext) {
    for (size_t i = 0; i < ext.size(); ++i) {
      int w = ext[i];
      if (++nodes > budget) {
        budget_hit = true;
        return true;
      }
      long long added = 0;
      for (int u : g.neighbors(w)) added += in_s[static_cast<size_t>(u)];
      current.push_back(w);
      in_s[static_cast<size_t>(w)] = 1;
      edge_count += added;
      if (violating()) {
        violation = current;
        std::sort(violation.begin(), violation.end());
        return true;
      }
      if (static_cast<int>(current.size()) < cap) {
        std::vector<int> next(ext.begin() + static_cast<long>(i) + 1, ext.end());
        std::vector<int> newly;
        for (int u : g.neighbors(w))
          if (u > root && !known[static_cast<size_t>(u)]) {
            known[static_cast<size_t>(u)] = 1;
            newly.push_back(u);
            next.push_back(u);
          }
        bool stop = extend(next);
        for (int u : newly) known[static_cast<size_t>(u)] = 0;
        if (stop) return true;
      }
      in_s[static_cast<size_t>(w)] = 0;
      edge_count -= added;
      current.pop_back();
    }
    return false;
  }

  bool run() {
    for (root = 0; root < g.n(); ++root) {
      current = {root};
      in_s[static_cast<size_t>(root)] = 1;
      known[static_cast<size_t>(root)] = 1;
      edge_count = 0;
      std::vector<int> ext;
      for (int u : g.neighbors(root))
        if (u > root) {
          known[static_cast<size_t>(u)] = 1;
          ext.push_back(u);
        }
      bool stop = extend(ext);
      in_s[static_cast<size_t>(root)] = 0;
      known[static_cast<size_t>(root)] = 0;
      for (int u : ext) known[static_cast<size_t>(u)] = 0;
      if (stop) return true;
    }
    return false;
  }
};

}  // namespace

PropertyReport check_small_subgraph_density(const Graph& g, int size_cap,
                                            SubgraphDensityOptions opt) {
  PropertyReport rep;
  rep.lemma_id = "small-subgraph-density";
  rep.threshold = 9.0 / 8.0;
  if (!opt.sampled && size_cap > 12)
    throw std::invalid_argument(
        "check_small_subgraph_density: size_cap > 12 requires sampled mode");
  if (!opt.sampled) {
    ConnectedEnum e(g, size_cap, opt.node_budget);
    bool stopped = e.run();
    rep.samples = e.nodes;
    rep.exhaustive = !e.budget_hit;
    rep.budget_exceeded = e.budget_hit;
    if (stopped && !e.budget_hit) {
      rep.pass = false;
      rep.witness = e.violation;
      long long edges = 0;
      for (size_t i = 0; i < e.violation.size(); ++i)
        for (size_t j = i + 1; j < e.violation.size(); ++j)
          edges += g.adjacent(e.violation[i], e.violation[j]);
      rep.statistic = static_cast<double>(edges) / static_cast<double>(e.violation.size());
      rep.note = "violating connected subset of size " + std::to_string(e.violation.size());
    } else {
      rep.pass = !e.budget_hit;
      rep.successes = rep.samples;
      if (e.budget_hit) rep.note = "node budget exceeded before exhausting subsets";
    }
    return rep;
  }
  // sampled mode: grow random connected subsets from random roots
  rep.exhaustive = false;
  rep.note = "sampled mode: random connected subsets, not exhaustive";
  CounterRng rng(opt.seed, 0x5eed);
  std::vector<int> members;
  std::vector<int> frontier;
  std::vector<char> used(static_cast<size_t>(g.n()), 0);
  for (long long trial = 0; trial < opt.samples; ++trial) {
    ++rep.samples;
    int target = 2 + static_cast<int>(rng.below(static_cast<uint64_t>(std::max(1, size_cap - 1))));
    members.clear();
    frontier.clear();
    int rootv = static_cast<int>(rng.below(static_cast<uint64_t>(g.n())));
    members.push_back(rootv);
    used[static_cast<size_t>(rootv)] = 1;
    for (int u : g.neighbors(rootv)) frontier.push_back(u);
    long long e = 0;
    bool violated = false;
    while (static_cast<int>(members.size()) < target && !frontier.empty()) {
      size_t pick = static_cast<size_t>(rng.below(frontier.size()));
      int v = frontier[pick];
      frontier[pick] = frontier.back();
      frontier.pop_back();
      if (used[static_cast<size_t>(v)]) continue;
      used[static_cast<size_t>(v)] = 1;
      for (int u : g.neighbors(v)) {
        if (used[static_cast<size_t>(u)])
          ++e;
        else
          frontier.push_back(u);
      }
      members.push_back(v);
      if (8 * e >= 9 * static_cast<long long>(members.size())) {
        violated = true;
        break;
      }
    }
    for (int v : members) used[static_cast<size_t>(v)] = 0;
    if (violated) {
      rep.pass = false;
      rep.witness = members;
      std::sort(rep.witness.begin(), rep.witness.end());
      return rep;
    }
    ++rep.successes;
  }
  rep.pass = true;
  return rep;
}

PropertyReport check_density_between_large_sets(const Graph& g, Ratio fraction, double p,
                                                long long trials, uint64_t seed) {
  if (!(fraction > Ratio(0, 1)) || fraction > Ratio(1, 2))
    throw std::invalid_argument("check_density_between_large_sets: fraction must be in (0, 1/2]");
  if (p <= 0.0) throw std::invalid_argument("check_density_between_large_sets: p must be positive");
  long long n = g.n();
  long long k = (fraction.num * n + fraction.den - 1) / fraction.den;
  if (k < 1 || 2 * k > n)
    throw std::invalid_argument(
        "check_density_between_large_sets: cannot form two disjoint sets of size " +
        std::to_string(k));
  PropertyReport rep;
  rep.lemma_id = "cross-density";
  rep.threshold = 0.5;
  double min_ratio = -1.0;
  std::vector<int> perm(static_cast<size_t>(n));
  std::vector<int> stamp(static_cast<size_t>(n), -1);
  for (long long trial = 0; trial < trials; ++trial) {
    for (long long i = 0; i < n; ++i) perm[static_cast<size_t>(i)] = static_cast<int>(i);
    CounterRng rng(seed, static_cast<uint64_t>(trial));
    for (long long i = 0; i < 2 * k; ++i) {
      long long j = i + static_cast<long long>(rng.below(static_cast<uint64_t>(n - i)));
      std::swap(perm[static_cast<size_t>(i)], perm[static_cast<size_t>(j)]);
    }
    for (long long i = k; i < 2 * k; ++i)
      stamp[static_cast<size_t>(perm[static_cast<size_t>(i)])] = static_cast<int>(trial);
    long long e = 0;
    for (long long i = 0; i < k; ++i)
      for (int u : g.neighbors(perm[static_cast<size_t>(i)]))
        e += stamp[static_cast<size_t>(u)] == static_cast<int>(trial);
    double ratio = static_cast<double>(e) / (p * static_cast<double>(k) * static_cast<double>(k));
    if (min_ratio < 0.0 || ratio < min_ratio) min_ratio = ratio;
    ++rep.samples;
    if (ratio >= 0.5) ++rep.successes;
  }
  rep.statistic = min_ratio;
  rep.pass = rep.samples > 0 && min_ratio >= 0.5;
  rep.note = "sampled pairs only; exact verification over all pairs is infeasible";
  return rep;
}

long long arrangeability_witness(const Graph& g, const VertexOrdering& ord) {
  if (ord.n() != g.n()) throw std::invalid_argument("arrangeability_witness: ordering mismatch");
  long long n = g.n();
  if (n < 3 || g.m() == 0) return 0;
  double dhat = 2.0 * static_cast<double>(g.m()) / static_cast<double>(n);
  double phat = dhat / static_cast<double>(n);
  long long third = n / 3;
  if (third == 0) return 0;
  // positions [0, third) | [third, n - third) | [n - third, n)
  std::vector<int> zone(static_cast<size_t>(n), 1);
  std::vector<int> first_index(static_cast<size_t>(n), -1);
  int fcount = 0;
  for (long long i = 0; i < n; ++i) {
    int v = ord.order[static_cast<size_t>(i)];
    if (i < third) {
      zone[static_cast<size_t>(v)] = 0;
      first_index[static_cast<size_t>(v)] = fcount++;
    } else if (i >= n - third) {
      zone[static_cast<size_t>(v)] = 2;
    }
  }
  int words = (fcount + 63) / 64;
  // last-third vertices with enough first-third neighbors
  std::vector<int> heavy;
  std::vector<int> heavy_id(static_cast<size_t>(n), -1);
  for (int v = 0; v < n; ++v) {
    if (zone[static_cast<size_t>(v)] != 2) continue;
    int cnt = 0;
    for (int u : g.neighbors(v)) cnt += zone[static_cast<size_t>(u)] == 0;
    if (static_cast<double>(cnt) >= phat * static_cast<double>(third) / 2.0) {
      heavy_id[static_cast<size_t>(v)] = static_cast<int>(heavy.size());
      heavy.push_back(v);
    }
  }
  if (heavy.empty()) return 0;
  detail::BitRows rows(static_cast<int>(heavy.size()), words);
  std::vector<int> heavy_deg(heavy.size(), 0);
  for (size_t h = 0; h < heavy.size(); ++h) {
    for (int u : g.neighbors(heavy[h]))
      if (zone[static_cast<size_t>(u)] == 0) {
        rows.set(static_cast<int>(h), first_index[static_cast<size_t>(u)]);
        ++heavy_deg[h];
      }
  }
  double heavy_threshold = phat * static_cast<double>(heavy.size()) / 2.0;
  long long r_size = std::max<long long>(1, static_cast<long long>(std::floor(dhat / 12.0)));
  long long best = 0;
  std::vector<int> chosen;
  for (int v = 0; v < n; ++v) {
    if (zone[static_cast<size_t>(v)] != 1) continue;
    chosen.clear();
    for (int u : g.neighbors(v)) {
      int id = heavy_id[static_cast<size_t>(u)];
      if (id >= 0) chosen.push_back(id);
      if (static_cast<long long>(chosen.size()) == r_size) break;
    }
    int qualifying = 0;
    for (int u : g.neighbors(v)) qualifying += heavy_id[static_cast<size_t>(u)] >= 0;
    if (static_cast<double>(qualifying) < heavy_threshold) continue;
    long long bound = 0;
    for (size_t i = 0; i < chosen.size(); ++i) bound += heavy_deg[static_cast<size_t>(chosen[i])];
    for (size_t i = 0; i < chosen.size(); ++i)
      for (size_t j = i + 1; j < chosen.size(); ++j)
        bound -= detail::and_count(rows.row(chosen[i]), rows.row(chosen[j]), words);
    best = std::max(best, bound);
  }
  return std::max<long long>(best, 0);
}

}  // namespace ramsey
