#include "ramsey/ramsey_search.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <future>
#include <memory>
#include <stdexcept>
#include <unordered_set>

#include "ramsey/rng.hpp"

namespace ramsey {

namespace {

std::vector<int> pattern_order(const Graph& h) {
  std::vector<int> order(static_cast<size_t>(h.n()));
  for (int v = 0; v < h.n(); ++v) order[static_cast<size_t>(v)] = v;
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return h.degree(a) > h.degree(b); });
  return order;
}

// Exhaustive backtracking embedding of h into host (<= 64 host vertices),
// smallest host index first.
std::optional<std::vector<int>> embed_pattern(const Graph& h, const Graph& host) {
  if (host.n() > 64) throw std::invalid_argument("embed_pattern: host too large");
  if (h.n() > host.n()) return std::nullopt;
  std::vector<int> order = pattern_order(h);
  std::vector<int> f(static_cast<size_t>(h.n()), -1);
  uint64_t used = 0;
  uint64_t all = host.n() == 64 ? ~0ULL : (1ULL << host.n()) - 1;
  std::function<bool(size_t)> rec = [&](size_t depth) -> bool {
    if (depth == order.size()) return true;
    int v = order[depth];
    uint64_t cand = all & ~used;
    for (int u : h.neighbors(v))
      if (f[static_cast<size_t>(u)] >= 0) cand &= host.row_bits(f[static_cast<size_t>(u)]);
    while (cand) {
      int w = std::countr_zero(cand);
      cand &= cand - 1;
      f[static_cast<size_t>(v)] = w;
      used |= 1ULL << w;
      if (rec(depth + 1)) return true;
      used &= ~(1ULL << w);
      f[static_cast<size_t>(v)] = -1;
    }
    return false;
  };
  if (rec(0)) return f;
  return std::nullopt;
}

}  // namespace

std::optional<MonoCopy> find_mono_copy(const TwoColoring& col, const Graph& h,
                                       std::optional<EdgeColor> which) {
  std::vector<EdgeColor> colors;
  if (which)
    colors = {*which};
  else
    colors = {EdgeColor::Red, EdgeColor::Blue};
  for (EdgeColor c : colors) {
    Graph host = col.color_graph(c);
    auto f = embed_pattern(h, host);
    if (f) return MonoCopy{c, Embedding{h, std::move(host), std::move(*f)}};
  }
  return std::nullopt;
}

namespace {

// DFS over edge colors with incremental monochromatic-copy pruning. Default
// mode: lexicographic edge order plus the vertex-0 red-before-blue sort.
// Canonical mode: colex edge order plus layer-wise isomorph rejection.
struct AvoidSearch {
  const Graph& h;
  int n;
  bool canonical;
  std::vector<std::pair<int, int>> edges;
  std::vector<uint8_t> assign;   // 1 = red
  std::vector<uint64_t> adj[2];  // partial adjacency per color
  std::vector<int> h_order;
  std::vector<int> f;
  uint64_t used = 0;
  RamseySearchStats stats;
  TwoColoring found;
  bool have_found = false;
  std::vector<std::unordered_set<uint64_t>> seen;

  AvoidSearch(const Graph& pattern, int host_n, bool canonical_mode)
      : h(pattern), n(host_n), canonical(canonical_mode) {
    if (canonical) {
      for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u) edges.emplace_back(u, v);
    } else {
      for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    }
    assign.assign(edges.size(), 0);
    adj[0].assign(static_cast<size_t>(n), 0);
    adj[1].assign(static_cast<size_t>(n), 0);
    h_order = pattern_order(h);
    f.assign(static_cast<size_t>(h.n()), -1);
    seen.assign(static_cast<size_t>(n + 1), {});
  }

  bool extend_copy(int c, size_t depth) {
    if (depth == h_order.size()) return true;
    int v = h_order[depth];
    if (f[static_cast<size_t>(v)] >= 0) return extend_copy(c, depth + 1);
    uint64_t cand = (n == 64 ? ~0ULL : (1ULL << n) - 1) & ~used;
    for (int u : h.neighbors(v))
      if (f[static_cast<size_t>(u)] >= 0)
        cand &= adj[c][static_cast<size_t>(f[static_cast<size_t>(u)])];
    while (cand) {
      int w = std::countr_zero(cand);
      cand &= cand - 1;
      f[static_cast<size_t>(v)] = w;
      used |= 1ULL << w;
      if (extend_copy(c, depth + 1)) return true;
      used &= ~(1ULL << w);
      f[static_cast<size_t>(v)] = -1;
    }
    return false;
  }

  // does the color-c partial graph contain a copy of h using the edge (a,b)?
  bool mono_with_edge(int c, int a, int b) {
    for (int pv = 0; pv < h.n(); ++pv)
      for (int pu : h.neighbors(pv)) {
        if (pu < pv) continue;
        for (int flip = 0; flip < 2; ++flip) {
          std::fill(f.begin(), f.end(), -1);
          f[static_cast<size_t>(pv)] = flip ? b : a;
          f[static_cast<size_t>(pu)] = flip ? a : b;
          used = (1ULL << a) | (1ULL << b);
          if (extend_copy(c, 0)) {
            used = 0;
            std::fill(f.begin(), f.end(), -1);
            return true;
          }
        }
      }
    used = 0;
    std::fill(f.begin(), f.end(), -1);
    return false;
  }

  bool layer_boundary(size_t k) const {
    if (!canonical) return false;
    int layer = edges[k].second + 1;
    if (layer < 3 || layer > 8) return false;  // trivial or factorial-heavy
    return k + 1 == edges.size() || edges[k + 1].second + 1 > layer;
  }

  uint64_t canonical_code(int layer) {
    std::vector<int> perm(static_cast<size_t>(layer));
    for (int i = 0; i < layer; ++i) perm[static_cast<size_t>(i)] = i;
    uint64_t best = ~0ULL;
    do {
      for (int swap = 0; swap < 2; ++swap) {
        uint64_t code = 0;
        int bit = 0;
        for (int v = 1; v < layer; ++v)
          for (int u = 0; u < v; ++u) {
            int pu = perm[static_cast<size_t>(u)], pv = perm[static_cast<size_t>(v)];
            uint64_t red = (adj[1][static_cast<size_t>(pu)] >> pv) & 1ULL;
            code |= (swap ? 1 - red : red) << bit;
            ++bit;
          }
        best = std::min(best, code);
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
  }

  void place(size_t k, int c) {
    auto [u, v] = edges[k];
    assign[k] = static_cast<uint8_t>(c);
    adj[c][static_cast<size_t>(u)] |= 1ULL << v;
    adj[c][static_cast<size_t>(v)] |= 1ULL << u;
  }

  void unplace(size_t k, int c) {
    auto [u, v] = edges[k];
    adj[c][static_cast<size_t>(u)] &= ~(1ULL << v);
    adj[c][static_cast<size_t>(v)] &= ~(1ULL << u);
  }

  bool symmetry_blocked(size_t k, int c) const {
    if (canonical) return false;
    auto [u, v] = edges[k];
    // vertex-0 colors must run red before blue
    return u == 0 && v >= 2 && c == 1 && assign[static_cast<size_t>(v) - 2] == 0;
  }

  bool dfs(size_t k) {
    ++stats.dfs_nodes;
    if (k == edges.size()) {
      found = TwoColoring(n);
      for (size_t i = 0; i < edges.size(); ++i)
        if (assign[i]) found.set(edges[i].first, edges[i].second, EdgeColor::Red);
      have_found = true;
      return true;
    }
    auto [u, v] = edges[k];
    for (int c : {1, 0}) {
      if (symmetry_blocked(k, c)) {
        ++stats.symmetry_prunes;
        continue;
      }
      place(k, c);
      bool advance = true;
      if (h.m() > 0 && mono_with_edge(c, u, v)) {
        ++stats.mono_prunes;
        advance = false;
      }
      if (advance) {
        if (layer_boundary(k)) {
          int layer = edges[k].second + 1;
          uint64_t code = canonical_code(layer);
          if (seen[static_cast<size_t>(layer)].contains(code)) {
            ++stats.isomorph_prunes;
          } else if (dfs(k + 1)) {
            return true;
          } else {
            seen[static_cast<size_t>(layer)].insert(code);
          }
        } else if (dfs(k + 1)) {
          return true;
        }
      }
      unplace(k, c);
    }
    return false;
  }

  // replay a fixed prefix (already vetted); returns false if it cannot stand
  bool replay(const std::vector<uint8_t>& prefix) {
    for (size_t k = 0; k < prefix.size(); ++k) {
      int c = prefix[k];
      if (symmetry_blocked(k, c)) return false;
      place(k, c);
      auto [u, v] = edges[k];
      if (h.m() > 0 && mono_with_edge(c, u, v)) return false;
    }
    return true;
  }
};

// enumerate surviving color prefixes of the first `depth` edges
void collect_prefixes(AvoidSearch& s, size_t depth, size_t k, std::vector<uint8_t>& cur,
                      std::vector<std::vector<uint8_t>>& out) {
  if (k == depth || k == s.edges.size()) {
    out.push_back(cur);
    return;
  }
  auto [u, v] = s.edges[k];
  for (int c : {1, 0}) {
    if (s.symmetry_blocked(k, c)) continue;
    s.place(k, c);
    bool viable = !(s.h.m() > 0 && s.mono_with_edge(c, u, v));
    if (viable) {
      cur.push_back(static_cast<uint8_t>(c));
      collect_prefixes(s, depth, k + 1, cur, out);
      cur.pop_back();
    }
    s.unplace(k, c);
  }
}

}  // namespace

bool exists_avoiding_coloring(const Graph& h, int n, const RamseyOptions& opt,
                              TwoColoring* witness, RamseySearchStats* stats) {
  if (n < 0 || n > 16)
    throw std::invalid_argument("exists_avoiding_coloring: host size out of supported range");
  if (n < h.n() || h.n() == 0) {
    if (witness) *witness = TwoColoring(std::max(n, 0));
    if (stats) *stats = RamseySearchStats{};
    return true;
  }
  if (h.m() == 0) {
    // an edgeless pattern sits monochromatically in any coloring once it fits
    if (witness) *witness = TwoColoring(n);
    if (stats) *stats = RamseySearchStats{};
    return false;
  }
  int threads = std::max(1, opt.threads);
  if (threads == 1 || pair_count(n) < 6) {
    AvoidSearch search(h, n, opt.canonical_pruning);
    search.stats.canonical_pruning = opt.canonical_pruning;
    bool ok = search.dfs(0);
    if (ok && witness) *witness = search.found;
    if (stats) *stats = search.stats;
    return ok;
  }
  // split on the first few edges; harvest every branch so the witness does
  // not depend on the thread count
  size_t depth = 4;
  std::vector<std::vector<uint8_t>> prefixes;
  {
    AvoidSearch seed_search(h, n, opt.canonical_pruning);
    std::vector<uint8_t> cur;
    collect_prefixes(seed_search, depth, 0, cur, prefixes);
  }
  std::vector<std::unique_ptr<AvoidSearch>> searches;
  std::vector<std::future<bool>> futures;
  for (const auto& prefix : prefixes) {
    searches.push_back(std::make_unique<AvoidSearch>(h, n, opt.canonical_pruning));
    AvoidSearch* s = searches.back().get();
    futures.push_back(std::async(std::launch::async, [s, prefix]() {
      return s->replay(prefix) && s->dfs(prefix.size());
    }));
  }
  bool any = false;
  RamseySearchStats agg;
  agg.canonical_pruning = opt.canonical_pruning;
  agg.threads = threads;
  for (size_t i = 0; i < futures.size(); ++i) {
    bool ok = futures[i].get();
    const AvoidSearch& s = *searches[i];
    agg.dfs_nodes += s.stats.dfs_nodes;
    agg.mono_prunes += s.stats.mono_prunes;
    agg.symmetry_prunes += s.stats.symmetry_prunes;
    agg.isomorph_prunes += s.stats.isomorph_prunes;
    if (ok && !any) {
      any = true;
      if (witness) *witness = s.found;
    }
  }
  if (stats) *stats = agg;
  return any;
}

RamseyOutcome ramsey_exact(const Graph& h, int n_max, RamseyOptions opt) {
  RamseyOutcome out;
  out.n_max = n_max;
  TwoColoring last_witness(0);
  RamseySearchStats agg;
  agg.canonical_pruning = opt.canonical_pruning;
  agg.threads = std::max(1, opt.threads);
  for (int n = 1; n <= n_max; ++n) {
    TwoColoring wit;
    RamseySearchStats st;
    bool avoid = exists_avoiding_coloring(h, n, opt, &wit, &st);
    agg.dfs_nodes += st.dfs_nodes;
    agg.mono_prunes += st.mono_prunes;
    agg.symmetry_prunes += st.symmetry_prunes;
    agg.isomorph_prunes += st.isomorph_prunes;
    if (!avoid) {
      out.known = true;
      out.result.value = n;
      out.result.lower_witness = last_witness;
      out.result.stats = agg;
      return out;
    }
    last_witness = wit;
  }
  return out;
}

namespace {

// tally, over all monochromatic embeddings in both colors, how many copies
// each host edge participates in
bool tally_mono_edges(const TwoColoring& col, const Graph& h, std::vector<long long>& counts) {
  std::fill(counts.begin(), counts.end(), 0);
  bool any = false;
  for (EdgeColor c : {EdgeColor::Red, EdgeColor::Blue}) {
    Graph host = col.color_graph(c);
    std::vector<int> order = pattern_order(h);
    std::vector<int> f(static_cast<size_t>(h.n()), -1);
    uint64_t used = 0;
    uint64_t all = host.n() == 64 ? ~0ULL : (1ULL << host.n()) - 1;
    std::function<void(size_t)> rec = [&](size_t depth) {
      if (depth == order.size()) {
        any = true;
        for (int v = 0; v < h.n(); ++v)
          for (int u : h.neighbors(v))
            if (u > v)
              ++counts[static_cast<size_t>(pair_index(f[static_cast<size_t>(u)],
                                                      f[static_cast<size_t>(v)], col.n))];
        return;
      }
      int v = order[depth];
      uint64_t cand = all & ~used;
      for (int u : h.neighbors(v))
        if (f[static_cast<size_t>(u)] >= 0) cand &= host.row_bits(f[static_cast<size_t>(u)]);
      while (cand) {
        int w = std::countr_zero(cand);
        cand &= cand - 1;
        f[static_cast<size_t>(v)] = w;
        used |= 1ULL << w;
        rec(depth + 1);
        used &= ~(1ULL << w);
        f[static_cast<size_t>(v)] = -1;
      }
    };
    rec(0);
  }
  return any;
}

}  // namespace

std::optional<TwoColoring> ramsey_lower_search(const Graph& h, int n, int restarts,
                                               uint64_t seed, long long max_iters) {
  if (n < 0 || n > 16) throw std::invalid_argument("ramsey_lower_search: host size out of range");
  if (h.n() == 0) return std::nullopt;  // the empty pattern is in everything
  if (n < h.n()) return TwoColoring(n);
  if (h.m() == 0) return std::nullopt;  // fits and is monochromatic vacuously
  long long budget = max_iters >= 0 ? max_iters : 50LL * pair_count(n) + 100;
  std::vector<long long> counts(static_cast<size_t>(pair_count(n)), 0);
  for (int restart = 0; restart < restarts; ++restart) {
    TwoColoring col = TwoColoring::random(n, counter_hash(seed, static_cast<uint64_t>(restart), 0));
    for (long long iter = 0; iter < budget; ++iter) {
      if (!tally_mono_edges(col, h, counts)) {
        if (find_mono_copy(col, h).has_value()) break;  // validator disagrees: defect guard
        return col;
      }
      size_t best = 0;
      for (size_t e = 1; e < counts.size(); ++e)
        if (counts[e] > counts[best]) best = e;
      col.bits[best] ^= 1;
    }
  }
  return std::nullopt;
}

}  // namespace ramsey
