#include "ramsey/embedding.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <set>
#include <stdexcept>

#include "json.hpp"
#include "ramsey/detail/bitrows.hpp"
#include "ramsey/rng.hpp"

namespace ramsey {

using detail::BitRows;
using detail::BitVec;

std::string embedding_to_json(const Embedding& e) {
  auto arr = nlohmann::json::array();
  for (size_t v = 0; v < e.map.size(); ++v)
    if (e.map[v] >= 0) arr.push_back({static_cast<int>(v), e.map[v]});
  return arr.dump();
}

namespace {

BitRows adjacency_rows(const Graph& g) {
  BitRows rows(g.n(), (g.n() + 63) / 64);
  for (int v = 0; v < g.n(); ++v)
    for (int u : g.neighbors(v)) rows.set(v, u);
  return rows;
}

long long binom_capped(long long n, long long k, long long cap) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  long long r = 1;
  for (long long i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > cap) return cap + 1;
  }
  return r;
}

double log_binom(long long n, long long k) {
  if (k < 0 || k > n) return -std::numeric_limits<double>::infinity();
  return std::lgamma(static_cast<double>(n) + 1) - std::lgamma(static_cast<double>(k) + 1) -
         std::lgamma(static_cast<double>(n - k) + 1);
}

struct BadCount {
  double count = 0.0;
  bool exact = true;
  double ci95 = 0.0;
};

// Number of t-subsets of `members` whose row-AND has popcount < x. Exact by
// combination enumeration with prefix pruning when C(|members|,t) fits the
// budget; otherwise an unbiased sampled estimate.
BadCount count_sparse_tsets(const BitRows& rows, const std::vector<int>& members, int t,
                            long long x, long long exact_budget, long long samples,
                            uint64_t seed, uint64_t stream) {
  BadCount out;
  long long msize = static_cast<long long>(members.size());
  if (t <= 0 || msize < t) return out;
  int words = rows.words;
  long long combos = binom_capped(msize, t, exact_budget);
  std::vector<uint64_t> mask_stack(static_cast<size_t>(t + 1) * words);
  auto mask_at = [&](int depth) { return mask_stack.data() + static_cast<size_t>(depth) * words; };
  if (combos <= exact_budget) {
    long long bad = 0;
    // the depth-0 mask is all-ones incl. padding; rows carry no padding bits,
    // so after the first AND (t >= 1) every popcount is honest
    for (int w = 0; w < words; ++w) mask_at(0)[w] = ~0ULL;
    std::function<void(long long, int)> rec = [&](long long start, int depth) {
      if (depth == t) {
        int c = 0;
        const uint64_t* m = mask_at(depth);
        for (int w = 0; w < words; ++w) c += std::popcount(m[w]);
        if (c < x) ++bad;
        return;
      }
      for (long long i = start; i < msize; ++i) {
        const uint64_t* prev = mask_at(depth);
        uint64_t* next = mask_at(depth + 1);
        const uint64_t* row = rows.row(members[static_cast<size_t>(i)]);
        int c = 0;
        for (int w = 0; w < words; ++w) {
          next[w] = prev[w] & row[w];
          c += std::popcount(next[w]);
        }
        if (c < x) {
          // every extension stays below x
          bad += binom_capped(msize - i - 1, t - depth - 1,
                              std::numeric_limits<long long>::max() / 2);
          continue;
        }
        rec(i + 1, depth + 1);
      }
    };
    // the depth-0 mask must cover only real bits; rows never set padding bits,
    // so AND with the first member's row before any popcount matters (depth>=1)
    rec(0, 0);
    out.count = static_cast<double>(bad);
    out.exact = true;
    return out;
  }
  // sampled estimate
  CounterRng rng(seed, stream);
  long long bad = 0;
  std::vector<int> pick(static_cast<size_t>(t));
  for (long long s = 0; s < samples; ++s) {
    // distinct t indices by rejection
    for (int i = 0; i < t;) {
      int cand = static_cast<int>(rng.below(static_cast<uint64_t>(msize)));
      bool dup = false;
      for (int j = 0; j < i; ++j) dup |= pick[static_cast<size_t>(j)] == cand;
      if (!dup) pick[static_cast<size_t>(i++)] = cand;
    }
    for (int w = 0; w < words; ++w) mask_at(0)[w] = ~0ULL;
    int c = 0;
    for (int i = 0; i < t; ++i) {
      const uint64_t* row = rows.row(members[static_cast<size_t>(pick[static_cast<size_t>(i)])]);
      uint64_t* m = mask_at(0);
      c = 0;
      for (int w = 0; w < words; ++w) {
        m[w] &= row[w];
        c += std::popcount(m[w]);
      }
    }
    if (c < x) ++bad;
  }
  double prop = static_cast<double>(bad) / static_cast<double>(samples);
  double total = std::exp(log_binom(msize, t));
  out.count = prop * total;
  out.exact = false;
  out.ci95 = 1.96 * std::sqrt(std::max(prop * (1 - prop), 0.0) / static_cast<double>(samples)) * total;
  return out;
}

void require_parts(const Graph& g, const std::vector<VertexSet>& parts) {
  std::vector<char> seen(static_cast<size_t>(g.n()), 0);
  for (const auto& p : parts) {
    VertexSet norm = normalize_vertex_set(g, p);
    for (int v : norm) {
      if (seen[static_cast<size_t>(v)])
        throw std::invalid_argument("host partition: parts overlap at vertex " + std::to_string(v));
      seen[static_cast<size_t>(v)] = 1;
    }
  }
}

void require_proper_coloring(const Graph& h, const std::vector<int>& h_color, int q) {
  if (static_cast<int>(h_color.size()) != h.n())
    throw std::invalid_argument("pattern coloring: size mismatch");
  for (int v = 0; v < h.n(); ++v) {
    int c = h_color[static_cast<size_t>(v)];
    if (c < 0 || c >= q)
      throw std::invalid_argument("pattern coloring: class out of range at vertex " +
                                  std::to_string(v));
    for (int u : h.neighbors(v))
      if (h_color[static_cast<size_t>(u)] == c)
        throw std::invalid_argument("pattern coloring: edge (" + std::to_string(v) + "," +
                                    std::to_string(u) + ") is monochromatic");
  }
}

void require_pattern_ordering(const Graph& h, const VertexOrdering& ord) {
  if (ord.n() != h.n()) throw std::invalid_argument("pattern ordering: size mismatch");
}

}  // namespace

DrcResult dependent_random_choice(const Graph& g, const DrcParams& params, uint64_t seed) {
  if (!g.is_bipartite()) throw std::invalid_argument("dependent_random_choice: host must be bipartite");
  int k = g.bipartite_k();
  int n2 = g.n() - k;
  if (k != n2 || k == 0)
    throw std::invalid_argument("dependent_random_choice: parts must be non-empty and equal");
  if (params.t < 1 || params.x < 1 || params.trials < 1)
    throw std::invalid_argument("dependent_random_choice: t, x, trials must be >= 1");
  long long n = k;
  double eps = static_cast<double>(g.m()) / (static_cast<double>(n) * static_cast<double>(n));
  if (eps <= 0.0)
    throw std::invalid_argument("dependent_random_choice: zero edge density");

  // rows over V1 for every V2 vertex
  int words = (k + 63) / 64;
  BitRows rows(n2, words);
  rows.n = k;  // bit width
  for (int v = k; v < g.n(); ++v)
    for (int u : g.neighbors(v)) rows.set(v - k, u);

  int two_t = 2 * params.t;
  double ex_low = std::pow(eps, two_t) * static_cast<double>(n);
  double ey_up = params.x >= 2 ? std::exp(log_binom(n, params.t) +
                                          two_t * std::log(static_cast<double>(params.x - 1) /
                                                           static_cast<double>(n)))
                               : 0.0;
  double weight = ey_up > 0.0 ? ex_low / (2.0 * ey_up) : -1.0;  // -1 marks the x=1 regime

  DrcResult best;
  best.epsilon = eps;
  best.score = -std::numeric_limits<double>::infinity();
  double size_sum = 0.0;
  std::vector<uint64_t> tmask(static_cast<size_t>(words));
  for (int trial = 0; trial < params.trials; ++trial) {
    CounterRng rng(seed, static_cast<uint64_t>(trial));
    std::fill(tmask.begin(), tmask.end(), 0ULL);
    for (int i = 0; i < two_t; ++i) {
      int u = static_cast<int>(rng.below(static_cast<uint64_t>(n)));
      tmask[static_cast<size_t>(u >> 6)] |= 1ULL << (u & 63);
    }
    std::vector<int> a_local;
    for (int v = 0; v < n2; ++v) {
      const uint64_t* row = rows.row(v);
      bool contains = true;
      for (int w = 0; w < words && contains; ++w)
        contains = (row[w] & tmask[static_cast<size_t>(w)]) == tmask[static_cast<size_t>(w)];
      if (contains) a_local.push_back(v);
    }
    BadCount bc = count_sparse_tsets(rows, a_local, params.t, params.x, params.exact_budget,
                                     params.estimate_samples, seed,
                                     0x9000ULL + static_cast<uint64_t>(trial));
    double score;
    if (weight < 0.0)
      score = bc.count == 0.0 ? static_cast<double>(a_local.size())
                              : -std::numeric_limits<double>::infinity();
    else
      score = static_cast<double>(a_local.size()) - weight * bc.count;
    size_sum += static_cast<double>(a_local.size());
    best.trial_a_sizes.push_back(static_cast<int>(a_local.size()));
    if (score > best.score) {
      best.score = score;
      best.best_trial = trial;
      best.bad_tsets = bc.count;
      best.bad_exact = bc.exact;
      best.bad_ci95 = bc.ci95;
      best.a.clear();
      for (int v : a_local) best.a.push_back(k + v);
    }
  }
  best.mean_a_size = size_sum / static_cast<double>(params.trials);
  return best;
}

NestedResult nested_subset_chain(const TwoColoring& col, int q, int t, long long y,
                                 uint64_t seed, int trials) {
  if (q < 2) throw std::invalid_argument("nested_subset_chain: q must be >= 2");
  if (t < q) throw std::invalid_argument("nested_subset_chain: t must be >= q");
  if (y < 1) throw std::invalid_argument("nested_subset_chain: y must be >= 1");
  int rounds = 2 * q - 3;
  NestedResult res;
  std::vector<std::vector<int>> b_sets;  // B_1, B_2, ...
  std::vector<int> b(static_cast<size_t>(col.n));
  for (int v = 0; v < col.n; ++v) b[static_cast<size_t>(v)] = v;
  b_sets.push_back(b);
  for (int round = 1; round <= rounds; ++round) {
    if (static_cast<int>(b.size()) < 4)
      throw std::invalid_argument("nested_subset_chain: only " + std::to_string(b.size()) +
                                  " vertices left at round " + std::to_string(round) +
                                  "; host too small to halve " + std::to_string(rounds) + " times");
    std::vector<int> shuffled = b;
    CounterRng rng(seed, static_cast<uint64_t>(round));
    rng.shuffle(shuffled);
    std::vector<int> h1, h2;
    for (size_t i = 0; i < shuffled.size(); ++i)
      (i % 2 == 0 ? h1 : h2).push_back(shuffled[i]);
    size_t half = std::min(h1.size(), h2.size());
    h1.resize(half);
    h2.resize(half);
    long long red = 0;
    for (int u : h1)
      for (int v : h2) red += col.color(u, v) == EdgeColor::Red;
    long long total = static_cast<long long>(half) * static_cast<long long>(half);
    EdgeColor c = red * 2 >= total ? EdgeColor::Red : EdgeColor::Blue;
    res.round_colors.push_back(c);
    std::vector<std::pair<int, int>> sub_edges;
    for (size_t i = 0; i < half; ++i)
      for (size_t j = 0; j < half; ++j)
        if (col.color(h1[i], h2[j]) == c)
          sub_edges.emplace_back(static_cast<int>(i), static_cast<int>(half + j));
    Graph sub = build_graph(static_cast<int>(2 * half), sub_edges, static_cast<int>(half));
    DrcParams dp;
    dp.t = t;
    dp.x = y;
    dp.trials = trials;
    DrcResult dr = dependent_random_choice(sub, dp, counter_hash(seed, static_cast<uint64_t>(round), 0xD8C));
    std::vector<int> next;
    for (int local : dr.a) next.push_back(h2[static_cast<size_t>(local - static_cast<int>(half))]);
    std::sort(next.begin(), next.end());
    b = next;
    b_sets.push_back(b);
  }
  for (const auto& s : b_sets) res.b_sizes.push_back(static_cast<long long>(s.size()));
  int red_rounds = 0;
  for (EdgeColor c : res.round_colors) red_rounds += c == EdgeColor::Red;
  res.color = 2 * red_rounds >= rounds ? EdgeColor::Red : EdgeColor::Blue;

  res.chain.assign(static_cast<size_t>(q), {});
  res.chain[static_cast<size_t>(q - 1)] = b_sets[0];  // A_q = B_1
  int j = 1;
  for (int round = 1; round <= rounds && j <= q - 1; ++round) {
    if (res.round_colors[static_cast<size_t>(round - 1)] != res.color) continue;
    res.chain[static_cast<size_t>(q - 1 - j)] = b_sets[static_cast<size_t>(round)];  // A_{q-j} = B_{round+1}
    ++j;
  }

  // bad-t-set statistics per consecutive chain level, in the chosen color
  for (int lvl = 0; lvl + 1 < q; ++lvl) {
    const auto& from = res.chain[static_cast<size_t>(lvl)];
    const auto& into = res.chain[static_cast<size_t>(lvl + 1)];
    NestedLevelStat st;
    st.level = lvl + 1;
    st.from_size = static_cast<long long>(from.size());
    st.into_size = static_cast<long long>(into.size());
    if (static_cast<int>(from.size()) >= t && !into.empty()) {
      int words = (static_cast<int>(into.size()) + 63) / 64;
      BitRows rows(static_cast<int>(from.size()), words);
      rows.n = static_cast<int>(into.size());
      for (size_t i = 0; i < from.size(); ++i)
        for (size_t w = 0; w < into.size(); ++w)
          if (from[i] != into[w] && col.color(from[i], into[w]) == res.color)
            rows.set(static_cast<int>(i), static_cast<int>(w));
      std::vector<int> members(from.size());
      for (size_t i = 0; i < members.size(); ++i) members[i] = static_cast<int>(i);
      BadCount bc = count_sparse_tsets(rows, members, t, y, 1'000'000, 20'000, seed,
                                       0xBAD0ULL + static_cast<uint64_t>(lvl));
      st.bad_tsets = bc.count;
      st.exact = bc.exact;
    }
    res.level_stats.push_back(st);
  }
  return res;
}

EmbedOutcome target_set_greedy_embed(const Graph& h, const VertexOrdering& ord,
                                     const std::vector<int>& h_color, const Graph& g,
                                     const std::vector<VertexSet>& parts, Ratio epsilon) {
  int q = static_cast<int>(parts.size());
  if (q < 1) throw std::invalid_argument("target_set_greedy_embed: need at least one part");
  require_pattern_ordering(h, ord);
  require_proper_coloring(h, h_color, q);
  require_parts(g, parts);
  if (epsilon.num < 0 || epsilon > Ratio(1, 1))
    throw std::invalid_argument("target_set_greedy_embed: epsilon out of [0,1]");

  BitRows rows = adjacency_rows(g);
  std::vector<BitVec> part_masks(static_cast<size_t>(q), BitVec(g.n()));
  for (int i = 0; i < q; ++i)
    for (int v : parts[static_cast<size_t>(i)]) part_masks[static_cast<size_t>(i)].set(v);

  int nh = h.n();
  std::vector<BitVec> target(static_cast<size_t>(nh));
  std::vector<long long> tsize(static_cast<size_t>(nh));
  for (int v = 0; v < nh; ++v) {
    target[static_cast<size_t>(v)] = part_masks[static_cast<size_t>(h_color[static_cast<size_t>(v)])];
    tsize[static_cast<size_t>(v)] = target[static_cast<size_t>(v)].count();
  }
  BitVec used(g.n());
  EmbedOutcome out;
  out.embedding = Embedding{h, g, std::vector<int>(static_cast<size_t>(nh), -1)};
  for (int pos = 0; pos < nh; ++pos) {
    int v = ord.order[static_cast<size_t>(pos)];
    std::vector<int> later;
    for (int u : h.neighbors(v))
      if (ord.position[static_cast<size_t>(u)] > pos) later.push_back(u);
    int chosen = -1;
    const BitVec& tv = target[static_cast<size_t>(v)];
    for (int w0 = 0; w0 < tv.words && chosen < 0; ++w0) {
      uint64_t bitsw = tv.w[static_cast<size_t>(w0)] & ~used.w[static_cast<size_t>(w0)];
      while (bitsw) {
        int w = w0 * 64 + std::countr_zero(bitsw);
        bitsw &= bitsw - 1;
        bool ok = true;
        for (int u : later) {
          long long cnt = detail::and_count(rows.row(w), target[static_cast<size_t>(u)]);
          if (cnt * epsilon.den < epsilon.num * tsize[static_cast<size_t>(u)]) {
            ok = false;
            break;
          }
        }
        if (ok) {
          chosen = w;
          break;
        }
      }
    }
    if (chosen < 0) {
      out.failure = EmbedFailure{pos, v, "no admissible host vertex keeps all later target sets dense"};
      return out;
    }
    out.embedding.map[static_cast<size_t>(v)] = chosen;
    used.set(chosen);
    for (int u : later) {
      target[static_cast<size_t>(u)].and_with(rows.row(chosen));
      tsize[static_cast<size_t>(u)] = target[static_cast<size_t>(u)].count();
    }
  }
  out.ok = true;
  return out;
}

namespace {

__int128 pow_capped(__int128 base, int exp, __int128 cap) {
  __int128 r = 1;
  for (int i = 0; i < exp; ++i) {
    if (r > cap / (base == 0 ? 1 : base)) return cap;
    r *= base;
  }
  return r;
}

__int128 binom128(long long n, long long k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  __int128 r = 1;
  for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

EmbedOutcome good_set_greedy_embed(const Graph& h, const VertexOrdering& ord,
                                   const std::vector<int>& h_color, const Graph& g,
                                   const std::vector<VertexSet>& parts, long long x, int d,
                                   long long budget) {
  int q = static_cast<int>(parts.size());
  if (q < 1) throw std::invalid_argument("good_set_greedy_embed: need at least one part");
  if (x < 1 || d < 1) throw std::invalid_argument("good_set_greedy_embed: x and d must be >= 1");
  require_pattern_ordering(h, ord);
  require_proper_coloring(h, h_color, q);
  require_parts(g, parts);

  // local indexing over the union of the parts
  std::vector<int> host_of;  // local -> host vertex
  std::vector<int> color_of_local;
  for (int i = 0; i < q; ++i)
    for (int v : normalize_vertex_set(g, parts[static_cast<size_t>(i)])) {
      host_of.push_back(v);
      color_of_local.push_back(i);
    }
  // keep locals sorted by host id so candidate iteration is smallest-host-first
  {
    std::vector<size_t> idx(host_of.size());
    for (size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](size_t a, size_t b) { return host_of[a] < host_of[b]; });
    std::vector<int> ho(host_of.size()), co(host_of.size());
    for (size_t i = 0; i < idx.size(); ++i) {
      ho[i] = host_of[idx[i]];
      co[i] = color_of_local[idx[i]];
    }
    host_of.swap(ho);
    color_of_local.swap(co);
  }
  int ml = static_cast<int>(host_of.size());
  if (binom_capped(ml, d, budget) > budget)
    throw std::invalid_argument(
        "good_set_greedy_embed: C(|union|, d) exceeds the exact-counting budget; "
        "use target_set_greedy_embed instead");

  int words = (ml + 63) / 64;
  BitRows rows(ml, words);
  rows.n = ml;
  for (int a = 0; a < ml; ++a)
    for (int b = a + 1; b < ml; ++b)
      if (g.adjacent(host_of[static_cast<size_t>(a)], host_of[static_cast<size_t>(b)])) {
        rows.set(a, b);
        rows.set(b, a);
      }
  std::vector<BitVec> part_masks(static_cast<size_t>(q), BitVec(ml));
  for (int a = 0; a < ml; ++a) part_masks[static_cast<size_t>(color_of_local[static_cast<size_t>(a)])].set(a);

  int delta = measure_certificate(h, ord).left_set_count;
  const __int128 cap128 = static_cast<__int128>(1) << 100;

  // catalog of bad d-sets per class: d-sets outside V_i with < x common
  // neighbors in V_i, stored as lex-sorted flat tuples
  EmbedOutcome out;
  out.embedding = Embedding{h, g, std::vector<int>(static_cast<size_t>(h.n()), -1)};
  std::vector<std::vector<int>> bad(static_cast<size_t>(q));
  const long long bad_cap = 2'000'000;
  {
    std::vector<int> chosen(static_cast<size_t>(d));
    std::vector<uint64_t> mask_stack(static_cast<size_t>(d + 1) * words);
    for (int i = 0; i < q; ++i) {
      std::vector<int> cands;
      for (int a = 0; a < ml; ++a)
        if (color_of_local[static_cast<size_t>(a)] != i) cands.push_back(a);
      const BitVec& pm = part_masks[static_cast<size_t>(i)];
      auto mask_at = [&](int depth) { return mask_stack.data() + static_cast<size_t>(depth) * words; };
      for (int w = 0; w < words; ++w) mask_at(0)[w] = ~0ULL;
      std::function<bool(size_t, int)> rec = [&](size_t start, int depth) {
        if (depth == d) {
          int c = 0;
          const uint64_t* m = mask_at(depth);
          for (int w = 0; w < words; ++w)
            c += std::popcount(m[w] & pm.w[static_cast<size_t>(w)]);
          if (c < x) {
            for (int j = 0; j < d; ++j) bad[static_cast<size_t>(i)].push_back(chosen[static_cast<size_t>(j)]);
            if (static_cast<long long>(bad[static_cast<size_t>(i)].size()) / d > bad_cap) return true;
          }
          return false;
        }
        for (size_t a = start; a < cands.size(); ++a) {
          const uint64_t* prev = mask_at(depth);
          uint64_t* next = mask_at(depth + 1);
          const uint64_t* row = rows.row(cands[a]);
          for (int w = 0; w < words; ++w) next[w] = prev[w] & row[w];
          chosen[static_cast<size_t>(depth)] = cands[a];
          if (rec(a + 1, depth + 1)) return true;
        }
        return false;
      };
      if (rec(0, 0)) {
        out.failure = EmbedFailure{-1, -1,
                                   "bad d-set catalog for class " + std::to_string(i) +
                                       " exceeds cap; goodness hypothesis cannot hold"};
        return out;
      }
    }
  }
  // the empty set must be good for every class, i.e. the hypothesis holds
  for (int i = 0; i < q; ++i) {
    __int128 cnt = static_cast<__int128>(bad[static_cast<size_t>(i)].size()) / d;
    if (cnt * pow_capped(2 * std::max(delta, 0), d, cap128) >= binom128(x, d)) {
      out.failure = EmbedFailure{-1, -1,
                                 "goodness hypothesis violated for class " + std::to_string(i) +
                                     ": too many bad d-sets"};
      return out;
    }
  }

  auto count_bad_supersets = [&](const std::vector<int>& s, int cls) -> long long {
    const auto& list = bad[static_cast<size_t>(cls)];
    long long cnt = 0;
    for (size_t off = 0; off < list.size(); off += static_cast<size_t>(d)) {
      size_t si = 0;
      for (int j = 0; j < d && si < s.size(); ++j)
        if (list[off + static_cast<size_t>(j)] == s[si]) ++si;
      cnt += si == s.size();
    }
    return cnt;
  };
  auto is_good = [&](const std::vector<int>& s, int cls) -> bool {
    int k = static_cast<int>(s.size());
    long long cnt = count_bad_supersets(s, cls);
    if (k == d) return cnt == 0;
    return static_cast<__int128>(cnt) * pow_capped(2 * std::max(delta, 0), d - k, cap128) <
           binom128(x, d - k);
  };

  int nh = h.n();
  BitVec used(ml);
  std::vector<int> local_of_pattern(static_cast<size_t>(nh), -1);
  for (int pos = 0; pos < nh; ++pos) {
    int v = ord.order[static_cast<size_t>(pos)];
    int cls = h_color[static_cast<size_t>(v)];
    BitVec cand = part_masks[static_cast<size_t>(cls)];
    for (int u : h.neighbors(v))
      if (ord.position[static_cast<size_t>(u)] < pos)
        cand.and_with(rows.row(local_of_pattern[static_cast<size_t>(u)]));
    // pending pairs: later neighbors' placed left-neighborhood images
    std::set<std::pair<std::vector<int>, int>> pending;
    for (int u : h.neighbors(v)) {
      if (ord.position[static_cast<size_t>(u)] <= pos) continue;
      std::vector<int> s;
      for (int w : h.neighbors(u))
        if (ord.position[static_cast<size_t>(w)] < pos) s.push_back(local_of_pattern[static_cast<size_t>(w)]);
      std::sort(s.begin(), s.end());
      pending.insert({std::move(s), h_color[static_cast<size_t>(u)]});
    }
    long long qualifying = 0;
    int chosen = -1;
    for (int w0 = 0; w0 < cand.words; ++w0) {
      uint64_t bitsw = cand.w[static_cast<size_t>(w0)] & ~used.w[static_cast<size_t>(w0)];
      while (bitsw) {
        int a = w0 * 64 + std::countr_zero(bitsw);
        bitsw &= bitsw - 1;
        bool ok = true;
        for (const auto& [s, pcls] : pending) {
          std::vector<int> su = s;
          su.insert(std::lower_bound(su.begin(), su.end(), a), a);
          if (!is_good(su, pcls)) {
            ok = false;
            break;
          }
        }
        if (ok) {
          ++qualifying;
          if (chosen < 0) chosen = a;
        }
      }
    }
    if (out.min_candidates < 0 || qualifying < out.min_candidates) out.min_candidates = qualifying;
    // proof arithmetic: x - x/2 - (h-1) qualifying vertices expected
    if (2 * qualifying < x - 2 * static_cast<long long>(pos)) out.invariant_violated = true;
    if (chosen < 0) {
      out.failure = EmbedFailure{pos, v, "no unused good host vertex in the common neighborhood"};
      return out;
    }
    local_of_pattern[static_cast<size_t>(v)] = chosen;
    out.embedding.map[static_cast<size_t>(v)] = host_of[static_cast<size_t>(chosen)];
    used.set(chosen);
  }
  out.ok = true;
  return out;
}

EmbedOutcome multipartite_greedy_embed(const Graph& h, const VertexOrdering& ord,
                                       const std::vector<int>& h_color, const Graph& g,
                                       const std::vector<VertexSet>& parts, int d) {
  int q = static_cast<int>(parts.size());
  if (q < 1) throw std::invalid_argument("multipartite_greedy_embed: need at least one part");
  if (d < 1) throw std::invalid_argument("multipartite_greedy_embed: d must be >= 1");
  require_pattern_ordering(h, ord);
  require_proper_coloring(h, h_color, q);
  require_parts(g, parts);
  int nh = h.n();
  std::vector<VertexSet> norm;
  long long total = 0;
  for (const auto& p : parts) {
    norm.push_back(normalize_vertex_set(g, p));
    total += static_cast<long long>(norm.back().size());
    if (static_cast<long long>(norm.back().size()) < 4LL * nh)
      throw std::invalid_argument("multipartite_greedy_embed: part smaller than 4|V(H)|");
  }
  std::vector<int> part_of(static_cast<size_t>(g.n()), -1);
  for (int i = 0; i < q; ++i)
    for (int v : norm[static_cast<size_t>(i)]) part_of[static_cast<size_t>(v)] = i;
  // per-vertex non-neighbor budget into the other parts
  for (int i = 0; i < q; ++i) {
    long long others = total - static_cast<long long>(norm[static_cast<size_t>(i)].size());
    long long own = static_cast<long long>(norm[static_cast<size_t>(i)].size());
    for (int w : norm[static_cast<size_t>(i)]) {
      long long nb = 0;
      for (int u : g.neighbors(w)) {
        int pu = part_of[static_cast<size_t>(u)];
        nb += pu >= 0 && pu != i;
      }
      long long non_nb = others - nb;
      if (non_nb * 2 * d > own)
        throw std::invalid_argument("multipartite_greedy_embed: vertex " + std::to_string(w) +
                                    " exceeds the |Y|/(2d) non-neighbor budget");
    }
  }

  BitRows rows = adjacency_rows(g);
  std::vector<BitVec> part_masks(static_cast<size_t>(q), BitVec(g.n()));
  for (int i = 0; i < q; ++i)
    for (int v : norm[static_cast<size_t>(i)]) part_masks[static_cast<size_t>(i)].set(v);

  EmbedOutcome out;
  out.embedding = Embedding{h, g, std::vector<int>(static_cast<size_t>(nh), -1)};
  BitVec used(g.n());
  for (int pos = 0; pos < nh; ++pos) {
    int v = ord.order[static_cast<size_t>(pos)];
    int cls = h_color[static_cast<size_t>(v)];
    BitVec cand = part_masks[static_cast<size_t>(cls)];
    long long budget_sum = 0;
    for (int u : h.neighbors(v))
      if (ord.position[static_cast<size_t>(u)] < pos) {
        cand.and_with(rows.row(out.embedding.map[static_cast<size_t>(u)]));
        budget_sum += static_cast<long long>(norm[static_cast<size_t>(h_color[static_cast<size_t>(u)])].size()) / (2 * d);
      }
    long long candidates = 0;
    int chosen = -1;
    for (int w0 = 0; w0 < cand.words; ++w0) {
      uint64_t bitsw = cand.w[static_cast<size_t>(w0)] & ~used.w[static_cast<size_t>(w0)];
      candidates += std::popcount(bitsw);
      if (chosen < 0 && bitsw) chosen = w0 * 64 + std::countr_zero(bitsw);
    }
    if (out.min_candidates < 0 || candidates < out.min_candidates) out.min_candidates = candidates;
    long long bound = static_cast<long long>(norm[static_cast<size_t>(cls)].size()) - budget_sum - pos;
    if (bound <= nh || candidates < bound) out.invariant_violated = true;
    if (chosen < 0) {
      out.failure = EmbedFailure{pos, v,
                                 "defect: no adjacent unused vertex despite verified preconditions"};
      return out;
    }
    out.embedding.map[static_cast<size_t>(v)] = chosen;
    used.set(chosen);
  }
  out.ok = true;
  return out;
}

}  // namespace ramsey
