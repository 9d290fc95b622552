#ifndef RAMSEY_EMBEDDING_HPP
#define RAMSEY_EMBEDDING_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "ramsey/coloring.hpp"
#include "ramsey/graph.hpp"
#include "ramsey/ordering.hpp"
#include "ramsey/rational.hpp"

namespace ramsey {

// Injective edge-preserving partial map from pattern to host (-1 = unmapped).
struct Embedding {
  Graph pattern;
  Graph host;
  std::vector<int> map;
};

std::string embedding_to_json(const Embedding& e);

struct DrcParams {
  int t = 1;
  long long x = 1;
  int trials = 1;
  long long exact_budget = 1'000'000;   // max C(|A|,t) for exact bad-set counting
  long long estimate_samples = 20'000;  // sampled mode draws
};

struct DrcResult {
  VertexSet a;                 // best-scoring common neighborhood inside V2
  double epsilon = 0.0;        // realized edge density e/N^2
  double score = 0.0;
  int best_trial = -1;
  bool bad_exact = true;
  double bad_tsets = 0.0;      // count (exact) or estimate of bad t-sets in a
  double bad_ci95 = 0.0;       // half-width, sampled mode only
  double mean_a_size = 0.0;    // raw per-trial mean of |A|
  std::vector<int> trial_a_sizes;
};

// Repeatedly samples 2t vertices of V1 uniformly with repetition, takes the
// common neighborhood inside V2, and keeps the candidate with the best
// X - (E[X]/(2E[Y])) Y score. Requires a bipartite host with equal parts and
// positive density.
DrcResult dependent_random_choice(const Graph& g, const DrcParams& params, uint64_t seed);

struct NestedLevelStat {
  int level = 0;          // statistics for t-sets of chain[level] vs chain[level+1]
  long long from_size = 0;
  long long into_size = 0;
  double bad_tsets = 0.0;
  bool exact = true;
};

struct NestedResult {
  EdgeColor color = EdgeColor::Red;
  std::vector<VertexSet> chain;           // A_1 ⊂ ... ⊂ A_q
  std::vector<EdgeColor> round_colors;    // densest color per halving round
  std::vector<long long> b_sizes;         // |B_1|, ..., |B_{2q-2}|
  std::vector<NestedLevelStat> level_stats;
};

// Runs 2q-3 rounds of (seeded shuffle, halve by index parity, pick the denser
// color across the halves, dependent random choice inside the second half),
// then assembles the nested chain for the color holding a majority of rounds.
// Reports achieved sizes and bad-t-set statistics.
NestedResult nested_subset_chain(const TwoColoring& col, int q, int t, long long y,
                                 uint64_t seed, int trials = 20);

struct EmbedFailure {
  int step = -1;
  int pattern_vertex = -1;
  std::string reason;
};

struct EmbedOutcome {
  bool ok = false;
  Embedding embedding;
  EmbedFailure failure;
  bool invariant_violated = false;  // the proof-arithmetic candidate bound dipped
  long long min_candidates = -1;    // smallest qualifying-candidate count seen
};

// Target-set greedy embedding: keeps T sets per pattern vertex, requires every
// later neighbor to retain an epsilon fraction of its target set.
EmbedOutcome target_set_greedy_embed(const Graph& h, const VertexOrdering& ord,
                                     const std::vector<int>& h_color, const Graph& g,
                                     const std::vector<VertexSet>& parts, Ratio epsilon);

// Good-set greedy embedding with exact bad-d-set counting: a small set is good
// when it lies in few bad d-sets; each placement must keep every pending
// left-neighborhood image good.
EmbedOutcome good_set_greedy_embed(const Graph& h, const VertexOrdering& ord,
                                   const std::vector<int>& h_color, const Graph& g,
                                   const std::vector<VertexSet>& parts, long long x, int d,
                                   long long budget = 10'000'000);

// Greedy embedding into near-complete multipartite hosts; validates the
// per-vertex non-neighbor budget |Y_i|/(2d) up front and asserts the running
// candidate count along the way (a genuine failure is a defect, not expected).
EmbedOutcome multipartite_greedy_embed(const Graph& h, const VertexOrdering& ord,
                                       const std::vector<int>& h_color, const Graph& g,
                                       const std::vector<VertexSet>& parts, int d);

}  // namespace ramsey

#endif
