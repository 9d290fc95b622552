#ifndef RAMSEY_RANDOM_GRAPH_HPP
#define RAMSEY_RANDOM_GRAPH_HPP

#include <cstdint>
#include <string>

#include "ramsey/graph.hpp"
#include "ramsey/ordering.hpp"
#include "ramsey/rational.hpp"

namespace ramsey {

// G(n,p), or G(n,n,p) with n vertices per class when bipartite is set.
// Identical spec => identical sampled graph, independent of thread count.
struct RandomGraphSpec {
  long long n = 0;
  double p = 0.0;
  uint64_t seed = 0;
  bool bipartite = false;

  static RandomGraphSpec gnp(long long n, double p, uint64_t seed) {
    return RandomGraphSpec{n, p, seed, false};
  }
  static RandomGraphSpec gnd(long long n, double d, uint64_t seed) {
    return RandomGraphSpec{n, d / static_cast<double>(n), seed, false};
  }
  static RandomGraphSpec bipartite_gnp(long long n, double p, uint64_t seed) {
    return RandomGraphSpec{n, p, seed, true};
  }
};

// Each pair appears independently with probability p. Rows are sampled with
// geometric skips driven by the counter generator's per-row lane, so large
// sparse graphs cost O(n + m) draws.
Graph sample_gnp(const RandomGraphSpec& spec);

// Random d-degenerate pattern: vertex v attaches to min(d, v) distinct
// earlier vertices, so the identity ordering has back-degree <= d.
Graph sample_degenerate(long long n, int d, uint64_t seed);

// Deterministic seeded partition of [0,n) into q near-equal index sets.
std::vector<VertexSet> seeded_equal_partition(long long n, int q, uint64_t seed);

struct ClosureResult {
  VertexSet closure;        // F(S)
  std::vector<int> added;   // vertices appended after S, in processing order
  double growth_ratio = 1.0;
};

// Smallest superset of s such that no outside vertex has >= 2 neighbors
// inside. Candidates are processed smallest-index-first; the fixed point is
// independent of processing order.
ClosureResult two_neighbor_closure(const Graph& g, const VertexSet& s);

struct CoolOrderingResult {
  VertexOrdering ordering;
  SparsenessCertificate certificate;
  bool peel_stuck = false;
  long long high_degree_count = 0;
  long long closure_size = 0;
};

// Orders the closure of {deg > 16d} first (by a (2,2) peel of the induced
// subgraph), then the remaining vertices by index. A stuck peel is reported,
// never hidden.
CoolOrderingResult high_degree_closure_ordering(const Graph& g, long long d);

long long count_high_degree(const Graph& g, long long threshold);

// Unordered vertex pairs with at least three common neighbors.
long long count_k23_pairs(const Graph& g);

struct PropertyReport {
  std::string lemma_id;
  long long samples = 0;
  long long successes = 0;
  double statistic = 0.0;
  double threshold = 0.0;
  bool pass = false;
  bool exhaustive = false;
  bool budget_exceeded = false;
  std::string note;
  VertexSet witness;  // violating subset when one was found
};

std::string report_to_json(const PropertyReport& r);

struct SubgraphDensityOptions {
  long long node_budget = 50'000'000;  // exact-mode enumeration cap
  bool sampled = false;                // seeded random connected subsets instead
  long long samples = 100'000;
  uint64_t seed = 0;
};

// Verifies no vertex subset with t <= size_cap spans >= (9/8)t edges. Only
// connected subsets are enumerated: a densest violating subset has a violating
// connected component.
PropertyReport check_small_subgraph_density(const Graph& g, int size_cap,
                                            SubgraphDensityOptions opt = {});

// Samples `trials` random disjoint vertex-set pairs of size ceil(fraction*n)
// and reports the minimum of e(A,B)/(p|A||B|); pass means minimum >= 1/2.
PropertyReport check_density_between_large_sets(const Graph& g, Ratio fraction, double p,
                                                long long trials, uint64_t seed);

// Splits the ordering into thirds by position and exhibits one middle-third
// vertex whose last-third neighbors reach, by inclusion-exclusion, many
// first-third vertices. The returned value lower-bounds the ordering's
// arrangeability; 0 when no qualifying vertex exists.
long long arrangeability_witness(const Graph& g, const VertexOrdering& ord);

}  // namespace ramsey

#endif
