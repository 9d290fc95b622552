#ifndef RAMSEY_SPARSITY_HPP
#define RAMSEY_SPARSITY_HPP

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <vector>

#include "ramsey/graph.hpp"

namespace ramsey {

// (alpha, rho, epsilon, t): every subset U with |U| >= alpha|V| must contain t
// disjoint parts of size ceil(rho|U|) with multi-density <= epsilon. alpha may
// exceed 1 after a transform, which makes the property vacuous.
struct SparsityParams {
  mpq_class alpha;
  mpq_class rho;
  mpq_class epsilon;
  long t = 2;
  bool vacuous = false;
};

// Pure arithmetic: ((2/rho)^(h-1) alpha, 2^(1-h) rho^h, 4 epsilon, 2^h).
// Input t must be 2 and input epsilon is interpreted as a quarter of the
// output one. Flags vacuity when the output alpha exceeds 1.
SparsityParams sparsity_transform(const SparsityParams& in, long h);

struct SparseCheckOptions {
  int exhaustive_cap = 18;     // exhaustive subset sweep up to this n
  long long samples = 2000;    // sampled mode subset draws (n above cap)
  uint64_t seed = 0;
  int local_search_iters = 400;
};

struct SparseCheckResult {
  bool sparse = true;
  bool exhaustive = true;
  long long inspected = 0;
  std::optional<VertexSet> violating_u;       // U where no witness was found
  std::vector<VertexSet> witness_parts;       // parts found for the largest U
};

// Greedy + local-search witness construction per inspected U; a miss is
// reported as the violating U (the finder is heuristic, as declared).
SparseCheckResult check_sparse(const Graph& g, const SparsityParams& p,
                               SparseCheckOptions opt = {});

}  // namespace ramsey

#endif
