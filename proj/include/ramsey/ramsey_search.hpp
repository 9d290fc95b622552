#ifndef RAMSEY_RAMSEY_SEARCH_HPP
#define RAMSEY_RAMSEY_SEARCH_HPP

#include <cstdint>
#include <optional>

#include "ramsey/coloring.hpp"
#include "ramsey/embedding.hpp"
#include "ramsey/graph.hpp"

namespace ramsey {

struct MonoCopy {
  EdgeColor color = EdgeColor::Red;
  Embedding embedding;
};

// Backtracking subgraph search inside the chosen color class(es): pattern
// vertices in descending-degree order, smallest host index first. A nullopt
// result is an exhaustively certified absence.
std::optional<MonoCopy> find_mono_copy(const TwoColoring& col, const Graph& h,
                                       std::optional<EdgeColor> which = std::nullopt);

struct RamseySearchStats {
  uint64_t dfs_nodes = 0;
  uint64_t mono_prunes = 0;
  uint64_t symmetry_prunes = 0;
  uint64_t isomorph_prunes = 0;
  int threads = 1;
  bool canonical_pruning = false;
};

struct RamseyOptions {
  bool canonical_pruning = false;  // layer-wise isomorph rejection (colex edge order)
  int threads = 1;
};

// Decides whether some coloring of K_n avoids a monochromatic copy of h.
// Default mode colors edges in lexicographic pair order with vertex-0's edge
// colors forced red-before-blue (a relabeling-safe symmetry break).
bool exists_avoiding_coloring(const Graph& h, int n, const RamseyOptions& opt,
                              TwoColoring* witness, RamseySearchStats* stats);

struct RamseyResult {
  int value = 0;
  TwoColoring lower_witness;  // on K_{value-1}, no monochromatic copy
  RamseySearchStats stats;
};

struct RamseyOutcome {
  bool known = false;
  RamseyResult result;
  int n_max = 0;  // cap reached when !known
};

RamseyOutcome ramsey_exact(const Graph& h, int n_max, RamseyOptions opt = {});

// Randomized restarts + local search (flip the edge in the most monochromatic
// copies). Any returned coloring is re-validated; nullopt means not found.
std::optional<TwoColoring> ramsey_lower_search(const Graph& h, int n, int restarts,
                                               uint64_t seed, long long max_iters = -1);

}  // namespace ramsey

#endif
