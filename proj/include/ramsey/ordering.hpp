#ifndef RAMSEY_ORDERING_HPP
#define RAMSEY_ORDERING_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ramsey/graph.hpp"

namespace ramsey {

struct VertexOrdering {
  std::vector<int> order;     // order[i] = vertex placed at position i
  std::vector<int> position;  // inverse permutation

  static VertexOrdering from_order(std::vector<int> order);
  static VertexOrdering identity(int n);
  int n() const { return static_cast<int>(order.size()); }
};

// Parameters measured against one ordering:
//   back_degree     max number of earlier neighbors of any vertex
//   left_set_count  max number of distinct sets N(u) ∩ L_i over the later
//                   neighbors u of the vertex at position i (L_i = first i+1
//                   positions; sets compared by content)
//   arrangeability  max size of the union of those sets
struct SparsenessCertificate {
  VertexOrdering ordering;
  int back_degree = 0;
  int left_set_count = 0;
  int arrangeability = 0;
};

SparsenessCertificate measure_certificate(const Graph& g, const VertexOrdering& ord);

std::string certificate_to_json(const SparsenessCertificate& c);

// Min-degree peeling emitted in reverse removal order; second value is the
// graph's degeneracy. The returned ordering's back_degree equals it.
std::pair<VertexOrdering, int> degeneracy_ordering(const Graph& g);

struct PeelResult {
  bool ok = false;
  VertexOrdering ordering;
  VertexSet residual;  // stuck induced subgraph when !ok
};

// Repeatedly removes a vertex of degree <= 1, else one of degree <= s whose
// current neighbors all have degree <= r (smallest index, degree-<=1 rule
// preferred). Success yields a certificate with d <= s and Delta <= r+1.
PeelResult peel_ordering(const Graph& g, int s, int r);

struct LightVertexWitness {
  enum class Kind { DegreeAtMostOne, DegreeTwoBothNeighborsDegreeTwo };
  Kind kind = Kind::DegreeAtMostOne;
  int vertex = -1;
  VertexSet neighbors;

  bool check(const Graph& g) const;
};

// Non-empty result is guaranteed whenever e(G) < (9/8) n.
std::optional<LightVertexWitness> find_light_vertex(const Graph& g);

// Exact minimum of arrangeability over all orderings, with branch-and-bound
// pruning (a prefix's contribution never decreases under extension).
int exact_min_arrangeability(const Graph& g, int n_cap = 10);

// Proper coloring along the ordering: each vertex takes the smallest class
// absent among its earlier neighbors. Uses at most back_degree+1 classes.
std::vector<int> greedy_coloring(const Graph& g, const VertexOrdering& ord);

}  // namespace ramsey

#endif
