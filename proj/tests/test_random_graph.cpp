#include "doctest.h"

#include <algorithm>
#include <cmath>

#include "oracles.hpp"
#include "ramsey/graph.hpp"
#include "ramsey/random_graph.hpp"
#include "ramsey/rng.hpp"

using namespace ramsey;

TEST_CASE("counter generator test vectors") {
  // pinned: the sampler's determinism contract depends on these exact values
  CHECK(counter_hash(0, 0, 0) == 0xa706dd2f4d197e6fULL);
  CHECK(counter_hash(1, 0, 0) == 0x5e41ab087439611eULL);
  CHECK(counter_hash(42, 7, 1234567) == 0xafba39e72164a0f8ULL);
}

TEST_CASE("sampler determinism and edge cases") {
  RandomGraphSpec spec = RandomGraphSpec::gnp(2000, 0.01, 77);
  CHECK(sample_gnp(spec) == sample_gnp(spec));

  CHECK(sample_gnp(RandomGraphSpec::gnp(50, 0.0, 1)).m() == 0);
  CHECK(sample_gnp(RandomGraphSpec::gnp(12, 1.0, 1)) == complete_graph(12));

  Graph bip = sample_gnp(RandomGraphSpec::bipartite_gnp(6, 1.0, 1));
  CHECK(bip.is_bipartite());
  CHECK(bip.m() == 36);
  for (int u = 0; u < 6; ++u)
    for (int v = 6; v < 12; ++v) CHECK(bip.adjacent(u, v));
}

TEST_CASE("sampler mean edge count matches the binomial") {
  // Binomial(C(1000,2), 0.01): mean 4995, sd of the 100-seed mean ~7.03
  double total = 0;
  for (uint64_t seed = 1; seed <= 100; ++seed)
    total += static_cast<double>(sample_gnp(RandomGraphSpec::gnp(1000, 0.01, seed)).m());
  double mean = total / 100.0;
  CHECK(std::abs(mean - 4995.0) <= 4.0 * 7.04);
}

TEST_CASE("two_neighbor_closure on small cases") {
  Graph p3 = path_graph(3);
  CHECK(two_neighbor_closure(p3, {0, 2}).closure == VertexSet{0, 1, 2});

  Graph c4 = cycle_graph(4);
  CHECK(two_neighbor_closure(c4, {0, 2}).closure == VertexSet{0, 1, 2, 3});

  // an independent set whose outside vertices have at most one neighbor inside
  Graph p5 = path_graph(5);
  VertexSet s = {0, 3};
  CHECK(two_neighbor_closure(p5, s).closure == s);
  // but two leaves of a star pull in the center
  Graph star = star_graph(4);
  CHECK(two_neighbor_closure(star, {1, 2}).closure == VertexSet{0, 1, 2});
}

TEST_CASE("closure idempotence, monotonicity, order independence") {
  for (uint64_t seed = 1; seed <= 200; ++seed) {
    CounterRng rng(seed, 2);
    int n = 4 + static_cast<int>(rng.below(40));
    Graph g = sample_gnp(RandomGraphSpec::gnp(n, 2.5 / n, seed + 40));
    VertexSet s, s2;
    for (int v = 0; v < n; ++v) {
      uint64_t r = rng.below(5);
      if (r == 0) s.push_back(v);
      if (r <= 1) s2.push_back(v);  // s ⊆ s2
    }
    VertexSet f = two_neighbor_closure(g, s).closure;
    CHECK(std::includes(f.begin(), f.end(), s.begin(), s.end()));
    CHECK(two_neighbor_closure(g, f).closure == f);
    VertexSet f2 = two_neighbor_closure(g, s2).closure;
    CHECK(std::includes(f2.begin(), f2.end(), f.begin(), f.end()));
    CHECK(oracles::closure_fixed_point(g, s, seed * 31) == f);
    // no outside vertex keeps two neighbors inside
    for (int v = 0; v < n; ++v) {
      if (std::binary_search(f.begin(), f.end(), v)) continue;
      int cnt = 0;
      for (int u : g.neighbors(v)) cnt += std::binary_search(f.begin(), f.end(), u);
      CHECK(cnt <= 1);
    }
  }
}

TEST_CASE("high_degree_closure_ordering with an empty high-degree set") {
  Graph k4 = complete_graph(4);
  CoolOrderingResult res = high_degree_closure_ordering(k4, 1);
  CHECK(res.high_degree_count == 0);
  CHECK(res.closure_size == 0);
  CHECK(!res.peel_stuck);
  CHECK(res.certificate.back_degree == 3);
  CHECK(res.certificate.left_set_count == 1);
}

TEST_CASE("high_degree_closure_ordering puts the closure first") {
  // a 20-leaf star: the center exceeds 16*1 and forms the whole closure
  Graph star = star_graph(20);
  CoolOrderingResult res = high_degree_closure_ordering(star, 1);
  CHECK(res.high_degree_count == 1);
  CHECK(res.closure_size == 1);
  CHECK(res.ordering.order[0] == 0);
  CHECK(res.certificate.back_degree == 1);
  CHECK(res.certificate.left_set_count == 1);
  CHECK(!res.peel_stuck);
}

TEST_CASE("high_degree_closure_ordering stays within 16d on a sparse sample") {
  Graph g = sample_gnp(RandomGraphSpec::gnd(4000, 6.0, 11));
  CoolOrderingResult res = high_degree_closure_ordering(g, 6);
  CHECK(res.certificate.back_degree <= 96);
  CHECK(res.certificate.left_set_count <= 96);
}

TEST_CASE("count_high_degree") {
  CHECK(count_high_degree(complete_graph(5), 3) == 5);
  CHECK(count_high_degree(build_graph(7, {}), 0) == 0);
  CHECK(count_high_degree(star_graph(4), 3) == 1);
}

TEST_CASE("count_k23_pairs") {
  CHECK(count_k23_pairs(complete_bipartite(2, 3)) == 1);
  CHECK(count_k23_pairs(path_graph(9)) == 0);
  CHECK(count_k23_pairs(star_graph(6)) == 0);
  CHECK(count_k23_pairs(complete_graph(4)) == 0);
  CHECK(count_k23_pairs(complete_graph(5)) == 10);  // every pair has 3 common neighbors
}

TEST_CASE("count_k23_pairs agrees with the naive pair count") {
  for (uint64_t seed = 1; seed <= 20; ++seed) {
    Graph g = sample_gnp(RandomGraphSpec::gnp(40, 0.2, seed + 900));
    long long naive = 0;
    for (int u = 0; u < g.n(); ++u)
      for (int v = u + 1; v < g.n(); ++v) {
        int common = 0;
        for (int w : g.neighbors(u)) common += g.adjacent(v, w) && w != v;
        naive += common >= 3;
      }
    CHECK(count_k23_pairs(g) == naive);
  }
}

TEST_CASE("check_small_subgraph_density basics") {
  // forests never reach density 9/8
  Graph tree = path_graph(30);
  CHECK(check_small_subgraph_density(tree, 8).pass);

  PropertyReport k4 = check_small_subgraph_density(complete_graph(4), 4);
  CHECK(!k4.pass);
  CHECK(k4.witness.size() == 4);
  CHECK_THROWS_AS(check_small_subgraph_density(tree, 13), std::invalid_argument);
}

TEST_CASE("check_small_subgraph_density matches subset enumeration (n<=11)") {
  for (uint64_t seed = 1; seed <= 30; ++seed) {
    CounterRng rng(seed, 8);
    int n = 4 + static_cast<int>(rng.below(8));
    Graph g = sample_gnp(RandomGraphSpec::gnp(n, 0.35, seed + 60));
    int cap = std::min(n, 8);
    PropertyReport rep = check_small_subgraph_density(g, cap);
    CHECK(rep.pass == oracles::no_dense_small_subset(g, cap));
    if (!rep.pass) {
      long long e = 0;
      for (size_t i = 0; i < rep.witness.size(); ++i)
        for (size_t j = i + 1; j < rep.witness.size(); ++j)
          e += g.adjacent(rep.witness[i], rep.witness[j]);
      CHECK(8 * e >= 9 * static_cast<long long>(rep.witness.size()));
    }
  }
}

TEST_CASE("check_small_subgraph_density sampled mode flags itself") {
  Graph g = sample_gnp(RandomGraphSpec::gnd(3000, 2.0, 5));
  SubgraphDensityOptions opt;
  opt.sampled = true;
  opt.samples = 2000;
  opt.seed = 9;
  PropertyReport rep = check_small_subgraph_density(g, 16, opt);
  CHECK(!rep.exhaustive);
  CHECK(!rep.note.empty());
}

TEST_CASE("check_density_between_large_sets") {
  Graph k40 = complete_graph(40);
  PropertyReport rep = check_density_between_large_sets(k40, Ratio(1, 6), 0.05, 50, 3);
  CHECK(rep.pass);
  CHECK(rep.statistic >= 2.0);  // ratio is 1/p on the complete graph

  Graph empty = build_graph(40, {});
  PropertyReport zero = check_density_between_large_sets(empty, Ratio(1, 6), 0.05, 20, 3);
  CHECK(!zero.pass);
  CHECK(zero.statistic == 0.0);

  CHECK_THROWS_AS(check_density_between_large_sets(k40, Ratio(2, 3), 0.1, 5, 1),
                  std::invalid_argument);

  Graph g = sample_gnp(RandomGraphSpec::gnd(600, 30.0, 21));
  PropertyReport mc = check_density_between_large_sets(g, Ratio(1, 6), 30.0 / 600.0, 100, 4);
  CHECK(mc.pass);
}

TEST_CASE("arrangeability_witness basics and soundness") {
  CHECK(arrangeability_witness(build_graph(9, {}), VertexOrdering::identity(9)) == 0);
  for (uint64_t seed = 1; seed <= 400; ++seed) {
    CounterRng rng(seed, 12);
    int n = 6 + static_cast<int>(rng.below(30));
    Graph g = sample_gnp(RandomGraphSpec::gnp(n, rng.unit() * 0.5, seed + 3000));
    std::vector<int> order(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) order[static_cast<size_t>(i)] = i;
    rng.shuffle(order);
    VertexOrdering ord = VertexOrdering::from_order(order);
    long long w = arrangeability_witness(g, ord);
    CHECK(w >= 0);
    CHECK(w <= measure_certificate(g, ord).arrangeability);
  }
}

TEST_CASE("no heavy common pair keeps pairwise overlaps at 2") {
  // when count_k23_pairs is zero, any two vertices share at most 2 neighbors,
  // so the inclusion-exclusion terms the witness subtracts are at most 2 each
  for (uint64_t seed = 1; seed <= 30; ++seed) {
    Graph g = sample_gnp(RandomGraphSpec::gnp(30, 0.15, seed + 11));
    if (count_k23_pairs(g) != 0) continue;
    for (int u = 0; u < g.n(); ++u)
      for (int v = u + 1; v < g.n(); ++v) {
        int common = 0;
        for (int w : g.neighbors(u)) common += g.adjacent(v, w) && w != v;
        CHECK(common <= 2);
      }
  }
}

TEST_CASE("arrangeability_witness clears d^2/144 in the dense regime") {
  // one seed of the documented configuration; the batch runner covers more
  Graph g = sample_gnp(RandomGraphSpec::gnd(6000, 300.0, 1));
  std::vector<int> order(6000);
  for (int i = 0; i < 6000; ++i) order[static_cast<size_t>(i)] = i;
  CounterRng rng(1, 0xE8);
  rng.shuffle(order);
  long long w = arrangeability_witness(g, VertexOrdering::from_order(order));
  CHECK(w > 300 * 300 / 144);
}
