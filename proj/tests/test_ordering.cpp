#include "doctest.h"

#include <algorithm>

#include "oracles.hpp"
#include "ramsey/graph.hpp"
#include "ramsey/ordering.hpp"
#include "ramsey/random_graph.hpp"
#include "ramsey/rng.hpp"

using namespace ramsey;

namespace {

VertexOrdering shuffled(int n, uint64_t seed) {
  std::vector<int> order(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) order[static_cast<size_t>(i)] = i;
  CounterRng rng(seed, 1);
  rng.shuffle(order);
  return VertexOrdering::from_order(order);
}

}  // namespace

TEST_CASE("measure_certificate on K4: every ordering gives (3,1,3)") {
  Graph k4 = complete_graph(4);
  std::vector<int> order = {0, 1, 2, 3};
  do {
    auto cert = measure_certificate(k4, VertexOrdering::from_order(order));
    CHECK(cert.back_degree == 3);
    CHECK(cert.left_set_count == 1);
    CHECK(cert.arrangeability == 3);
  } while (std::next_permutation(order.begin(), order.end()));
}

TEST_CASE("measure_certificate on the star, center first") {
  Graph star = star_graph(3);
  auto cert = measure_certificate(star, VertexOrdering::identity(4));
  CHECK(cert.back_degree == 1);
  CHECK(cert.left_set_count == 1);
  CHECK(cert.arrangeability == 1);
}

TEST_CASE("certificate parameters are bounded by the max degree") {
  for (uint64_t seed = 1; seed <= 20; ++seed) {
    Graph g = sample_gnp(RandomGraphSpec::gnp(18, 0.35, seed));
    int maxdeg = 0;
    for (int v = 0; v < g.n(); ++v) maxdeg = std::max(maxdeg, g.degree(v));
    auto cert = measure_certificate(g, shuffled(g.n(), seed));
    CHECK(cert.back_degree <= maxdeg);
    CHECK(cert.left_set_count <= maxdeg);
  }
}

TEST_CASE("measure_certificate agrees with the definition oracle") {
  for (uint64_t seed = 1; seed <= 40; ++seed) {
    Graph g = sample_gnp(RandomGraphSpec::gnp(2 + seed % 11, 0.45, seed));
    VertexOrdering ord = shuffled(g.n(), seed + 100);
    auto cert = measure_certificate(g, ord);
    auto ora = oracles::measure(g, ord.order);
    CHECK(cert.back_degree == ora.back_degree);
    CHECK(cert.left_set_count == ora.left_set_count);
    CHECK(cert.arrangeability == ora.arrangeability);
  }
}

TEST_CASE("measure_certificate is isomorphism invariant") {
  for (uint64_t seed = 1; seed <= 20; ++seed) {
    Graph g = sample_gnp(RandomGraphSpec::gnp(12, 0.4, seed));
    VertexOrdering ord = shuffled(12, seed);
    // relabel by a random permutation pi and permute the ordering to match
    std::vector<int> pi(12);
    for (int i = 0; i < 12; ++i) pi[static_cast<size_t>(i)] = i;
    CounterRng rng(seed, 9);
    rng.shuffle(pi);
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v < 12; ++v)
      for (int u : g.neighbors(v))
        if (u > v) edges.emplace_back(pi[static_cast<size_t>(v)], pi[static_cast<size_t>(u)]);
    Graph gp = build_graph(12, edges);
    std::vector<int> order2(12);
    for (int i = 0; i < 12; ++i)
      order2[static_cast<size_t>(i)] = pi[static_cast<size_t>(ord.order[static_cast<size_t>(i)])];
    auto a = measure_certificate(g, ord);
    auto b = measure_certificate(gp, VertexOrdering::from_order(order2));
    CHECK(a.back_degree == b.back_degree);
    CHECK(a.left_set_count == b.left_set_count);
    CHECK(a.arrangeability == b.arrangeability);
  }
}

TEST_CASE("measure_certificate rejects a non-permutation") {
  Graph g = path_graph(3);
  CHECK_THROWS_AS(VertexOrdering::from_order({0, 0, 2}), std::invalid_argument);
  CHECK_THROWS_AS(measure_certificate(g, VertexOrdering::identity(4)), std::invalid_argument);
}

TEST_CASE("degeneracy_ordering on standard families") {
  CHECK(degeneracy_ordering(complete_graph(5)).second == 4);
  CHECK(degeneracy_ordering(path_graph(7)).second == 1);
  CHECK(degeneracy_ordering(star_graph(5)).second == 1);
  CHECK(degeneracy_ordering(cycle_graph(6)).second == 2);
  CHECK(degeneracy_ordering(build_graph(1, {})).second == 0);
}

TEST_CASE("degeneracy equals min-over-orderings back degree (exhaustive n<=5)") {
  for (int n = 1; n <= 5; ++n) {
    long long pairs = pair_count(n);
    for (uint64_t mask = 0; mask < (1ULL << pairs); ++mask) {
      Graph g = graph_from_mask(n, mask);
      auto [ord, d] = degeneracy_ordering(g);
      CHECK(d == oracles::min_back_degree(g));
      CHECK(measure_certificate(g, ord).back_degree == d);
    }
  }
}

TEST_CASE("peel_ordering on the five-cycle") {
  Graph c5 = cycle_graph(5);
  PeelResult res = peel_ordering(c5, 2, 2);
  REQUIRE(res.ok);
  auto cert = measure_certificate(c5, res.ordering);
  CHECK(cert.back_degree <= 2);
  CHECK(cert.left_set_count <= 3);
}

TEST_CASE("peel_ordering sticks on K4") {
  PeelResult res = peel_ordering(complete_graph(4), 2, 2);
  CHECK(!res.ok);
  CHECK(res.residual == VertexSet{0, 1, 2, 3});
}

TEST_CASE("peel_ordering on forests always fires the leaf rule") {
  for (uint64_t seed = 1; seed <= 10; ++seed) {
    // random tree via a random parent function
    CounterRng rng(seed, 0);
    int n = 2 + static_cast<int>(rng.below(20));
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v < n; ++v) edges.emplace_back(v, static_cast<int>(rng.below(static_cast<uint64_t>(v))));
    Graph tree = build_graph(n, edges);
    PeelResult res = peel_ordering(tree, 1, 1);
    CHECK(res.ok);
    auto cert = measure_certificate(tree, res.ordering);
    CHECK(cert.back_degree <= 1);
    CHECK(cert.left_set_count <= 2);
  }
}

TEST_CASE("a stuck peel leaves a residual with at least (9/8)|residual| edges") {
  for (uint64_t seed = 1; seed <= 300; ++seed) {
    CounterRng rng(seed, 3);
    int n = 4 + static_cast<int>(rng.below(20));
    Graph g = sample_gnp(RandomGraphSpec::gnp(n, 0.35, seed));
    PeelResult res = peel_ordering(g, 2, 2);
    if (res.ok) continue;
    long long e = 0;
    for (size_t i = 0; i < res.residual.size(); ++i)
      for (size_t j = i + 1; j < res.residual.size(); ++j)
        e += g.adjacent(res.residual[i], res.residual[j]);
    CHECK(8 * e >= 9 * static_cast<long long>(res.residual.size()));
  }
}

TEST_CASE("hereditary sparsity forces a successful (2,2) peel (exhaustive n<=6)") {
  for (int n = 1; n <= 6; ++n) {
    long long pairs = pair_count(n);
    for (uint64_t mask = 0; mask < (1ULL << pairs); ++mask) {
      Graph g = graph_from_mask(n, mask);
      if (!oracles::no_dense_small_subset(g, n)) continue;
      CHECK(peel_ordering(g, 2, 2).ok);
    }
  }
}

TEST_CASE("find_light_vertex") {
  Graph c5 = cycle_graph(5);
  auto w = find_light_vertex(c5);
  REQUIRE(w.has_value());
  CHECK(w->kind == LightVertexWitness::Kind::DegreeTwoBothNeighborsDegreeTwo);
  CHECK(w->check(c5));

  Graph tree = path_graph(6);
  auto leaf = find_light_vertex(tree);
  REQUIRE(leaf.has_value());
  CHECK(leaf->kind == LightVertexWitness::Kind::DegreeAtMostOne);
  CHECK(leaf->check(tree));

  CHECK(!find_light_vertex(complete_graph(4)).has_value());
}

TEST_CASE("light vertex exists whenever e < (9/8)n (exhaustive n<=5 here)") {
  for (int n = 1; n <= 5; ++n) {
    long long pairs = pair_count(n);
    for (uint64_t mask = 0; mask < (1ULL << pairs); ++mask) {
      Graph g = graph_from_mask(n, mask);
      if (8 * g.m() >= 9 * static_cast<long long>(n)) continue;
      auto w = find_light_vertex(g);
      REQUIRE(w.has_value());
      CHECK(w->check(g));
    }
  }
}

TEST_CASE("exact_min_arrangeability reference values") {
  CHECK(exact_min_arrangeability(complete_graph(4)) == 3);
  CHECK(exact_min_arrangeability(path_graph(4)) == 1);
  CHECK(exact_min_arrangeability(build_graph(5, {})) == 0);
  CHECK_THROWS_AS(exact_min_arrangeability(complete_graph(12), 10), std::invalid_argument);
}

TEST_CASE("exact_min_arrangeability matches the unpruned oracle (n<=5)") {
  for (uint64_t seed = 1; seed <= 60; ++seed) {
    CounterRng rng(seed, 0);
    int n = 1 + static_cast<int>(rng.below(5));
    Graph g = sample_gnp(RandomGraphSpec::gnp(n, 0.5, seed + 7000));
    CHECK(exact_min_arrangeability(g) == oracles::min_arrangeability(g));
  }
}

TEST_CASE("conversion bounds hold per ordering") {
  long long checked = 0;
  for (uint64_t seed = 1; seed <= 1000; ++seed) {
    CounterRng rng(seed, 4);
    int n = 1 + static_cast<int>(rng.below(24));
    Graph g = sample_gnp(RandomGraphSpec::gnp(n, rng.unit(), seed + 500));
    auto cert = measure_certificate(g, shuffled(n, seed));
    long long d = cert.back_degree, delta = cert.left_set_count, p = cert.arrangeability;
    if (d >= 1) CHECK(p <= delta * (d - 1) + 1);
    CHECK(d <= p);
    if (p == 0)
      CHECK(delta == 0);
    else
      CHECK(delta <= (1LL << std::min<long long>(p - 1, 62)));
    ++checked;
  }
  CHECK(checked == 1000);
}
