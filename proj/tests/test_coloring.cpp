#include "doctest.h"

#include "oracles.hpp"
#include "ramsey/coloring.hpp"
#include "ramsey/graph.hpp"
#include "ramsey/ramsey_search.hpp"

using namespace ramsey;

namespace {

// red = pentagon 0-1-2-3-4-0, blue = pentagram
TwoColoring pentagon_coloring() {
  TwoColoring col(5);
  for (int i = 0; i < 5; ++i) col.set(i, (i + 1) % 5, EdgeColor::Red);
  return col;
}

}  // namespace

TEST_CASE("two-coloring serialization round trip") {
  for (uint64_t seed = 1; seed <= 10; ++seed) {
    TwoColoring col = TwoColoring::random(6, seed);
    CHECK(TwoColoring::parse(col.serialize()) == col);
  }
  TwoColoring tiny(1);
  CHECK(TwoColoring::parse(tiny.serialize()) == tiny);
}

TEST_CASE("find_mono_copy basics") {
  TwoColoring red6 = TwoColoring::all(6, EdgeColor::Red);
  auto hit = find_mono_copy(red6, complete_graph(3));
  REQUIRE(hit.has_value());
  CHECK(hit->color == EdgeColor::Red);
  CHECK(oracles::embedding_valid(hit->embedding));

  CHECK(!find_mono_copy(pentagon_coloring(), complete_graph(3)).has_value());

  Graph one = build_graph(1, {});
  CHECK(find_mono_copy(TwoColoring::all(1, EdgeColor::Blue), one).has_value());
}

TEST_CASE("find_mono_copy restricted to one color") {
  TwoColoring col(4);
  col.set(0, 1, EdgeColor::Red);
  col.set(1, 2, EdgeColor::Red);
  Graph p3 = path_graph(3);
  CHECK(find_mono_copy(col, p3, EdgeColor::Red).has_value());
  auto blue = find_mono_copy(col, p3, EdgeColor::Blue);
  REQUIRE(blue.has_value());  // the four remaining blue edges contain a path
  CHECK(blue->color == EdgeColor::Blue);
}

TEST_CASE("color swap leaves mono-copy existence unchanged") {
  Graph p4 = path_graph(4);
  for (uint64_t seed = 1; seed <= 40; ++seed) {
    TwoColoring col = TwoColoring::random(6, seed);
    CHECK(find_mono_copy(col, p4).has_value() ==
          find_mono_copy(col.swapped(), p4).has_value());
  }
}

TEST_CASE("ramsey_exact reference values") {
  auto k2 = ramsey_exact(complete_graph(2), 4);
  REQUIRE(k2.known);
  CHECK(k2.result.value == 2);

  auto p4 = ramsey_exact(path_graph(4), 8);
  REQUIRE(p4.known);
  CHECK(p4.result.value == 5);
  CHECK(p4.result.lower_witness.n == 4);
  CHECK(!oracles::contains_mono_any(p4.result.lower_witness, path_graph(4)));

  auto k3 = ramsey_exact(complete_graph(3), 8);
  REQUIRE(k3.known);
  CHECK(k3.result.value == 6);
  CHECK(k3.result.lower_witness.n == 5);
  CHECK(!oracles::contains_mono_any(k3.result.lower_witness, complete_graph(3)));
}

TEST_CASE("ramsey_exact returns unknown at the cap") {
  auto k4 = ramsey_exact(complete_graph(4), 6);
  CHECK(!k4.known);
  CHECK(k4.n_max == 6);
}

TEST_CASE("ramsey_exact agrees with the unpruned sweep on small patterns") {
  std::vector<Graph> patterns = {path_graph(3), path_graph(4), cycle_graph(4), star_graph(3),
                                 complete_graph(3), build_graph(4, {{0, 1}, {2, 3}})};
  for (const Graph& h : patterns) {
    int brute = oracles::ramsey_number(h, 6);
    auto res = ramsey_exact(h, 6);
    if (brute == 0) {
      CHECK(!res.known);
    } else {
      REQUIRE(res.known);
      CHECK(res.result.value == brute);
      CHECK(!oracles::contains_mono_any(res.result.lower_witness, h));
    }
  }
}

TEST_CASE("canonical pruning and threads do not change values") {
  RamseyOptions canon;
  canon.canonical_pruning = true;
  auto a = ramsey_exact(complete_graph(3), 7, canon);
  REQUIRE(a.known);
  CHECK(a.result.value == 6);
  CHECK(a.result.stats.isomorph_prunes > 0);

  RamseyOptions par;
  par.threads = 2;
  auto b = ramsey_exact(path_graph(4), 7, par);
  REQUIRE(b.known);
  CHECK(b.result.value == 5);

  auto c = ramsey_exact(cycle_graph(4), 7, canon);
  auto d = ramsey_exact(cycle_graph(4), 7);
  REQUIRE(c.known);
  REQUIRE(d.known);
  CHECK(c.result.value == d.result.value);
}

TEST_CASE("ramsey_lower_search") {
  auto found = ramsey_lower_search(complete_graph(3), 5, 5, 77);
  REQUIRE(found.has_value());
  CHECK(!oracles::contains_mono_any(*found, complete_graph(3)));

  CHECK(!ramsey_lower_search(complete_graph(2), 2, 3, 1).has_value());
  // r(K3) = 6: no avoiding coloring of K6 exists under any budget
  CHECK(!ramsey_lower_search(complete_graph(3), 6, 3, 5, 200).has_value());
}

TEST_CASE("edgeless and oversized patterns") {
  Graph e3 = build_graph(3, {});
  auto res = ramsey_exact(e3, 5);
  REQUIRE(res.known);
  CHECK(res.result.value == 3);  // fits exactly when the host reaches 3 vertices
  CHECK(!ramsey_lower_search(e3, 3, 2, 1).has_value());
  CHECK(ramsey_lower_search(e3, 2, 2, 1).has_value());
}
