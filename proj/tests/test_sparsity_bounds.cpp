#include "doctest.h"

#include <gmpxx.h>

#include "oracles.hpp"
#include "ramsey/bounds.hpp"
#include "ramsey/graph.hpp"
#include "ramsey/random_graph.hpp"
#include "ramsey/rng.hpp"
#include "ramsey/sparsity.hpp"

using namespace ramsey;

TEST_CASE("sparsity_transform h=1 is the identity on alpha and rho") {
  SparsityParams p;
  p.alpha = mpq_class(3, 7);
  p.rho = mpq_class(1, 9);
  p.epsilon = mpq_class(1, 5);
  SparsityParams out = sparsity_transform(p, 1);
  CHECK(out.alpha == p.alpha);
  CHECK(out.rho == p.rho);
  CHECK(out.epsilon == 4 * p.epsilon);
  CHECK(out.t == 2);
  CHECK(!out.vacuous);
}

TEST_CASE("sparsity_transform h=2 worked example") {
  SparsityParams p;
  p.alpha = mpq_class(1, 10);
  p.rho = mpq_class(1, 100);
  p.epsilon = mpq_class(1, 50);
  SparsityParams out = sparsity_transform(p, 2);
  // (2/rho)^(h-1) alpha = 200 * 1/10 = 20, far beyond 1: vacuous
  CHECK(out.alpha == mpq_class(20));
  CHECK(out.vacuous);
  CHECK(out.rho == mpq_class(1, 2) * mpq_class(1, 10000));
  CHECK(out.epsilon == mpq_class(2, 25));
  CHECK(out.t == 4);
}

TEST_CASE("sparsity_transform rejections") {
  SparsityParams p;
  p.alpha = mpq_class(1, 2);
  p.rho = mpq_class(2);  // out of range
  p.epsilon = mpq_class(0);
  CHECK_THROWS_AS(sparsity_transform(p, 1), std::invalid_argument);
  p.rho = mpq_class(1, 2);
  CHECK_THROWS_AS(sparsity_transform(p, 0), std::invalid_argument);
  p.t = 4;
  CHECK_THROWS_AS(sparsity_transform(p, 1), std::invalid_argument);
}

TEST_CASE("sparsity_transform composition equals a single transform with h1*h2") {
  CounterRng rng(13, 0);
  for (int trial = 0; trial < 1000; ++trial) {
    SparsityParams p;
    p.alpha = mpq_class(static_cast<long>(rng.below(50)), static_cast<long>(1 + rng.below(50) + 50));
    p.rho = mpq_class(static_cast<long>(1 + rng.below(40)), static_cast<long>(41 + rng.below(60)));
    p.epsilon = mpq_class(static_cast<long>(rng.below(30)), static_cast<long>(1000));
    p.alpha.canonicalize();
    p.rho.canonicalize();
    p.epsilon.canonicalize();
    long h1 = 1 + static_cast<long>(rng.below(4));
    long h2 = 1 + static_cast<long>(rng.below(4));
    SparsityParams once = sparsity_transform(p, h1);
    once.t = 2;  // re-enter the transform's domain
    once.epsilon = p.epsilon;
    SparsityParams twice = sparsity_transform(once, h2);
    SparsityParams direct = sparsity_transform(p, h1 * h2);
    CHECK(twice.alpha == direct.alpha);
    CHECK(twice.rho == direct.rho);
  }
}

TEST_CASE("check_sparse on the empty graph") {
  Graph g = build_graph(8, {});
  SparsityParams p;
  p.alpha = mpq_class(1, 2);
  p.rho = mpq_class(1, 4);
  p.epsilon = mpq_class(0);
  p.t = 2;
  SparseCheckResult res = check_sparse(g, p);
  CHECK(res.sparse);
  CHECK(res.exhaustive);
  CHECK(res.inspected > 0);
}

TEST_CASE("check_sparse rejects the complete graph at small epsilon") {
  Graph g = complete_graph(8);
  SparsityParams p;
  p.alpha = mpq_class(1);
  p.rho = mpq_class(1, 4);
  p.epsilon = mpq_class(1, 2);
  p.t = 2;
  SparseCheckResult res = check_sparse(g, p);
  CHECK(!res.sparse);
  REQUIRE(res.violating_u.has_value());
  CHECK(res.violating_u->size() == 8);
}

TEST_CASE("check_sparse finds the eight-cycle witness") {
  Graph g = cycle_graph(8);
  SparsityParams p;
  p.alpha = mpq_class(1);
  p.rho = mpq_class(1, 4);
  p.epsilon = mpq_class(0);
  p.t = 2;
  SparseCheckResult res = check_sparse(g, p);
  CHECK(res.sparse);
  REQUIRE(res.witness_parts.size() == 2);
  CHECK(res.witness_parts[0].size() == 2);
  CHECK(oracles::multi_density_value(g, res.witness_parts) == 0);
}

TEST_CASE("check_sparse sampled mode on a larger host") {
  Graph g = sample_gnp(RandomGraphSpec::gnp(40, 0.05, 3));
  SparsityParams p;
  p.alpha = mpq_class(1, 2);
  p.rho = mpq_class(1, 10);
  p.epsilon = mpq_class(1, 4);
  p.t = 2;
  SparseCheckOptions opt;
  opt.samples = 100;
  opt.seed = 5;
  SparseCheckResult res = check_sparse(g, p, opt);
  CHECK(!res.exhaustive);
  CHECK(res.inspected == 100);
}

TEST_CASE("grr bound reference values") {
  CHECK(ramsey_bound_grr(2, 2, 2, 1) == mpz_class(1) << 31);
  CHECK(ramsey_bound_grr(2, 2, 2, 5) == (mpz_class(1) << 31) * 5);
  CHECK(ramsey_bound_grr(1, 1, 2, 1) == mpz_class(1) << 15);
  CHECK(ramsey_bound_grr(3, 7, 1, 42) == 42);  // log 1 = 0
  // exact power-of-two exponent: q = 4 squares the base
  mpz_class base = (mpz_class(1) << 22) * mpz_class(256) * 2;  // 2^(7d+8) d^(3d+2) Delta at d=2
  CHECK(ramsey_bound_grr(2, 2, 4, 1) == base * base);
}

TEST_CASE("grr bound with non-power-of-two q is sandwiched by powers") {
  mpz_class lo = ramsey_bound_grr(2, 2, 2, 1000);
  mpz_class mid = ramsey_bound_grr(2, 2, 3, 1000);
  mpz_class hi = ramsey_bound_grr(2, 2, 4, 1000);
  CHECK(lo < mid);
  CHECK(mid < hi);
}

TEST_CASE("general bound default instantiation") {
  // q=2, d=1, delta=1, Delta=2: 2^450 * 2^4 * n
  CHECK(ramsey_bound_general(1, 2, 2, 1, mpq_class(1)) == mpz_class(1) << 454);
  CHECK(ramsey_bound_general(1, 2, 2, 3, mpq_class(1)) == (mpz_class(1) << 454) * 3);
  CHECK_THROWS_AS(ramsey_bound_general(1, 2, 2, 1, mpq_class(0)), std::invalid_argument);
  CHECK_THROWS_AS(ramsey_bound_general(1, 2, 2, 1, mpq_class(3, 2)), std::invalid_argument);
}

TEST_CASE("general bound is strictly monotone in d") {
  mpq_class delta(1, 2);
  mpz_class prev = 0;
  for (long d = 1; d <= 4; ++d) {
    mpz_class cur = ramsey_bound_general(d, 3, 2, 7, delta);
    CHECK(cur > prev);
    prev = cur;
  }
}

TEST_CASE("sqrt-log specialization") {
  CHECK_THROWS_AS(ramsey_bound_sqrt_log(1, 1, 2, 1), std::invalid_argument);
  // Delta = 2 gives delta = 1, which matches the general form exactly
  CHECK(ramsey_bound_sqrt_log(1, 2, 2, 1) == ramsey_bound_general(1, 2, 2, 1, mpq_class(1)));
  CHECK(ramsey_bound_sqrt_log(1, 16, 2, 1) > 0);
}
