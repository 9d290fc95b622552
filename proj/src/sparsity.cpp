#include "ramsey/sparsity.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "ramsey/rng.hpp"

namespace ramsey {

namespace {

mpq_class mpq_pow(const mpq_class& base, long exp) {
  mpq_class r(1);
  for (long i = 0; i < exp; ++i) r *= base;
  return r;
}

}  // namespace

SparsityParams sparsity_transform(const SparsityParams& in, long h) {
  if (h < 1) throw std::invalid_argument("sparsity_transform: h must be >= 1");
  if (h > 30) throw std::invalid_argument("sparsity_transform: h too large");
  if (in.t != 2) throw std::invalid_argument("sparsity_transform: input t must be 2");
  mpq_class zero(0), one(1);
  if (in.rho <= zero || in.rho > one)
    throw std::invalid_argument("sparsity_transform: rho out of (0,1]");
  // alpha above 1 is tolerated (already-vacuous inputs still transform)
  if (in.alpha < zero) throw std::invalid_argument("sparsity_transform: alpha negative");
  if (in.epsilon < zero || in.epsilon > one)
    throw std::invalid_argument("sparsity_transform: epsilon out of [0,1]");
  SparsityParams out;
  out.alpha = mpq_pow(mpq_class(2) / in.rho, h - 1) * in.alpha;
  out.rho = mpq_pow(mpq_class(1, 2), h - 1) * mpq_pow(in.rho, h);
  out.epsilon = 4 * in.epsilon;
  out.t = 1L << h;
  out.vacuous = out.alpha > one;
  out.alpha.canonicalize();
  out.rho.canonicalize();
  out.epsilon.canonicalize();
  return out;
}

namespace {

// cross-edge count between assigned parts; edges inside a part do not count
long long cross_edges(const Graph& g, const std::vector<int>& assign_of,
                      const std::vector<int>& u_members) {
  long long e = 0;
  for (size_t i = 0; i < u_members.size(); ++i) {
    int a = assign_of[i];
    if (a < 0) continue;
    for (size_t j = i + 1; j < u_members.size(); ++j) {
      int b = assign_of[j];
      if (b < 0 || b == a) continue;
      e += g.adjacent(u_members[i], u_members[j]);
    }
  }
  return e;
}

// try to find t disjoint parts of the given size inside u with multi-density
// <= eps: greedy fill by ascending degree, then steepest-descent swaps
bool find_witness(const Graph& g, const std::vector<int>& u_members, long t, long long size,
                  const mpq_class& eps, int iters, std::vector<VertexSet>& parts_out) {
  size_t un = u_members.size();
  std::vector<int> deg_in_u(un, 0);
  for (size_t i = 0; i < un; ++i)
    for (size_t j = 0; j < un; ++j)
      if (i != j && g.adjacent(u_members[i], u_members[j])) ++deg_in_u[i];
  std::vector<size_t> order(un);
  for (size_t i = 0; i < un; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](size_t a, size_t b) { return deg_in_u[a] < deg_in_u[b]; });
  std::vector<int> assign_of(un, -1);
  std::vector<long long> fill(static_cast<size_t>(t), 0);
  for (size_t oi : order) {
    long long best_part = -1, best_cost = -1;
    for (long p = 0; p < t; ++p) {
      if (fill[static_cast<size_t>(p)] >= size) continue;
      long long cost = 0;
      for (size_t j = 0; j < un; ++j)
        if (assign_of[j] >= 0 && assign_of[j] != p && g.adjacent(u_members[oi], u_members[j]))
          ++cost;
      if (best_part < 0 || cost < best_cost) {
        best_part = p;
        best_cost = cost;
      }
    }
    if (best_part >= 0) {
      assign_of[oi] = static_cast<int>(best_part);
      ++fill[static_cast<size_t>(best_part)];
    }
  }
  long long pair_total = 0;
  for (long i = 0; i < t; ++i)
    for (long j = i + 1; j < t; ++j) pair_total += size * size;
  auto dense_ok = [&](long long e) {
    return mpq_class(static_cast<long>(e)) <= eps * mpq_class(static_cast<long>(pair_total));
  };
  long long cur = cross_edges(g, assign_of, u_members);
  for (int it = 0; it < iters && !dense_ok(cur); ++it) {
    long long best_delta = 0;
    size_t best_i = 0, best_j = 0;
    for (size_t i = 0; i < un; ++i) {
      if (assign_of[i] < 0) continue;
      for (size_t j = 0; j < un; ++j) {
        if (assign_of[j] == assign_of[i]) continue;
        // swap member i with member j (j may be unassigned)
        std::swap(assign_of[i], assign_of[j]);
        long long e = cross_edges(g, assign_of, u_members);
        std::swap(assign_of[i], assign_of[j]);
        if (e - cur < best_delta) {
          best_delta = e - cur;
          best_i = i;
          best_j = j;
        }
      }
    }
    if (best_delta >= 0) break;
    std::swap(assign_of[best_i], assign_of[best_j]);
    cur += best_delta;
  }
  if (!dense_ok(cur)) return false;
  parts_out.assign(static_cast<size_t>(t), {});
  for (size_t i = 0; i < un; ++i)
    if (assign_of[i] >= 0) parts_out[static_cast<size_t>(assign_of[i])].push_back(u_members[i]);
  for (auto& p : parts_out) std::sort(p.begin(), p.end());
  return true;
}

}  // namespace

SparseCheckResult check_sparse(const Graph& g, const SparsityParams& p, SparseCheckOptions opt) {
  if (p.t < 2) throw std::invalid_argument("check_sparse: t must be >= 2");
  SparseCheckResult res;
  long long n = g.n();
  auto u_qualifies = [&](long long usize) {
    return mpq_class(static_cast<long>(usize)) >= p.alpha * mpq_class(static_cast<long>(n));
  };
  auto part_size_for = [&](long long usize) {
    // ceil(rho * usize)
    mpz_class num = p.rho.get_num() * static_cast<long>(usize);
    mpz_class den = p.rho.get_den();
    mpz_class q = (num + den - 1) / den;
    return q.get_si();
  };
  auto inspect = [&](const std::vector<int>& members) -> bool {
    ++res.inspected;
    long long size = part_size_for(static_cast<long long>(members.size()));
    if (size == 0) return true;  // zero-size parts: vacuously fine
    if (size * p.t > static_cast<long long>(members.size())) {
      res.sparse = false;
      res.violating_u = members;
      return false;
    }
    std::vector<VertexSet> parts;
    if (!find_witness(g, members, p.t, size, p.epsilon, opt.local_search_iters, parts)) {
      res.sparse = false;
      res.violating_u = members;
      return false;
    }
    if (members.size() >= static_cast<size_t>(n) || res.witness_parts.empty())
      res.witness_parts = parts;
    return true;
  };
  if (n <= opt.exhaustive_cap) {
    res.exhaustive = true;
    for (uint64_t mask = 1; mask < (1ULL << n); ++mask) {
      int usize = std::popcount(mask);
      if (!u_qualifies(usize)) continue;
      std::vector<int> members;
      for (int v = 0; v < n; ++v)
        if ((mask >> v) & 1ULL) members.push_back(v);
      if (!inspect(members)) return res;
    }
    return res;
  }
  res.exhaustive = false;
  CounterRng rng(opt.seed, 0x5AAULL);
  long long min_size = 0;
  while (min_size <= n && !u_qualifies(min_size)) ++min_size;
  if (min_size > n) return res;  // no qualifying subsets at all
  std::vector<int> perm(static_cast<size_t>(n));
  for (long long s = 0; s < opt.samples; ++s) {
    long long usize = min_size + static_cast<long long>(rng.below(static_cast<uint64_t>(n - min_size + 1)));
    for (long long i = 0; i < n; ++i) perm[static_cast<size_t>(i)] = static_cast<int>(i);
    for (long long i = 0; i < usize; ++i) {
      long long j = i + static_cast<long long>(rng.below(static_cast<uint64_t>(n - i)));
      std::swap(perm[static_cast<size_t>(i)], perm[static_cast<size_t>(j)]);
    }
    std::vector<int> members(perm.begin(), perm.begin() + usize);
    std::sort(members.begin(), members.end());
    if (!inspect(members)) return res;
  }
  return res;
}

}  // namespace ramsey
