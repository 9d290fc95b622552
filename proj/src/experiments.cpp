#include "ramsey/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <stdexcept>
#include <thread>

#include "json.hpp"
#include "ramsey/graph.hpp"
#include "ramsey/ordering.hpp"
#include "ramsey/random_graph.hpp"
#include "ramsey/embedding.hpp"
#include "ramsey/rng.hpp"

namespace ramsey {

namespace {

using RunFn = std::function<SeedRecord(const ExperimentConfig&, uint64_t)>;

struct VerifySpec {
  std::string description;
  ExperimentConfig defaults;
  RunFn run;
};

std::vector<uint64_t> seed_range(uint64_t lo, uint64_t hi) {
  std::vector<uint64_t> s;
  for (uint64_t v = lo; v <= hi; ++v) s.push_back(v);
  return s;
}

VertexOrdering random_ordering(int n, uint64_t seed, uint64_t stream) {
  std::vector<int> order(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) order[static_cast<size_t>(i)] = i;
  CounterRng rng(seed, stream);
  rng.shuffle(order);
  return VertexOrdering::from_order(std::move(order));
}

SeedRecord run_first1(const ExperimentConfig& cfg, uint64_t seed) {
  long long d = static_cast<long long>(cfg.d);
  Graph g = sample_gnp(RandomGraphSpec::gnd(cfg.n, cfg.d, seed));
  long long cnt = count_high_degree(g, 16 * d);
  double bound = std::pow(2.0, 4.0 - 8.0 * static_cast<double>(d)) * static_cast<double>(cfg.n);
  SeedRecord rec;
  rec.seed = seed;
  rec.statistic = static_cast<double>(cnt);
  rec.pass = static_cast<double>(cnt) <= bound;
  rec.detail = "high-degree count vs 2^(4-8d) n = " + std::to_string(bound);
  return rec;
}

SeedRecord run_second2(const ExperimentConfig& cfg, uint64_t seed) {
  Graph g = sample_gnp(RandomGraphSpec::gnd(cfg.n, cfg.d, seed));
  long long k = cfg.set_size;
  std::vector<int> perm(static_cast<size_t>(cfg.n));
  for (long long i = 0; i < cfg.n; ++i) perm[static_cast<size_t>(i)] = static_cast<int>(i);
  CounterRng rng(seed, 0x5e7);
  for (long long i = 0; i < k; ++i) {
    long long j = i + static_cast<long long>(rng.below(static_cast<uint64_t>(cfg.n - i)));
    std::swap(perm[static_cast<size_t>(i)], perm[static_cast<size_t>(j)]);
  }
  VertexSet s(perm.begin(), perm.begin() + k);
  std::sort(s.begin(), s.end());
  ClosureResult cl = two_neighbor_closure(g, s);
  SeedRecord rec;
  rec.seed = seed;
  rec.statistic = cl.growth_ratio;
  rec.pass = static_cast<long long>(cl.closure.size()) <= 4 * k;
  rec.detail = "|F(S)| = " + std::to_string(cl.closure.size());
  return rec;
}

SeedRecord run_third3(const ExperimentConfig& cfg, uint64_t seed) {
  SeedRecord rec;
  rec.seed = seed;
  long long checked = 0, eligible = 0, failures = 0;
  int cap = cfg.n_max > 0 ? cfg.n_max : 6;
  for (int k = 1; k <= cap; ++k) {
    uint64_t masks = 1ULL << pair_count(k);
    for (uint64_t mask = 0; mask < masks; ++mask) {
      Graph g = graph_from_mask(k, mask);
      ++checked;
      if (8 * g.m() >= 9 * static_cast<long long>(k)) continue;  // e < (9/8) n only
      ++eligible;
      auto w = find_light_vertex(g);
      if (!w.has_value() || !w->check(g)) ++failures;
    }
  }
  rec.statistic = static_cast<double>(eligible);
  rec.pass = failures == 0;
  rec.detail = std::to_string(checked) + " graphs, " + std::to_string(eligible) +
               " eligible, " + std::to_string(failures) + " failures";
  return rec;
}

SeedRecord run_fourth4(const ExperimentConfig& cfg, uint64_t seed) {
  SeedRecord rec;
  rec.seed = seed;
  long long successes = 0, violations = 0;
  for (long long trial = 0; trial < cfg.trials; ++trial) {
    CounterRng rng(seed, static_cast<uint64_t>(trial));
    int n = 5 + static_cast<int>(rng.below(36));  // 5..40
    double p = rng.unit() * 0.15;
    int s = 1 + static_cast<int>(rng.below(3));
    int r = 1 + static_cast<int>(rng.below(3));
    Graph g = sample_gnp(RandomGraphSpec::gnp(n, p, counter_hash(seed, static_cast<uint64_t>(trial), 1)));
    PeelResult peel = peel_ordering(g, s, r);
    if (!peel.ok) continue;
    ++successes;
    SparsenessCertificate cert = measure_certificate(g, peel.ordering);
    if (cert.back_degree > s || cert.left_set_count > r + 1) ++violations;
  }
  rec.statistic = static_cast<double>(successes);
  rec.pass = violations == 0;
  rec.detail = std::to_string(successes) + " successful peels, " + std::to_string(violations) +
               " certificate violations";
  return rec;
}

SeedRecord run_fifth5(const ExperimentConfig& cfg, uint64_t seed) {
  Graph g = sample_gnp(RandomGraphSpec::gnd(cfg.n, cfg.d, seed));
  PropertyReport rep = check_small_subgraph_density(g, cfg.size_cap);
  SeedRecord rec;
  rec.seed = seed;
  rec.statistic = static_cast<double>(rep.samples);
  rec.pass = rep.pass;
  if (!rep.pass && !rep.witness.empty())
    rec.detail = "violating subset of size " + std::to_string(rep.witness.size());
  return rec;
}

SeedRecord run_six6(const ExperimentConfig& cfg, uint64_t seed) {
  Graph g = sample_gnp(RandomGraphSpec::gnd(cfg.n, cfg.d, seed));
  double p = cfg.d / static_cast<double>(cfg.n);
  PropertyReport rep = check_density_between_large_sets(g, Ratio(1, 6), p, cfg.trials,
                                                        counter_hash(seed, 6, 6));
  SeedRecord rec;
  rec.seed = seed;
  rec.statistic = rep.statistic;
  rec.pass = rep.pass;
  rec.detail = "min e(A,B)/(p|A||B|) over " + std::to_string(cfg.trials) + " sampled pairs";
  return rec;
}

SeedRecord run_seven7(const ExperimentConfig& cfg, uint64_t seed) {
  Graph g = sample_gnp(RandomGraphSpec::gnd(cfg.n, cfg.d, seed));
  long long pairs = count_k23_pairs(g);
  SeedRecord rec;
  rec.seed = seed;
  rec.statistic = static_cast<double>(pairs);
  rec.pass = pairs == 0;
  rec.detail = "pairs with >= 3 common neighbors";
  return rec;
}

SeedRecord run_eight8(const ExperimentConfig& cfg, uint64_t seed) {
  Graph g = sample_gnp(RandomGraphSpec::gnd(cfg.n, cfg.d, seed));
  VertexOrdering ord = random_ordering(g.n(), seed, 0xE8);
  long long w = arrangeability_witness(g, ord);
  double floor_bound = cfg.d * cfg.d / 144.0;
  SeedRecord rec;
  rec.seed = seed;
  rec.statistic = static_cast<double>(w);
  rec.pass = static_cast<double>(w) > floor_bound;
  rec.detail = "witness vs d^2/144 = " + std::to_string(floor_bound);
  return rec;
}

SeedRecord run_cool(const ExperimentConfig& cfg, uint64_t seed) {
  long long d = static_cast<long long>(cfg.d);
  Graph g = sample_gnp(RandomGraphSpec::gnd(cfg.n, cfg.d, seed));
  CoolOrderingResult res = high_degree_closure_ordering(g, d);
  SeedRecord rec;
  rec.seed = seed;
  rec.statistic = static_cast<double>(
      std::max(res.certificate.back_degree, res.certificate.left_set_count));
  rec.pass = res.certificate.back_degree <= 16 * d && res.certificate.left_set_count <= 16 * d &&
             !res.peel_stuck;
  rec.detail = "d'=" + std::to_string(res.certificate.back_degree) +
               " delta'=" + std::to_string(res.certificate.left_set_count) +
               (res.peel_stuck ? " (peel stuck)" : "");
  return rec;
}

SeedRecord run_drc_expectation(const ExperimentConfig& cfg, uint64_t seed) {
  Graph g = sample_gnp(RandomGraphSpec::bipartite_gnp(cfg.n, cfg.p, seed));
  DrcParams params;
  params.t = cfg.t;
  params.x = cfg.x;
  params.trials = static_cast<int>(cfg.trials);
  DrcResult res = dependent_random_choice(g, params, counter_hash(seed, 0xD, 0xC));
  double expected = std::pow(res.epsilon, 2 * cfg.t) * static_cast<double>(cfg.n);
  SeedRecord rec;
  rec.seed = seed;
  rec.statistic = res.mean_a_size / expected;
  rec.pass = res.mean_a_size >= 0.9 * expected;
  rec.detail = "mean |A| = " + std::to_string(res.mean_a_size) + ", eps^2t N = " +
               std::to_string(expected);
  return rec;
}

SeedRecord run_conversions(const ExperimentConfig& cfg, uint64_t seed) {
  SeedRecord rec;
  rec.seed = seed;
  long long violations = 0;
  for (long long trial = 0; trial < cfg.trials; ++trial) {
    CounterRng rng(seed, static_cast<uint64_t>(trial));
    int n = 1 + static_cast<int>(rng.below(40));
    double p = rng.unit();
    Graph g = sample_gnp(RandomGraphSpec::gnp(n, p, counter_hash(seed, static_cast<uint64_t>(trial), 2)));
    VertexOrdering ord = random_ordering(n, seed, 0xC0 + static_cast<uint64_t>(trial));
    SparsenessCertificate c = measure_certificate(g, ord);
    long long dd = c.back_degree, delta = c.left_set_count, pp = c.arrangeability;
    if (dd >= 1 && pp > delta * (dd - 1) + 1) ++violations;
    if (dd > pp) ++violations;
    if (pp == 0 ? delta != 0 : delta > (1LL << std::min<long long>(pp - 1, 62))) ++violations;
  }
  rec.statistic = static_cast<double>(cfg.trials);
  rec.pass = violations == 0;
  rec.detail = std::to_string(violations) + " conversion-bound violations";
  return rec;
}

const std::map<std::string, VerifySpec>& registry() {
  static const std::map<std::string, VerifySpec> reg = [] {
    std::map<std::string, VerifySpec> r;
    auto base = [](const std::string& id) {
      ExperimentConfig c;
      c.id = id;
      return c;
    };
    {
      ExperimentConfig c = base("first1");
      c.n = 100000;
      c.d = 10;
      c.seeds = seed_range(1, 20);
      c.threshold = 0.95;
      r["first1"] = {"count of degree > 16d vertices in G(n,d/n) stays under 2^(4-8d) n",
                     c, run_first1};
    }
    {
      ExperimentConfig c = base("second2");
      c.n = 100000;
      c.d = 10;
      c.set_size = 50;
      c.seeds = seed_range(1, 20);
      c.threshold = 0.95;
      r["second2"] = {"two-neighbor closure of a random 50-set grows at most 4x", c, run_second2};
    }
    {
      ExperimentConfig c = base("third3");
      c.n_max = 6;
      c.exhaustive = true;
      c.seeds = {0};
      c.threshold = 1.0;
      r["third3"] = {"every graph with e < (9/8)n has a light-vertex witness (exhaustive n <= 6)",
                     c, run_third3};
    }
    {
      ExperimentConfig c = base("fourth4");
      c.trials = 500;
      c.seeds = seed_range(1, 20);
      c.threshold = 1.0;
      r["fourth4"] = {"successful (s,r) peels certify d <= s and Delta <= r+1", c, run_fourth4};
    }
    {
      ExperimentConfig c = base("fifth5");
      c.n = 2000;
      c.d = 2;
      c.size_cap = 8;
      c.seeds = seed_range(1, 20);
      c.threshold = 0.9;
      r["fifth5"] = {"no small subset of G(n,d/n) spans >= (9/8)t edges (exact enumeration)",
                     c, run_fifth5};
    }
    {
      ExperimentConfig c = base("six6");
      c.n = 6000;
      c.d = 300;
      c.trials = 1000;
      c.seeds = seed_range(1, 10);
      c.threshold = 1.0;
      r["six6"] = {"sampled large disjoint pairs have >= p|A||B|/2 edges between them", c, run_six6};
    }
    {
      ExperimentConfig c = base("seven7");
      c.n = 1000000;
      c.d = 5;
      c.seeds = seed_range(1, 20);
      c.threshold = 0.9;
      r["seven7"] = {"no pair of vertices of G(n,d/n) has three common neighbors", c, run_seven7};
    }
    {
      ExperimentConfig c = base("eight8");
      c.n = 6000;
      c.d = 300;
      c.seeds = seed_range(1, 10);
      c.threshold = 1.0;
      r["eight8"] = {"inclusion-exclusion witness exceeds d^2/144 on random orderings", c,
                     run_eight8};
    }
    {
      ExperimentConfig c = base("cool");
      c.n = 30000;
      c.d = 10;
      c.seeds = seed_range(1, 20);
      c.threshold = 0.9;
      r["cool"] = {"high-degree-closure ordering certifies d' <= 16d and Delta' <= 16d", c,
                   run_cool};
    }
    {
      ExperimentConfig c = base("drc-expectation");
      c.n = 500;
      c.p = 0.5;
      c.t = 1;
      c.x = 50;
      c.trials = 200;
      c.seeds = seed_range(1, 5);
      c.threshold = 1.0;
      r["drc-expectation"] = {"per-trial mean |N(T)| reaches 0.9 eps^(2t) N", c,
                              run_drc_expectation};
    }
    {
      ExperimentConfig c = base("conversions");
      c.trials = 500;
      c.seeds = seed_range(1, 20);
      c.threshold = 1.0;
      r["conversions"] = {"per-ordering conversion bounds p <= Delta(d-1)+1, d <= p, Delta <= 2^(p-1)",
                          c, run_conversions};
    }
    return r;
  }();
  return reg;
}

std::string known_ids_message() {
  std::string msg = "known verify ids:";
  for (const auto& [id, spec] : registry()) msg += " " + id;
  return msg;
}

ExperimentConfig merge_defaults(const ExperimentConfig& cfg) {
  auto it = registry().find(cfg.id);
  if (it == registry().end())
    throw std::invalid_argument("unknown experiment id '" + cfg.id + "'; " + known_ids_message());
  ExperimentConfig out = it->second.defaults;
  if (cfg.n >= 0) out.n = cfg.n;
  if (cfg.d >= 0) out.d = cfg.d;
  if (cfg.p >= 0) out.p = cfg.p;
  if (cfg.q >= 0) out.q = cfg.q;
  if (cfg.t >= 0) out.t = cfg.t;
  if (cfg.x >= 0) out.x = cfg.x;
  if (cfg.trials >= 0) out.trials = cfg.trials;
  if (cfg.set_size >= 0) out.set_size = cfg.set_size;
  if (cfg.size_cap >= 0) out.size_cap = cfg.size_cap;
  if (cfg.n_max >= 0) out.n_max = cfg.n_max;
  if (cfg.threshold >= 0) out.threshold = cfg.threshold;
  if (cfg.exhaustive) out.exhaustive = true;
  if (cfg.seeds_set) out.seeds = cfg.seeds;
  if (!cfg.out.empty()) out.out = cfg.out;
  if (!cfg.format.empty()) out.format = cfg.format;
  return out;
}

nlohmann::json config_to_json(const ExperimentConfig& c) {
  nlohmann::json j;
  j["id"] = c.id;
  j["n"] = c.n;
  j["d"] = c.d;
  j["p"] = c.p;
  j["q"] = c.q;
  j["t"] = c.t;
  j["x"] = c.x;
  j["trials"] = c.trials;
  j["set_size"] = c.set_size;
  j["size_cap"] = c.size_cap;
  j["n_max"] = c.n_max;
  j["threshold"] = c.threshold;
  j["exhaustive"] = c.exhaustive;
  j["seeds"] = c.seeds;
  j["format"] = c.format;
  if (!c.out.empty()) j["out"] = c.out;
  return j;
}

}  // namespace

const std::vector<std::string>& verify_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> v;
    for (const auto& [id, spec] : registry()) v.push_back(id);
    return v;
  }();
  return ids;
}

bool is_verify_id(const std::string& id) { return registry().count(id) > 0; }

ExperimentConfig default_config(const std::string& id) {
  auto it = registry().find(id);
  if (it == registry().end())
    throw std::invalid_argument("unknown experiment id '" + id + "'; " + known_ids_message());
  return it->second.defaults;
}

std::string describe_experiment(const std::string& id) {
  auto it = registry().find(id);
  if (it == registry().end())
    throw std::invalid_argument("unknown experiment id '" + id + "'; " + known_ids_message());
  return it->second.description;
}

int default_parallelism() {
  const char* env = std::getenv("RAMSEY_THREADS");
  if (!env) return 1;
  int v = std::atoi(env);
  return v >= 1 ? v : 1;
}

RunReport batch_run(const ExperimentConfig& cfg) {
  auto start = std::chrono::steady_clock::now();
  ExperimentConfig resolved = merge_defaults(cfg);
  const RunFn& run = registry().at(resolved.id).run;
  RunReport report;
  report.config = resolved;
  report.records.resize(resolved.seeds.size());
  int par = std::min<int>(default_parallelism(), static_cast<int>(resolved.seeds.size()));
  if (par <= 1) {
    for (size_t i = 0; i < resolved.seeds.size(); ++i)
      report.records[i] = run(resolved, resolved.seeds[i]);
  } else {
    std::atomic<size_t> next{0};
    std::vector<std::thread> workers;
    for (int w = 0; w < par; ++w)
      workers.emplace_back([&] {
        while (true) {
          size_t i = next.fetch_add(1);
          if (i >= resolved.seeds.size()) return;
          report.records[i] = run(resolved, resolved.seeds[i]);
        }
      });
    for (auto& t : workers) t.join();
  }
  if (!report.records.empty()) {
    long long passes = 0;
    for (const auto& r : report.records) passes += r.pass;
    report.pass_fraction = static_cast<double>(passes) / static_cast<double>(report.records.size());
    report.pass_fraction_defined = true;
    report.pass = report.pass_fraction >= resolved.threshold;
  }
  report.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (!resolved.out.empty()) write_report_atomic(report, resolved.out);
  return report;
}

std::string report_to_json(const RunReport& r) {
  nlohmann::json j;
  j["config"] = config_to_json(r.config);
  auto records = nlohmann::json::array();
  for (const auto& rec : r.records) {
    nlohmann::json jr;
    jr["seed"] = rec.seed;
    jr["statistic"] = rec.statistic;
    jr["pass"] = rec.pass;
    if (!rec.detail.empty()) jr["detail"] = rec.detail;
    records.push_back(jr);
  }
  j["records"] = records;
  j["pass_fraction_defined"] = r.pass_fraction_defined;
  if (r.pass_fraction_defined) j["pass_fraction"] = r.pass_fraction;
  j["pass"] = r.pass;
  j["wall_seconds"] = r.wall_seconds;
  j["version"] = r.version;
  return j.dump(2);
}

// frozen column order; JSON is the source of truth
std::string report_to_csv(const RunReport& r) {
  std::string out = "lemma_id,n,d,seed,statistic,pass\n";
  for (const auto& rec : r.records) {
    out += r.config.id + "," + std::to_string(r.config.n) + "," + std::to_string(r.config.d) +
           "," + std::to_string(rec.seed) + "," + std::to_string(rec.statistic) + "," +
           (rec.pass ? "1" : "0") + "\n";
  }
  return out;
}

void write_report_atomic(const RunReport& r, const std::string& path) {
  std::string payload = r.config.format == "csv" ? report_to_csv(r) : report_to_json(r);
  std::filesystem::path target(path);
  std::filesystem::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write report to " + tmp.string());
    out << payload;
  }
  std::filesystem::rename(tmp, target);
}

}  // namespace ramsey
