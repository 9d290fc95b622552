#ifndef RAMSEY_EXPERIMENTS_HPP
#define RAMSEY_EXPERIMENTS_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace ramsey {

inline constexpr const char* kToolVersion = "0.1.0";

// Negative numeric fields mean "use the experiment's documented default".
struct ExperimentConfig {
  std::string id;
  long long n = -1;
  double d = -1.0;
  double p = -1.0;
  int q = -1;
  int t = -1;
  long long x = -1;
  long long trials = -1;
  long long set_size = -1;
  int size_cap = -1;
  int n_max = -1;
  double threshold = -1.0;
  bool exhaustive = false;
  bool seeds_set = false;  // when true, `seeds` overrides the defaults (even if empty)
  std::vector<uint64_t> seeds;
  std::string out;
  std::string format = "json";
};

struct SeedRecord {
  uint64_t seed = 0;
  double statistic = 0.0;
  bool pass = false;
  std::string detail;
};

struct RunReport {
  ExperimentConfig config;
  std::vector<SeedRecord> records;
  double pass_fraction = 0.0;
  bool pass_fraction_defined = false;
  bool pass = false;
  double wall_seconds = 0.0;
  std::string version = kToolVersion;
};

const std::vector<std::string>& verify_ids();
bool is_verify_id(const std::string& id);

// Fully-populated defaults for a verify id; throws (listing the known ids) on
// an unknown one.
ExperimentConfig default_config(const std::string& id);
std::string describe_experiment(const std::string& id);

// Runs the experiment over its seeds (parallel when RAMSEY_THREADS allows),
// aggregates deterministically in seed order, and writes the report
// atomically when config.out is set.
RunReport batch_run(const ExperimentConfig& cfg);

std::string report_to_json(const RunReport& r);
std::string report_to_csv(const RunReport& r);
void write_report_atomic(const RunReport& r, const std::string& path);

// RAMSEY_THREADS env var, else 1.
int default_parallelism();

}  // namespace ramsey

#endif
