#include "doctest.h"

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "ramsey/experiments.hpp"

using namespace ramsey;

TEST_CASE("verify id registry") {
  const auto& ids = verify_ids();
  for (const char* id : {"first1", "second2", "third3", "fourth4", "fifth5", "six6", "seven7",
                         "eight8", "cool", "drc-expectation", "conversions"})
    CHECK(std::find(ids.begin(), ids.end(), id) != ids.end());
  CHECK(ids.size() == 11);
  CHECK_THROWS_WITH_AS(default_config("nonsense"),
                       doctest::Contains("known verify ids"), std::invalid_argument);
}

TEST_CASE("batch_run determinism: identical configs byte-reproduce records") {
  ExperimentConfig cfg = default_config("conversions");
  cfg.trials = 40;
  cfg.seeds = {3, 4};
  cfg.seeds_set = true;
  RunReport a = batch_run(cfg);
  RunReport b = batch_run(cfg);
  REQUIRE(a.records.size() == b.records.size());
  for (size_t i = 0; i < a.records.size(); ++i) {
    CHECK(a.records[i].seed == b.records[i].seed);
    CHECK(a.records[i].statistic == b.records[i].statistic);
    CHECK(a.records[i].pass == b.records[i].pass);
    CHECK(a.records[i].detail == b.records[i].detail);
  }
}

TEST_CASE("batch_run with zero seeds flags an undefined pass fraction") {
  ExperimentConfig cfg = default_config("conversions");
  cfg.seeds_set = true;
  cfg.seeds.clear();
  RunReport rep = batch_run(cfg);
  CHECK(rep.records.empty());
  CHECK(!rep.pass_fraction_defined);
  CHECK(!rep.pass);
}

TEST_CASE("small smoke runs of the verifiers") {
  {
    ExperimentConfig cfg = default_config("third3");
    cfg.n_max = 5;
    RunReport rep = batch_run(cfg);
    CHECK(rep.pass);
  }
  {
    ExperimentConfig cfg = default_config("fourth4");
    cfg.trials = 50;
    cfg.seeds = {1};
    cfg.seeds_set = true;
    RunReport rep = batch_run(cfg);
    CHECK(rep.pass);
  }
  {
    ExperimentConfig cfg = default_config("conversions");
    cfg.trials = 50;
    cfg.seeds = {1};
    cfg.seeds_set = true;
    RunReport rep = batch_run(cfg);
    CHECK(rep.pass);
  }
  {
    ExperimentConfig cfg = default_config("first1");
    cfg.n = 20000;
    cfg.seeds = {1, 2};
    cfg.seeds_set = true;
    RunReport rep = batch_run(cfg);
    CHECK(rep.pass);
  }
  {
    ExperimentConfig cfg = default_config("second2");
    cfg.n = 20000;
    cfg.seeds = {1, 2};
    cfg.seeds_set = true;
    RunReport rep = batch_run(cfg);
    CHECK(rep.pass);
  }
  {
    ExperimentConfig cfg = default_config("cool");
    cfg.n = 3000;
    cfg.seeds = {1};
    cfg.seeds_set = true;
    RunReport rep = batch_run(cfg);
    CHECK(rep.pass);
  }
  {
    ExperimentConfig cfg = default_config("drc-expectation");
    cfg.n = 200;
    cfg.trials = 100;
    cfg.x = 20;
    cfg.seeds = {1};
    cfg.seeds_set = true;
    RunReport rep = batch_run(cfg);
    CHECK(rep.pass);
  }
  {
    ExperimentConfig cfg = default_config("fifth5");
    cfg.n = 500;
    cfg.seeds = {1, 2};
    cfg.seeds_set = true;
    RunReport rep = batch_run(cfg);
    CHECK(rep.pass_fraction_defined);
  }
}

TEST_CASE("report embeds config, version, and frozen csv columns") {
  ExperimentConfig cfg = default_config("conversions");
  cfg.trials = 10;
  cfg.seeds = {9};
  cfg.seeds_set = true;
  RunReport rep = batch_run(cfg);
  std::string json = report_to_json(rep);
  CHECK(json.find("\"config\"") != std::string::npos);
  CHECK(json.find("\"version\"") != std::string::npos);
  CHECK(json.find("\"conversions\"") != std::string::npos);
  std::string csv = report_to_csv(rep);
  CHECK(csv.rfind("lemma_id,n,d,seed,statistic,pass\n", 0) == 0);
}

TEST_CASE("atomic report writing") {
  ExperimentConfig cfg = default_config("conversions");
  cfg.trials = 5;
  cfg.seeds = {2};
  cfg.seeds_set = true;
  auto path = std::filesystem::temp_directory_path() / "ramsey_report_test.json";
  cfg.out = path.string();
  batch_run(cfg);
  std::ifstream in(path);
  REQUIRE(in.good());
  std::string body((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  CHECK(body.find("pass_fraction") != std::string::npos);
  std::filesystem::remove(path);
}
