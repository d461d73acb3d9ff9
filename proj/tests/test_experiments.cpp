#include <doctest.h>

#include <cstdlib>
#include <stdexcept>

#include "finsum/experiments.hpp"

using namespace finsum;

namespace {

Config base(const std::string& kind) {
  Config c;
  c.kv["experiment"] = kind;
  c.kv["seed"] = "42";
  return c;
}

int count_lines(const std::string& s) {
  int n = 0;
  for (char ch : s) {
    if (ch == '\n') ++n;
  }
  return n;
}

}  // namespace

TEST_CASE("config parsing") {
  Config c = parse_config_text(
      "# comment\n"
      "experiment = qvrg_stats\n"
      "instance.n = 8   # trailing comment\n"
      "\n"
      "seed=7\n");
  CHECK(c.get("experiment", "") == "qvrg_stats");
  CHECK(c.get_i64("instance.n", 0) == 8);
  CHECK(c.get_u64("seed", 0) == 7);
  CHECK_THROWS(parse_config_text("not a key value line\n"));
}

TEST_CASE("environment overrides") {
  Config c = base("qvrg_stats");
  setenv("FINSUM_SEED", "99", 1);
  setenv("FINSUM_SWEEP__N", "1,2", 1);
  apply_env_overrides(c);
  unsetenv("FINSUM_SEED");
  unsetenv("FINSUM_SWEEP__N");
  CHECK(c.get_u64("seed", 0) == 99);
  CHECK(c.get("sweep.n", "") == "1,2");
}

TEST_CASE("config hash changes with content") {
  Config a = base("qvrg_stats");
  Config b = base("qvrg_stats");
  CHECK(config_hash(a) == config_hash(b));
  b.kv["calls"] = "5";
  CHECK(config_hash(a) != config_hash(b));
}

TEST_CASE("schema violations are reported with the offending keys") {
  Config c = base("qvrg_stats");
  c.kv["bogus_key"] = "1";
  CHECK_THROWS_WITH_AS(run_experiment(c),
                       doctest::Contains("bogus_key"),
                       std::invalid_argument);

  Config missing;
  missing.kv["seed"] = "1";
  CHECK_THROWS_WITH_AS(run_experiment(missing),
                       doctest::Contains("experiment"),
                       std::invalid_argument);

  Config unknown = base("no_such_kind");
  CHECK_THROWS(run_experiment(unknown));
}

TEST_CASE("runs are byte-identical under a fixed seed") {
  for (const char* kind :
       {"qvrg_stats", "mlmc_stats", "adversary_table"}) {
    Config c = base(kind);
    if (std::string(kind) == "qvrg_stats") c.kv["calls"] = "200";
    if (std::string(kind) == "mlmc_stats") c.kv["runs"] = "200";
    if (std::string(kind) == "adversary_table") c.kv["pairs"] = "1:1,2:2";
    std::string a = run_experiment(c);
    std::string b = run_experiment(c);
    CHECK(a == b);
    CHECK(a.rfind("# finsum", 0) == 0);
  }
}

TEST_CASE("every row carries the config hash") {
  Config c = base("adversary_table");
  c.kv["pairs"] = "1:1,2:2";
  std::string csv = run_experiment(c);
  std::string hash;
  {
    auto pos = csv.find("config=");
    hash = csv.substr(pos + 7, 16);
  }
  int rows = 0;
  std::size_t start = 0;
  int line_no = 0;
  while (start < csv.size()) {
    std::size_t end = csv.find('\n', start);
    std::string line = csv.substr(start, end - start);
    ++line_no;
    if (line_no >= 3) {  // data rows
      CHECK(line.rfind(hash + ",", 0) == 0);
      ++rows;
    }
    start = end + 1;
  }
  CHECK(rows == 2);
}

TEST_CASE("katyusha experiment emits one out-record per repetition") {
  Config c = base("katyusha_convergence");
  c.kv["n"] = "8";
  c.kv["d"] = "4";
  c.kv["kappa"] = "10";
  c.kv["eps_rel"] = "1e-2";
  c.kv["reps"] = "3";
  std::string csv = run_experiment(c);
  int outs = 0;
  std::size_t pos = 0;
  while ((pos = csv.find(",out,", pos)) != std::string::npos) {
    ++outs;
    ++pos;
  }
  CHECK(outs == 3);
}

TEST_CASE("sweep merges cells in deterministic order with a status column") {
  Config c = base("qvrg_stats");
  c.kv["calls"] = "100";
  c.kv["sweep.n"] = "4,6";
  c.kv["sweep.d"] = "2,3,4";
  std::string one = sweep_experiment(c, 1);
  std::string four = sweep_experiment(c, 4);
  CHECK(one == four);  // worker count must not matter
  // 6 cells, each one data row, plus comment and column header
  CHECK(count_lines(one) == 2 + 6);
  CHECK(one.find(",ok\n") != std::string::npos);

  // repeated sweep with the same master seed is identical
  CHECK(sweep_experiment(c, 2) == one);
}

TEST_CASE("sweep flags failing cells and keeps going") {
  Config c = base("hard_instance_checks");
  c.kv["samples"] = "10";
  c.kv["eps"] = "3.814697265625e-06";
  c.kv["sweep.case"] = "1,9";  // case 9 does not exist
  std::string csv = sweep_experiment(c, 1);
  CHECK(csv.find("failed:") != std::string::npos);
  CHECK(csv.find(",ok\n") != std::string::npos);
}

TEST_CASE("hard instance check experiment rejects nonzero violations") {
  Config c = base("hard_instance_checks");
  c.kv["case"] = "1";
  c.kv["samples"] = "50";
  c.kv["eps"] = "3.814697265625e-06";
  CHECK_NOTHROW(run_experiment(c));
}
