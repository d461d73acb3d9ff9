// Batch experiment runner: flat key=value configs, derived seeding, canned
// experiment suites, grid sweeps, and deterministic CSV emission.
#pragma once

#include <cstdint>
#include <map>
#include <string>

namespace finsum {

struct Config {
  std::map<std::string, std::string> kv;

  bool has(const std::string& key) const { return kv.count(key) != 0; }
  std::string get(const std::string& key, const std::string& fallback) const;
  long long get_i64(const std::string& key, long long fallback) const;
  std::uint64_t get_u64(const std::string& key, std::uint64_t fallback) const;
  double get_f64(const std::string& key, double fallback) const;
};

// One "key = value" per line; '#' starts a comment; blank lines ignored.
Config parse_config_text(const std::string& text);
Config load_config_file(const std::string& path);

// Environment overrides: FINSUM_<KEY> with the key uppercased and '.'
// spelled as a double underscore (FINSUM_SEED, FINSUM_SWEEP__N).
void apply_env_overrides(Config& config);

// FNV-1a over the canonical sorted "key=value\n" text; stamped on every row.
std::uint64_t config_hash(const Config& config);

// Executes the experiment named by the "experiment" key and returns the CSV
// (one comment header line, a column-name row, then data rows). Throws on a
// schema violation or an invariant failure inside the suite.
std::string run_experiment(const Config& config);

// Cartesian product over every "sweep.<key>" list; each cell runs
// run_experiment with the key substituted and seed = master_seed XOR cell
// index. Cell failures are flagged in the trailing status column. Cells may
// run on up to `jobs` worker threads; output order is cell order.
std::string sweep_experiment(const Config& config, int jobs);

}  // namespace finsum
