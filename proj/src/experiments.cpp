#include "finsum/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <vector>

#include "finsum/hard_instance.hpp"
#include "finsum/instances.hpp"
#include "finsum/katyusha.hpp"
#include "finsum/mean_estimation.hpp"
#include "finsum/qvrg.hpp"
#include "finsum/query_problems.hpp"
#include "finsum/reductions.hpp"
#include "finsum/spider.hpp"

extern char** environ;

namespace finsum {

namespace {

constexpr const char* kVersion = "1.0.0";

std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string fmt(long long v) { return std::to_string(v); }

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(trim(item));
  return out;
}

}  // namespace

std::string Config::get(const std::string& key,
                        const std::string& fallback) const {
  auto it = kv.find(key);
  return it == kv.end() ? fallback : it->second;
}

long long Config::get_i64(const std::string& key, long long fallback) const {
  auto it = kv.find(key);
  return it == kv.end() ? fallback : std::stoll(it->second);
}

std::uint64_t Config::get_u64(const std::string& key,
                              std::uint64_t fallback) const {
  auto it = kv.find(key);
  return it == kv.end() ? fallback : std::stoull(it->second);
}

double Config::get_f64(const std::string& key, double fallback) const {
  auto it = kv.find(key);
  return it == kv.end() ? fallback : std::stod(it->second);
}

Config parse_config_text(const std::string& text) {
  Config config;
  std::stringstream ss(text);
  std::string line;
  int line_no = 0;
  while (std::getline(ss, line)) {
    ++line_no;
    std::size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    std::size_t eq = line.find('=');
    if (eq == std::string::npos) {
      throw std::invalid_argument("config line " + std::to_string(line_no) +
                                  ": expected key = value");
    }
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    if (key.empty()) {
      throw std::invalid_argument("config line " + std::to_string(line_no) +
                                  ": empty key");
    }
    config.kv[key] = value;
  }
  return config;
}

Config load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config_text(ss.str());
}

void apply_env_overrides(Config& config) {
  for (char** env = environ; *env != nullptr; ++env) {
    std::string entry(*env);
    if (entry.rfind("FINSUM_", 0) != 0) continue;
    std::size_t eq = entry.find('=');
    if (eq == std::string::npos) continue;
    std::string raw = entry.substr(7, eq - 7);
    std::string key;
    for (std::size_t i = 0; i < raw.size(); ++i) {
      if (raw[i] == '_' && i + 1 < raw.size() && raw[i + 1] == '_') {
        key += '.';
        ++i;
      } else {
        key += static_cast<char>(std::tolower(raw[i]));
      }
    }
    config.kv[key] = entry.substr(eq + 1);
  }
}

std::uint64_t config_hash(const Config& config) {
  std::uint64_t h = 1469598103934665603ULL;  // FNV-1a 64
  auto feed = [&h](const std::string& s) {
    for (unsigned char ch : s) {
      h ^= ch;
      h *= 1099511628211ULL;
    }
  };
  for (const auto& [k, v] : config.kv) {
    feed(k);
    feed("=");
    feed(v);
    feed("\n");
  }
  return h;
}

namespace {

std::string hash_hex(std::uint64_t h) {
  char buf[20];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

struct CsvBuilder {
  std::string hash;
  std::string text;

  CsvBuilder(const Config& config, std::uint64_t seed,
             const std::string& columns) {
    hash = hash_hex(config_hash(config));
    text = "# finsum " + std::string(kVersion) + " config=" + hash +
           " seed=" + std::to_string(seed) + "\n";
    text += "config_hash," + columns + "\n";
  }

  void row(const std::string& cells) { text += hash + "," + cells + "\n"; }
};

void require_keys(const Config& config, const std::set<std::string>& allowed,
                  const std::set<std::string>& required) {
  std::string bad;
  for (const auto& [k, v] : config.kv) {
    (void)v;
    if (k.rfind("sweep.", 0) == 0) continue;
    if (allowed.count(k) == 0 && k != "experiment" && k != "seed" &&
        k != "out" && k != "jobs") {
      bad += (bad.empty() ? "" : ", ") + k;
    }
  }
  if (!bad.empty()) {
    throw std::invalid_argument("config schema: unknown keys: " + bad);
  }
  std::string missing;
  for (const auto& k : required) {
    if (!config.has(k)) missing += (missing.empty() ? "" : ", ") + k;
  }
  if (!missing.empty()) {
    throw std::invalid_argument("config schema: missing keys: " + missing);
  }
}

// ---- experiment kinds ------------------------------------------------------

std::string exp_katyusha_convergence(const Config& config, std::uint64_t seed) {
  require_keys(config, {"n", "d", "ell", "kappa", "eps_rel", "reps"}, {});
  long long n = config.get_i64("n", 16);
  long long d = config.get_i64("d", 8);
  double ell = config.get_f64("ell", 1.0);
  double kappa = config.get_f64("kappa", 100.0);
  double eps_rel = config.get_f64("eps_rel", 1e-6);
  long long reps = config.get_i64("reps", 20);

  ProblemInstance inst = make_ridge(n, d, ell, ell / kappa, seed);
  double f_star = inst.known_optimum->reference_value();
  double eps = eps_rel * inst.delta;
  KatyushaParams params =
      katyusha_params(n, d, ell, ell / kappa, inst.delta, eps);

  CsvBuilder csv(config, seed, "seed,record,epoch,F_err,classical,quantum");
  for (long long r = 0; r < reps; ++r) {
    std::uint64_t run_seed = derive_seed(seed, static_cast<std::uint64_t>(r));
    Rng rng(run_seed);
    QueryLedger ledger;
    Trajectory traj = run_q_katyusha(inst, params, rng, ledger);
    for (const auto& e : traj.epochs) {
      csv.row(fmt(static_cast<long long>(r)) + ",epoch," + fmt(e.epoch) + "," +
              fmt(e.f_value - f_star) + "," + fmt(e.classical) + "," +
              fmt(e.quantum));
    }
    csv.row(fmt(static_cast<long long>(r)) + ",out," + fmt(params.S) + "," +
            fmt(evaluate(inst, traj.x_out) - f_star) + "," +
            fmt(ledger.classical_total()) + "," + fmt(ledger.quantum_total()));
  }
  return csv.text;
}

std::string exp_spider_convergence(const Config& config, std::uint64_t seed) {
  require_keys(config, {"n", "d", "ell", "eps", "reps"}, {});
  long long n = config.get_i64("n", 16);
  long long d = config.get_i64("d", 8);
  double ell = config.get_f64("ell", 1.5);
  double eps = config.get_f64("eps", 0.05);
  long long reps = config.get_i64("reps", 20);

  ProblemInstance inst = make_indefinite_quadratic(n, d, ell, seed);
  SpiderParams params = spider_params(n, d, ell, inst.delta, eps);

  CsvBuilder csv(config, seed,
                 "seed,grad_norm_out,early_exit,exit_t,classical,quantum");
  for (long long r = 0; r < reps; ++r) {
    Rng rng(derive_seed(seed, static_cast<std::uint64_t>(r)));
    QueryLedger ledger;
    SpiderResult res = run_fs_q_spider(inst, params, rng, ledger);
    double g = norm2(mean_gradient(inst.objective, res.x_out));
    csv.row(fmt(static_cast<long long>(r)) + "," + fmt(g) + "," +
            fmt(static_cast<long long>(res.early_exit ? 1 : 0)) + "," +
            fmt(res.exit_t) + "," + fmt(ledger.classical_total()) + "," +
            fmt(ledger.quantum_total()));
  }
  return csv.text;
}

std::string exp_qvrg_stats(const Config& config, std::uint64_t seed) {
  require_keys(config, {"n", "d", "ell", "sigma_ratio", "calls"}, {});
  long long n = config.get_i64("n", 8);
  long long d = config.get_i64("d", 8);
  double ell = config.get_f64("ell", 1.0);
  double ratio = config.get_f64("sigma_ratio", 2.0);
  long long calls = config.get_i64("calls", 10000);

  ProblemInstance inst = make_psd_quadratic(n, d, ell, seed);
  Rng point_rng(derive_seed(seed, 0xFACE));
  Vector x = point_rng.gaussian(d);
  Vector x_ref = point_rng.gaussian(d);
  double sigma = qvrg_sigma(inst, x, x_ref);
  double sigma_hat = sigma / ratio;
  Vector gbar = gbar_exact(inst, x, x_ref);

  Vector mean = zeros(d);
  double mse = 0.0;
  Rng rng(derive_seed(seed, 1));
  QueryLedger ledger;
  for (long long c = 0; c < calls; ++c) {
    EstimateResult est = qvrg(inst, x, x_ref, sigma_hat, rng, ledger);
    axpy(1.0, est.estimate, mean);
    mse += dist2(est.estimate, gbar) * dist2(est.estimate, gbar);
  }
  scale(mean, 1.0 / static_cast<double>(calls));
  mse /= static_cast<double>(calls);

  CsvBuilder csv(config, seed, "calls,sigma,sigma_hat,bias_norm,mse");
  csv.row(fmt(calls) + "," + fmt(sigma) + "," + fmt(sigma_hat) + "," +
          fmt(dist2(mean, gbar)) + "," + fmt(mse));
  return csv.text;
}

std::string exp_mlmc_stats(const Config& config, std::uint64_t seed) {
  require_keys(config, {"n0", "j_clean", "bias0", "mean", "runs"}, {});
  long long n0 = config.get_i64("n0", 16);
  int j_clean = static_cast<int>(config.get_i64("j_clean", 6));
  double bias0 = config.get_f64("bias0", 0.5);
  double mu = config.get_f64("mean", 1.0);
  long long runs = config.get_i64("runs", 10000);

  BiasedFamilySpec family;
  family.dim = 1;
  family.n0 = n0;
  family.j_clean = j_clean;
  family.sample_base = [mu](Rng& rng) {
    return Vector{mu + (rng.uniform() < 0.5 ? -1.0 : 1.0)};
  };
  family.bias = [bias0, j_clean](int j) {
    return Vector{j < j_clean ? bias0 * std::ldexp(1.0, -j) : 0.0};
  };

  double sum_debiased = 0.0, sumsq_debiased = 0.0;
  double sum_naive = 0.0, sumsq_naive = 0.0;
  Rng rng(derive_seed(seed, 2));
  QueryLedger ledger;
  for (long long r = 0; r < runs; ++r) {
    double v = mlmc_debias(family, rng, ledger)[0];
    sum_debiased += v;
    sumsq_debiased += v * v;
    double w = mlmc_level_estimate(family, 0, rng)[0];
    sum_naive += w;
    sumsq_naive += w * w;
  }
  auto report = [&](const char* name, double sum, double sumsq) {
    double mean = sum / static_cast<double>(runs);
    double var = sumsq / static_cast<double>(runs) - mean * mean;
    double se = std::sqrt(std::max(0.0, var) / static_cast<double>(runs));
    return std::string(name) + "," + fmt(mean) + "," + fmt(std::abs(mean - mu)) +
           "," + fmt(se);
  };
  CsvBuilder csv(config, seed, "estimator,mean,abs_bias,stderr");
  csv.row(report("debiased", sum_debiased, sumsq_debiased));
  csv.row(report("naive_level0", sum_naive, sumsq_naive));
  return csv.text;
}

std::string exp_hood_reduction(const Config& config, std::uint64_t seed) {
  require_keys(config,
               {"case", "n", "d", "eps_rel", "lambda1", "mu", "lipschitz"},
               {});
  long long case_id = config.get_i64("case", 2);
  long long n = config.get_i64("n", 16);
  long long d = config.get_i64("d", 8);
  double eps_rel = config.get_f64("eps_rel", 1e-4);

  ProblemInstance inst;
  if (case_id == 2) {
    inst = make_lasso(n, d, 1.0, config.get_f64("lambda1", 0.05), seed);
  } else if (case_id == 3) {
    inst = make_hinge_l2(n, d, config.get_f64("lipschitz", 1.0),
                         config.get_f64("mu", 0.1), seed);
  } else if (case_id == 4) {
    inst = make_absolute_flat(n, d, config.get_f64("lipschitz", 1.0), seed);
  } else {
    throw std::invalid_argument("hood_reduction: case must be 2, 3 or 4");
  }
  double eps = eps_rel * inst.delta;

  Rng rng(derive_seed(seed, 3));
  QueryLedger ledger;
  HoodSolver solver = katyusha_hood_solver();
  Vector x;
  if (case_id == 2) {
    x = adapt_reg(inst, eps, solver, rng, ledger);
  } else if (case_id == 3) {
    x = adapt_smooth(inst, eps, solver, rng, ledger);
  } else {
    x = adapt_both(inst, eps, solver, rng, ledger);
  }

  CsvBuilder csv(config, seed, "case,n,d,eps,F_out,classical,quantum");
  csv.row(fmt(case_id) + "," + fmt(n) + "," + fmt(d) + "," + fmt(eps) + "," +
          fmt(evaluate(inst, x)) + "," + fmt(ledger.classical_total()) + "," +
          fmt(ledger.quantum_total()));
  return csv.text;
}

// Draws points satisfying the generating lemma's hypothesis and checks that
// none violates the certified suboptimality gap.
std::string exp_hard_instance_checks(const Config& config, std::uint64_t seed) {
  require_keys(config,
               {"case", "n", "eps", "mu", "delta", "samples", "query_budget"},
               {"eps"});
  HardInstanceSpec spec;
  spec.case_id = static_cast<int>(config.get_i64("case", 1));
  spec.n = config.get_i64("n", 4);
  spec.eps = config.get_f64("eps", 1e-4);
  spec.mu = config.get_f64("mu", 1.0 / 28.0);
  spec.delta = config.get_f64("delta", 1.0);
  spec.query_budget = config.get_i64("query_budget", 10000);
  spec.seed = seed;
  long long samples = config.get_i64("samples", 10000);

  HardInstance hi = gen_hard_instance(spec);
  Rng rng(derive_seed(seed, 4));
  long long violations = 0;
  double min_gap = std::numeric_limits<double>::infinity();
  const long long n_half = spec.n / 2;
  long long j_max = spec.case_id == 2 ? hi.k / 2 : hi.k;
  for (long long s = 0; s < samples; ++s) {
    // Random point, then force the hypothesis by projecting the chosen
    // inner products into (-c/2, c/2).
    Vector x = rng.gaussian(hi.d);
    scale(x, rng.uniform(0.1, 3.0));
    if (rng.uniform() < 0.5) axpy(rng.uniform(0.0, 2.0), hi.x_hat, x);
    long long blocks_needed =
        spec.case_id == 1 ? 1 : (spec.n + 3) / 4;  // ceil(n/4)
    for (long long bidx = 0; bidx < blocks_needed; ++bidx) {
      long long i = spec.case_id == 1
                        ? static_cast<long long>(rng.index(n_half))
                        : bidx;
      long long j = 1 + static_cast<long long>(rng.index(j_max));
      double target = rng.uniform(-0.49, 0.49) * hi.c;
      const Vector& v = hi.v(i, j);
      axpy(target - dot(x, v), v, x);
    }
    Verdict verdict = suboptimality_check(hi, x, spec.eps);
    if (verdict == Verdict::Violates) ++violations;
    min_gap = std::min(min_gap, evaluate(hi.instance, x) - hi.f_lower);
  }

  CsvBuilder csv(config, seed,
                 "case,n,k,d,eps,c,samples,violations,min_gap,f_lower,f_upper");
  csv.row(fmt(static_cast<long long>(spec.case_id)) + "," + fmt(spec.n) + "," +
          fmt(hi.k) + "," + fmt(hi.d) + "," + fmt(spec.eps) + "," + fmt(hi.c) +
          "," + fmt(samples) + "," + fmt(violations) + "," + fmt(min_gap) +
          "," + fmt(hi.f_lower) + "," + fmt(hi.f_upper));
  if (violations > 0) {
    throw std::runtime_error("hard_instance_checks: lemma violated " +
                             std::to_string(violations) + " times\n" +
                             csv.text);
  }
  return csv.text;
}

std::string exp_adversary_table(const Config& config, std::uint64_t seed) {
  require_keys(config, {"pairs"}, {});
  std::string pairs = config.get("pairs", "1:1,2:2,2:3,3:2,2:4");
  CsvBuilder csv(config, seed, "n,k,bound,expected,deviation");
  for (const std::string& token : split(pairs, ',')) {
    auto nk = split(token, ':');
    if (nk.size() != 2) {
      throw std::invalid_argument("adversary_table: bad pair " + token);
    }
    long long n = std::stoll(nk[0]);
    long long k = std::stoll(nk[1]);
    QueryProblem problem = mcp_query_problem(n, k);
    WeightScheme scheme = mcp_weight_scheme(n, k);
    double bound = adversary_bound(problem, scheme);
    double expected = static_cast<double>(n) *
                      std::sqrt(static_cast<double>(k));
    csv.row(fmt(n) + "," + fmt(k) + "," + fmt(bound) + "," + fmt(expected) +
            "," + fmt(std::abs(bound - expected)));
  }
  return csv.text;
}

std::string exp_scaling_sweep(const Config& config, std::uint64_t seed) {
  require_keys(config, {"n_list", "d_list", "kappa_list", "ell", "eps_rel"},
               {});
  auto n_list = split(config.get("n_list", "64,128,256,512,1024,2048,4096"), ',');
  auto d_list = split(config.get("d_list", "8,64"), ',');
  auto kappa_list = split(config.get("kappa_list", "10,100"), ',');
  double ell = config.get_f64("ell", 1.0);
  double eps_rel = config.get_f64("eps_rel", 1e-6);

  CsvBuilder csv(config, seed,
                 "n,d,kappa,S,b,m,classical,quantum,theory,ratio");
  long long cell = 0;
  for (const auto& ns : n_list) {
    for (const auto& ds : d_list) {
      for (const auto& ks : kappa_list) {
        long long n = std::stoll(ns);
        long long d = std::stoll(ds);
        double kappa = std::stod(ks);
        std::uint64_t cell_seed = derive_seed(seed, 100 + cell);
        ++cell;
        ProblemInstance inst = make_ridge(n, d, ell, ell / kappa, cell_seed);
        double eps = eps_rel * inst.delta;
        KatyushaParams params =
            katyusha_params(n, d, ell, ell / kappa, inst.delta, eps);
        Rng rng(cell_seed);
        QueryLedger ledger;
        run_q_katyusha(inst, params, rng, ledger);
        double nd = static_cast<double>(n);
        double dd = static_cast<double>(d);
        double theory = nd + std::sqrt(dd) +
                        std::sqrt(kappa) * (std::cbrt(nd) * std::cbrt(dd) +
                                            std::pow(nd, -2.0 / 3.0) *
                                                std::pow(dd, 5.0 / 6.0));
        double ratio = ledger.quantum_total() / theory;
        csv.row(fmt(n) + "," + fmt(d) + "," + fmt(kappa) + "," +
                fmt(params.S) + "," + fmt(params.b) + "," + fmt(params.m) +
                "," + fmt(ledger.classical_total()) + "," +
                fmt(ledger.quantum_total()) + "," + fmt(theory) + "," +
                fmt(ratio));
      }
    }
  }
  return csv.text;
}

}  // namespace

std::string run_experiment(const Config& config) {
  if (!config.has("experiment")) {
    throw std::invalid_argument("config schema: missing keys: experiment");
  }
  std::string kind = config.get("experiment", "");
  std::uint64_t seed = config.get_u64("seed", 0);
  if (kind == "katyusha_convergence") return exp_katyusha_convergence(config, seed);
  if (kind == "spider_convergence") return exp_spider_convergence(config, seed);
  if (kind == "qvrg_stats") return exp_qvrg_stats(config, seed);
  if (kind == "mlmc_stats") return exp_mlmc_stats(config, seed);
  if (kind == "hood_reduction") return exp_hood_reduction(config, seed);
  if (kind == "hard_instance_checks") return exp_hard_instance_checks(config, seed);
  if (kind == "adversary_table") return exp_adversary_table(config, seed);
  if (kind == "scaling_sweep") return exp_scaling_sweep(config, seed);
  throw std::invalid_argument("config schema: unknown experiment kind: " + kind);
}

std::string sweep_experiment(const Config& config, int jobs) {
  // Collect grid axes in key order.
  std::vector<std::pair<std::string, std::vector<std::string>>> axes;
  for (const auto& [k, v] : config.kv) {
    if (k.rfind("sweep.", 0) == 0) axes.emplace_back(k.substr(6), split(v, ','));
  }
  std::uint64_t master_seed = config.get_u64("seed", 0);
  if (axes.empty()) {
    // A sweep without grid keys is a single run.
    Config cell = config;
    return run_experiment(cell);
  }
  long long cells = 1;
  for (const auto& [k, vals] : axes) {
    (void)k;
    if (vals.empty()) throw std::invalid_argument("sweep: empty axis");
    cells *= static_cast<long long>(vals.size());
  }

  std::vector<std::string> results(static_cast<std::size_t>(cells));
  std::vector<std::string> status(static_cast<std::size_t>(cells), "ok");
  std::atomic<long long> next{0};

  auto worker = [&]() {
    for (;;) {
      long long idx = next.fetch_add(1);
      if (idx >= cells) return;
      Config cell = config;
      long long rem = idx;
      for (const auto& [key, vals] : axes) {
        cell.kv[key] = vals[static_cast<std::size_t>(
            rem % static_cast<long long>(vals.size()))];
        rem /= static_cast<long long>(vals.size());
      }
      for (auto it = cell.kv.begin(); it != cell.kv.end();) {
        if (it->first.rfind("sweep.", 0) == 0) {
          it = cell.kv.erase(it);
        } else {
          ++it;
        }
      }
      cell.kv["seed"] = std::to_string(master_seed ^
                                       static_cast<std::uint64_t>(idx));
      try {
        results[static_cast<std::size_t>(idx)] = run_experiment(cell);
      } catch (const std::exception& e) {
        std::string msg = e.what();
        std::replace(msg.begin(), msg.end(), ',', ';');
        std::replace(msg.begin(), msg.end(), '\n', ' ');
        status[static_cast<std::size_t>(idx)] = "failed: " + msg;
      }
    }
  };

  int workers = std::max(1, jobs);
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  // Merge in deterministic cell order: one comment header, one column row
  // (from the first successful cell) with cell/status columns appended.
  std::string out = "# finsum " + std::string(kVersion) +
                    " sweep config=" + hash_hex(config_hash(config)) +
                    " seed=" + std::to_string(master_seed) + "\n";
  std::string columns;
  for (long long idx = 0; idx < cells; ++idx) {
    const std::string& cell_csv = results[static_cast<std::size_t>(idx)];
    std::stringstream ss(cell_csv);
    std::string line;
    int line_no = 0;
    bool emitted_any = false;
    while (std::getline(ss, line)) {
      ++line_no;
      if (line_no == 1) continue;  // per-cell comment header
      if (line_no == 2) {
        if (columns.empty()) {
          columns = line;
          out += columns + ",cell,status\n";
        }
        continue;
      }
      out += line + "," + std::to_string(idx) + "," +
             status[static_cast<std::size_t>(idx)] + "\n";
      emitted_any = true;
    }
    if (!emitted_any && status[static_cast<std::size_t>(idx)] != "ok") {
      if (columns.empty()) {
        columns = "data";
        out += columns + ",cell,status\n";
      }
      std::string blanks;
      for (char ch : columns) {
        if (ch == ',') blanks += ',';
      }
      out += blanks + "," + std::to_string(idx) + "," +
             status[static_cast<std::size_t>(idx)] + "\n";
    }
  }
  return out;
}

}  // namespace finsum
