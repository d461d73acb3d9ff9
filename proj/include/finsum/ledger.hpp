// Dual query-cost accounting: exact classical component-gradient samples on
// one side, modeled quantum oracle queries on the other.
//
// The quantum side follows the mean-estimation cost rule
//   ceil(sqrt(d) * sigma / sigma_hat)
// with polylog factors dropped at constant 1, and zero cost for a
// zero-variance estimate. Expected costs are charged as their deterministic
// formula values.
#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace finsum {

struct PhaseCost {
  long long classical = 0;
  double quantum = 0.0;
};

// Modeled quantum cost of one unbiased mean estimation.
double quantum_mean_cost(long long d, double sigma, double sigma_hat);

class QueryLedger {
 public:
  void charge_classical(const std::string& phase, long long count);

  // Charges ceil(sqrt(d)*sigma/sigma_hat) quantum-modeled queries and returns
  // the amount. sigma == 0 charges nothing; sigma_hat <= 0 is an error.
  double charge_quantum_mean(const std::string& phase, long long d,
                             double sigma, double sigma_hat);

  // Raw quantum charge for call sites whose cost is pinned structurally
  // (full gradient passes, ratio-parameterized QVRG calls).
  void charge_quantum(const std::string& phase, double amount);

  long long classical_total() const { return classical_total_; }
  double quantum_total() const { return quantum_total_; }
  const std::map<std::string, PhaseCost>& phases() const { return phases_; }
  PhaseCost phase(const std::string& name) const;

  // Checks that the totals equal the sum of the per-phase entries.
  bool consistent() const;

  // One CSV row per phase: run_id,phase,classical,quantum_modeled.
  std::string csv_rows(const std::string& run_id) const;

 private:
  long long classical_total_ = 0;
  double quantum_total_ = 0.0;
  std::map<std::string, PhaseCost> phases_;
};

}  // namespace finsum
