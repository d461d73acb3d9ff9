#include "finsum/ledger.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace finsum {

double quantum_mean_cost(long long d, double sigma, double sigma_hat) {
  if (sigma_hat <= 0.0) {
    throw std::invalid_argument("quantum_mean_cost: sigma_hat must be > 0");
  }
  if (sigma < 0.0) {
    throw std::invalid_argument("quantum_mean_cost: sigma must be >= 0");
  }
  if (sigma == 0.0) return 0.0;
  return std::ceil(std::sqrt(static_cast<double>(d)) * sigma / sigma_hat);
}

void QueryLedger::charge_classical(const std::string& phase, long long count) {
  if (count < 0) {
    throw std::invalid_argument("charge_classical: count must be >= 0");
  }
  phases_[phase].classical += count;
  classical_total_ += count;
}

double QueryLedger::charge_quantum_mean(const std::string& phase, long long d,
                                        double sigma, double sigma_hat) {
  double amount = quantum_mean_cost(d, sigma, sigma_hat);
  charge_quantum(phase, amount);
  return amount;
}

void QueryLedger::charge_quantum(const std::string& phase, double amount) {
  if (amount < 0.0) {
    throw std::invalid_argument("charge_quantum: amount must be >= 0");
  }
  phases_[phase].quantum += amount;
  quantum_total_ += amount;
}

PhaseCost QueryLedger::phase(const std::string& name) const {
  auto it = phases_.find(name);
  return it == phases_.end() ? PhaseCost{} : it->second;
}

bool QueryLedger::consistent() const {
  long long c = 0;
  double q = 0.0;
  for (const auto& [name, cost] : phases_) {
    (void)name;
    c += cost.classical;
    q += cost.quantum;
  }
  return c == classical_total_ && q == quantum_total_;
}

std::string QueryLedger::csv_rows(const std::string& run_id) const {
  std::string out;
  char buf[128];
  for (const auto& [name, cost] : phases_) {
    std::snprintf(buf, sizeof(buf), "%lld,%.17g", cost.classical, cost.quantum);
    out += run_id + "," + name + "," + buf + "\n";
  }
  return out;
}

}  // namespace finsum
