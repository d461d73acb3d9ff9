#include "finsum/mean_estimation.hpp"

#include <cmath>
#include <stdexcept>

namespace finsum {

static long long batch_size(double sigma_sq, double sigma_hat) {
  if (sigma_hat <= 0.0) {
    throw std::invalid_argument("minibatch_mean: sigma_hat must be > 0");
  }
  if (sigma_sq <= 0.0) return 1;
  double b = std::ceil(sigma_sq / (sigma_hat * sigma_hat));
  return std::max(1LL, static_cast<long long>(b));
}

static EstimateResult run_batch(const SamplerSpec& sampler, long long batch,
                                double quantum_charge, double sigma_hat,
                                Rng& rng, QueryLedger& ledger,
                                const std::string& phase) {
  Vector mean = zeros(static_cast<std::size_t>(sampler.dim));
  for (long long b = 0; b < batch; ++b) {
    Vector s = sampler.sample(rng);
    check_dim(s, mean.size(), "minibatch_mean sample");
    axpy(1.0, s, mean);
  }
  scale(mean, 1.0 / static_cast<double>(batch));

  EstimateResult result;
  result.estimate = std::move(mean);
  result.sigma_hat = sigma_hat;
  result.classical_cost = batch * sampler.per_sample_classical_cost;
  result.quantum_modeled_cost = quantum_charge;
  ledger.charge_classical(phase, result.classical_cost);
  ledger.charge_quantum(phase, quantum_charge);
  return result;
}

EstimateResult minibatch_mean(const SamplerSpec& sampler, double sigma_hat,
                              Rng& rng, QueryLedger& ledger,
                              const std::string& phase) {
  long long batch = batch_size(sampler.variance_bound, sigma_hat);
  double charge = quantum_mean_cost(sampler.dim,
                                    std::sqrt(sampler.variance_bound),
                                    sigma_hat);
  return run_batch(sampler, batch, charge, sigma_hat, rng, ledger, phase);
}

EstimateResult minibatch_mean_fixed(const SamplerSpec& sampler,
                                    long long batch, double quantum_charge,
                                    double sigma_hat, Rng& rng,
                                    QueryLedger& ledger,
                                    const std::string& phase) {
  if (batch < 1) {
    throw std::invalid_argument("minibatch_mean_fixed: batch must be >= 1");
  }
  return run_batch(sampler, batch, quantum_charge, sigma_hat, rng, ledger,
                   phase);
}

double mlmc_level_probability(int j, int j_clean) {
  if (j < 0 || j > j_clean) return 0.0;
  if (j == j_clean) return std::ldexp(1.0, -j_clean);
  return std::ldexp(1.0, -(j + 1));
}

static Vector level_mean(const BiasedFamilySpec& family, long long samples,
                         Rng& rng, Vector* first_half_mean) {
  Vector sum = zeros(static_cast<std::size_t>(family.dim));
  Vector half = zeros(static_cast<std::size_t>(family.dim));
  for (long long s = 0; s < samples; ++s) {
    Vector x = family.sample_base(rng);
    check_dim(x, sum.size(), "mlmc sample");
    axpy(1.0, x, sum);
    if (first_half_mean != nullptr && s < samples / 2) axpy(1.0, x, half);
  }
  scale(sum, 1.0 / static_cast<double>(samples));
  if (first_half_mean != nullptr) {
    scale(half, 1.0 / static_cast<double>(samples / 2));
    *first_half_mean = std::move(half);
  }
  return sum;
}

Vector mlmc_level_estimate(const BiasedFamilySpec& family, int j, Rng& rng) {
  if (j < 0) throw std::invalid_argument("mlmc_level_estimate: j must be >= 0");
  long long samples = family.n0 << j;
  Vector mean = level_mean(family, samples, rng, nullptr);
  axpy(1.0, family.bias(j), mean);
  return mean;
}

Vector mlmc_debias(const BiasedFamilySpec& family, Rng& rng,
                   QueryLedger& ledger, const std::string& phase) {
  if (family.j_clean < 0) {
    throw std::invalid_argument("mlmc_debias: j_clean must be >= 0");
  }
  // Draw the level J.
  double u = rng.uniform();
  int level = family.j_clean;
  double acc = 0.0;
  for (int j = 0; j < family.j_clean; ++j) {
    acc += mlmc_level_probability(j, family.j_clean);
    if (u < acc) {
      level = j;
      break;
    }
  }

  Vector estimate = mlmc_level_estimate(family, 0, rng);
  long long classical = family.n0;

  if (level > 0) {
    // Coupled pair: B_level and B_{level-1} share the first half of one
    // fresh stream of n0*2^level draws.
    long long samples = family.n0 << level;
    Vector half;
    Vector full = level_mean(family, samples, rng, &half);
    axpy(1.0, family.bias(level), full);
    axpy(1.0, family.bias(level - 1), half);
    Vector delta = sub(full, half);
    axpy(1.0 / mlmc_level_probability(level, family.j_clean), delta, estimate);
    classical += samples;
  }

  ledger.charge_classical(phase, classical);
  return estimate;
}

}  // namespace finsum
