#include "finsum/qvrg.hpp"

#include <cmath>
#include <stdexcept>

namespace finsum {

static void require_smooth(const ProblemInstance& inst) {
  if (inst.objective.smoothness <= 0.0) {
    throw std::invalid_argument(
        "qvrg: instance must declare a positive smoothness constant");
  }
}

double qvrg_sigma(const ProblemInstance& inst, const Vector& x,
                  const Vector& x_ref) {
  require_smooth(inst);
  return inst.objective.smoothness * dist2(x, x_ref);
}

static SamplerSpec difference_sampler(const ProblemInstance& inst,
                                      const Vector& x, const Vector& x_ref,
                                      double sigma) {
  SamplerSpec sampler;
  sampler.dim = inst.objective.d;
  sampler.variance_bound = sigma * sigma;
  sampler.per_sample_classical_cost = 2;
  const FiniteSumObjective* obj = &inst.objective;
  sampler.sample = [obj, &x, &x_ref](Rng& rng) {
    long long i = static_cast<long long>(rng.index(
        static_cast<std::size_t>(obj->n)));
    Vector g = obj->component_gradient(i, x);
    axpy(-1.0, obj->component_gradient(i, x_ref), g);
    return g;
  };
  return sampler;
}

static EstimateResult zero_estimate(long long d, double sigma_hat) {
  EstimateResult r;
  r.estimate = zeros(static_cast<std::size_t>(d));
  r.sigma_hat = sigma_hat;
  return r;
}

static EstimateResult qvrg_mlmc(const ProblemInstance& inst, const Vector& x,
                                const Vector& x_ref, double sigma_hat,
                                double sigma, Rng& rng, QueryLedger& ledger,
                                const std::string& phase) {
  // Demonstration path: wrap the unbiased sampler in a bias-free level family
  // and run the debiaser. The level-0 batch is inflated by (1 + 2*j_clean) so
  // the telescoping noise keeps the overall RMSE within sigma_hat.
  const int j_clean = 3;
  SamplerSpec sampler = difference_sampler(inst, x, x_ref, sigma);
  double base = std::ceil(sigma * sigma / (sigma_hat * sigma_hat));
  BiasedFamilySpec family;
  family.dim = sampler.dim;
  family.n0 = (1 + 2 * j_clean) * std::max(1LL, static_cast<long long>(base));
  family.j_clean = j_clean;
  family.sample_base = sampler.sample;
  family.bias = [d = sampler.dim](int) { return zeros(static_cast<std::size_t>(d)); };

  QueryLedger inner;
  Vector est = mlmc_debias(family, rng, inner, phase);
  EstimateResult r;
  r.estimate = std::move(est);
  r.sigma_hat = sigma_hat;
  r.classical_cost = inner.classical_total() * sampler.per_sample_classical_cost;
  r.quantum_modeled_cost = quantum_mean_cost(sampler.dim, sigma, sigma_hat);
  ledger.charge_classical(phase, r.classical_cost);
  ledger.charge_quantum(phase, r.quantum_modeled_cost);
  return r;
}

EstimateResult qvrg(const ProblemInstance& inst, const Vector& x,
                    const Vector& x_ref, double sigma_hat, Rng& rng,
                    QueryLedger& ledger, const std::string& phase,
                    QvrgMode mode) {
  require_smooth(inst);
  check_dim(x, static_cast<std::size_t>(inst.objective.d), "qvrg");
  check_dim(x_ref, static_cast<std::size_t>(inst.objective.d), "qvrg");
  double sigma = qvrg_sigma(inst, x, x_ref);
  if (sigma == 0.0) return zero_estimate(inst.objective.d, sigma_hat);
  if (sigma_hat <= 0.0) {
    throw std::invalid_argument("qvrg: sigma_hat must be > 0");
  }
  if (mode == QvrgMode::MlmcDemo) {
    return qvrg_mlmc(inst, x, x_ref, sigma_hat, sigma, rng, ledger, phase);
  }
  SamplerSpec sampler = difference_sampler(inst, x, x_ref, sigma);
  return minibatch_mean(sampler, sigma_hat, rng, ledger, phase);
}

EstimateResult qvrg_with_ratio(const ProblemInstance& inst, const Vector& x,
                               const Vector& x_ref, double ratio_sq, Rng& rng,
                               QueryLedger& ledger, const std::string& phase) {
  require_smooth(inst);
  if (ratio_sq <= 0.0) {
    throw std::invalid_argument("qvrg_with_ratio: ratio_sq must be > 0");
  }
  double sigma = qvrg_sigma(inst, x, x_ref);
  double sigma_hat = sigma > 0.0 ? sigma / std::sqrt(ratio_sq) : 0.0;
  long long batch = static_cast<long long>(std::ceil(ratio_sq));
  double charge = std::ceil(
      std::sqrt(static_cast<double>(inst.objective.d) * ratio_sq));
  SamplerSpec sampler = difference_sampler(inst, x, x_ref, sigma);
  return minibatch_mean_fixed(sampler, batch, charge, sigma_hat, rng, ledger,
                              phase);
}

Vector gbar_exact(const ProblemInstance& inst, const Vector& x,
                  const Vector& x_ref) {
  Vector g = mean_gradient(inst.objective, x);
  axpy(-1.0, mean_gradient(inst.objective, x_ref), g);
  return g;
}

}  // namespace finsum
