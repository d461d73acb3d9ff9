// Unbiased mean estimation with the statistical contract of quantum variance
// reduction: a minibatch stand-in satisfying E||mu_hat - mu||^2 <= sigma_hat^2
// exactly, plus a multilevel Monte Carlo debiaser that removes injected bias
// from a family of level estimators.
#pragma once

#include <functional>
#include <string>

#include "finsum/ledger.hpp"
#include "finsum/rng.hpp"
#include "finsum/vec.hpp"

namespace finsum {

struct SamplerSpec {
  long long dim = 0;
  double variance_bound = 0.0;  // sigma^2 with Var[X] <= sigma^2
  long long per_sample_classical_cost = 1;
  std::function<Vector(Rng&)> sample;
};

struct EstimateResult {
  Vector estimate;
  double sigma_hat = 0.0;
  long long classical_cost = 0;
  double quantum_modeled_cost = 0.0;
};

// Empirical mean of B = max(1, ceil(sigma^2/sigma_hat^2)) i.i.d. samples.
// Charges B * per_sample_classical_cost classical and
// ceil(sqrt(d)*sigma/sigma_hat) quantum-modeled queries.
EstimateResult minibatch_mean(const SamplerSpec& sampler, double sigma_hat,
                              Rng& rng, QueryLedger& ledger,
                              const std::string& phase = "mean");

// Fixed-batch variant for call sites where sigma_hat is defined structurally
// as sigma/sqrt(ratio): the batch and the modeled charge are pinned by the
// ratio, independent of the realized sigma.
EstimateResult minibatch_mean_fixed(const SamplerSpec& sampler,
                                    long long batch, double quantum_charge,
                                    double sigma_hat, Rng& rng,
                                    QueryLedger& ledger,
                                    const std::string& phase = "mean");

// Family of level estimators B_j with E[B_j] = mu + beta_j, where
// ||beta_j|| <= beta(0)*2^-j and beta_j = 0 exactly for j >= j_clean.
// Level j averages n0 * 2^j base samples.
struct BiasedFamilySpec {
  long long dim = 0;
  long long n0 = 1;
  int j_clean = 0;
  std::function<Vector(Rng&)> sample_base;  // i.i.d. draws of X
  std::function<Vector(int)> bias;          // beta_j (exactly zero >= j_clean)
};

// Level estimator B_j: mean of n0*2^j draws plus the injected bias.
Vector mlmc_level_estimate(const BiasedFamilySpec& family, int j, Rng& rng);

// Randomized-level telescoping estimator: draws J with P(J=j) = 2^-(j+1) for
// j < j_clean and P(J=j_clean) = 2^-j_clean, and returns B_0 + Delta_J/P(J)
// with Delta_j = B_j - B_{j-1} on a shared sample stream (Delta_0 = 0).
// Exactly unbiased for mu because the bias vanishes at and beyond j_clean.
Vector mlmc_debias(const BiasedFamilySpec& family, Rng& rng,
                   QueryLedger& ledger, const std::string& phase = "mlmc");

// P(J = j) of the level distribution above.
double mlmc_level_probability(int j, int j_clean);

}  // namespace finsum
