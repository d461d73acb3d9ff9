// Variance-reduced gradient estimation: an unbiased estimate of
//   gbar = (1/n) sum_i (grad f_i(x) - grad f_i(x_ref))
// with root-mean-square error at most sigma_hat. The underlying sampler draws
// i uniformly and returns grad f_i(x) - grad f_i(x_ref) at 2 classical queries
// per sample; the per-sample norm is bounded by ell*||x - x_ref||.
#pragma once

#include <string>

#include "finsum/mean_estimation.hpp"
#include "finsum/problem.hpp"

namespace finsum {

enum class QvrgMode {
  Minibatch,  // default: exact-contract minibatch stand-in
  MlmcDemo,   // multilevel debiasing path, for demonstration only
};

// Variance-bound input of a call: sigma = ell * ||x - x_ref||.
double qvrg_sigma(const ProblemInstance& inst, const Vector& x,
                  const Vector& x_ref);

// General form with an absolute accuracy target. x == x_ref returns the zero
// vector exactly at zero cost. Errors if the instance is not smooth.
EstimateResult qvrg(const ProblemInstance& inst, const Vector& x,
                    const Vector& x_ref, double sigma_hat, Rng& rng,
                    QueryLedger& ledger, const std::string& phase = "qvrg",
                    QvrgMode mode = QvrgMode::Minibatch);

// Optimizer call sites parameterize sigma_hat = sigma / sqrt(ratio_sq), so
// the batch ceil(ratio_sq) and the modeled charge ceil(sqrt(d*ratio_sq)) are
// pinned by the call structure regardless of the realized distance.
EstimateResult qvrg_with_ratio(const ProblemInstance& inst, const Vector& x,
                               const Vector& x_ref, double ratio_sq, Rng& rng,
                               QueryLedger& ledger,
                               const std::string& phase = "qvrg");

// Exact gbar by full enumeration over components (test oracle and the
// deterministic variance-0 optimizer mode).
Vector gbar_exact(const ProblemInstance& inst, const Vector& x,
                  const Vector& x_ref);

}  // namespace finsum
