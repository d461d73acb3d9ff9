// Path-integrated gradient estimator loop for expected epsilon-critical
// points of nonconvex finite sums.
#pragma once

#include <vector>

#include "finsum/problem.hpp"
#include "finsum/rng.hpp"

namespace finsum {

struct SpiderParams {
  long long period_q = 1;  // full-gradient refresh period
  double eps_hat = 0.0;    // eps/5
  long long T = 1;         // total iteration budget
};

// q = ceil(n^{2/3} d^{-1/3}), eps_hat = eps/5, T = ceil(4*ell*delta/eps^2).
SpiderParams spider_params(long long n, long long d, double ell, double delta,
                           double eps);

struct SpiderStepRecord {
  long long t = 0;
  double v_norm = 0.0;
  bool reset = false;
  long long classical = 0;
  double quantum = 0.0;
};

struct SpiderResult {
  Vector x_out;
  bool early_exit = false;
  long long exit_t = -1;  // step of the early return, -1 if none
  std::vector<SpiderStepRecord> steps;  // populated when record_steps is set
  std::vector<Vector> iterates;         // x_0, x_1, ... when record_steps
};

// Runs T iterations from the origin. On reset steps v_t is the full gradient;
// otherwise v_t = v_{t-1} + qvrg(x_t, x_{t-1}, eps_hat/sqrt(2q)). Returns x_t
// as soon as ||v_t|| <= eps_hat; every other step moves exactly
// eps_hat/(2*ell) along -v_t/||v_t||. If the budget runs out, returns a
// uniformly random iterate among x_0..x_{T-1}.
SpiderResult run_fs_q_spider(const ProblemInstance& inst,
                             const SpiderParams& params, Rng& rng,
                             QueryLedger& ledger, bool record_steps = false);

}  // namespace finsum
