// Accelerated variance-reduced proximal optimizer for the smooth strongly
// convex case, with the quarter-decrease (HOOD) self-check.
#pragma once

#include <cstdint>
#include <vector>

#include "finsum/problem.hpp"
#include "finsum/rng.hpp"

namespace finsum {

struct KatyushaParams {
  long long S = 1;   // epochs
  long long b = 1;   // effective batch
  long long m = 1;   // inner iterations per epoch
  double tau1 = 0.0;
  double tau2 = 0.0;
  bool eps_clamped = false;  // set when eps >= delta forced S to 1
};

// b = m = ceil(n^{2/3} d^{-1/3}), tau2 = 1/(2b),
// tau1 = tau2*min(sqrt(8*b*m*mu/(3*ell)), 1),
// S = ceil(5*(1 + sqrt(ell/(b*m*mu))) * log2(delta/eps)), clamped to >= 1.
KatyushaParams katyusha_params(long long n, long long d, double ell, double mu,
                               double delta, double eps);

struct KatyushaOptions {
  Vector x0;               // empty means the origin
  bool exact_vrg = false;  // replace the estimator by exact gbar (variance 0)
};

struct EpochRecord {
  long long epoch = 0;
  double f_value = 0.0;
  long long classical = 0;
  double quantum = 0.0;
};

struct Trajectory {
  std::vector<EpochRecord> epochs;  // F(x_tilde^s) with ledger snapshots
  Vector x_out;
  KatyushaParams params;
};

Trajectory run_q_katyusha(const ProblemInstance& inst,
                          const KatyushaParams& params, Rng& rng,
                          QueryLedger& ledger,
                          const KatyushaOptions& options = {});

// Runs the optimizer from x0 with eps = (F(x0) - F*)/4 over num_seeds seeds
// and reports whether the mean final gap is within 1.1 times the target.
// Requires a known optimum and a strictly positive strong-convexity modulus.
bool check_hood(const ProblemInstance& inst, const Vector& x0, int num_seeds,
                std::uint64_t seed, QueryLedger& ledger);

}  // namespace finsum
