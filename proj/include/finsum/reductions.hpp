// Black-box reductions that wrap a quarter-decrease (HOOD) solver for the
// smooth strongly convex case:
//  - shrinking L2 regularization for the non-strongly-convex smooth case,
//  - Moreau-Yosida smoothing for the Lipschitz strongly convex case,
//  - both schedules composed for the Lipschitz non-strongly-convex case.
// Stages are warm-started from the previous stage's output.
#pragma once

#include <functional>

#include "finsum/problem.hpp"
#include "finsum/rng.hpp"

namespace finsum {

struct ReductionSchedule {
  long long stages = 1;    // ceil(log2(delta/eps)), clamped to >= 1
  double mu_tilde = 0.0;   // delta / R^2 (regularization ladder base)
  double lambda = 0.0;     // delta / L^2 (smoothing ladder base)
};

ReductionSchedule reduction_schedule(double delta, double eps, double radius,
                                     double lipschitz);

// Solves a Case-1 instance from x0 to expected accuracy eps (gap bound
// delta). The default is the accelerated variance-reduced optimizer with the
// matching parameter formulas.
using HoodSolver =
    std::function<Vector(const ProblemInstance&, const Vector& x0,
                         double delta, double eps, Rng&, QueryLedger&)>;

HoodSolver katyusha_hood_solver();

// Gradient of the Moreau envelope of component i at smoothing level lambda:
// (x - prox_{lambda f_i}(x)) / lambda; the envelope is (1/lambda)-smooth.
Vector moreau_gradient(const FiniteSumObjective& obj, long long i,
                       double lambda, const Vector& x);

// Envelope value f_i^lambda(x) = f_i(prox) + ||x - prox||^2/(2*lambda).
double moreau_value(const FiniteSumObjective& obj, long long i, double lambda,
                    const Vector& x);

// Replaces every component by its Moreau envelope at level lambda; the
// proximal term is kept. Errors if any component lacks a prox.
ProblemInstance smoothed_instance(const ProblemInstance& inst, double lambda);

// Case 2: stages s = 0..S-1 add an L2 regularizer of strength mu_tilde/2^s.
Vector adapt_reg(const ProblemInstance& inst, double eps,
                 const HoodSolver& solver, Rng& rng, QueryLedger& ledger);

// Case 3: stages smooth every component at lambda_s = lambda/2^s.
Vector adapt_smooth(const ProblemInstance& inst, double eps,
                    const HoodSolver& solver, Rng& rng, QueryLedger& ledger);

// Case 4: both schedules composed.
Vector adapt_both(const ProblemInstance& inst, double eps,
                  const HoodSolver& solver, Rng& rng, QueryLedger& ledger);

}  // namespace finsum
