#include "finsum/reductions.hpp"

#include <cmath>
#include <memory>
#include <stdexcept>

#include "finsum/katyusha.hpp"

namespace finsum {

ReductionSchedule reduction_schedule(double delta, double eps, double radius,
                                     double lipschitz) {
  if (delta <= 0.0 || eps <= 0.0) {
    throw std::invalid_argument("reduction_schedule: delta and eps must be > 0");
  }
  ReductionSchedule sched;
  sched.stages = eps >= delta
                     ? 1
                     : std::max(1LL, static_cast<long long>(
                                         std::ceil(std::log2(delta / eps))));
  sched.mu_tilde = radius > 0.0 ? delta / (radius * radius) : 0.0;
  sched.lambda = lipschitz > 0.0 ? delta / (lipschitz * lipschitz) : 0.0;
  return sched;
}

HoodSolver katyusha_hood_solver() {
  return [](const ProblemInstance& inst, const Vector& x0, double delta,
            double eps, Rng& rng, QueryLedger& ledger) {
    KatyushaParams params =
        katyusha_params(inst.objective.n, inst.objective.d,
                        inst.objective.smoothness,
                        inst.proximal.strong_convexity(), delta, eps);
    KatyushaOptions opt;
    opt.x0 = x0;
    return run_q_katyusha(inst, params, rng, ledger, opt).x_out;
  };
}

Vector moreau_gradient(const FiniteSumObjective& obj, long long i,
                       double lambda, const Vector& x) {
  if (!obj.component_prox) {
    throw std::invalid_argument("moreau_gradient: component prox missing");
  }
  if (lambda <= 0.0) {
    throw std::invalid_argument("moreau_gradient: lambda must be > 0");
  }
  Vector p = obj.component_prox(i, lambda, x);
  Vector g = sub(x, p);
  scale(g, 1.0 / lambda);
  return g;
}

double moreau_value(const FiniteSumObjective& obj, long long i, double lambda,
                    const Vector& x) {
  if (!obj.component_prox) {
    throw std::invalid_argument("moreau_value: component prox missing");
  }
  Vector p = obj.component_prox(i, lambda, x);
  double d2 = dist2(x, p);
  return obj.component_value(i, p) + d2 * d2 / (2.0 * lambda);
}

ProblemInstance smoothed_instance(const ProblemInstance& inst, double lambda) {
  if (!inst.objective.component_prox) {
    throw std::invalid_argument("smoothed_instance: component prox missing");
  }
  if (lambda <= 0.0) {
    throw std::invalid_argument("smoothed_instance: lambda must be > 0");
  }
  auto base = std::make_shared<FiniteSumObjective>(inst.objective);
  ProblemInstance out = inst;
  out.objective.smoothness = 1.0 / lambda;
  out.objective.lipschitz = 0.0;
  out.objective.component_value = [base, lambda](long long i, const Vector& x) {
    return moreau_value(*base, i, lambda, x);
  };
  out.objective.component_gradient = [base, lambda](long long i,
                                                    const Vector& x) {
    return moreau_gradient(*base, i, lambda, x);
  };
  out.objective.component_prox = nullptr;
  out.case_tag = out.proximal.strong_convexity() > 0.0 ? CaseTag::Case1
                                                       : CaseTag::Case2;
  return out;
}

namespace {

// Shared stage loop. Each stage optionally smooths the components and
// optionally adds a shrinking L2 term, then runs the solver warm-started.
Vector run_stages(const ProblemInstance& inst, double eps,
                  const HoodSolver& solver, bool smooth, bool regularize,
                  Rng& rng, QueryLedger& ledger) {
  if (eps <= 0.0) throw std::invalid_argument("reduction: eps must be > 0");
  if (inst.delta <= 0.0) {
    throw std::invalid_argument("reduction: instance delta metadata missing");
  }
  if (regularize && inst.radius <= 0.0) {
    throw std::invalid_argument("reduction: instance radius metadata missing");
  }
  if (smooth && inst.objective.lipschitz <= 0.0) {
    throw std::invalid_argument("reduction: Lipschitz constant missing");
  }
  ReductionSchedule sched = reduction_schedule(
      inst.delta, eps, regularize ? inst.radius : 0.0,
      smooth ? inst.objective.lipschitz : 0.0);

  Vector x = zeros(inst.objective.d);
  for (long long s = 0; s < sched.stages; ++s) {
    double pow2 = std::ldexp(1.0, static_cast<int>(s));
    ProblemInstance stage = inst;
    if (smooth) {
      stage = smoothed_instance(stage, sched.lambda / pow2);
    }
    if (regularize) {
      stage.proximal = stage.proximal.with_extra_l2(sched.mu_tilde / pow2);
    }
    stage.case_tag = CaseTag::Case1;
    validate_case_tag(stage);
    // The stage gap is at most the original delta plus the regularizer value
    // at the warm start; 2*delta is a safe bound that only enters the log.
    x = solver(stage, x, 2.0 * inst.delta, eps / 4.0, rng, ledger);
  }
  return x;
}

}  // namespace

Vector adapt_reg(const ProblemInstance& inst, double eps,
                 const HoodSolver& solver, Rng& rng, QueryLedger& ledger) {
  if (inst.case_tag != CaseTag::Case2) {
    throw std::invalid_argument("adapt_reg: instance must be Case 2");
  }
  return run_stages(inst, eps, solver, false, true, rng, ledger);
}

Vector adapt_smooth(const ProblemInstance& inst, double eps,
                    const HoodSolver& solver, Rng& rng, QueryLedger& ledger) {
  if (inst.case_tag != CaseTag::Case3) {
    throw std::invalid_argument("adapt_smooth: instance must be Case 3");
  }
  return run_stages(inst, eps, solver, true, false, rng, ledger);
}

Vector adapt_both(const ProblemInstance& inst, double eps,
                  const HoodSolver& solver, Rng& rng, QueryLedger& ledger) {
  if (inst.case_tag != CaseTag::Case4) {
    throw std::invalid_argument("adapt_both: instance must be Case 4");
  }
  return run_stages(inst, eps, solver, true, true, rng, ledger);
}

}  // namespace finsum
