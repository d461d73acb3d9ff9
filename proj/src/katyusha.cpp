#include "finsum/katyusha.hpp"

#include <cmath>
#include <stdexcept>

#include "finsum/qvrg.hpp"

namespace finsum {

// Smallest integer v with v^3 * d >= n^2, i.e. ceil(n^{2/3} d^{-1/3}) without
// floating-point edge cases.
static long long ceil_n23_d13(long long n, long long d) {
  long long target_num = n * n;
  long long v = static_cast<long long>(
      std::floor(std::cbrt(static_cast<double>(target_num) /
                           static_cast<double>(d))));
  v = std::max(1LL, v - 1);
  while (v * v * v * d < target_num) ++v;
  return v;
}

KatyushaParams katyusha_params(long long n, long long d, double ell, double mu,
                               double delta, double eps) {
  if (n <= 0 || d <= 0 || ell <= 0.0 || mu <= 0.0 || delta <= 0.0 ||
      eps <= 0.0) {
    throw std::invalid_argument("katyusha_params: all inputs must be positive");
  }
  KatyushaParams p;
  p.b = ceil_n23_d13(n, d);
  p.m = p.b;
  p.tau2 = 1.0 / (2.0 * static_cast<double>(p.b));
  double bm_mu = static_cast<double>(p.b) * static_cast<double>(p.m) * mu;
  p.tau1 = p.tau2 * std::min(std::sqrt(8.0 * bm_mu / (3.0 * ell)), 1.0);
  if (eps >= delta) {
    p.S = 1;
    p.eps_clamped = true;
    return p;
  }
  double s = 5.0 * (1.0 + std::sqrt(ell / bm_mu)) * std::log2(delta / eps);
  p.S = std::max(1LL, static_cast<long long>(std::ceil(s)));
  return p;
}

static void validate_params(const ProblemInstance& inst,
                            const KatyushaParams& p) {
  if (inst.objective.smoothness <= 0.0) {
    throw std::invalid_argument("run_q_katyusha: instance must be smooth");
  }
  if (inst.proximal.strong_convexity() <= 0.0) {
    throw std::invalid_argument(
        "run_q_katyusha: proximal term must be strongly convex (Case 1)");
  }
  if (p.S < 1 || p.b < 1 || p.m < 1) {
    throw std::invalid_argument("run_q_katyusha: S, b, m must be >= 1");
  }
  if (!(p.tau1 > 0.0) || !(p.tau2 > 0.0) || p.tau1 + p.tau2 > 1.0) {
    throw std::invalid_argument(
        "run_q_katyusha: tau1, tau2 must be positive with tau1 + tau2 <= 1");
  }
}

Trajectory run_q_katyusha(const ProblemInstance& inst,
                          const KatyushaParams& p, Rng& rng,
                          QueryLedger& ledger, const KatyushaOptions& options) {
  validate_params(inst, p);
  const long long d = inst.objective.d;
  const double ell = inst.objective.smoothness;
  const double tau1 = p.tau1;
  const double tau2 = p.tau2;
  const double tau3 = 1.0 - tau1 - tau2;

  Vector x_tilde = options.x0.empty() ? zeros(d) : options.x0;
  check_dim(x_tilde, static_cast<std::size_t>(d), "run_q_katyusha x0");
  Vector y = x_tilde;
  Vector z = x_tilde;

  Trajectory traj;
  traj.params = p;
  traj.epochs.push_back({0, evaluate(inst, x_tilde),
                         ledger.classical_total(), ledger.quantum_total()});

  Vector x_next(d), grad_est(d);
  const double qvrg_charge =
      std::ceil(std::sqrt(static_cast<double>(p.b) * static_cast<double>(d)));

  for (long long s = 0; s < p.S; ++s) {
    Vector gamma = full_gradient(inst, x_tilde, ledger);
    Vector y_sum = zeros(d);
    for (long long j = 0; j < p.m; ++j) {
      for (long long c = 0; c < d; ++c) {
        x_next[c] = tau1 * z[c] + tau2 * x_tilde[c] + tau3 * y[c];
      }
      if (options.exact_vrg) {
        grad_est = gbar_exact(inst, x_next, x_tilde);
        ledger.charge_classical("qvrg", 2 * inst.objective.n);
        ledger.charge_quantum("qvrg", qvrg_charge);
      } else {
        // sigma_hat = ell*||x_{k+1} - x_tilde||/sqrt(b): the variance ratio
        // is b by construction, so batch = b and charge = ceil(sqrt(b*d)).
        grad_est = qvrg_with_ratio(inst, x_next, x_tilde,
                                   static_cast<double>(p.b), rng, ledger)
                       .estimate;
      }
      axpy(1.0, gamma, grad_est);  // full estimator gamma^s + g_hat
      z = prox_step(inst.proximal, 3.0 * tau1 * ell, z, grad_est);
      y = prox_step(inst.proximal, 3.0 * ell, x_next, grad_est);
      axpy(1.0, y, y_sum);
    }
    scale(y_sum, 1.0 / static_cast<double>(p.m));
    x_tilde = y_sum;
    traj.epochs.push_back({s + 1, evaluate(inst, x_tilde),
                           ledger.classical_total(), ledger.quantum_total()});
  }

  // Weighted combination of the last snapshot and the final inner iterate.
  double wa = tau2 * static_cast<double>(p.m);
  double wb = tau3;
  Vector out = scaled(x_tilde, wa / (wa + wb));
  axpy(wb / (wa + wb), y, out);
  traj.x_out = std::move(out);
  return traj;
}

bool check_hood(const ProblemInstance& inst, const Vector& x0, int num_seeds,
                std::uint64_t seed, QueryLedger& ledger) {
  if (!inst.known_optimum.has_value()) {
    throw std::invalid_argument("check_hood: known optimum required");
  }
  if (inst.proximal.strong_convexity() <= 0.0) {
    throw std::invalid_argument("check_hood: instance must be strongly convex");
  }
  if (num_seeds < 1) {
    throw std::invalid_argument("check_hood: num_seeds must be >= 1");
  }
  const double f_star = inst.known_optimum->reference_value();
  Vector start = x0.empty() ? zeros(inst.objective.d) : x0;
  const double gap0 = evaluate(inst, start) - f_star;
  if (gap0 <= 0.0) return true;  // already optimal

  KatyushaParams params =
      katyusha_params(inst.objective.n, inst.objective.d,
                      inst.objective.smoothness,
                      inst.proximal.strong_convexity(), gap0, gap0 / 4.0);
  double total_err = 0.0;
  for (int r = 0; r < num_seeds; ++r) {
    Rng rng(derive_seed(seed, static_cast<std::uint64_t>(r)));
    KatyushaOptions opt;
    opt.x0 = start;
    Trajectory traj = run_q_katyusha(inst, params, rng, ledger, opt);
    total_err += evaluate(inst, traj.x_out) - f_star;
  }
  double mean_err = total_err / static_cast<double>(num_seeds);
  return mean_err <= (gap0 / 4.0) * 1.1;
}

}  // namespace finsum
