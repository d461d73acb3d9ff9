#include "finsum/spider.hpp"

#include <cmath>
#include <stdexcept>

#include "finsum/qvrg.hpp"

namespace finsum {

static long long ceil_n23_d13(long long n, long long d) {
  long long target_num = n * n;
  long long v = static_cast<long long>(
      std::floor(std::cbrt(static_cast<double>(target_num) /
                           static_cast<double>(d))));
  v = std::max(1LL, v - 1);
  while (v * v * v * d < target_num) ++v;
  return v;
}

SpiderParams spider_params(long long n, long long d, double ell, double delta,
                           double eps) {
  if (n <= 0 || d <= 0 || ell <= 0.0 || delta <= 0.0 || eps <= 0.0) {
    throw std::invalid_argument("spider_params: all inputs must be positive");
  }
  SpiderParams p;
  p.period_q = ceil_n23_d13(n, d);
  p.eps_hat = eps / 5.0;
  p.T = std::max(1LL, static_cast<long long>(
                          std::ceil(4.0 * ell * delta / (eps * eps))));
  return p;
}

SpiderResult run_fs_q_spider(const ProblemInstance& inst,
                             const SpiderParams& p, Rng& rng,
                             QueryLedger& ledger, bool record_steps) {
  if (inst.case_tag != CaseTag::Nonconvex) {
    throw std::invalid_argument("run_fs_q_spider: instance must be nonconvex");
  }
  if (inst.objective.smoothness <= 0.0) {
    throw std::invalid_argument("run_fs_q_spider: instance must be smooth");
  }
  if (!inst.proximal.is_zero()) {
    throw std::invalid_argument("run_fs_q_spider: proximal term must be zero");
  }
  const long long d = inst.objective.d;
  const double ell = inst.objective.smoothness;
  const double step = p.eps_hat / (2.0 * ell);

  std::vector<Vector> iterates;
  iterates.reserve(static_cast<std::size_t>(p.T));
  Vector x = zeros(d);
  Vector v(d);

  SpiderResult result;
  for (long long t = 0; t < p.T; ++t) {
    iterates.push_back(x);
    if (t % p.period_q == 0) {
      v = full_gradient(inst, x, ledger);
    } else {
      // sigma_hat = eps_hat/sqrt(2q); the previous step had unit length
      // eps_hat/(2*ell), so the variance ratio is q/2 by construction.
      Vector g = qvrg_with_ratio(inst, x, iterates[t - 1],
                                 static_cast<double>(p.period_q) / 2.0, rng,
                                 ledger)
                     .estimate;
      axpy(1.0, g, v);
    }
    double v_norm = norm2(v);
    if (record_steps) {
      result.steps.push_back({t, v_norm, t % p.period_q == 0,
                              ledger.classical_total(),
                              ledger.quantum_total()});
    }
    if (v_norm <= p.eps_hat) {
      result.x_out = x;
      result.early_exit = true;
      result.exit_t = t;
      if (record_steps) result.iterates = std::move(iterates);
      return result;
    }
    axpy(-step / v_norm, v, x);
  }
  // Budget exhausted: uniformly random past iterate.
  std::size_t pick = rng.index(iterates.size());
  result.x_out = iterates[pick];
  if (record_steps) result.iterates = std::move(iterates);
  return result;
}

}  // namespace finsum
