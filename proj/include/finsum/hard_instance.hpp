// Lower-bound hard instances: chained orthonormal-block constructions with
// piecewise helper functions, their closed-form surrogate minimizers, and a
// checker that certifies the suboptimality of points whose inner products
// with the hidden vectors are small.
#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "finsum/problem.hpp"

namespace finsum {

enum class HelperKind { Phi, Chi };

// Phi (4-smooth): 0 for |z| <= c, 2(|z|-c)^2 for c < |z| <= 2c, z^2 - 2c^2
// beyond; satisfies z^2 - 2c^2 <= phi_c(z) <= z^2 everywhere.
// Chi (1-Lipschitz): max{0, |z| - c}.
struct HelperFn {
  HelperKind kind = HelperKind::Phi;
  double c = 1.0;
};

struct HelperEval {
  double value = 0.0;
  double derivative = 0.0;  // at kinks: 0 inside/at the boundary, else exact
};

HelperEval helper_eval(const HelperFn& fn, double z);

struct HardInstanceSpec {
  int case_id = 1;               // 1, 2, 3, 4
  long long n = 4;               // number of components; must be even
  long long d = 0;               // 0 requests the minimal (n/2)*(k+1)
  double mu = 0.0;               // case 1 strong convexity (n*mu < 1)
  double eps = 1e-4;             // lemma accuracy parameter
  double delta = 1.0;            // case 1 gap parameter
  long long query_budget = 10000;  // N entering c = min{1/sqrt(N), ...}
  std::uint64_t seed = 0;
};

struct HardInstance {
  HardInstanceSpec spec;
  long long k = 0;
  long long d = 0;
  // Derived parameters; fields not used by a case stay zero.
  double C = 0.0;
  double c = 0.0;
  double zeta = 0.0;
  double mu_tilde = 0.0;
  double Q = 0.0;
  double q_ratio = 0.0;
  double b_offset = 0.0;
  double reg_mu = 0.0;  // case 3 regularizer strength eps/R^2

  // Globally orthonormal vectors, index (i, r) -> i*(k+1) + r for
  // i = 0..n/2-1 and r = 0..k.
  std::shared_ptr<std::vector<Vector>> vectors;
  ProblemInstance instance;

  // Certified data from the quadratic surrogate per block.
  Vector x_hat;
  double f_upper = 0.0;  // F(x_hat), a feasible upper bound on F*
  double f_lower = 0.0;  // surrogate optimum minus aggregated sandwich slack

  const Vector& v(long long i, long long r) const {
    return (*vectors)[static_cast<std::size_t>(i * (k + 1) + r)];
  }
};

// Minimal admissible dimension for the given block layout.
long long hard_instance_min_dim(long long n, long long k);

// Draws the orthonormal blocks from the seed, assembles the component
// oracles, and computes all derived parameters and certified bounds. Throws
// with the violated lemma condition when the parameter regime is invalid.
HardInstance gen_hard_instance(const HardInstanceSpec& spec);

struct MinimizerData {
  Vector x_hat;
  double f_upper = 0.0;
  double f_lower = 0.0;
};

// Recomputes the surrogate minimizer and certified interval from the stored
// blocks (gen_hard_instance caches the same values on the instance).
MinimizerData closed_form_minimizer(const HardInstance& inst);

enum class Verdict { Consistent, Violates };

// Tests the generating lemma on one point: if x satisfies the lemma's
// small-inner-product hypothesis, an eps-optimal value would contradict it,
// so the verdict is Violates iff F(x) - f_lower < eps (eps/2 for the
// regularized case 3). Points that miss the hypothesis are vacuously
// consistent. eps must equal the generation-time value.
Verdict suboptimality_check(const HardInstance& inst, const Vector& x,
                            double eps);

}  // namespace finsum
