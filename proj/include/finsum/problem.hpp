// Finite-sum objectives F(x) = (1/n) sum_i f_i(x) + psi(x), proximal terms
// with exact closed-form prox, and the exact proximal step used by the
// accelerated inner loop.
#pragma once

#include <functional>
#include <optional>
#include <string>

#include "finsum/ledger.hpp"
#include "finsum/vec.hpp"

namespace finsum {

enum class CaseTag { Case1, Case2, Case3, Case4, Nonconvex };

std::string case_tag_name(CaseTag tag);

// psi(x) = lambda1*||x||_1 + (mu/2)*||x||^2. The three supported kinds are
// Zero (0,0), L2 (0,mu) and L1 (lambda1,0); the composite form appears only
// when a reduction stacks an extra L2 term on an existing psi. Every form has
// an exact closed-form prox.
class ProximalTerm {
 public:
  ProximalTerm() = default;

  static ProximalTerm zero() { return ProximalTerm(); }
  static ProximalTerm l2(double mu);
  static ProximalTerm l1(double lambda1);

  // psi + (mu_extra/2)||x||^2, used by the regularization reduction.
  ProximalTerm with_extra_l2(double mu_extra) const;

  double value(const Vector& x) const;
  // mu of the L2 part; the strong-convexity modulus of psi.
  double strong_convexity() const { return l2_mu_; }
  double l1_weight() const { return l1_; }
  bool is_zero() const { return l1_ == 0.0 && l2_mu_ == 0.0; }

 private:
  double l1_ = 0.0;
  double l2_mu_ = 0.0;
};

// Exact minimizer of (a/2)||z - anchor||^2 + <g, z> + psi(z). a must be > 0.
Vector prox_step(const ProximalTerm& psi, double a, const Vector& anchor,
                 const Vector& g);

struct FiniteSumObjective {
  long long n = 0;
  long long d = 0;
  std::function<double(long long, const Vector&)> component_value;
  std::function<Vector(long long, const Vector&)> component_gradient;
  double smoothness = 0.0;  // per-component ell; 0 means "not smooth"
  double lipschitz = 0.0;   // per-component L; 0 means "not Lipschitz"
  // Optional prox of gamma*f_i at x (argmin_u f_i(u) + ||u-x||^2/(2*gamma)).
  std::function<Vector(long long, double, const Vector&)> component_prox;
};

struct KnownOptimum {
  Vector x_star;
  double f_lo = 0.0;  // certified interval [f_lo, f_hi] for F*
  double f_hi = 0.0;
  bool exact = false;

  double reference_value() const { return exact ? f_lo : 0.5 * (f_lo + f_hi); }
};

struct ProblemInstance {
  FiniteSumObjective objective;
  ProximalTerm proximal;
  CaseTag case_tag = CaseTag::Case1;
  double delta = 0.0;   // caller-supplied bound on F(0) - F*
  double radius = 0.0;  // caller-supplied bound on ||x*||
  std::optional<KnownOptimum> known_optimum;
};

// Checks the case tag against the populated (ell, L, mu) fields.
void validate_case_tag(const ProblemInstance& inst);

double evaluate(const ProblemInstance& inst, const Vector& x);

// (1/n) sum_i grad f_i(x); charges exactly n classical and n modeled quantum
// queries (a full pass uses the oracle without superposition).
Vector full_gradient(const ProblemInstance& inst, const Vector& x,
                     QueryLedger& ledger,
                     const std::string& phase = "full_gradient");

// Same mean gradient without touching any ledger (diagnostics, references).
Vector mean_gradient(const FiniteSumObjective& obj, const Vector& x);

}  // namespace finsum
