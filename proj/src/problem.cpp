#include "finsum/problem.hpp"

#include <cmath>
#include <stdexcept>

namespace finsum {

std::string case_tag_name(CaseTag tag) {
  switch (tag) {
    case CaseTag::Case1: return "case1";
    case CaseTag::Case2: return "case2";
    case CaseTag::Case3: return "case3";
    case CaseTag::Case4: return "case4";
    case CaseTag::Nonconvex: return "nonconvex";
  }
  return "unknown";
}

ProximalTerm ProximalTerm::l2(double mu) {
  if (mu <= 0.0) throw std::invalid_argument("ProximalTerm::l2: mu must be > 0");
  ProximalTerm p;
  p.l2_mu_ = mu;
  return p;
}

ProximalTerm ProximalTerm::l1(double lambda1) {
  if (lambda1 <= 0.0) {
    throw std::invalid_argument("ProximalTerm::l1: lambda1 must be > 0");
  }
  ProximalTerm p;
  p.l1_ = lambda1;
  return p;
}

ProximalTerm ProximalTerm::with_extra_l2(double mu_extra) const {
  if (mu_extra < 0.0) {
    throw std::invalid_argument("with_extra_l2: mu_extra must be >= 0");
  }
  ProximalTerm p = *this;
  p.l2_mu_ += mu_extra;
  return p;
}

double ProximalTerm::value(const Vector& x) const {
  double v = 0.0;
  if (l1_ > 0.0) {
    double s = 0.0;
    for (double xi : x) s += std::abs(xi);
    v += l1_ * s;
  }
  if (l2_mu_ > 0.0) v += 0.5 * l2_mu_ * norm2_sq(x);
  return v;
}

static double soft_threshold(double t, double tau) {
  if (t > tau) return t - tau;
  if (t < -tau) return t + tau;
  return 0.0;
}

Vector prox_step(const ProximalTerm& psi, double a, const Vector& anchor,
                 const Vector& g) {
  if (a <= 0.0) throw std::invalid_argument("prox_step: a must be > 0");
  check_dim(g, anchor.size(), "prox_step");
  // First-order condition: a(z - anchor) + g + lambda1*sign(z) + mu*z = 0,
  // solved coordinatewise by soft-thresholding a*anchor - g at lambda1 and
  // dividing by a + mu.
  const double lambda1 = psi.l1_weight();
  const double mu = psi.strong_convexity();
  Vector z(anchor.size());
  for (std::size_t i = 0; i < anchor.size(); ++i) {
    z[i] = soft_threshold(a * anchor[i] - g[i], lambda1) / (a + mu);
  }
  return z;
}

void validate_case_tag(const ProblemInstance& inst) {
  const double ell = inst.objective.smoothness;
  const double lip = inst.objective.lipschitz;
  const double mu = inst.proximal.strong_convexity();
  bool ok = true;
  switch (inst.case_tag) {
    case CaseTag::Case1: ok = ell > 0.0 && mu > 0.0; break;
    case CaseTag::Case2: ok = ell > 0.0 && mu == 0.0; break;
    case CaseTag::Case3: ok = lip > 0.0 && mu > 0.0; break;
    case CaseTag::Case4: ok = lip > 0.0 && mu == 0.0; break;
    case CaseTag::Nonconvex: ok = ell > 0.0; break;
  }
  if (!ok) {
    throw std::invalid_argument("case tag " + case_tag_name(inst.case_tag) +
                                " inconsistent with (ell, L, mu) population");
  }
}

double evaluate(const ProblemInstance& inst, const Vector& x) {
  check_dim(x, static_cast<std::size_t>(inst.objective.d), "evaluate");
  double s = 0.0;
  for (long long i = 0; i < inst.objective.n; ++i) {
    s += inst.objective.component_value(i, x);
  }
  return s / static_cast<double>(inst.objective.n) + inst.proximal.value(x);
}

Vector mean_gradient(const FiniteSumObjective& obj, const Vector& x) {
  check_dim(x, static_cast<std::size_t>(obj.d), "mean_gradient");
  Vector g = zeros(x.size());
  for (long long i = 0; i < obj.n; ++i) {
    axpy(1.0, obj.component_gradient(i, x), g);
  }
  scale(g, 1.0 / static_cast<double>(obj.n));
  return g;
}

Vector full_gradient(const ProblemInstance& inst, const Vector& x,
                     QueryLedger& ledger, const std::string& phase) {
  Vector g = mean_gradient(inst.objective, x);
  ledger.charge_classical(phase, inst.objective.n);
  ledger.charge_quantum(phase, static_cast<double>(inst.objective.n));
  return g;
}

}  // namespace finsum
