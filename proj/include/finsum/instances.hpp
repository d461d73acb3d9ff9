// Seeded benchmark instances for the optimizer and reduction suites.
#pragma once

#include <cstdint>

#include "finsum/problem.hpp"

namespace finsum {

// Ridge regression: f_i(x) = 0.5*(<a_i,x> - y_i)^2 with max_i ||a_i||^2 = ell,
// psi = (mu/2)||x||^2. Case 1. The exact optimum comes from the normal
// equations; delta and radius are set from it.
ProblemInstance make_ridge(long long n, long long d, double ell, double mu,
                           std::uint64_t seed);

// Least-squares components plus an L1 proximal term (Case 2). delta = F(0)
// and radius = F(0)/lambda1 are certified bounds (F >= 0 and
// lambda1*||x*||_1 <= F(0)).
ProblemInstance make_lasso(long long n, long long d, double ell,
                           double lambda1, std::uint64_t seed);

// Hinge losses f_i(x) = w_i*max(0, 1 - y_i<a_i,x>) with max_i w_i||a_i|| = L,
// psi = (mu/2)||x||^2 (Case 3). Components carry an exact prox, so the
// Moreau-envelope reduction applies. delta = F(0), radius = sqrt(2 F(0)/mu).
ProblemInstance make_hinge_l2(long long n, long long d, double lipschitz,
                              double mu, std::uint64_t seed);

// Absolute losses f_i(x) = w_i*|<a_i,x> - y_i| with psi = 0 (Case 4).
// Components carry an exact prox. delta/radius come from a seeded internal
// subgradient pass (trusted caller metadata).
ProblemInstance make_absolute_flat(long long n, long long d, double lipschitz,
                                   std::uint64_t seed);

// Nonconvex quadratics f_i(x) = 0.5<x, A_i x> + <b_i, x> with indefinite A_i
// whose mean is positive definite; ell = max_i ||A_i||_2 exactly. The exact
// minimizer of the mean is stored as known_optimum.
ProblemInstance make_indefinite_quadratic(long long n, long long d, double ell,
                                          std::uint64_t seed);

// f_i == 0 for all i, with the given proximal term (degenerate edge cases).
ProblemInstance make_zero_objective(long long n, long long d,
                                    const ProximalTerm& psi);

// PSD quadratics f_i(x) = 0.5<x, A_i x> + <b_i, x> with max_i ||A_i||_2 = ell
// and no proximal part; used by estimator statistics suites (Case 2 shape).
ProblemInstance make_psd_quadratic(long long n, long long d, double ell,
                                   std::uint64_t seed);

}  // namespace finsum
