#include <doctest.h>

#include <cmath>

#include "finsum/instances.hpp"
#include "finsum/qvrg.hpp"

using namespace finsum;

TEST_CASE("identical points return the exact zero vector at zero cost") {
  ProblemInstance inst = make_psd_quadratic(4, 5, 1.0, 3);
  Rng rng(1);
  QueryLedger ledger;
  Vector x = rng.gaussian(5);
  EstimateResult r = qvrg(inst, x, x, 0.5, rng, ledger);
  CHECK(r.estimate == zeros(5));
  CHECK(ledger.classical_total() == 0);
  CHECK(ledger.quantum_total() == 0.0);
}

TEST_CASE("non-smooth instances are rejected") {
  ProblemInstance inst = make_absolute_flat(4, 3, 1.0, 5);
  Rng rng(1);
  QueryLedger ledger;
  Vector x = zeros(3), y = {1.0, 0.0, 0.0};
  CHECK_THROWS(qvrg(inst, x, y, 0.5, rng, ledger));
}

TEST_CASE("two-quadratic instance has constant difference gradients") {
  // f_i(x) = 0.5||x - c_i||^2: g_i = x - x_ref independent of i, so the
  // estimator is exact and gbar = x - x_ref.
  std::vector<Vector> centers = {{1.0, -2.0}, {0.5, 3.0}};
  ProblemInstance inst;
  inst.objective.n = 2;
  inst.objective.d = 2;
  inst.objective.smoothness = 1.0;
  inst.objective.component_value = [&centers](long long i, const Vector& x) {
    double s = dist2(x, centers[static_cast<std::size_t>(i)]);
    return 0.5 * s * s;
  };
  inst.objective.component_gradient = [&centers](long long i, const Vector& x) {
    return sub(x, centers[static_cast<std::size_t>(i)]);
  };
  Vector x = {0.4, 0.6}, x_ref = {-1.0, 2.0};
  Vector expect = sub(x, x_ref);
  Rng rng(7);
  QueryLedger ledger;
  EstimateResult r = qvrg(inst, x, x_ref, 0.3, rng, ledger);
  CHECK(std::abs(r.estimate[0] - expect[0]) < 1e-14);
  CHECK(std::abs(r.estimate[1] - expect[1]) < 1e-14);
  // enumeration oracle agrees
  Vector gb = gbar_exact(inst, x, x_ref);
  CHECK(std::abs(gb[0] - expect[0]) < 1e-14);
  CHECK(std::abs(gb[1] - expect[1]) < 1e-14);
}

TEST_CASE("unbiasedness, variance and the per-sample norm bound") {
  ProblemInstance inst = make_psd_quadratic(8, 8, 1.0, 21);
  Rng point_rng(4);
  Vector x = point_rng.gaussian(8);
  Vector x_ref = point_rng.gaussian(8);
  double sigma = qvrg_sigma(inst, x, x_ref);
  double sigma_hat = sigma / 2.0;
  Vector gbar = gbar_exact(inst, x, x_ref);

  const int reps = 10000;
  Rng rng(2025);
  QueryLedger ledger;
  Vector mean = zeros(8);
  double mse = 0.0;
  for (int r = 0; r < reps; ++r) {
    EstimateResult e = qvrg(inst, x, x_ref, sigma_hat, rng, ledger);
    axpy(1.0, e.estimate, mean);
    double d = dist2(e.estimate, gbar);
    mse += d * d;
  }
  scale(mean, 1.0 / reps);
  mse /= reps;
  CHECK(dist2(mean, gbar) <= 4.0 * sigma_hat / std::sqrt(double(reps)));
  CHECK(mse <= 1.2 * sigma_hat * sigma_hat);

  // Every sampled difference obeys ||g_i|| <= ell*||x - x_ref||.
  for (long long i = 0; i < inst.objective.n; ++i) {
    Vector gi = sub(inst.objective.component_gradient(i, x),
                    inst.objective.component_gradient(i, x_ref));
    CHECK(norm2(gi) <= sigma + 1e-9);
  }
}

TEST_CASE("ratio call site pins batch and charge") {
  ProblemInstance inst = make_psd_quadratic(6, 4, 1.0, 9);
  Rng rng(11);
  Vector x = rng.gaussian(4), x_ref = rng.gaussian(4);

  SUBCASE("batch b, charge ceil(sqrt(b*d))") {
    QueryLedger ledger;
    EstimateResult r = qvrg_with_ratio(inst, x, x_ref, 4.0, rng, ledger);
    CHECK(r.classical_cost == 8);  // b = 4 samples at 2 classical each
    CHECK(r.quantum_modeled_cost == 4.0);  // ceil(sqrt(4*4))
    CHECK(ledger.phase("qvrg").classical == 8);
  }

  SUBCASE("coincident points still pay the structural cost") {
    QueryLedger ledger;
    EstimateResult r = qvrg_with_ratio(inst, x, x, 4.0, rng, ledger);
    CHECK(r.estimate == zeros(4));
    CHECK(r.classical_cost == 8);
    CHECK(r.quantum_modeled_cost == 4.0);
  }
}

TEST_CASE("mlmc demo path keeps the contract") {
  ProblemInstance inst = make_psd_quadratic(6, 4, 1.0, 33);
  Rng point_rng(5);
  Vector x = point_rng.gaussian(4), x_ref = point_rng.gaussian(4);
  double sigma = qvrg_sigma(inst, x, x_ref);
  double sigma_hat = sigma / 1.5;
  Vector gbar = gbar_exact(inst, x, x_ref);

  const int reps = 4000;
  Rng rng(6060);
  QueryLedger ledger;
  Vector mean = zeros(4);
  double mse = 0.0;
  for (int r = 0; r < reps; ++r) {
    EstimateResult e =
        qvrg(inst, x, x_ref, sigma_hat, rng, ledger, "qvrg", QvrgMode::MlmcDemo);
    axpy(1.0, e.estimate, mean);
    double d = dist2(e.estimate, gbar);
    mse += d * d;
  }
  scale(mean, 1.0 / reps);
  mse /= reps;
  CHECK(dist2(mean, gbar) <= 4.0 * sigma_hat / std::sqrt(double(reps)));
  CHECK(mse <= 1.2 * sigma_hat * sigma_hat);
}
