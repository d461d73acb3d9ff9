#include "finsum/instances.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <memory>
#include <stdexcept>

#include "finsum/rng.hpp"

namespace finsum {

namespace {

Eigen::MatrixXd seeded_gaussian(long long rows, long long cols,
                                std::uint64_t seed) {
  Rng rng(seed);
  Eigen::MatrixXd m(rows, cols);
  for (long long i = 0; i < rows; ++i) {
    for (long long j = 0; j < cols; ++j) m(i, j) = rng.normal();
  }
  return m;
}

Vector to_vec(const Eigen::VectorXd& v) {
  return Vector(v.data(), v.data() + v.size());
}

Eigen::Map<const Eigen::VectorXd> as_eigen(const Vector& v) {
  return {v.data(), static_cast<Eigen::Index>(v.size())};
}

// Shared data for linear-model instances: rows a_i, targets y, weights w.
struct LinearData {
  Eigen::MatrixXd A;
  Eigen::VectorXd y;
  Eigen::VectorXd w;
};

std::shared_ptr<LinearData> make_linear_data(long long n, long long d,
                                             std::uint64_t seed) {
  auto data = std::make_shared<LinearData>();
  data->A = seeded_gaussian(n, d, seed);
  Rng rng(splitmix64(seed ^ 0x5151ULL));
  data->y.resize(n);
  for (long long i = 0; i < n; ++i) data->y(i) = rng.normal();
  data->w = Eigen::VectorXd::Ones(n);
  return data;
}

}  // namespace

ProblemInstance make_ridge(long long n, long long d, double ell, double mu,
                           std::uint64_t seed) {
  if (n <= 0 || d <= 0 || ell <= 0.0 || mu <= 0.0) {
    throw std::invalid_argument("make_ridge: bad parameters");
  }
  auto data = make_linear_data(n, d, seed);
  // Per-component smoothness of 0.5*(<a_i,x>-y_i)^2 is ||a_i||^2; rescale so
  // the largest row realizes ell exactly.
  double max_sq = 0.0;
  for (long long i = 0; i < n; ++i) {
    max_sq = std::max(max_sq, data->A.row(i).squaredNorm());
  }
  data->A *= std::sqrt(ell / max_sq);

  ProblemInstance inst;
  inst.objective.n = n;
  inst.objective.d = d;
  inst.objective.smoothness = ell;
  inst.objective.component_value = [data](long long i, const Vector& x) {
    double r = data->A.row(i).dot(as_eigen(x)) - data->y(i);
    return 0.5 * r * r;
  };
  inst.objective.component_gradient = [data](long long i, const Vector& x) {
    double r = data->A.row(i).dot(as_eigen(x)) - data->y(i);
    return to_vec(data->A.row(i).transpose() * r);
  };
  // prox of gamma*f_i: u = x - a_i*(gamma*r/(1+gamma*||a_i||^2)).
  inst.objective.component_prox = [data](long long i, double gamma,
                                         const Vector& x) {
    double r = data->A.row(i).dot(as_eigen(x)) - data->y(i);
    double t = gamma * r / (1.0 + gamma * data->A.row(i).squaredNorm());
    Eigen::VectorXd u = as_eigen(x) - t * data->A.row(i).transpose();
    return to_vec(u);
  };
  inst.proximal = ProximalTerm::l2(mu);
  inst.case_tag = CaseTag::Case1;

  // Exact optimum via the normal equations (A^T A / n + mu I) x = A^T y / n.
  Eigen::MatrixXd H = data->A.transpose() * data->A / static_cast<double>(n) +
                      mu * Eigen::MatrixXd::Identity(d, d);
  Eigen::VectorXd rhs = data->A.transpose() * data->y / static_cast<double>(n);
  Eigen::VectorXd x_star = H.ldlt().solve(rhs);

  KnownOptimum opt;
  opt.x_star = to_vec(x_star);
  double f_star = evaluate(inst, opt.x_star);
  opt.f_lo = opt.f_hi = f_star;
  opt.exact = true;
  inst.known_optimum = opt;
  inst.delta = evaluate(inst, zeros(d)) - f_star;
  inst.radius = x_star.norm();
  return inst;
}

ProblemInstance make_lasso(long long n, long long d, double ell,
                           double lambda1, std::uint64_t seed) {
  if (n <= 0 || d <= 0 || ell <= 0.0 || lambda1 <= 0.0) {
    throw std::invalid_argument("make_lasso: bad parameters");
  }
  ProblemInstance inst = make_ridge(n, d, ell, 1.0, seed);
  inst.proximal = ProximalTerm::l1(lambda1);
  inst.case_tag = CaseTag::Case2;
  inst.known_optimum.reset();
  double f0 = evaluate(inst, zeros(d));
  inst.delta = f0;           // F >= 0, so F(0) - F* <= F(0)
  inst.radius = f0 / lambda1;  // lambda1*||x*||_1 <= F(x*) <= F(0)
  return inst;
}

namespace {

// Hinge and absolute losses share the 1-D prox along a_i.
ProblemInstance make_piecewise_linear(long long n, long long d,
                                      double lipschitz, std::uint64_t seed,
                                      bool hinge) {
  auto data = make_linear_data(n, d, seed);
  for (long long i = 0; i < n; ++i) {
    data->y(i) = hinge ? (i % 2 == 0 ? 1.0 : -1.0) : data->y(i);
  }
  // Lipschitz constant of component i is w_i*||a_i||; normalize to lipschitz.
  double max_norm = 0.0;
  for (long long i = 0; i < n; ++i) {
    max_norm = std::max(max_norm, data->A.row(i).norm());
  }
  data->A *= lipschitz / max_norm;

  ProblemInstance inst;
  inst.objective.n = n;
  inst.objective.d = d;
  inst.objective.lipschitz = lipschitz;
  if (hinge) {
    // f_i(x) = max(0, 1 - y_i*<a_i,x>)
    inst.objective.component_value = [data](long long i, const Vector& x) {
      double m = 1.0 - data->y(i) * data->A.row(i).dot(as_eigen(x));
      return std::max(0.0, m);
    };
    inst.objective.component_gradient = [data, d](long long i,
                                                  const Vector& x) {
      double m = 1.0 - data->y(i) * data->A.row(i).dot(as_eigen(x));
      if (m <= 0.0) return zeros(static_cast<std::size_t>(d));
      return to_vec((-data->y(i)) * data->A.row(i).transpose());
    };
    inst.objective.component_prox = [data](long long i, double gamma,
                                           const Vector& x) {
      double alpha = data->A.row(i).squaredNorm();
      double m = 1.0 - data->y(i) * data->A.row(i).dot(as_eigen(x));
      double t = std::clamp(m / alpha, 0.0, gamma);
      Eigen::VectorXd u =
          as_eigen(x) + (t * data->y(i)) * data->A.row(i).transpose();
      return to_vec(u);
    };
  } else {
    // f_i(x) = |<a_i,x> - y_i|
    inst.objective.component_value = [data](long long i, const Vector& x) {
      return std::abs(data->A.row(i).dot(as_eigen(x)) - data->y(i));
    };
    inst.objective.component_gradient = [data, d](long long i,
                                                  const Vector& x) {
      double r = data->A.row(i).dot(as_eigen(x)) - data->y(i);
      if (r == 0.0) return zeros(static_cast<std::size_t>(d));
      double s = r > 0.0 ? 1.0 : -1.0;
      return to_vec(s * data->A.row(i).transpose());
    };
    inst.objective.component_prox = [data](long long i, double gamma,
                                           const Vector& x) {
      double alpha = data->A.row(i).squaredNorm();
      double r = data->A.row(i).dot(as_eigen(x)) - data->y(i);
      double t = std::clamp(r / alpha, -gamma, gamma);
      Eigen::VectorXd u = as_eigen(x) - t * data->A.row(i).transpose();
      return to_vec(u);
    };
  }
  return inst;
}

}  // namespace

ProblemInstance make_hinge_l2(long long n, long long d, double lipschitz,
                              double mu, std::uint64_t seed) {
  if (n <= 0 || d <= 0 || lipschitz <= 0.0 || mu <= 0.0) {
    throw std::invalid_argument("make_hinge_l2: bad parameters");
  }
  ProblemInstance inst = make_piecewise_linear(n, d, lipschitz, seed, true);
  inst.proximal = ProximalTerm::l2(mu);
  inst.case_tag = CaseTag::Case3;
  double f0 = evaluate(inst, zeros(d));  // hinge at 0 is 1 per component
  inst.delta = f0;
  inst.radius = std::sqrt(2.0 * f0 / mu);
  return inst;
}

ProblemInstance make_absolute_flat(long long n, long long d, double lipschitz,
                                   std::uint64_t seed) {
  if (n <= 0 || d <= 0 || lipschitz <= 0.0) {
    throw std::invalid_argument("make_absolute_flat: bad parameters");
  }
  ProblemInstance inst = make_piecewise_linear(n, d, lipschitz, seed, false);
  inst.proximal = ProximalTerm::zero();
  inst.case_tag = CaseTag::Case4;
  // Rough metadata from a short deterministic subgradient pass.
  Vector x = zeros(d);
  double best = evaluate(inst, x);
  double best_norm = 0.0;
  Vector g(d);
  for (int t = 0; t < 20000; ++t) {
    g = mean_gradient(inst.objective, x);
    double step = 0.5 / std::sqrt(static_cast<double>(t + 1));
    axpy(-step / std::max(1.0, norm2(g)), g, x);
    double f = evaluate(inst, x);
    if (f < best) {
      best = f;
      best_norm = norm2(x);
    }
  }
  inst.delta = evaluate(inst, zeros(d));  // F >= 0
  inst.radius = 1.5 * best_norm + 1.0;
  return inst;
}

ProblemInstance make_indefinite_quadratic(long long n, long long d, double ell,
                                          std::uint64_t seed) {
  if (n <= 0 || d <= 0 || ell <= 0.0) {
    throw std::invalid_argument("make_indefinite_quadratic: bad parameters");
  }
  struct QuadData {
    std::vector<Eigen::MatrixXd> A;
    std::vector<Eigen::VectorXd> b;
  };
  auto data = std::make_shared<QuadData>();
  Rng rng(seed);
  Eigen::MatrixXd mean_A = Eigen::MatrixXd::Zero(d, d);
  for (long long i = 0; i < n; ++i) {
    Eigen::MatrixXd M = seeded_gaussian(d, d, derive_seed(seed, i));
    Eigen::MatrixXd S = 0.5 * (M + M.transpose());
    data->A.push_back(S);
    Eigen::VectorXd bi(d);
    for (long long j = 0; j < d; ++j) bi(j) = rng.normal();
    data->b.push_back(bi);
    mean_A += S;
  }
  mean_A /= static_cast<double>(n);
  // Shift every A_i by the same multiple of I so the mean becomes positive
  // definite while the components stay indefinite.
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(mean_A);
  double shift = 0.5 - es.eigenvalues().minCoeff();
  for (auto& A : data->A) A += shift * Eigen::MatrixXd::Identity(d, d);
  mean_A += shift * Eigen::MatrixXd::Identity(d, d);

  // Rescale so that max_i ||A_i||_2 = ell exactly.
  double max_spec = 0.0;
  for (const auto& A : data->A) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> e(A);
    max_spec = std::max(max_spec, e.eigenvalues().cwiseAbs().maxCoeff());
  }
  double scale_f = ell / max_spec;
  for (auto& A : data->A) A *= scale_f;
  for (auto& b : data->b) b *= scale_f;
  mean_A *= scale_f;

  ProblemInstance inst;
  inst.objective.n = n;
  inst.objective.d = d;
  inst.objective.smoothness = ell;
  inst.objective.component_value = [data](long long i, const Vector& x) {
    auto xv = as_eigen(x);
    return 0.5 * xv.dot(data->A[i] * xv) + data->b[i].dot(xv);
  };
  inst.objective.component_gradient = [data](long long i, const Vector& x) {
    auto xv = as_eigen(x);
    return to_vec(data->A[i] * xv + data->b[i]);
  };
  inst.proximal = ProximalTerm::zero();
  inst.case_tag = CaseTag::Nonconvex;

  Eigen::VectorXd mean_b = Eigen::VectorXd::Zero(d);
  for (const auto& b : data->b) mean_b += b;
  mean_b /= static_cast<double>(n);
  Eigen::VectorXd x_star = mean_A.ldlt().solve(-mean_b);

  KnownOptimum opt;
  opt.x_star = to_vec(x_star);
  double f_star = evaluate(inst, opt.x_star);
  opt.f_lo = opt.f_hi = f_star;
  opt.exact = true;
  inst.known_optimum = opt;
  inst.delta = evaluate(inst, zeros(d)) - f_star;
  inst.radius = x_star.norm();
  return inst;
}

ProblemInstance make_zero_objective(long long n, long long d,
                                    const ProximalTerm& psi) {
  ProblemInstance inst;
  inst.objective.n = n;
  inst.objective.d = d;
  inst.objective.smoothness = 1.0;
  inst.objective.component_value = [](long long, const Vector&) { return 0.0; };
  inst.objective.component_gradient = [d](long long, const Vector&) {
    return zeros(static_cast<std::size_t>(d));
  };
  inst.proximal = psi;
  inst.case_tag =
      psi.strong_convexity() > 0.0 ? CaseTag::Case1 : CaseTag::Case2;
  KnownOptimum opt;
  opt.x_star = zeros(d);
  opt.f_lo = opt.f_hi = 0.0;
  opt.exact = true;
  inst.known_optimum = opt;
  inst.delta = 0.0;
  inst.radius = 0.0;
  return inst;
}

ProblemInstance make_psd_quadratic(long long n, long long d, double ell,
                                   std::uint64_t seed) {
  struct QuadData {
    std::vector<Eigen::MatrixXd> A;
    std::vector<Eigen::VectorXd> b;
  };
  auto data = std::make_shared<QuadData>();
  Rng rng(seed);
  double max_spec = 0.0;
  for (long long i = 0; i < n; ++i) {
    Eigen::MatrixXd M = seeded_gaussian(d, d, derive_seed(seed, i));
    Eigen::MatrixXd S = M * M.transpose() / static_cast<double>(d);
    data->A.push_back(S);
    Eigen::VectorXd bi(d);
    for (long long j = 0; j < d; ++j) bi(j) = rng.normal();
    data->b.push_back(bi);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> e(S);
    max_spec = std::max(max_spec, e.eigenvalues().maxCoeff());
  }
  for (auto& A : data->A) A *= ell / max_spec;

  ProblemInstance inst;
  inst.objective.n = n;
  inst.objective.d = d;
  inst.objective.smoothness = ell;
  inst.objective.component_value = [data](long long i, const Vector& x) {
    auto xv = as_eigen(x);
    return 0.5 * xv.dot(data->A[i] * xv) + data->b[i].dot(xv);
  };
  inst.objective.component_gradient = [data](long long i, const Vector& x) {
    auto xv = as_eigen(x);
    return to_vec(data->A[i] * xv + data->b[i]);
  };
  inst.proximal = ProximalTerm::zero();
  inst.case_tag = CaseTag::Case2;
  return inst;
}

}  // namespace finsum
