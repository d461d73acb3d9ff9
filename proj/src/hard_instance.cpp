#include "finsum/hard_instance.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <stdexcept>
#include <string>

#include "finsum/rng.hpp"

namespace finsum {

HelperEval helper_eval(const HelperFn& fn, double z) {
  const double c = fn.c;
  const double az = std::abs(z);
  const double sgn = z > 0.0 ? 1.0 : (z < 0.0 ? -1.0 : 0.0);
  if (fn.kind == HelperKind::Phi) {
    if (az <= c) return {0.0, 0.0};
    if (az <= 2.0 * c) {
      double t = az - c;
      return {2.0 * t * t, 4.0 * t * sgn};
    }
    return {z * z - 2.0 * c * c, 2.0 * z};
  }
  // Chi
  if (az <= c) return {0.0, 0.0};
  return {az - c, sgn};
}

long long hard_instance_min_dim(long long n, long long k) {
  return (n / 2) * (k + 1);
}

namespace {

[[noreturn]] void fail(const std::string& msg) {
  throw std::invalid_argument("gen_hard_instance: " + msg);
}

// Data captured by the component oracles.
struct HardData {
  int case_id;
  long long n_half;
  long long k;
  long long d;
  double scale;    // (1 - mu_tilde)/16 for case 1, 1/16 for case 2
  double C;
  double c;
  double zeta;
  double b;        // case 4 offset
  std::vector<Vector> v;

  const Vector& vec(long long i, long long r) const {
    return v[static_cast<std::size_t>(i * (k + 1) + r)];
  }

  std::vector<double> inner_products(long long i, const Vector& x) const {
    std::vector<double> a(static_cast<std::size_t>(k + 1));
    for (long long r = 0; r <= k; ++r) a[r] = dot(x, vec(i, r));
    return a;
  }
};

// Component index mapping: component 2*i + (pair - 1) for pair in {1, 2}.
double phi_pair_value(const HardData& hd, int pair,
                      const std::vector<double>& a) {
  HelperFn phi{HelperKind::Phi, hd.c};
  double s = 0.0;
  if (pair == 1) {
    s += a[0] * a[0] - 2.0 * hd.C * a[0];
    for (long long r = 2; r <= hd.k; r += 2) {
      s += helper_eval(phi, a[r - 1] - a[r]).value;
    }
  } else {
    s += hd.zeta * helper_eval(phi, a[hd.k]).value;
    for (long long r = 1; r <= hd.k; r += 2) {
      s += helper_eval(phi, a[r - 1] - a[r]).value;
    }
  }
  return hd.scale * s;
}

Vector phi_pair_gradient(const HardData& hd, long long i, int pair,
                         const std::vector<double>& a) {
  HelperFn phi{HelperKind::Phi, hd.c};
  Vector g = zeros(static_cast<std::size_t>(hd.d));
  if (pair == 1) {
    axpy(hd.scale * (2.0 * a[0] - 2.0 * hd.C), hd.vec(i, 0), g);
    for (long long r = 2; r <= hd.k; r += 2) {
      double dz = helper_eval(phi, a[r - 1] - a[r]).derivative;
      if (dz != 0.0) {
        axpy(hd.scale * dz, hd.vec(i, r - 1), g);
        axpy(-hd.scale * dz, hd.vec(i, r), g);
      }
    }
  } else {
    double dk = helper_eval(phi, a[hd.k]).derivative;
    if (dk != 0.0) axpy(hd.scale * hd.zeta * dk, hd.vec(i, hd.k), g);
    for (long long r = 1; r <= hd.k; r += 2) {
      double dz = helper_eval(phi, a[r - 1] - a[r]).derivative;
      if (dz != 0.0) {
        axpy(hd.scale * dz, hd.vec(i, r - 1), g);
        axpy(-hd.scale * dz, hd.vec(i, r), g);
      }
    }
  }
  return g;
}

double chi_pair_value(const HardData& hd, int pair,
                      const std::vector<double>& a) {
  HelperFn chi{HelperKind::Chi, hd.c};
  const double w = 1.0 / (2.0 * std::sqrt(static_cast<double>(hd.k)));
  double s = 0.0;
  if (pair == 1) {
    s += std::abs(hd.b - a[0]) / std::sqrt(2.0);
    for (long long r = 2; r <= hd.k; r += 2) {
      s += w * helper_eval(chi, a[r - 1] - a[r]).value;
    }
  } else {
    for (long long r = 1; r <= hd.k; r += 2) {
      s += w * helper_eval(chi, a[r - 1] - a[r]).value;
    }
  }
  return s;
}

Vector chi_pair_gradient(const HardData& hd, long long i, int pair,
                         const std::vector<double>& a) {
  HelperFn chi{HelperKind::Chi, hd.c};
  const double w = 1.0 / (2.0 * std::sqrt(static_cast<double>(hd.k)));
  Vector g = zeros(static_cast<std::size_t>(hd.d));
  if (pair == 1) {
    double m = hd.b - a[0];
    double sgn = m > 0.0 ? 1.0 : (m < 0.0 ? -1.0 : 0.0);
    if (sgn != 0.0) axpy(-sgn / std::sqrt(2.0), hd.vec(i, 0), g);
    for (long long r = 2; r <= hd.k; r += 2) {
      double dz = helper_eval(chi, a[r - 1] - a[r]).derivative;
      if (dz != 0.0) {
        axpy(w * dz, hd.vec(i, r - 1), g);
        axpy(-w * dz, hd.vec(i, r), g);
      }
    }
  } else {
    for (long long r = 1; r <= hd.k; r += 2) {
      double dz = helper_eval(chi, a[r - 1] - a[r]).derivative;
      if (dz != 0.0) {
        axpy(w * dz, hd.vec(i, r - 1), g);
        axpy(-w * dz, hd.vec(i, r), g);
      }
    }
  }
  return g;
}

std::vector<Vector> draw_orthonormal(long long d, long long m,
                                     std::uint64_t seed) {
  Rng rng(seed);
  Eigen::MatrixXd G(d, m);
  for (long long j = 0; j < m; ++j) {
    for (long long i = 0; i < d; ++i) G(i, j) = rng.normal();
  }
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(G);
  Eigen::MatrixXd Q = qr.householderQ() * Eigen::MatrixXd::Identity(d, m);
  std::vector<Vector> v;
  v.reserve(static_cast<std::size_t>(m));
  for (long long j = 0; j < m; ++j) {
    v.emplace_back(Q.col(j).data(), Q.col(j).data() + d);
  }
  return v;
}

}  // namespace

HardInstance gen_hard_instance(const HardInstanceSpec& spec) {
  if (spec.case_id < 1 || spec.case_id > 4) fail("case must be 1..4");
  if (spec.n < 2 || spec.n % 2 != 0) fail("n must be even and >= 2");
  if (spec.eps <= 0.0) fail("eps must be > 0");
  if (spec.query_budget < 1) fail("query budget N must be >= 1");

  HardInstance hi;
  hi.spec = spec;
  const double n = static_cast<double>(spec.n);
  const double eps = spec.eps;
  const double inv_sqrt_N =
      1.0 / std::sqrt(static_cast<double>(spec.query_budget));

  switch (spec.case_id) {
    case 1: {
      if (spec.mu <= 0.0) fail("case 1 requires mu > 0");
      hi.mu_tilde = n * spec.mu;
      if (hi.mu_tilde >= 1.0) fail("case 1 requires n*mu < 1");
      if (spec.delta <= 0.0) fail("case 1 requires delta > 0");
      if (eps > (4.0 / 3.0) * spec.mu * spec.delta) {
        fail("case 1 requires eps <= (4/3)*mu*delta");
      }
      hi.Q = 0.5 * (1.0 / hi.mu_tilde - 1.0) + 1.0;
      double sq = std::sqrt(hi.Q);
      hi.q_ratio = (sq - 1.0) / (sq + 1.0);
      hi.zeta = 1.0 - hi.q_ratio;
      double karg = spec.delta / (n * eps * (sq - 1.0) * (sq - 1.0));
      if (karg <= 1.0) fail("case 1 requires delta/(n*eps*(sqrt(Q)-1)^2) > 1");
      hi.k = static_cast<long long>(
                 std::floor((sq - 1.0) / 4.0 * std::log2(karg))) -
             1;
      if (hi.k < 1) fail("case 1 needs k >= 1 (eps too large for the chain)");
      hi.C = std::sqrt(spec.delta / spec.mu) * 4.0 / (sq - 1.0);
      hi.c = std::min({inv_sqrt_N,
                       std::sqrt(8.0 * n * eps /
                                 ((1.0 - hi.mu_tilde) *
                                  static_cast<double>(hi.k + 1))),
                       hi.C * std::pow(hi.q_ratio,
                                       static_cast<double>(hi.k + 1))});
      break;
    }
    case 2: {
      if (eps >= 1.0 / (4096.0 * n)) fail("case 2 requires eps < 1/(4096 n)");
      hi.k = static_cast<long long>(
                 std::floor(1.0 / (16.0 * std::sqrt(eps * n)))) -
             1;
      if (hi.k < 3) fail("case 2 needs k >= 3");
      hi.C = std::sqrt(6.0 / (n * static_cast<double>(hi.k)));
      hi.zeta = 1.0;
      hi.c = std::min({inv_sqrt_N, (2.0 - std::sqrt(3.0)) * hi.C,
                       8.0 * std::sqrt(eps / static_cast<double>(hi.k))});
      break;
    }
    case 3:
    case 4: {
      if (eps >= 0.3 / std::sqrt(n)) fail("cases 3/4 require eps < 3/(10 sqrt(n))");
      hi.k = static_cast<long long>(std::floor(1.0 / (10.0 * eps * std::sqrt(n))));
      if (hi.k < 1) fail("cases 3/4 need k >= 1");
      hi.c = std::min(inv_sqrt_N, eps / std::sqrt(static_cast<double>(hi.k)));
      hi.b_offset = std::sqrt(2.0 / (n * static_cast<double>(hi.k + 1)));
      if (spec.case_id == 3) hi.reg_mu = eps;  // eps/R^2 with R = 1
      break;
    }
  }

  const long long min_dim = hard_instance_min_dim(spec.n, hi.k);
  hi.d = spec.d == 0 ? min_dim : spec.d;
  if (hi.d < min_dim) {
    fail("d too small; need at least (n/2)*(k+1) = " + std::to_string(min_dim));
  }

  auto hd = std::make_shared<HardData>();
  hd->case_id = spec.case_id;
  hd->n_half = spec.n / 2;
  hd->k = hi.k;
  hd->d = hi.d;
  hd->C = hi.C;
  hd->c = hi.c;
  hd->zeta = hi.zeta;
  hd->b = hi.b_offset;
  hd->scale = spec.case_id == 1 ? (1.0 - hi.mu_tilde) / 16.0
                                : (spec.case_id == 2 ? 1.0 / 16.0 : 0.0);
  hd->v = draw_orthonormal(hi.d, min_dim, spec.seed);
  hi.vectors = std::shared_ptr<std::vector<Vector>>(hd, &hd->v);

  ProblemInstance& inst = hi.instance;
  inst.objective.n = spec.n;
  inst.objective.d = hi.d;
  const bool smooth_case = spec.case_id <= 2;
  if (smooth_case) {
    inst.objective.smoothness = 1.0;
    inst.objective.component_value = [hd](long long comp, const Vector& x) {
      long long i = comp / 2;
      int pair = static_cast<int>(comp % 2) + 1;
      return phi_pair_value(*hd, pair, hd->inner_products(i, x));
    };
    inst.objective.component_gradient = [hd](long long comp, const Vector& x) {
      long long i = comp / 2;
      int pair = static_cast<int>(comp % 2) + 1;
      return phi_pair_gradient(*hd, i, pair, hd->inner_products(i, x));
    };
  } else {
    inst.objective.lipschitz = 1.0;
    inst.objective.component_value = [hd](long long comp, const Vector& x) {
      long long i = comp / 2;
      int pair = static_cast<int>(comp % 2) + 1;
      return chi_pair_value(*hd, pair, hd->inner_products(i, x));
    };
    inst.objective.component_gradient = [hd](long long comp, const Vector& x) {
      long long i = comp / 2;
      int pair = static_cast<int>(comp % 2) + 1;
      return chi_pair_gradient(*hd, i, pair, hd->inner_products(i, x));
    };
  }
  switch (spec.case_id) {
    case 1:
      inst.proximal = ProximalTerm::l2(spec.mu);
      inst.case_tag = CaseTag::Case1;
      break;
    case 2:
      inst.proximal = ProximalTerm::zero();
      inst.case_tag = CaseTag::Case2;
      break;
    case 3:
      inst.proximal = ProximalTerm::l2(hi.reg_mu);
      inst.case_tag = CaseTag::Case3;
      break;
    case 4:
      inst.proximal = ProximalTerm::zero();
      inst.case_tag = CaseTag::Case4;
      break;
  }

  MinimizerData md = closed_form_minimizer(hi);
  hi.x_hat = std::move(md.x_hat);
  hi.f_upper = md.f_upper;
  hi.f_lower = md.f_lower;
  inst.delta = evaluate(inst, zeros(hi.d)) - hi.f_lower;
  switch (spec.case_id) {
    case 1:
      inst.radius = std::sqrt(2.0 * inst.delta / spec.mu);
      break;
    case 2:
      inst.radius = 2.0 * std::max(1.0, norm2(hi.x_hat));
      break;
    case 3:
      inst.radius = std::sqrt(2.0 * inst.delta / hi.reg_mu);
      break;
    case 4:
      inst.radius = 1.0;  // ||x*|| = 1 exactly and F(x*) = 0 = min F
      break;
  }
  return hi;
}

MinimizerData closed_form_minimizer(const HardInstance& hi) {
  MinimizerData md;
  const long long n_half = hi.spec.n / 2;
  md.x_hat = zeros(static_cast<std::size_t>(hi.d));
  switch (hi.spec.case_id) {
    case 1: {
      for (long long i = 0; i < n_half; ++i) {
        double coeff = hi.C * hi.q_ratio;
        for (long long r = 0; r <= hi.k; ++r) {
          axpy(coeff, hi.v(i, r), md.x_hat);
          coeff *= hi.q_ratio;
        }
      }
      double sq = std::sqrt(hi.Q);
      double block_min =
          -(hi.mu_tilde * hi.C * hi.C / 16.0) * (sq - 1.0) * (sq - 1.0);
      double slack = (1.0 - hi.mu_tilde) *
                     (static_cast<double>(hi.k) + hi.zeta) * hi.c * hi.c /
                     16.0;
      md.f_lower = block_min - slack;
      break;
    }
    case 2: {
      for (long long i = 0; i < n_half; ++i) {
        for (long long r = 0; r <= hi.k; ++r) {
          double coeff = hi.C * (1.0 - static_cast<double>(r + 1) /
                                           static_cast<double>(hi.k + 2));
          axpy(coeff, hi.v(i, r), md.x_hat);
        }
      }
      double block_min = -(hi.C * hi.C / 32.0) * static_cast<double>(hi.k + 1) /
                         static_cast<double>(hi.k + 2);
      double slack = static_cast<double>(hi.k + 1) * hi.c * hi.c / 16.0;
      md.f_lower = block_min - slack;
      break;
    }
    case 3:
    case 4: {
      for (long long i = 0; i < n_half; ++i) {
        for (long long r = 0; r <= hi.k; ++r) {
          axpy(hi.b_offset, hi.v(i, r), md.x_hat);
        }
      }
      // Surrogate minimum is 0; the chi sandwich loses at most
      // (k/(4 sqrt(k))) * c per block.
      md.f_lower = -std::sqrt(static_cast<double>(hi.k)) * hi.c / 4.0;
      break;
    }
  }
  md.f_upper = evaluate(hi.instance, md.x_hat);
  return md;
}

Verdict suboptimality_check(const HardInstance& hi, const Vector& x,
                            double eps) {
  if (eps != hi.spec.eps) {
    throw std::invalid_argument(
        "suboptimality_check: eps differs from the generation-time value");
  }
  check_dim(x, static_cast<std::size_t>(hi.d), "suboptimality_check");
  const long long n_half = hi.spec.n / 2;
  const double half_c = hi.c / 2.0;

  // Index range of the qualifying inner products per case.
  long long j_max = hi.k;
  if (hi.spec.case_id == 2) j_max = hi.k / 2;

  long long qualifying_blocks = 0;
  for (long long i = 0; i < n_half; ++i) {
    bool small = false;
    for (long long j = 1; j <= j_max; ++j) {
      if (std::abs(dot(x, hi.v(i, j))) < half_c) {
        small = true;
        break;
      }
    }
    if (small) ++qualifying_blocks;
  }

  bool hypothesis;
  if (hi.spec.case_id == 1) {
    hypothesis = qualifying_blocks >= 1;
  } else {
    // Cases 2/4 (and 3 via the case-4 construction): at least n/4 blocks.
    // With n components in n/2 pairs, that is at least n/4 pair indices.
    hypothesis = 4 * qualifying_blocks >= hi.spec.n;
  }
  if (!hypothesis) return Verdict::Consistent;

  double threshold = hi.spec.case_id == 3 ? eps / 2.0 : eps;
  double gap = evaluate(hi.instance, x) - hi.f_lower;
  return gap < threshold ? Verdict::Violates : Verdict::Consistent;
}

}  // namespace finsum
