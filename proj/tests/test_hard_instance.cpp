#include <doctest.h>

#include <cmath>

#include "finsum/hard_instance.hpp"
#include "finsum/rng.hpp"

using namespace finsum;

namespace {

HardInstanceSpec case1_spec() {
  HardInstanceSpec s;
  s.case_id = 1;
  s.n = 4;
  s.mu = 1.0 / 28.0;  // n*mu = 1/7 -> Q = 4
  s.eps = std::ldexp(1.0, -18);
  s.delta = 1.0;
  s.query_budget = 10000;
  s.seed = 11;
  return s;
}

HardInstanceSpec case2_spec() {
  HardInstanceSpec s;
  s.case_id = 2;
  s.n = 4;
  s.eps = 6e-5;  // < 1/(4096*4) and k = 3
  s.query_budget = 10000;
  s.seed = 12;
  return s;
}

HardInstanceSpec case4_spec() {
  HardInstanceSpec s;
  s.case_id = 4;
  s.n = 4;
  s.eps = 0.01;  // k = 5
  s.query_budget = 10000;
  s.seed = 13;
  return s;
}

}  // namespace

TEST_CASE("helper function values and derivatives") {
  HelperFn phi{HelperKind::Phi, 1.0};
  CHECK(helper_eval(phi, 0.5).value == 0.0);
  CHECK(helper_eval(phi, 0.5).derivative == 0.0);
  CHECK(helper_eval(phi, 1.5).value == 0.5);   // 2*(0.5)^2
  CHECK(helper_eval(phi, 1.5).derivative == 2.0);  // 4*(0.5)
  CHECK(helper_eval(phi, 3.0).value == 7.0);   // 9 - 2
  CHECK(helper_eval(phi, 3.0).derivative == 6.0);  // 2z
  CHECK(helper_eval(phi, -1.5).value == 0.5);
  CHECK(helper_eval(phi, -1.5).derivative == -2.0);

  HelperFn chi{HelperKind::Chi, 0.1};
  CHECK(helper_eval(chi, 0.3).value == doctest::Approx(0.2));
  CHECK(helper_eval(chi, 0.3).derivative == 1.0);
  CHECK(helper_eval(chi, -0.3).derivative == -1.0);
  CHECK(helper_eval(chi, 0.05).value == 0.0);
  CHECK(helper_eval(chi, 0.1).derivative == 0.0);  // kink returns 0
}

TEST_CASE("phi sandwich and curvature bound") {
  Rng rng(42);
  for (int t = 0; t < 10000; ++t) {
    double c = rng.uniform(0.05, 2.0);
    double z = rng.uniform(-3.0 * c, 3.0 * c);
    HelperFn phi{HelperKind::Phi, c};
    double v = helper_eval(phi, z).value;
    CHECK(z * z - 2.0 * c * c <= v);
    CHECK(v <= z * z);
  }
  // numerical second differences bounded by 4 (+ tolerance)
  HelperFn phi{HelperKind::Phi, 0.7};
  const double h = 1e-4;
  for (double z = -2.0; z <= 2.0; z += 0.003) {
    double dd = (helper_eval(phi, z + h).value - 2.0 * helper_eval(phi, z).value +
                 helper_eval(phi, z - h).value) /
                (h * h);
    CHECK(dd <= 4.0 + 1e-3);
    CHECK(dd >= -1e-3);
  }
}

TEST_CASE("chi is 1-Lipschitz") {
  Rng rng(43);
  HelperFn chi{HelperKind::Chi, 0.4};
  for (int t = 0; t < 5000; ++t) {
    double a = rng.uniform(-2.0, 2.0), b = rng.uniform(-2.0, 2.0);
    double va = helper_eval(chi, a).value, vb = helper_eval(chi, b).value;
    CHECK(std::abs(va - vb) <= std::abs(a - b) + 1e-15);
  }
}

TEST_CASE("case 1 parameters at Q = 4") {
  HardInstance hi = gen_hard_instance(case1_spec());
  CHECK(hi.Q == doctest::Approx(4.0));
  CHECK(hi.q_ratio == doctest::Approx(1.0 / 3.0));
  CHECK(hi.zeta == doctest::Approx(2.0 / 3.0));
  CHECK(hi.mu_tilde == doctest::Approx(1.0 / 7.0));
  // k = floor((1/4) log2(delta/(n eps))) - 1 with delta/(4 eps) = 2^16
  CHECK(hi.k == 3);
  CHECK(hi.d == hard_instance_min_dim(4, 3));
  CHECK(hi.instance.objective.n == 4);
  // c is the min of its three candidates
  double cand = std::sqrt(8.0 * 4.0 * hi.spec.eps / ((1.0 - 1.0 / 7.0) * 4.0));
  CHECK(hi.c == doctest::Approx(cand));
}

TEST_CASE("case 2 parameters and the k >= 3 guard") {
  HardInstance hi = gen_hard_instance(case2_spec());
  CHECK(hi.k == 3);
  CHECK(hi.C == doctest::Approx(std::sqrt(6.0 / (4.0 * 3.0))));

  HardInstanceSpec bad = case2_spec();
  bad.eps = 5e-5;  // valid regime...
  CHECK_NOTHROW(gen_hard_instance(bad));
  bad.eps = 6.2e-5;  // > 1/(4096*4) = 6.1035e-5
  CHECK_THROWS(gen_hard_instance(bad));
}

TEST_CASE("case 4 parameters") {
  HardInstance hi = gen_hard_instance(case4_spec());
  CHECK(hi.k == 5);  // floor(1/(10*0.01*2))
  CHECK(hi.b_offset == doctest::Approx(std::sqrt(1.0 / 12.0)));
  CHECK(hi.c == doctest::Approx(0.01 / std::sqrt(5.0)));
  CHECK(hi.d == 12);
}

TEST_CASE("generation guards") {
  HardInstanceSpec odd = case1_spec();
  odd.n = 5;
  CHECK_THROWS(gen_hard_instance(odd));

  HardInstanceSpec small_d = case1_spec();
  small_d.d = 3;  // below (n/2)(k+1) = 8
  CHECK_THROWS(gen_hard_instance(small_d));

  HardInstanceSpec big_mu = case1_spec();
  big_mu.mu = 0.3;  // n*mu >= 1
  CHECK_THROWS(gen_hard_instance(big_mu));

  HardInstanceSpec eps_large = case1_spec();
  eps_large.eps = 1.0;  // > (4/3) mu delta
  CHECK_THROWS(gen_hard_instance(eps_large));
}

TEST_CASE("global orthonormality of the drawn blocks") {
  HardInstance hi = gen_hard_instance(case4_spec());
  long long m = hard_instance_min_dim(hi.spec.n, hi.k);
  for (long long a = 0; a < m; ++a) {
    for (long long b = 0; b < m; ++b) {
      double ip = dot((*hi.vectors)[a], (*hi.vectors)[b]);
      CHECK(std::abs(ip - (a == b ? 1.0 : 0.0)) < 1e-10);
    }
  }
}

TEST_CASE("oversized ambient dimension works") {
  HardInstanceSpec s = case4_spec();
  s.d = 20;
  HardInstance hi = gen_hard_instance(s);
  CHECK(hi.d == 20);
  CHECK(evaluate(hi.instance, hi.x_hat) == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("case 1 certified interval") {
  HardInstance hi = gen_hard_instance(case1_spec());
  double sq = std::sqrt(hi.Q);
  double surrogate_min =
      -(hi.mu_tilde * hi.C * hi.C / 16.0) * (sq - 1.0) * (sq - 1.0);
  // F(x_hat) is below the surrogate value and above the certified floor.
  CHECK(hi.f_upper <= surrogate_min + 1e-9 * std::abs(surrogate_min));
  CHECK(hi.f_lower <= hi.f_upper);
  double slack = (1.0 - hi.mu_tilde) * (static_cast<double>(hi.k) + hi.zeta) *
                 hi.c * hi.c / 16.0;
  CHECK(hi.f_upper - hi.f_lower <= slack + 1e-12);
  // recomputation matches the cached values
  MinimizerData md = closed_form_minimizer(hi);
  CHECK(md.f_upper == hi.f_upper);
  CHECK(md.f_lower == hi.f_lower);
}

TEST_CASE("case 2 certified interval and minimizer norm") {
  HardInstance hi = gen_hard_instance(case2_spec());
  double surrogate_min = -(hi.C * hi.C / 32.0) *
                         static_cast<double>(hi.k + 1) /
                         static_cast<double>(hi.k + 2);
  CHECK(hi.f_upper <= surrogate_min + 1e-12);
  CHECK(hi.f_lower <= hi.f_upper);
  // Exact norm of the surrogate minimizer: (k+1)(2k+3)/(2k(k+2)) with the
  // lemma's C. This exceeds 1 by a (1 + O(1/k)) factor.
  double kk = static_cast<double>(hi.k);
  double expect_sq = (kk + 1.0) * (2.0 * kk + 3.0) / (2.0 * kk * (kk + 2.0));
  CHECK(norm2_sq(hi.x_hat) == doctest::Approx(expect_sq));
  CHECK(norm2_sq(hi.x_hat) <= (kk + 1.0) / kk);
}

TEST_CASE("case 4 attains its minimum value zero exactly") {
  HardInstance hi = gen_hard_instance(case4_spec());
  CHECK(hi.f_upper == doctest::Approx(0.0).epsilon(1e-13));
  CHECK(norm2_sq(hi.x_hat) == doctest::Approx(1.0));
  CHECK(hi.f_lower <= 0.0);
  // every value of F is >= 0, so 0 really is the minimum
  Rng rng(3);
  for (int t = 0; t < 200; ++t) {
    Vector x = rng.gaussian(hi.d);
    scale(x, rng.uniform(0.0, 3.0));
    CHECK(evaluate(hi.instance, x) >= 0.0);
  }
}

TEST_CASE("case 3 regularized instance") {
  HardInstanceSpec s = case4_spec();
  s.case_id = 3;
  HardInstance hi = gen_hard_instance(s);
  CHECK(hi.reg_mu == doctest::Approx(s.eps));  // eps/R^2 with R = 1
  // F~(x*) = 0 + (mu/2)||x*||^2 = eps/2 exactly.
  CHECK(hi.f_upper == doctest::Approx(s.eps / 2.0));
  CHECK(hi.instance.proximal.strong_convexity() == doctest::Approx(s.eps));
}

TEST_CASE("analytic gradients match finite differences away from kinks") {
  for (int case_id : {1, 2, 4}) {
    HardInstance hi = gen_hard_instance(
        case_id == 1 ? case1_spec() : (case_id == 2 ? case2_spec() : case4_spec()));
    Rng rng(100 + case_id);
    const double h = 1e-6;
    int checked = 0;
    for (int t = 0; t < 60 && checked < 25; ++t) {
      Vector x = rng.gaussian(hi.d);
      scale(x, rng.uniform(0.2, 2.0));
      long long comp = static_cast<long long>(rng.index(4));
      Vector g = hi.instance.objective.component_gradient(comp, x);
      // Skip points whose chain arguments sit near a helper kink.
      bool near_kink = false;
      long long i = comp / 2;
      std::vector<double> a(static_cast<std::size_t>(hi.k + 1));
      for (long long r = 0; r <= hi.k; ++r) a[r] = dot(x, hi.v(i, r));
      for (long long r = 1; r <= hi.k; ++r) {
        double z = std::abs(a[r - 1] - a[r]);
        if (std::abs(z - hi.c) < 1e-4 || std::abs(z - 2.0 * hi.c) < 1e-4) {
          near_kink = true;
        }
      }
      if (std::abs(std::abs(a[hi.k]) - hi.c) < 1e-4) near_kink = true;
      if (case_id == 4 && std::abs(hi.b_offset - a[0]) < 1e-4) near_kink = true;
      if (near_kink) continue;
      ++checked;
      for (long long cc = 0; cc < hi.d; ++cc) {
        Vector xp = x, xm = x;
        xp[cc] += h;
        xm[cc] -= h;
        double fd = (hi.instance.objective.component_value(comp, xp) -
                     hi.instance.objective.component_value(comp, xm)) /
                    (2.0 * h);
        CHECK(std::abs(fd - g[cc]) <= 1e-5 * std::max(1.0, std::abs(g[cc])));
      }
    }
    CHECK(checked >= 20);
  }
}

TEST_CASE("smoothness certificate for the phi-based cases") {
  for (int case_id : {1, 2}) {
    HardInstance hi =
        gen_hard_instance(case_id == 1 ? case1_spec() : case2_spec());
    Rng rng(200 + case_id);
    for (int t = 0; t < 2000; ++t) {
      Vector x = rng.gaussian(hi.d);
      Vector y = rng.gaussian(hi.d);
      scale(x, rng.uniform(0.1, 2.0));
      scale(y, rng.uniform(0.1, 2.0));
      long long comp = static_cast<long long>(rng.index(4));
      double num = dist2(hi.instance.objective.component_gradient(comp, x),
                         hi.instance.objective.component_gradient(comp, y));
      double den = dist2(x, y);
      CHECK(num <= 1.0 * (1.0 + 1e-6) * den);
    }
  }
}

TEST_CASE("lipschitz certificate for the chi-based case") {
  HardInstance hi = gen_hard_instance(case4_spec());
  Rng rng(300);
  for (int t = 0; t < 2000; ++t) {
    Vector x = rng.gaussian(hi.d);
    Vector y = rng.gaussian(hi.d);
    scale(x, rng.uniform(0.1, 2.0));
    scale(y, rng.uniform(0.1, 2.0));
    long long comp = static_cast<long long>(rng.index(4));
    double num = std::abs(hi.instance.objective.component_value(comp, x) -
                          hi.instance.objective.component_value(comp, y));
    CHECK(num <= (1.0 + 1e-6) * dist2(x, y));
  }
}

TEST_CASE("suboptimality checker") {
  HardInstance hi = gen_hard_instance(case1_spec());

  SUBCASE("eps mismatch is an error") {
    CHECK_THROWS(suboptimality_check(hi, zeros(hi.d), hi.spec.eps * 2.0));
  }

  SUBCASE("the origin maximally satisfies the hypothesis and stays consistent") {
    // All inner products are 0 < c/2; the lemma demands a gap >= eps.
    CHECK(evaluate(hi.instance, zeros(hi.d)) - hi.f_lower >= hi.spec.eps);
    CHECK(suboptimality_check(hi, zeros(hi.d), hi.spec.eps) ==
          Verdict::Consistent);
  }

  SUBCASE("the surrogate minimizer misses the hypothesis (vacuously consistent)") {
    // |<x_hat, v_{i,k}>| = C q^{k+1} >= c > c/2.
    double smallest = hi.C * std::pow(hi.q_ratio, static_cast<double>(hi.k + 1));
    CHECK(smallest >= hi.c);
    CHECK(suboptimality_check(hi, hi.x_hat, hi.spec.eps) == Verdict::Consistent);
  }

  SUBCASE("projected adversarial points never violate the lemma") {
    Rng rng(4040);
    for (int t = 0; t < 1000; ++t) {
      Vector x = rng.gaussian(hi.d);
      scale(x, rng.uniform(0.1, 2.0));
      long long i = static_cast<long long>(rng.index(2));
      long long j = 1 + static_cast<long long>(rng.index(hi.k));
      const Vector& v = hi.v(i, j);
      axpy(-dot(x, v), v, x);  // zero that inner product
      CHECK(suboptimality_check(hi, x, hi.spec.eps) == Verdict::Consistent);
    }
  }
}

TEST_CASE("suboptimality checker for the block-count cases") {
  for (int case_id : {2, 4}) {
    HardInstance hi =
        gen_hard_instance(case_id == 2 ? case2_spec() : case4_spec());
    long long j_max = case_id == 2 ? hi.k / 2 : hi.k;
    Rng rng(600 + case_id);
    for (int t = 0; t < 1000; ++t) {
      Vector x = rng.gaussian(hi.d);
      scale(x, rng.uniform(0.1, 2.0));
      // Force the hypothesis on ceil(n/4) = 1 block.
      long long i = static_cast<long long>(rng.index(2));
      long long j = 1 + static_cast<long long>(rng.index(j_max));
      const Vector& v = hi.v(i, j);
      axpy(rng.uniform(-0.49, 0.49) * hi.c - dot(x, v), v, x);
      CHECK(suboptimality_check(hi, x, hi.spec.eps) == Verdict::Consistent);
    }
  }
}

TEST_CASE("hard instance metadata is certified") {
  for (int case_id : {1, 2, 4}) {
    HardInstance hi = gen_hard_instance(
        case_id == 1 ? case1_spec() : (case_id == 2 ? case2_spec() : case4_spec()));
    // delta = F(0) - f_lower is a valid bound on F(0) - F*.
    CHECK(hi.instance.delta ==
          evaluate(hi.instance, zeros(hi.d)) - hi.f_lower);
    CHECK(hi.instance.delta >= 0.0);
    CHECK_NOTHROW(validate_case_tag(hi.instance));
  }
}
