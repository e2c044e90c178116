#include "tpt/quadrature.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "tpt/specfun.hpp"

namespace tpt {

namespace {

// P_n^{(a,b)}(x) and its derivative by the degree recurrence, in extended precision.
void jacobi_ld(int n, long double a, long double b, long double x, long double& p, long double& dp) {
  long double p0 = 1.0L, p1 = 0.5L * ((a + b + 2.0L) * x + (a - b));
  if (n == 0) {
    p = 1.0L;
    dp = 0.0L;
    return;
  }
  long double pm = p0;
  for (int k = 2; k <= n; ++k) {
    const long double s = 2.0L * k + a + b;
    const long double c1 = 2.0L * k * (k + a + b) * (s - 2.0L);
    const long double c2 = (s - 1.0L) * (a * a - b * b);
    const long double c3 = (s - 2.0L) * (s - 1.0L) * s;
    const long double c4 = 2.0L * (k + a - 1.0L) * (k + b - 1.0L) * s;
    const long double pn = ((c2 + c3 * x) * p1 - c4 * pm) / c1;
    pm = p1;
    p1 = pn;
  }
  p = p1;
  // (2n + a + b)(1 - x^2) P_n' = n [(a - b) - (2n + a + b) x] P_n + 2 (n + a)(n + b) P_{n-1}
  const long double s = 2.0L * n + a + b;
  dp = (n * ((a - b) - s * x) * p1 + 2.0L * (n + a) * (n + b) * pm) / (s * (1.0L - x) * (1.0L + x));
}

}  // namespace

GaussRule gauss_jacobi(int n, double a, double b) {
  if (n < 1) throw std::invalid_argument("gauss_jacobi: need at least one node");
  if (!(a > -1.0) || !(b > -1.0)) throw std::invalid_argument("gauss_jacobi: exponents must exceed -1");

  // Golub-Welsch starting nodes.
  Eigen::VectorXd diag(n), sub(std::max(n - 1, 1));
  for (int k = 0; k < n; ++k) {
    const double s = 2.0 * k + a + b;
    diag(k) = (k == 0 && std::fabs(a + b) < 1e-300) ? (b - a) / (a + b + 2.0)
                                                    : (b * b - a * a) / (s * (s + 2.0));
  }
  for (int k = 1; k < n; ++k) {
    const double s = 2.0 * k + a + b;
    sub(k - 1) = std::sqrt(4.0 * k * (k + a) * (k + b) * (k + a + b) / (s * s * (s + 1.0) * (s - 1.0)));
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
  es.computeFromTridiagonal(diag, sub.head(n - 1), Eigen::EigenvaluesOnly);

  // w_i = c / ((1 - x_i^2) P_n'(x_i)^2), c = 2^{a+b+1} G(n+a+1) G(n+b+1) / (G(n+a+b+1) n!),
  // built from degree 1 upward as a product of factors near 1.
  const long double la = a, lb = b;
  long double c = std::pow(2.0L, la + lb + 1.0L) *
                  std::exp(static_cast<long double>(specfun::ln_gamma(a + 2.0)) + specfun::ln_gamma(b + 2.0) -
                           specfun::ln_gamma(a + b + 2.0));
  for (int k = 2; k <= n; ++k) c *= (k + la) * (k + lb) / (k * (k + la + lb));

  GaussRule rule;
  rule.x.resize(n);
  rule.w.resize(n);
  for (int i = 0; i < n; ++i) {
    long double xi = es.eigenvalues()(i), p = 0.0L, dp = 0.0L;
    for (int it = 0; it < 4; ++it) {
      jacobi_ld(n, a, b, xi, p, dp);
      const long double step = p / dp;
      xi -= step;
      if (std::fabs(step) <= 1e-19L) break;
    }
    jacobi_ld(n, a, b, xi, p, dp);
    rule.x[i] = static_cast<double>(xi);
    rule.w[i] = static_cast<double>(c / ((1.0L - xi) * (1.0L + xi) * dp * dp));
  }
  return rule;
}

}  // namespace tpt
