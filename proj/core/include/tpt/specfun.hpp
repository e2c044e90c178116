#pragma once

namespace tpt::specfun {

struct JacobiParams {
  int n = 0;
  double u = 0.0;
  double v = 0.0;
};

// ln Gamma(x) for x > 0; throws std::domain_error otherwise.
double ln_gamma(double x);

// Rising factorial sigma (sigma+1) ... (sigma+n-1), by direct product.
double pochhammer(double sigma, int n);

// Generalized binomial C(a, k) = (a-k+1)_k / k!, zero for k < 0.
double binomial(double a, int k);

// 2F1(-n, b; c; z). Throws std::invalid_argument when c + k = 0 for some k < n.
double hyp2f1_terminating(int n, double b, double c, double z);

// Sum_{k<=n} (-n)_k (a2)_k (a3)_k / [(b1)_k (b2)_k (b3)_k k!], three lower
// parameters as printed for the Jacobi moment integral.
double hyp3f2_unit_terminating(int n, double a2, double a3, double b1, double b2, double b3);

// P_n^{(u,v)}(x) by the three-term recurrence in degree.
double jacobi_eval(const JacobiParams& p, double x);

// P_n^{(u,v)}(x) from the explicit double-binomial sum.
double jacobi_sum(const JacobiParams& p, double x);

// d/dx P_n^{(u,v)}(x) = (n+u+v+1)/2 P_{n-1}^{(u+1,v+1)}(x).
double jacobi_derivative(const JacobiParams& p, double x);

}  // namespace tpt::specfun
