#include "tpt/specfun.hpp"

#include <cmath>
#include <stdexcept>

namespace tpt::specfun {

namespace {

// Neumaier-compensated accumulator in long double.
struct Accumulator {
  long double sum = 0.0L;
  long double comp = 0.0L;

  void add(long double x) {
    long double t = sum + x;
    if (std::fabs(sum) >= std::fabs(x))
      comp += (sum - t) + x;
    else
      comp += (x - t) + sum;
    sum = t;
  }
  long double value() const { return sum + comp; }
};

bool hits_pole(double c, int n) {
  for (int k = 0; k < n; ++k)
    if (c + k == 0.0) return true;
  return false;
}

}  // namespace

double ln_gamma(double x) {
  if (!(x > 0.0) || !std::isfinite(x)) throw std::domain_error("ln_gamma: argument must be positive");
  int sign = 1;
  return ::lgamma_r(x, &sign);
}

double pochhammer(double sigma, int n) {
  if (n < 0) throw std::invalid_argument("pochhammer: negative n");
  long double prod = 1.0L;
  for (int k = 0; k < n; ++k) prod *= static_cast<long double>(sigma) + k;
  return static_cast<double>(prod);
}

double binomial(double a, int k) {
  if (k < 0) return 0.0;
  long double prod = 1.0L;
  for (int i = 1; i <= k; ++i) prod *= (static_cast<long double>(a) - k + i) / i;
  return static_cast<double>(prod);
}

double hyp2f1_terminating(int n, double b, double c, double z) {
  if (n < 0) throw std::invalid_argument("hyp2f1_terminating: negative n");
  if (hits_pole(c, n)) throw std::invalid_argument("hyp2f1_terminating: c is a non-positive integer inside the sum");
  Accumulator acc;
  long double term = 1.0L;
  acc.add(term);
  for (int k = 0; k < n; ++k) {
    term *= (static_cast<long double>(-n) + k) * (static_cast<long double>(b) + k) /
            ((static_cast<long double>(c) + k) * (k + 1)) * z;
    acc.add(term);
  }
  return static_cast<double>(acc.value());
}

double hyp3f2_unit_terminating(int n, double a2, double a3, double b1, double b2, double b3) {
  if (n < 0) throw std::invalid_argument("hyp3f2_unit_terminating: negative n");
  if (hits_pole(b1, n) || hits_pole(b2, n) || hits_pole(b3, n))
    throw std::invalid_argument("hyp3f2_unit_terminating: lower parameter pole inside the sum");
  Accumulator acc;
  long double term = 1.0L;
  acc.add(term);
  for (int k = 0; k < n; ++k) {
    long double num = (static_cast<long double>(-n) + k) * (static_cast<long double>(a2) + k) *
                      (static_cast<long double>(a3) + k);
    long double den = (static_cast<long double>(b1) + k) * (static_cast<long double>(b2) + k) *
                      (static_cast<long double>(b3) + k) * (k + 1);
    term *= num / den;
    acc.add(term);
  }
  return static_cast<double>(acc.value());
}

double jacobi_eval(const JacobiParams& p, double x) {
  if (p.n < 0) throw std::invalid_argument("jacobi_eval: negative degree");
  const long double u = p.u, v = p.v, xx = x;
  long double pm1 = 1.0L;
  if (p.n == 0) return 1.0;
  long double pk = 0.5L * ((u + v + 2.0L) * xx + (u - v));
  for (int k = 2; k <= p.n; ++k) {
    const long double s = 2.0L * k + u + v;
    const long double a1 = 2.0L * k * (k + u + v) * (s - 2.0L);
    const long double a2 = (s - 1.0L) * (s * (s - 2.0L) * xx + u * u - v * v);
    const long double a3 = 2.0L * (k + u - 1.0L) * (k + v - 1.0L) * s;
    const long double next = (a2 * pk - a3 * pm1) / a1;
    pm1 = pk;
    pk = next;
  }
  return static_cast<double>(pk);
}

double jacobi_sum(const JacobiParams& p, double x) {
  if (p.n < 0) throw std::invalid_argument("jacobi_sum: negative degree");
  const int n = p.n;
  Accumulator acc;
  for (int m = 0; m <= n; ++m) {
    long double t = static_cast<long double>(binomial(n + p.u, m)) * binomial(n + p.v, n - m);
    t *= std::pow(static_cast<long double>(x) - 1.0L, n - m) * std::pow(1.0L + x, m);
    acc.add(t);
  }
  return static_cast<double>(std::ldexp(acc.value(), -n));
}

double jacobi_derivative(const JacobiParams& p, double x) {
  if (p.n < 0) throw std::invalid_argument("jacobi_derivative: negative degree");
  if (p.n == 0) return 0.0;
  return 0.5 * (p.n + p.u + p.v + 1.0) * jacobi_eval({p.n - 1, p.u + 1.0, p.v + 1.0}, x);
}

}  // namespace tpt::specfun
