#include "tpt/wavefn.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "tpt/quadrature.hpp"
#include "tpt/specfun.hpp"

namespace tpt {

using specfun::binomial;
using specfun::ln_gamma;

const char* to_string(NormMethod m) { return m == NormMethod::ClosedForm ? "closed_form" : "quadrature"; }

const char* to_string(ClosedFormNorm::Status s) {
  switch (s) {
    case ClosedFormNorm::Status::Ok:
      return "ok";
    case ClosedFormNorm::Status::NonPositive:
      return "nonpositive";
    case ClosedFormNorm::Status::Disagrees:
      return "disagrees";
  }
  return "?";
}

Exponents exponents_from(double delta, double g1_over_a2, double g2_over_a2) {
  const double r1 = 1.0 + 4.0 * (delta + g1_over_a2);
  const double r2 = 1.0 + 4.0 * g2_over_a2;
  if (r1 < 0.0 || r2 < 0.0) throw std::domain_error("exponents: negative radicand, state not bound");
  Exponents e;
  e.p = 0.25 + 0.25 * std::sqrt(r1);
  e.q = 0.25 + 0.25 * std::sqrt(r2);
  e.u = 2.0 * e.p - 0.5;
  e.v = 2.0 * e.q - 0.5;
  return e;
}

Exponents exponents(const ModelParams& params, double E, int kappa) {
  const DerivedParams d = derived_params(params, E, kappa);
  const double a2 = params.alpha * params.alpha;
  return exponents_from(d.delta, d.gamma1 / a2, d.gamma2 / a2);
}

double component_z(int n, const Exponents& e, double z) {
  if (z <= 0.0 || z >= 1.0) return 0.0;
  return std::pow(z, e.p) * std::pow(1.0 - z, e.q) * specfun::jacobi_eval({n, e.u, e.v}, 1.0 - 2.0 * z);
}

double component_z_derivative(int n, const Exponents& e, double z) {
  if (z <= 0.0 || z >= 1.0) throw std::domain_error("component_z_derivative: z must lie in (0, 1)");
  const double x = 1.0 - 2.0 * z;
  const double P = specfun::jacobi_eval({n, e.u, e.v}, x);
  const double dP = specfun::jacobi_derivative({n, e.u, e.v}, x);
  const double w = std::pow(z, e.p) * std::pow(1.0 - z, e.q);
  return w * ((e.p / z - e.q / (1.0 - z)) * P - 2.0 * dP);
}

double jacobi_moment(int n, const Exponents& e, double a, double b, int nodes) {
  // z = (1-x)/2: z^a (1-z)^b dz = 2^{-(a+b+1)} (1-x)^a (1+x)^b dx
  const GaussRule rule = gauss_jacobi(nodes, a, b);
  long double s = 0.0L;
  for (std::size_t i = 0; i < rule.x.size(); ++i) {
    const double P = specfun::jacobi_eval({n, e.u, e.v}, rule.x[i]);
    s += static_cast<long double>(rule.w[i]) * P * P;
  }
  return static_cast<double>(s * std::pow(2.0L, -(a + b + 1.0L)));
}

double norm_quadrature(int n, const Exponents& e, int nodes) {
  if (!(e.u > -1.0) || !(e.v > -1.0)) throw std::domain_error("norm_quadrature: need u, v > -1");
  return 1.0 / std::sqrt(jacobi_moment(n, e, 2.0 * e.p, 2.0 * e.q, nodes));
}

ClosedFormNorm norm_closed_form(int n, const Exponents& e) {
  const double u = e.u, v = e.v;
  long double sum = 0.0L;
  for (int m = 0; m <= n; ++m) {
    const double sign = ((n - m + 1) % 2 == 0) ? 1.0 : -1.0;
    const double lg = ln_gamma(n - m + u + 1.5) + ln_gamma(m + v + 1.5) + ln_gamma(n + 1.0 + u) -
                      ln_gamma(n + 1.0) - ln_gamma(n + u + v + 3.0) - ln_gamma(1.0 + u);
    const double f32 = specfun::hyp3f2_unit_terminating(n, u + v + n + 1.0, n - m + u + 1.5, m + v + 1.5,
                                                        u + 1.0, n + u + v + 3.0);
    sum += static_cast<long double>(sign) * binomial(n + u, m) * binomial(n + v, n - m) * 0.5 * std::exp(lg) * f32;
  }
  ClosedFormNorm out;
  out.integral = static_cast<double>(0.5L * sum);
  if (!(out.integral > 0.0)) {
    out.status = ClosedFormNorm::Status::NonPositive;
    return out;
  }
  out.value = 1.0 / std::sqrt(out.integral);
  const double q = norm_quadrature(n, e);
  out.status = std::fabs(out.value - q) <= 1e-6 * q ? ClosedFormNorm::Status::Ok : ClosedFormNorm::Status::Disagrees;
  return out;
}

DominantSample dominant_at(int n, const Exponents& e, double norm, double alpha, double r) {
  const double x = alpha * r;
  const double s = std::sin(x);
  const double z = s * s;
  DominantSample d;
  d.value = norm * component_z(n, e, z);
  d.derivative = norm * component_z_derivative(n, e, z) * alpha * std::sin(2.0 * x);
  return d;
}

double partner_component(const ModelParams& params, const QuantumState& state, double E, double r,
                         const DominantSample& dominant) {
  const double upper = std::numbers::pi / (2.0 * params.alpha);
  if (!(r > 0.0 && r < upper)) throw std::domain_error("partner_component: r outside (0, pi/(2 alpha))");
  const double ka = state.kappa + params.A;
  if (params.limit == Limit::Pseudospin) {
    const double den = params.M - E + params.C;
    if (std::fabs(den) < 1e-10) throw std::domain_error("partner_component: M - E + C_ps vanishes");
    return (dominant.derivative - ka / r * dominant.value) / den;
  }
  const double den = params.M + E - params.C;
  if (std::fabs(den) < 1e-10) throw std::domain_error("partner_component: M + E - C_s vanishes");
  return (dominant.derivative + ka / r * dominant.value) / den;
}

double SpinorSolution::dominant(const SpinorSample& s) const { return limit == Limit::Pseudospin ? s.G : s.F; }

SpinorSolution sample_radial(const ModelParams& params, const QuantumState& state, double E,
                             const std::vector<double>& r_grid, NormMode mode) {
  params.validate();
  const double upper = std::numbers::pi / (2.0 * params.alpha);
  for (double r : r_grid)
    if (!(r > 0.0 && r < upper)) throw std::domain_error("sample_radial: grid point outside (0, pi/(2 alpha))");

  SpinorSolution sol;
  sol.state = state;
  sol.limit = params.limit;
  sol.energy = E;
  sol.norm_mode = mode;
  sol.exponents = exponents(params, E, state.kappa);
  const Exponents& e = sol.exponents;

  const ClosedFormNorm cf = norm_closed_form(state.n, e);
  sol.closed_form_status = cf.status;
  if (cf.status == ClosedFormNorm::Status::Ok) {
    sol.norm = cf.value;
    sol.norm_method = NormMethod::ClosedForm;
  } else {
    sol.norm = norm_quadrature(state.n, e);
    sol.norm_method = NormMethod::Quadrature;
  }
  if (mode == NormMode::R) {
    // dr = dz / (2 alpha sqrt(z(1-z)))
    const double m = jacobi_moment(state.n, e, 2.0 * e.p - 0.5, 2.0 * e.q - 0.5) / (2.0 * params.alpha);
    sol.norm = 1.0 / std::sqrt(m);
    sol.norm_method = NormMethod::Quadrature;
  }

  const bool pspin = params.limit == Limit::Pseudospin;
  sol.samples.reserve(r_grid.size());
  for (double r : r_grid) {
    const DominantSample d = dominant_at(state.n, e, sol.norm, params.alpha, r);
    const double partner = partner_component(params, state, E, r, d);
    const double s = std::sin(params.alpha * r);
    SpinorSample smp;
    smp.r = r;
    smp.z = s * s;
    smp.F = pspin ? partner : d.value;
    smp.G = pspin ? d.value : partner;
    sol.samples.push_back(smp);
  }
  return sol;
}

}  // namespace tpt
