#include <gtest/gtest.h>

#include <boost/math/quadrature/tanh_sinh.hpp>
#include <boost/math/special_functions/beta.hpp>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "tpt/quadrature.hpp"
#include "tpt/specfun.hpp"
#include "tpt/wavefn.hpp"

using namespace tpt;

namespace {

ModelParams table1() {
  ModelParams p;
  p.limit = Limit::Pseudospin;
  p.M = 1.0;
  p.C = -5.0;
  p.V1 = -0.002;
  p.V2 = 0.003;
  p.alpha = 0.01;
  return p;
}

ModelParams table3() {
  ModelParams p;
  p.limit = Limit::Spin;
  p.M = 1.0;
  p.C = 5.0;
  p.V1 = 0.002;
  p.V2 = -0.003;
  p.alpha = 0.01;
  return p;
}

double analytic_root(const ModelParams& p, const QuantumState& s) {
  const auto roots = solve_energies(p, s, default_window(p), 4000, Convention::Analytic).roots;
  if (roots.empty()) throw std::runtime_error("no analytic root");
  return roots.front().E;
}

double integrate01(const std::function<double(double)>& f) {
  boost::math::quadrature::tanh_sinh<double> ts;
  return ts.integrate(f, 0.0, 1.0);
}

Exponents random_exponents(std::mt19937& rng) {
  std::uniform_real_distribution<double> d(0.3, 3.0);
  return exponents_from(d(rng), 0.0, d(rng));
}

int sign_changes(const std::vector<double>& v) {
  int c = 0;
  for (std::size_t i = 1; i < v.size(); ++i)
    if ((v[i - 1] < 0.0) != (v[i] < 0.0) && v[i - 1] != 0.0 && v[i] != 0.0) ++c;
  return c;
}

}  // namespace

TEST(Exponents, Examples) {
  const Exponents a = exponents_from(0.0, 0.0, 0.0);
  EXPECT_DOUBLE_EQ(a.p, 0.5);
  EXPECT_DOUBLE_EQ(a.q, 0.5);
  EXPECT_DOUBLE_EQ(a.u, 0.5);
  EXPECT_DOUBLE_EQ(a.v, 0.5);
  const Exponents b = exponents_from(2.0, 0.0, 0.0);
  EXPECT_DOUBLE_EQ(b.p, 1.0);
  EXPECT_DOUBLE_EQ(b.u, 1.5);
  EXPECT_THROW(exponents_from(-1.0, 0.0, 0.0), std::domain_error);
}

TEST(Exponents, TableOneState) {
  const ModelParams p = table1();
  const double E = -4.00084675171;
  const long double g = (E - p.M - p.C), a2 = p.alpha * p.alpha;
  const long double pe = 0.25L + 0.25L * std::sqrt(1.0L + 4.0L * (2.0L + g * p.V1 / a2));
  const long double qe = 0.25L + 0.25L * std::sqrt(1.0L + 4.0L * g * p.V2 / a2);
  const Exponents e = exponents(p, E, -1);
  EXPECT_NEAR(e.p, static_cast<double>(pe), 1e-14);
  EXPECT_NEAR(e.q, static_cast<double>(qe), 1e-14);
  EXPECT_NEAR(e.u, 2.0 * e.p - 0.5, 1e-15);
  EXPECT_NEAR(e.v, 2.0 * e.q - 0.5, 1e-15);
  // The companion root near -1 lies where this radicand is negative.
  EXPECT_THROW(exponents(p, -0.99651749280, -1), std::domain_error);
}

TEST(Component, BoundaryAndMidpoint) {
  const Exponents e = exponents_from(0.0, 0.0, 0.0);
  EXPECT_NEAR(component_z(0, e, 0.5), 0.5, 1e-15);
  EXPECT_LT(std::fabs(component_z(3, e, 1e-12)), 1e-5);
  EXPECT_LT(std::fabs(component_z(3, e, 1.0 - 1e-12)), 1e-5);
  EXPECT_EQ(component_z(2, e, 0.0), 0.0);
  EXPECT_EQ(component_z(2, e, 1.0), 0.0);
}

TEST(Component, DerivativeMatchesFiniteDifference) {
  std::mt19937 rng(2);
  for (int t = 0; t < 10; ++t) {
    const Exponents e = random_exponents(rng);
    for (int n = 0; n <= 4; ++n)
      for (double z : {0.1, 0.37, 0.5, 0.81}) {
        const double h = 1e-5;
        const double fd = (component_z(n, e, z + h) - component_z(n, e, z - h)) / (2 * h);
        EXPECT_NEAR(component_z_derivative(n, e, z), fd, 1e-7 * std::max(1.0, std::fabs(fd)));
      }
  }
}

TEST(Component, HypergeometricFormMatchesJacobiForm) {
  std::mt19937 rng(4);
  for (int t = 0; t < 5; ++t) {
    const Exponents e = random_exponents(rng);
    for (int n = 0; n <= 4; ++n) {
      auto f2 = [&](double z) {
        return std::pow(z, e.p) * std::pow(1 - z, e.q) *
               specfun::hyp2f1_terminating(n, n + 2 * (e.p + e.q), 2 * e.p + 0.5, z);
      };
      auto fj = [&](double z) { return component_z(n, e, z); };
      const double n2 = integrate01([&](double z) { return f2(z) * f2(z); });
      const double nj = integrate01([&](double z) { return fj(z) * fj(z); });
      for (int i = 1; i <= 50; ++i) {
        const double z = i / 51.0;
        EXPECT_NEAR(f2(z) * f2(z) / n2, fj(z) * fj(z) / nj, 1e-10) << "n=" << n << " z=" << z;
      }
    }
  }
}

TEST(Component, NodeCountEqualsDegree) {
  std::mt19937 rng(6);
  for (int t = 0; t < 5; ++t) {
    const Exponents e = random_exponents(rng);
    for (int n = 0; n <= 6; ++n) {
      std::vector<double> v;
      for (int i = 1; i < 4000; ++i) v.push_back(component_z(n, e, i / 4000.0));
      EXPECT_EQ(sign_changes(v), n);
    }
  }
}

TEST(NormQuadrature, Examples) {
  EXPECT_NEAR(norm_quadrature(0, exponents_from(0.0, 0.0, 0.0)), std::sqrt(6.0), 1e-13);
  std::mt19937 rng(8);
  for (int t = 0; t < 10; ++t) {
    const Exponents e = random_exponents(rng);
    const double ref = 1.0 / std::sqrt(boost::math::beta(2 * e.p + 1, 2 * e.q + 1));
    EXPECT_NEAR(norm_quadrature(0, e), ref, 1e-12 * ref);
    for (int n = 0; n <= 6; ++n) {
      const double a = norm_quadrature(n, e, 128), b = norm_quadrature(n, e, 256);
      EXPECT_NEAR(a, b, 1e-13 * b);
    }
  }
  EXPECT_THROW(norm_quadrature(0, Exponents{0.1, 0.5, -1.5, 0.5}), std::domain_error);
}

TEST(NormQuadrature, NormalizesAgainstIndependentQuadrature) {
  std::mt19937 rng(10);
  for (int t = 0; t < 5; ++t) {
    const Exponents e = random_exponents(rng);
    for (int n = 0; n <= 5; ++n) {
      const double N = norm_quadrature(n, e);
      const double I = integrate01([&](double z) {
        const double g = N * component_z(n, e, z);
        return g * g;
      });
      EXPECT_NEAR(I, 1.0, 1e-10) << "n=" << n;
    }
  }
}

TEST(GaussJacobi, IntegratesPolynomialsExactly) {
  boost::math::quadrature::tanh_sinh<double> ts;
  for (const auto& [a, b] : {std::pair{0.7, -0.3}, std::pair{-0.6, -0.6}, std::pair{2.5, 1.0}}) {
    const GaussRule rule = gauss_jacobi(12, a, b);
    for (int k = 0; k <= 20; ++k) {
      long double s = 0.0L;
      for (std::size_t i = 0; i < rule.x.size(); ++i) s += rule.w[i] * std::pow(static_cast<long double>(rule.x[i]), k);
      // xc is the signed distance to the nearer endpoint.
      const double ref = ts.integrate(
          [&](double x, double xc) {
            const double omx = xc > 0 ? xc : 1 - x, opx = xc < 0 ? -xc : 1 + x;
            return std::pow(omx, a) * std::pow(opx, b) * std::pow(x, k);
          },
          -1.0, 1.0);
      EXPECT_NEAR(static_cast<double>(s), ref, 1e-12 * std::max(1.0, std::fabs(ref))) << "a=" << a << " b=" << b << " k=" << k;
    }
  }
}

TEST(GaussJacobi, RejectsBadArguments) {
  EXPECT_THROW(gauss_jacobi(0, 0.0, 0.0), std::invalid_argument);
  EXPECT_THROW(gauss_jacobi(4, -1.0, 0.0), std::invalid_argument);
}

TEST(Orthogonality, PolynomialFamilyInRadialMeasure) {
  // dr is proportional to dz / sqrt(z (1-z)), which turns |component|^2 into the Jacobi weight.
  std::mt19937 rng(12);
  for (int t = 0; t < 5; ++t) {
    const Exponents e = random_exponents(rng);
    for (int n = 0; n <= 4; ++n)
      for (int m = n + 1; m <= 4; ++m) {
        const double Nn = 1.0 / std::sqrt(jacobi_moment(n, e, e.u, e.v));
        const double Nm = 1.0 / std::sqrt(jacobi_moment(m, e, e.u, e.v));
        const double I = integrate01([&](double z) {
          return Nn * component_z(n, e, z) * Nm * component_z(m, e, z) / std::sqrt(z * (1 - z));
        });
        EXPECT_LE(std::fabs(I), 1e-10) << "n=" << n << " m=" << m;
      }
  }
}

TEST(NormClosedForm, GroundStateIsNegativeMultipleOfBeta) {
  std::mt19937 rng(14);
  for (int t = 0; t < 5; ++t) {
    const Exponents e = random_exponents(rng);
    const ClosedFormNorm cf = norm_closed_form(0, e);
    EXPECT_EQ(cf.status, ClosedFormNorm::Status::NonPositive);
    EXPECT_NEAR(cf.integral, -0.25 * boost::math::beta(e.u + 1.5, e.v + 1.5), 1e-13);
  }
}

TEST(NormClosedForm, AgreesWithQuadratureWheneverItReportsSuccess) {
  std::mt19937 rng(16);
  int ok = 0;
  for (int t = 0; t < 10; ++t) {
    const Exponents e = random_exponents(rng);
    for (int n = 0; n <= 3; ++n) {
      const ClosedFormNorm cf = norm_closed_form(n, e);
      if (cf.status != ClosedFormNorm::Status::Ok) continue;
      ++ok;
      const double q = norm_quadrature(n, e);
      EXPECT_NEAR(cf.value, q, 1e-8 * q);
    }
  }
  RecordProperty("closed_form_successes", ok);
}

TEST(Partner, OperatorMatchesFiniteDifference) {
  const ModelParams p = table1();
  const QuantumState s = make_state(0, -1, p.limit);
  const double E = analytic_root(p, s);
  const Exponents e = exponents(p, E, s.kappa);
  const double N = norm_quadrature(0, e);
  const double r = std::numbers::pi / (8 * p.alpha);
  const double h = 1e-2;
  const DominantSample d = dominant_at(0, e, N, p.alpha, r);
  const double fd = (dominant_at(0, e, N, p.alpha, r + h).value - dominant_at(0, e, N, p.alpha, r - h).value) / (2 * h);
  EXPECT_NEAR(d.derivative, fd, 1e-7);
  const double partner = partner_component(p, s, E, r, d);
  const double ka = s.kappa + p.A;
  EXPECT_NEAR(partner, (fd - ka / r * d.value) / (p.M - E + p.C), 1e-7 / std::fabs(p.M - E + p.C));
}

TEST(Partner, SpinOperatorMatchesFiniteDifference) {
  ModelParams p = table3();
  p.A = 0.5;
  const QuantumState s = make_state(1, -2, p.limit);
  const double E = analytic_root(p, s);
  const Exponents e = exponents(p, E, s.kappa);
  const double N = norm_quadrature(1, e);
  const double r = std::numbers::pi / (8 * p.alpha);
  const double h = 1e-2;
  const DominantSample d = dominant_at(1, e, N, p.alpha, r);
  const double fd = (dominant_at(1, e, N, p.alpha, r + h).value - dominant_at(1, e, N, p.alpha, r - h).value) / (2 * h);
  EXPECT_NEAR(d.derivative, fd, 1e-7);
  const double den = p.M + E - p.C;
  EXPECT_NEAR(partner_component(p, s, E, r, d), (fd + (s.kappa + p.A) / r * d.value) / den, 1e-7 / std::fabs(den));
}

TEST(Partner, LeadingPowerNearOrigin) {
  const ModelParams p = table1();
  const QuantumState s = make_state(0, -1, p.limit);
  const double E = analytic_root(p, s);
  const Exponents e = exponents(p, E, s.kappa);
  const double N = norm_quadrature(0, e);
  auto F = [&](double r) { return partner_component(p, s, E, r, dominant_at(0, e, N, p.alpha, r)); };
  // G ~ (alpha r)^{2p}, so F ~ (2p - kappa - A) r^{2p - 1}.
  const double r1 = 1e-4 / p.alpha, r2 = 2e-4 / p.alpha;
  const double slope = std::log(std::fabs(F(r2) / F(r1))) / std::log(2.0);
  EXPECT_NEAR(slope, 2 * e.p - 1, 1e-3);
}

TEST(Partner, DegenerateDenominatorAndRange) {
  const ModelParams p = table3();
  const QuantumState s = make_state(0, -1, p.limit);
  const DominantSample d{1.0, 0.1};
  EXPECT_THROW(partner_component(p, s, p.C - p.M, 10.0, d), std::domain_error);
  EXPECT_THROW(partner_component(p, s, 0.5, 0.0, d), std::domain_error);
  EXPECT_THROW(partner_component(p, s, 0.5, std::numbers::pi / (2 * p.alpha), d), std::domain_error);
}

TEST(SampleRadial, NormalizedNodesAndBoundaries) {
  for (const ModelParams& p : {table1(), table3()})
    for (int n = 0; n <= 3; ++n) {
      const QuantumState s = make_state(n, -1, p.limit);
      const double E = analytic_root(p, s);
      const double L = std::numbers::pi / (2 * p.alpha);
      std::vector<double> grid;
      for (int i = 0; i < 2000; ++i) grid.push_back((i + 0.5) * L / 2000);
      const SpinorSolution sol = sample_radial(p, s, E, grid);
      EXPECT_EQ(sol.norm_method, NormMethod::Quadrature);
      std::vector<double> dom;
      for (const SpinorSample& smp : sol.samples) dom.push_back(sol.dominant(smp));
      EXPECT_EQ(sign_changes(dom), n);
      const SpinorSolution edges = sample_radial(p, s, E, {1e-7 * L, (1 - 1e-7) * L});
      EXPECT_LT(std::fabs(edges.dominant(edges.samples[0])), 1e-3);
      EXPECT_LT(std::fabs(edges.dominant(edges.samples[1])), 1e-3);
      const double I = integrate01([&](double z) {
        const double g = sol.norm * component_z(n, sol.exponents, z);
        return g * g;
      });
      EXPECT_NEAR(I, 1.0, 1e-10);
    }
}

TEST(SampleRadial, RadialNormalizationMode) {
  const ModelParams p = table1();
  const QuantumState s = make_state(1, -1, p.limit);
  const double E = analytic_root(p, s);
  const double L = std::numbers::pi / (2 * p.alpha);
  const SpinorSolution sol = sample_radial(p, s, E, {L / 3}, NormMode::R);
  boost::math::quadrature::tanh_sinh<double> ts;
  const double I = ts.integrate(
      [&](double r) {
        const double s = std::sin(p.alpha * r);
        const double g = sol.norm * component_z(1, sol.exponents, s * s);
        return g * g;
      },
      0.0, L);
  EXPECT_NEAR(I, 1.0, 1e-10);
  EXPECT_THROW(sample_radial(p, s, E, {0.0}), std::domain_error);
  EXPECT_THROW(sample_radial(p, s, E, {L}), std::domain_error);
}
