#include "tpt/model.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace tpt {

const char* to_string(Limit limit) { return limit == Limit::Spin ? "spin" : "pspin"; }

const char* to_string(Convention c) { return c == Convention::Tabulated ? "tabulated" : "analytic"; }

Limit parse_limit(const std::string& s) {
  if (s == "spin") return Limit::Spin;
  if (s == "pspin") return Limit::Pseudospin;
  throw std::invalid_argument("unknown limit '" + s + "' (expected spin or pspin)");
}

Convention parse_convention(const std::string& s) {
  if (s == "tabulated") return Convention::Tabulated;
  if (s == "analytic") return Convention::Analytic;
  throw std::invalid_argument("unknown convention '" + s + "' (expected tabulated or analytic)");
}

void ModelParams::validate() const {
  if (!(alpha > 0.0) || !std::isfinite(alpha)) throw std::invalid_argument("alpha must be positive");
  if (!(M > 0.0) || !std::isfinite(M)) throw std::invalid_argument("M must be positive");
  if (!std::isfinite(V1) || !std::isfinite(V2) || !std::isfinite(A) || !std::isfinite(C))
    throw std::invalid_argument("parameters must be finite");
}

KappaInfo kappa_mapping(int kappa, Limit limit) {
  (void)limit;
  if (kappa == 0) throw std::invalid_argument("kappa must be nonzero");
  static const char letters[] = "spdfghiklmnoqrtuvwxyz";
  KappaInfo info;
  if (kappa < 0) {
    info.ell = -kappa - 1;
    info.ell_tilde = -kappa;
  } else {
    info.ell = kappa;
    info.ell_tilde = kappa - 1;
  }
  info.two_j = 2 * std::abs(kappa) - 1;
  const int max_letter = static_cast<int>(sizeof(letters)) - 2;
  const std::string letter = info.ell <= max_letter ? std::string(1, letters[info.ell])
                                                    : "[l=" + std::to_string(info.ell) + "]";
  info.family = letter + std::to_string(info.two_j) + "/2";
  return info;
}

QuantumState make_state(int n, int kappa, Limit limit) {
  if (n < 0) throw std::invalid_argument("n must be non-negative");
  const KappaInfo info = kappa_mapping(kappa, limit);
  QuantumState s;
  s.n = n;
  s.kappa = kappa;
  s.ell = info.ell;
  s.ell_tilde = info.ell_tilde;
  s.j = 0.5 * info.two_j;
  // Pseudospin doublet partners with kappa > 0 carry one node less in the label.
  const int prefix = (limit == Limit::Pseudospin && kappa > 0) ? n - 1 : n;
  s.label = std::to_string(prefix) + info.family;
  return s;
}

DerivedParams derived_params(const ModelParams& params, double E, int kappa) {
  const double M = params.M, C = params.C, ka = kappa + params.A;
  DerivedParams d;
  if (params.limit == Limit::Pseudospin) {
    const double g = E - M - C;
    d.gamma1 = g * params.V1;
    d.gamma2 = g * params.V2;
    d.beta_sq = (M + E) * (M - E + C);
    d.delta = ka * (ka - 1.0);
  } else {
    const double g = M + E - C;
    d.gamma1 = g * params.V1;
    d.gamma2 = g * params.V2;
    d.beta_sq = (M - E) * (M + E - C);
    d.delta = ka * (ka + 1.0);
  }
  return d;
}

double potential_tpt(double r, const ModelParams& params) {
  const double x = params.alpha * r;
  const double s = std::sin(x), c = std::cos(x);
  if (std::fabs(s) < 1e-12 || std::fabs(c) < 1e-12)
    throw std::domain_error("potential_tpt: r is at a singular point of the potential");
  return params.V1 / (s * s) + params.V2 / (c * c);
}

double centrifugal_approx_error(double alpha, double r) {
  const double x = alpha * r;
  if (!(x > 0.0 && x < std::numbers::pi)) throw std::domain_error("centrifugal_approx_error: need 0 < alpha r < pi");
  const double s = std::sin(x);
  // |alpha^2/sin^2(x) - 1/r^2| r^2 = |x^2/sin^2(x) - 1|
  return std::fabs(x * x / (s * s) - 1.0);
}

bool analytic_bracket(int n, double delta, double g1, double g2, double& bracket) {
  const double r1 = 1.0 + 4.0 * delta + 4.0 * g1;
  const double r2 = 1.0 + 4.0 * g2;
  if (r1 < 0.0 || r2 < 0.0) return false;
  bracket = n + 0.5 + 0.25 * (std::sqrt(r2) + std::sqrt(r1));
  return true;
}

Residual quantization_residual(const ModelParams& params, const QuantumState& state, double E,
                               Convention convention) {
  const DerivedParams d = derived_params(params, E, state.kappa);
  const double a2 = params.alpha * params.alpha;
  Residual res;
  if (convention == Convention::Analytic) {
    double b = 0.0;
    if (!analytic_bracket(state.n, d.delta, d.gamma1 / a2, d.gamma2 / a2, b)) return res;
    res.value = d.beta_sq + 4.0 * a2 * b * b;
    res.valid = true;
    return res;
  }
  const double ka = state.kappa + params.A;
  const double delta = ka * (ka - 1.0);
  const double r1 = 1.0 + 4.0 * delta - 4.0 * d.gamma1 / a2;
  if (r1 < 0.0) return res;
  const double eta = std::sqrt(r1);
  const double p = 0.25 + 0.25 * eta;
  const double r2 = 1.0 + 16.0 * p + 4.0 * d.gamma2 / a2;
  if (r2 < 0.0) return res;
  res.value = d.beta_sq + 4.0 * a2 * (state.n + 0.5 + 0.25 * eta + std::sqrt(r2));
  res.valid = true;
  return res;
}

Window default_window(const ModelParams& params) {
  const double M = params.M, C = std::fabs(params.C);
  if (params.limit == Limit::Pseudospin) return {-M - C - 1.0, M + 1.0};
  return {-M - 1.0, M + C + 1.0};
}

double residual_tolerance(double E) { return 1e-9 * std::max(1.0, E * E); }

EnergyRootSet solve_energies(const ModelParams& params, const QuantumState& state, Window window, int grid,
                             Convention convention) {
  params.validate();
  if (!(window.lo < window.hi) || !std::isfinite(window.lo) || !std::isfinite(window.hi))
    throw std::invalid_argument("solve_energies: empty or non-finite window");
  if (grid < 2) throw std::invalid_argument("solve_energies: grid must be at least 2");

  std::vector<double> xs(grid), fs(grid);
  std::vector<char> ok(grid, 0);
  bool any = false;
  for (int i = 0; i < grid; ++i) {
    xs[i] = window.lo + (window.hi - window.lo) * static_cast<double>(i) / (grid - 1);
    const Residual r = quantization_residual(params, state, xs[i], convention);
    ok[i] = r.valid;
    fs[i] = r.value;
    any = any || r.valid;
  }
  if (!any) throw WindowError("solve_energies: no valid point in the scan window");

  auto f = [&](double e) { return quantization_residual(params, state, e, convention); };
  EnergyRootSet out;
  out.window = window;
  out.grid = grid;
  std::vector<double> found;
  for (int i = 0; i + 1 < grid; ++i) {
    if (!ok[i] || !ok[i + 1]) continue;
    if (fs[i] == 0.0) {
      found.push_back(xs[i]);
      continue;
    }
    if (fs[i + 1] == 0.0 || (fs[i] < 0.0) == (fs[i + 1] < 0.0)) continue;
    double a = xs[i], b = xs[i + 1], fa = fs[i];
    while (b - a > 1e-12) {
      const double m = 0.5 * (a + b);
      if (m <= a || m >= b) break;
      const Residual rm = f(m);
      if (!rm.valid) break;
      if (rm.value == 0.0) {
        a = b = m;
        break;
      }
      if ((rm.value < 0.0) == (fa < 0.0)) {
        a = m;
        fa = rm.value;
      } else {
        b = m;
      }
    }
    found.push_back(0.5 * (a + b));
  }
  if (ok[grid - 1] && fs[grid - 1] == 0.0) found.push_back(xs[grid - 1]);

  for (double e : found) {
    const Residual r = f(e);
    if (r.valid && std::fabs(r.value) <= residual_tolerance(e)) out.roots.push_back({e, r.value, true});
  }
  std::sort(out.roots.begin(), out.roots.end(), [](const EnergyRoot& a, const EnergyRoot& b) { return a.E < b.E; });
  return out;
}

double nonrel_energy(int n, int ell, double mu, double alpha, double V1, double V2) {
  const double a2 = alpha * alpha;
  const double r2 = 1.0 + 8.0 * mu * V2 / a2;
  const double r1 = (1.0 + 2.0 * ell) * (1.0 + 2.0 * ell) + 8.0 * mu * V1 / a2;
  if (r1 < 0.0 || r2 < 0.0) throw std::domain_error("nonrel_energy: negative radicand");
  const double b = 2.0 + std::sqrt(r2) + std::sqrt(r1) + 4.0 * n;
  return a2 / (8.0 * mu) * b * b;
}

double nonrel_energy_s_wave(int n, double mu, double alpha, double V1, double V2) {
  const double a2 = alpha * alpha;
  const double r2 = 1.0 + 8.0 * mu * V2 / a2;
  const double r1 = 1.0 + 8.0 * mu * V1 / a2;
  if (r1 < 0.0 || r2 < 0.0) throw std::domain_error("nonrel_energy_s_wave: negative radicand");
  const double b = 2.0 + std::sqrt(r2) + std::sqrt(r1) + 4.0 * n;
  return a2 / (8.0 * mu) * b * b;
}

double nonrel_residual(int n, int ell, double mu, double alpha, double V1, double V2, double E_nl) {
  const double a2 = alpha * alpha;
  const double delta = static_cast<double>(ell) * (ell + 1);
  double b = 0.0;
  if (!analytic_bracket(n, delta, 2.0 * mu * V1 / a2, 2.0 * mu * V2 / a2, b))
    throw std::domain_error("nonrel_residual: negative radicand");
  return -2.0 * mu * E_nl + 4.0 * a2 * b * b;
}

aim::AimProblem aim_problem(const ModelParams& params, const QuantumState& state, int k_max, int order,
                            double x0) {
  params.validate();
  const int kappa = state.kappa;
  auto coeffs = [params, kappa](double E) {
    const DerivedParams d = derived_params(params, E, kappa);
    const double a2 = params.alpha * params.alpha;
    aim::HypergeometricCoeffs c;
    const double r1 = 1.0 + 4.0 * (d.delta + d.gamma1 / a2);
    const double r2 = 1.0 + 4.0 * d.gamma2 / a2;
    c.valid = r1 >= 0.0 && r2 >= 0.0;
    if (!c.valid) return c;
    c.p = 0.25 + 0.25 * std::sqrt(r1);
    c.q = 0.25 + 0.25 * std::sqrt(r2);
    c.b = d.beta_sq / a2;
    return c;
  };
  return aim::hypergeometric_problem(coeffs, x0, k_max, order);
}

std::vector<AimCheckEntry> aim_check_state(const ModelParams& params, const QuantumState& state,
                                           const std::vector<int>& depths, Window window, int grid, double tol) {
  if (depths.empty()) return {};
  auto roots_of = [&](int n) {
    try {
      return solve_energies(params, make_state(n, state.kappa, params.limit), window, grid, Convention::Analytic).roots;
    } catch (const WindowError&) {
      return std::vector<EnergyRoot>{};
    }
  };
  const int kmax = *std::max_element(depths.begin(), depths.end()) + 1;
  std::vector<double> others;
  for (int m = 0; m <= std::max(kmax, state.n) + 1; ++m)
    if (m != state.n)
      for (const EnergyRoot& r : roots_of(m)) others.push_back(r.E);

  const aim::AimProblem pb = aim_problem(params, state, kmax, 2 * kmax + 2);
  std::vector<AimCheckEntry> out;
  for (const EnergyRoot& c : roots_of(state.n)) {
    double h = 0.05;
    for (double x : others)
      if (x != c.E) h = std::min(h, 0.45 * std::fabs(x - c.E));
    for (int k : depths) {
      AimCheckEntry e;
      e.k = k;
      e.E_closed = c.E;
      for (const aim::AimRoot& r : aim::aim_eigenvalues(pb, c.E - h, c.E + h, 400, k, tol))
        if (!e.found || std::fabs(r.E - c.E) < std::fabs(e.E_aim - c.E)) {
          e.found = true;
          e.E_aim = r.E;
          e.converged = r.converged;
        }
      out.push_back(e);
    }
  }
  return out;
}

}  // namespace tpt
