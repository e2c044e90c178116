#pragma once

#include <string>
#include <vector>

#include "tpt/aim.hpp"

namespace tpt {

enum class Limit { Spin, Pseudospin };

// Which quantization condition to use.
//   Analytic:  beta^2 + 4 alpha^2 [n + 1/2 + (sqrt(1 + 4 g2/a^2) + eta)/4]^2, the
//              termination condition of the transformed equation.
//   Tabulated: beta^2 + 4 alpha^2 [n + 1/2 + eta'/4 + sqrt(1 + 16 p' + 4 g2/a^2)],
//              eta' = sqrt(1 + 4 d - 4 g1/a^2), p' = 1/4 + eta'/4, d = (k+A)(k+A-1);
//              this form generates the reference eigenvalue tables.
enum class Convention { Tabulated, Analytic };

const char* to_string(Limit limit);
const char* to_string(Convention c);
Limit parse_limit(const std::string& s);
Convention parse_convention(const std::string& s);

struct ModelParams {
  double M = 1.0;
  double V1 = 0.0;
  double V2 = 0.0;
  double alpha = 0.01;
  double A = 0.0;
  double C = 0.0;  // C_s in the spin limit, C_ps in the pseudospin limit
  Limit limit = Limit::Pseudospin;

  void validate() const;  // throws std::invalid_argument
};

struct KappaInfo {
  int ell = 0;
  int ell_tilde = 0;
  int two_j = 1;  // 2j
  std::string family;  // e.g. "s1/2"
};

KappaInfo kappa_mapping(int kappa, Limit limit);

struct QuantumState {
  int n = 0;
  int kappa = -1;
  int ell = 0;
  int ell_tilde = 0;
  double j = 0.5;
  std::string label;
};

QuantumState make_state(int n, int kappa, Limit limit);

struct DerivedParams {
  double gamma1 = 0.0;
  double gamma2 = 0.0;
  double beta_sq = 0.0;
  double delta = 0.0;
};

DerivedParams derived_params(const ModelParams& params, double E, int kappa);

double potential_tpt(double r, const ModelParams& params);
double centrifugal_approx_error(double alpha, double r);

struct Residual {
  double value = 0.0;
  bool valid = false;
};

Residual quantization_residual(const ModelParams& params, const QuantumState& state, double E,
                               Convention convention = Convention::Tabulated);

// Bracket of the analytic condition: n + 1/2 + (sqrt(1 + 4 g2) + sqrt(1 + 4 d + 4 g1)) / 4,
// with g1, g2 already divided by alpha^2. Returns false on a negative radicand.
bool analytic_bracket(int n, double delta, double g1, double g2, double& bracket);

struct Window {
  double lo = 0.0;
  double hi = 0.0;
};

Window default_window(const ModelParams& params);

struct EnergyRoot {
  double E = 0.0;
  double residual = 0.0;
  bool valid = false;
};

struct EnergyRootSet {
  std::vector<EnergyRoot> roots;
  Window window;
  int grid = 0;
};

class WindowError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

EnergyRootSet solve_energies(const ModelParams& params, const QuantumState& state, Window window, int grid = 4000,
                             Convention convention = Convention::Tabulated);

// Root tolerance used for the residual check on returned roots.
double residual_tolerance(double E);

double nonrel_energy(int n, int ell, double mu, double alpha, double V1, double V2);

// The s-wave formula with l fixed at zero.
double nonrel_energy_s_wave(int n, double mu, double alpha, double V1, double V2);

// Spin-limit analytic residual after M+E -> 2 mu, M-E -> -E_nl, C_s = 0.
double nonrel_residual(int n, int ell, double mu, double alpha, double V1, double V2, double E_nl);

// AIM form of the analytic condition for one state.
aim::AimProblem aim_problem(const ModelParams& params, const QuantumState& state, int k_max = 15,
                            int order = 36, double x0 = 0.5);

struct AimCheckEntry {
  int k = 0;
  double E_closed = 0.0;
  bool found = false;
  double E_aim = 0.0;
  bool converged = false;
};

// AIM roots at each depth next to every analytic root of the state in the window.
// Each scan is local: 0.45 of the gap to the nearest other level, at most 0.05.
std::vector<AimCheckEntry> aim_check_state(const ModelParams& params, const QuantumState& state,
                                           const std::vector<int>& depths, Window window, int grid = 4000,
                                           double tol = 1e-13);

}  // namespace tpt
