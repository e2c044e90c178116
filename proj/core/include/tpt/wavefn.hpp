#pragma once

#include <string>
#include <vector>

#include "tpt/model.hpp"

namespace tpt {

struct Exponents {
  double p = 0.5;
  double q = 0.5;
  double u = 0.5;
  double v = 0.5;
};

// p = 1/4 + sqrt(1 + 4(d + g1/a^2))/4, q = 1/4 + sqrt(1 + 4 g2/a^2)/4, u = 2p - 1/2, v = 2q - 1/2.
Exponents exponents(const ModelParams& params, double E, int kappa);
Exponents exponents_from(double delta, double g1_over_a2, double g2_over_a2);

// z^p (1-z)^q P_n^{(u,v)}(1 - 2z), unnormalized.
double component_z(int n, const Exponents& e, double z);
// d/dz of component_z.
double component_z_derivative(int n, const Exponents& e, double z);

enum class NormMethod { ClosedForm, Quadrature };
const char* to_string(NormMethod m);

struct ClosedFormNorm {
  enum class Status { Ok, NonPositive, Disagrees };
  Status status = Status::NonPositive;
  double integral = 0.0;  // the closed-form double sum
  double value = 0.0;     // 1/sqrt(integral) when positive
};
const char* to_string(ClosedFormNorm::Status s);

// Closed-form double sum with the alternating (-1)^{n-m+1} factor, checked against quadrature.
ClosedFormNorm norm_closed_form(int n, const Exponents& e);

// N with int_0^1 N^2 component_z^2 dz = 1, Gauss-Jacobi with the given node count.
double norm_quadrature(int n, const Exponents& e, int nodes = 128);

// int_0^1 z^a (1-z)^b P_n^{(u,v)}(1-2z)^2 dz for general a, b > -1.
double jacobi_moment(int n, const Exponents& e, double a, double b, int nodes = 128);

struct DominantSample {
  double value = 0.0;
  double derivative = 0.0;  // d/dr
};

// Normalized dominant component and its r-derivative at r.
DominantSample dominant_at(int n, const Exponents& e, double norm, double alpha, double r);

// Partner component from the first-order Dirac relation for the active limit.
double partner_component(const ModelParams& params, const QuantumState& state, double E, double r,
                         const DominantSample& dominant);

enum class NormMode { Z, R };

struct SpinorSample {
  double r = 0.0;
  double z = 0.0;
  double F = 0.0;
  double G = 0.0;
};

struct SpinorSolution {
  QuantumState state;
  Limit limit = Limit::Pseudospin;
  double energy = 0.0;
  Exponents exponents;
  double norm = 0.0;
  NormMethod norm_method = NormMethod::Quadrature;
  ClosedFormNorm::Status closed_form_status = ClosedFormNorm::Status::NonPositive;
  NormMode norm_mode = NormMode::Z;
  std::vector<SpinorSample> samples;

  double dominant(const SpinorSample& s) const;
};

SpinorSolution sample_radial(const ModelParams& params, const QuantumState& state, double E,
                             const std::vector<double>& r_grid, NormMode mode = NormMode::Z);

}  // namespace tpt
