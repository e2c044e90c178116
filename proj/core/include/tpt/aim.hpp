#pragma once

#include <functional>
#include <stdexcept>
#include <vector>

namespace tpt::aim {

// Truncated Taylor series sum_j c_j (x - x0)^j, j = 0..order.
class SeriesTaylor {
 public:
  SeriesTaylor() = default;
  SeriesTaylor(double center, std::vector<long double> coeffs);

  static SeriesTaylor constant(double center, int order, long double c);
  static SeriesTaylor variable(double center, int order);  // the series of x itself

  double center() const { return center_; }
  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<long double>& coeffs() const { return coeffs_; }
  long double operator[](int j) const { return coeffs_[j]; }
  long double value() const { return coeffs_.empty() ? 0.0L : coeffs_[0]; }

  SeriesTaylor derivative() const;
  SeriesTaylor reciprocal() const;
  SeriesTaylor truncated(int order) const;

  SeriesTaylor& operator+=(const SeriesTaylor& o);
  SeriesTaylor& operator-=(const SeriesTaylor& o);
  SeriesTaylor& operator*=(long double s);

  friend SeriesTaylor operator+(SeriesTaylor a, const SeriesTaylor& b) { return a += b; }
  friend SeriesTaylor operator-(SeriesTaylor a, const SeriesTaylor& b) { return a -= b; }
  friend SeriesTaylor operator*(SeriesTaylor a, long double s) { return a *= s; }
  friend SeriesTaylor operator*(long double s, SeriesTaylor a) { return a *= s; }
  friend SeriesTaylor operator*(const SeriesTaylor& a, const SeriesTaylor& b);

 private:
  double center_ = 0.0;
  std::vector<long double> coeffs_;
};

class OrderExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// y'' = lambda0(x) y' + s0(x) y, with coefficients depending on a parameter E.
struct AimProblem {
  std::function<SeriesTaylor(double)> lambda0;
  std::function<SeriesTaylor(double)> s0;
  // Optional: false where the coefficients are undefined for this E.
  std::function<bool(double)> valid;
  double x0 = 0.5;
  int k_max = 15;
  int order = 36;

  bool is_valid(double E) const { return !valid || valid(E); }
};

struct AimPair {
  SeriesTaylor lambda;
  SeriesTaylor s;
};

AimPair aim_iterate(const AimProblem& problem, double E, int k);

// delta_k = lambda_k s_{k-1} - lambda_{k-1} s_k at x0.
double aim_delta(const AimProblem& problem, double E, int k);

struct AimRoot {
  double E = 0.0;
  bool converged = false;
};

// Roots of E -> delta_k(x0; E) in [lo, hi]; converged when a depth k+1 root
// lies within 10*tol.
std::vector<AimRoot> aim_eigenvalues(const AimProblem& problem, double lo, double hi, int grid, int k,
                                     double tol);

// Coefficients of the hypergeometric-type equation
//   g'' = [(2(p+q)+1) z - (2p+1/2)] / (z(1-z)) g' + [b/4 + (p+q)^2] / (z(1-z)) g,
// where b = beta^2/alpha^2.
struct HypergeometricCoeffs {
  double p = 0.0;
  double q = 0.0;
  double b = 0.0;
  bool valid = true;
};

AimProblem hypergeometric_problem(std::function<HypergeometricCoeffs(double)> coeffs, double x0 = 0.5,
                                  int k_max = 15, int order = 36);

}  // namespace tpt::aim
