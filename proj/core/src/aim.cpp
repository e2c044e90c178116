#include "tpt/aim.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace tpt::aim {

SeriesTaylor::SeriesTaylor(double center, std::vector<long double> coeffs)
    : center_(center), coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw std::invalid_argument("SeriesTaylor: empty coefficient list");
}

SeriesTaylor SeriesTaylor::constant(double center, int order, long double c) {
  std::vector<long double> co(order + 1, 0.0L);
  co[0] = c;
  return {center, std::move(co)};
}

SeriesTaylor SeriesTaylor::variable(double center, int order) {
  std::vector<long double> co(order + 1, 0.0L);
  co[0] = center;
  if (order >= 1) co[1] = 1.0L;
  return {center, std::move(co)};
}

SeriesTaylor SeriesTaylor::derivative() const {
  if (order() < 1) throw OrderExhausted("SeriesTaylor: no order left to differentiate");
  std::vector<long double> co(coeffs_.size() - 1);
  for (std::size_t j = 0; j < co.size(); ++j) co[j] = coeffs_[j + 1] * static_cast<long double>(j + 1);
  return {center_, std::move(co)};
}

SeriesTaylor SeriesTaylor::reciprocal() const {
  if (coeffs_[0] == 0.0L) throw std::domain_error("SeriesTaylor: reciprocal of a series vanishing at the center");
  const std::size_t n = coeffs_.size();
  std::vector<long double> r(n, 0.0L);
  r[0] = 1.0L / coeffs_[0];
  for (std::size_t j = 1; j < n; ++j) {
    long double s = 0.0L;
    for (std::size_t i = 1; i <= j; ++i) s += coeffs_[i] * r[j - i];
    r[j] = -s * r[0];
  }
  return {center_, std::move(r)};
}

SeriesTaylor SeriesTaylor::truncated(int order) const {
  if (order < 0) throw std::invalid_argument("SeriesTaylor: negative order");
  std::vector<long double> co(coeffs_.begin(), coeffs_.begin() + std::min<std::size_t>(order + 1, coeffs_.size()));
  return {center_, std::move(co)};
}

SeriesTaylor& SeriesTaylor::operator+=(const SeriesTaylor& o) {
  coeffs_.resize(std::min(coeffs_.size(), o.coeffs_.size()));
  for (std::size_t j = 0; j < coeffs_.size(); ++j) coeffs_[j] += o.coeffs_[j];
  return *this;
}

SeriesTaylor& SeriesTaylor::operator-=(const SeriesTaylor& o) {
  coeffs_.resize(std::min(coeffs_.size(), o.coeffs_.size()));
  for (std::size_t j = 0; j < coeffs_.size(); ++j) coeffs_[j] -= o.coeffs_[j];
  return *this;
}

SeriesTaylor& SeriesTaylor::operator*=(long double s) {
  for (auto& c : coeffs_) c *= s;
  return *this;
}

SeriesTaylor operator*(const SeriesTaylor& a, const SeriesTaylor& b) {
  const std::size_t n = std::min(a.coeffs_.size(), b.coeffs_.size());
  std::vector<long double> co(n, 0.0L);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; i + j < n; ++j) co[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return {a.center_, std::move(co)};
}

namespace {

void check_problem(const AimProblem& problem, int k) {
  if (k < 1) throw std::invalid_argument("aim: depth must be positive");
  if (!problem.lambda0 || !problem.s0) throw std::invalid_argument("aim: missing coefficient functions");
}

// Returns (lambda_{k-1}, s_{k-1}) and (lambda_k, s_k).
std::pair<AimPair, AimPair> iterate_pair(const AimProblem& problem, double E, int k) {
  const SeriesTaylor l0 = problem.lambda0(E);
  const SeriesTaylor s0 = problem.s0(E);
  AimPair prev{l0, s0};
  AimPair cur = prev;
  for (int i = 1; i <= k; ++i) {
    if (cur.lambda.order() < 1 || cur.s.order() < 1)
      throw OrderExhausted("aim: series order exhausted before reaching the requested depth");
    AimPair next{cur.lambda.derivative() + cur.s + l0 * cur.lambda, cur.s.derivative() + s0 * cur.lambda};
    prev = std::move(cur);
    cur = std::move(next);
  }
  return {std::move(prev), std::move(cur)};
}

double delta_unchecked(const AimProblem& problem, double E, int k) {
  auto [prev, cur] = iterate_pair(problem, E, k);
  const long double d = cur.lambda.value() * prev.s.value() - prev.lambda.value() * cur.s.value();
  return static_cast<double>(d);
}

std::vector<double> scan_roots(const AimProblem& problem, double lo, double hi, int grid, int k, double tol) {
  std::vector<double> xs(grid + 1), fs(grid + 1);
  std::vector<char> ok(grid + 1, 0);
  for (int i = 0; i <= grid; ++i) {
    xs[i] = lo + (hi - lo) * static_cast<double>(i) / grid;
    if (problem.is_valid(xs[i])) {
      fs[i] = delta_unchecked(problem, xs[i], k);
      ok[i] = std::isfinite(fs[i]);
    }
  }
  // Scale by the endpoint magnitudes so factorial growth of delta_k stays bounded.
  double scale = 0.0;
  for (int i : {0, grid})
    if (ok[i]) scale = std::max(scale, std::fabs(fs[i]));
  if (!(scale > 0.0) || !std::isfinite(scale)) scale = 1.0;
  for (int i = 0; i <= grid; ++i)
    if (ok[i]) fs[i] /= scale;

  std::vector<double> roots;
  for (int i = 0; i < grid; ++i) {
    if (!ok[i] || !ok[i + 1]) continue;
    if (fs[i] == 0.0) {
      roots.push_back(xs[i]);
      continue;
    }
    if ((fs[i] < 0.0) == (fs[i + 1] < 0.0) || fs[i + 1] == 0.0) continue;
    double a = xs[i], b = xs[i + 1], fa = fs[i];
    while (b - a > tol) {
      const double m = 0.5 * (a + b);
      if (m <= a || m >= b) break;
      const double fm = delta_unchecked(problem, m, k);
      if (fm == 0.0) {
        a = b = m;
        break;
      }
      if ((fm < 0.0) == (fa < 0.0)) {
        a = m;
        fa = fm;
      } else {
        b = m;
      }
    }
    roots.push_back(0.5 * (a + b));
  }
  if (ok[grid] && fs[grid] == 0.0) roots.push_back(xs[grid]);
  return roots;
}

}  // namespace

AimPair aim_iterate(const AimProblem& problem, double E, int k) {
  check_problem(problem, k);
  if (k > problem.k_max) throw std::invalid_argument("aim: depth exceeds k_max");
  return iterate_pair(problem, E, k).second;
}

double aim_delta(const AimProblem& problem, double E, int k) {
  check_problem(problem, k);
  if (k > problem.k_max) throw std::invalid_argument("aim: depth exceeds k_max");
  return delta_unchecked(problem, E, k);
}

std::vector<AimRoot> aim_eigenvalues(const AimProblem& problem, double lo, double hi, int grid, int k,
                                     double tol) {
  check_problem(problem, k);
  if (k > problem.k_max) throw std::invalid_argument("aim: depth exceeds k_max");
  if (!(lo < hi) || !std::isfinite(lo) || !std::isfinite(hi)) throw std::invalid_argument("aim: bad scan interval");
  if (grid < 16) throw std::invalid_argument("aim: grid must be at least 16");

  const std::vector<double> at_k = scan_roots(problem, lo, hi, grid, k, tol);
  const std::vector<double> at_k1 = scan_roots(problem, lo, hi, grid, k + 1, tol);
  std::vector<AimRoot> out;
  out.reserve(at_k.size());
  for (double e : at_k) {
    bool conv = false;
    for (double f : at_k1)
      if (std::fabs(e - f) <= 10.0 * tol) conv = true;
    out.push_back({e, conv});
  }
  return out;
}

AimProblem hypergeometric_problem(std::function<HypergeometricCoeffs(double)> coeffs, double x0, int k_max,
                                  int order) {
  if (!(x0 > 0.0 && x0 < 1.0)) throw std::invalid_argument("aim: x0 must lie strictly inside (0, 1)");
  if (order < 2 * k_max + 2) throw std::invalid_argument("aim: series order too small for k_max");
  // 1 / (z (1 - z)) about x0
  const SeriesTaylor z = SeriesTaylor::variable(x0, order);
  const SeriesTaylor one = SeriesTaylor::constant(x0, order, 1.0L);
  const SeriesTaylor inv = (z * (one - z)).reciprocal();

  AimProblem pb;
  pb.x0 = x0;
  pb.k_max = k_max;
  pb.order = order;
  pb.lambda0 = [coeffs, z, one, inv](double E) {
    const HypergeometricCoeffs c = coeffs(E);
    const long double P = static_cast<long double>(c.p) + c.q;
    return (z * (2.0L * P + 1.0L) - one * (2.0L * c.p + 0.5L)) * inv;
  };
  pb.s0 = [coeffs, inv](double E) {
    const HypergeometricCoeffs c = coeffs(E);
    const long double P = static_cast<long double>(c.p) + c.q;
    return inv * (0.25L * c.b + P * P);
  };
  pb.valid = [coeffs](double E) { return coeffs(E).valid; };
  return pb;
}

}  // namespace tpt::aim
