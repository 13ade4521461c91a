#include "pcmprio/metrics.hpp"

#include <cmath>
#include <limits>

namespace pcmprio {

double gp_error(const Matrix& a, const Weights& v, double p) {
  const int n = a.n();
  if (static_cast<int>(v.v.size()) != n)
    throw Error(ErrorKind::kBadArgument, "weight vector size does not match matrix");
  if (std::isinf(p)) {
    double worst = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (i == j) continue;
        worst = std::max(worst, std::abs(a.at(i, j) - v.v[i] / v.v[j]));
      }
    return worst;
  }
  if (!(p >= 1.0))
    throw Error(ErrorKind::kBadArgument, "p must be >= 1 or infinity");
  double sum = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      sum += std::pow(std::abs(a.at(i, j) - v.v[i] / v.v[j]), p);
    }
  return std::pow(sum / (static_cast<double>(n) * n), 1.0 / p);
}

Weights geometric_mean_vector(const Matrix& a) {
  const int n = a.n();
  std::vector<double> logs(n);
  for (int i = 0; i < n; ++i) {
    double s = 0.0;
    for (int j = 0; j < n; ++j) s += std::log(a.at(i, j));
    logs[i] = s / n;
  }
  return Weights::from_log(logs);
}

EigenResult principal_eigenvector(const Matrix& a, double tol) {
  if (tol <= 0.0)
    throw Error(ErrorKind::kBadArgument, "tolerance must be positive");
  const int n = a.n();
  constexpr int kMaxIters = 100000;
  std::vector<double> x = geometric_mean_vector(a).v;
  std::vector<double> y(n);
  for (int iter = 1; iter <= kMaxIters; ++iter) {
    for (int i = 0; i < n; ++i) {
      double s = 0.0;
      for (int j = 0; j < n; ++j) s += a.at(i, j) * x[j];
      y[i] = s;
    }
    const double lambda = y[0];  // x[0] == 1 by normalization
    double residual = 0.0, scale = 0.0;
    for (int i = 0; i < n; ++i) {
      residual = std::max(residual, std::abs(y[i] - lambda * x[i]));
      scale = std::max(scale, std::abs(x[i]));
    }
    if (residual <= tol * scale) {
      return EigenResult{Weights::from_values(x), lambda, iter};
    }
    for (int i = 0; i < n; ++i) x[i] = y[i] / lambda;
    x[0] = 1.0;
  }
  throw Error(ErrorKind::kNoConvergence,
              "power iteration did not converge in 100000 iterations");
}

double saaty_index(const Matrix& a, double lambda_max) {
  const double ci = (lambda_max - a.n()) / (a.n() - 1);
  return ci > 0.0 ? ci : 0.0;
}

}  // namespace pcmprio
