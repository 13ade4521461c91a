#pragma once

#include "pcmprio/matrix.hpp"

namespace pcmprio {

/// Generalized mean error of the approximation a(i,j) ~ v_i/v_j.
///
/// For finite p >= 1 returns [(1/n^2) sum |a_ij - v_i/v_j|^p]^(1/p); for
/// p = infinity returns max |a_ij - v_i/v_j| without the 1/n^2 factor (the
/// maximum norm is conventionally reported unscaled).
double gp_error(const Matrix& a, const Weights& v, double p);

/// Row geometric means normalized so v[0] == 1.
Weights geometric_mean_vector(const Matrix& a);

struct EigenResult {
  Weights weights;
  double lambda_max;
  int iterations;
};

/// Principal eigenvector by power iteration started from the geometric-mean
/// vector, normalized by the first coordinate each step. Converges for every
/// positive matrix; throws kNoConvergence after 10^5 iterations as a guard
/// against pathological numerics.
EigenResult principal_eigenvector(const Matrix& a, double tol = 1e-12);

/// Saaty consistency index (lambda_max - n) / (n - 1), clamped at 0.
double saaty_index(const Matrix& a, double lambda_max);

}  // namespace pcmprio
