#pragma once

#include <functional>

#include "pcmprio/errors.hpp"

namespace pcmprio {

/// Sign-bracketed interval for a strictly increasing function:
/// h_lo = f(z_lo) < 0 <= h_hi = f(z_hi).
struct Bracket {
  double z_lo;
  double z_hi;
  double h_lo;
  double h_hi;
};

/// Evaluates the endpoints and checks the sign pattern.
Bracket make_bracket(const std::function<double(double)>& f, double z_lo,
                     double z_hi);

struct RootResult {
  double z;        // f(z) >= 0 and |z - root| <= epsilon
  int iterations;  // function evaluations beyond the bracket endpoints
};

/// Anderson-Bjorck modified false position for a strictly increasing f.
///
/// Keeps one endpoint of each sign. When two successive iterates land on the
/// same side, the stagnant endpoint's value is scaled by 1 - h_new/h_old
/// (the Illinois factor 1/2 when that is not positive), restoring
/// superlinear convergence on convex or concave stretches. The returned
/// point is always the nonnegative-side endpoint, so a cycle-length function
/// evaluated there can never still be negative.
RootResult anderson_bjorck(const std::function<double(double)>& f,
                           Bracket bracket, double epsilon);

}  // namespace pcmprio
