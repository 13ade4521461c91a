#include "pcmprio/root_find.hpp"

#include <cmath>
#include <string>

namespace pcmprio {

Bracket make_bracket(const std::function<double(double)>& f, double z_lo,
                     double z_hi) {
  if (!(z_lo < z_hi))
    throw Error(ErrorKind::kBadBracket, "bracket endpoints out of order");
  Bracket b{z_lo, z_hi, f(z_lo), f(z_hi)};
  if (!(b.h_lo < 0.0) || !(b.h_hi >= 0.0)) {
    throw Error(ErrorKind::kBadBracket,
                "bracket requires f(z_lo) < 0 <= f(z_hi), got " +
                    std::to_string(b.h_lo) + " and " + std::to_string(b.h_hi));
  }
  return b;
}

RootResult anderson_bjorck(const std::function<double(double)>& f,
                           Bracket b, double epsilon) {
  if (!(epsilon > 0.0))
    throw Error(ErrorKind::kBadArgument, "epsilon must be positive");
  if (!(b.z_lo < b.z_hi) || !(b.h_lo < 0.0) || !(b.h_hi >= 0.0))
    throw Error(ErrorKind::kBadBracket, "invalid bracket");

  constexpr int kMaxIters = 1000;
  int last_side = 0;  // -1: last point replaced z_lo, +1: replaced z_hi
  for (int iter = 0; iter < kMaxIters; ++iter) {
    if (b.z_hi - b.z_lo < epsilon || b.h_hi == 0.0)
      return RootResult{b.z_hi, iter};

    double c = (b.z_lo * b.h_hi - b.z_hi * b.h_lo) / (b.h_hi - b.h_lo);
    if (!(c > b.z_lo) || !(c < b.z_hi)) c = 0.5 * (b.z_lo + b.z_hi);
    const double hc = f(c);
    if (hc == 0.0) return RootResult{c, iter + 1};
    if (hc < 0.0) {
      if (last_side == -1) {
        double m = 1.0 - hc / b.h_lo;
        if (m <= 0.0) m = 0.5;
        b.h_hi *= m;
      }
      b.z_lo = c;
      b.h_lo = hc;
      last_side = -1;
    } else {
      if (last_side == +1) {
        double m = 1.0 - hc / b.h_hi;
        if (m <= 0.0) m = 0.5;
        b.h_lo *= m;
      }
      b.z_hi = c;
      b.h_hi = hc;
      last_side = +1;
    }
  }
  throw Error(ErrorKind::kBadBracket,
              "root finding did not converge; is the function monotone?");
}

}  // namespace pcmprio
