#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <vector>

#include "pcmprio/matrix.hpp"

namespace pcmprio {

/// A reciprocal pair of judgments, the data behind one parametric arc.
///
/// The arc (i,j) carries the length l(z) = -ln max{a_ij - z, 1/(a_ji + z)},
/// defined and strictly increasing for all z >= 0. The max-then-log form is
/// branch-free: both branches agree where they meet, so no breakpoint
/// classification is needed.
struct ArcPair {
  double a_ij;
  double a_ji;
};

inline ArcPair arc_pair(const Matrix& a, int i, int j) {
  return ArcPair{a.at(i, j), a.at(j, i)};
}

/// max{a_ij - z, 1/(a_ji + z)}, the multiplier L_ij(z) with l = -ln L.
inline double arc_multiplier(const ArcPair& f, double z) {
  return std::max(f.a_ij - z, 1.0 / (f.a_ji + z));
}

inline double arc_length(const ArcPair& f, double z) {
  return -std::log(arc_multiplier(f, z));
}

/// Breakpoint between the convex -ln(a_ij - z) branch and the concave
/// ln(a_ji + z) branch; only pairs with a_ij > 1 have one on [0, inf).
inline std::optional<double> inflexion_point(const ArcPair& f) {
  if (f.a_ij > 1.0) return f.a_ij - f.a_ji;
  return std::nullopt;
}

/// Directed cycle as a vertex list; arcs run between consecutive vertices
/// and from the last back to the first. Vertices are 0-based.
using Cycle = std::vector<int>;

/// Rotates the vertex list so the smallest vertex comes first. Direction is
/// preserved (reversing a cycle changes its length).
inline Cycle canonical_cycle(Cycle c) {
  if (c.empty()) return c;
  const auto min_it = std::min_element(c.begin(), c.end());
  std::rotate(c.begin(), c.begin() + (min_it - c.begin()), c.end());
  return c;
}

/// Sum of arc lengths around the cycle at level z.
inline double cycle_length(const Matrix& a, const Cycle& c, double z) {
  double total = 0.0;
  for (size_t k = 0; k < c.size(); ++k) {
    const int i = c[k];
    const int j = c[(k + 1) % c.size()];
    total += arc_length(arc_pair(a, i, j), z);
  }
  return total;
}

}  // namespace pcmprio
