#pragma once

#include <variant>
#include <vector>

#include "pcmprio/arc_length.hpp"
#include "pcmprio/matrix.hpp"

namespace pcmprio {

/// Lengths within +/- kZeroTol of zero are treated as nonnegative; a cycle
/// counts as negative only below -kZeroTol. This keeps the engines from
/// chasing zero-length cycles at the optimum.
inline constexpr double kZeroTol = 1e-12;

/// Complete digraph on n nodes with fixed arc lengths, the network N(z)
/// evaluated at one parameter value.
struct ParametricNetwork {
  int n = 0;
  double z = 0.0;
  std::vector<double> len;  // row-major n*n, diagonal unused

  double length(int i, int j) const {
    return len[static_cast<size_t>(i) * n + j];
  }
};

ParametricNetwork build_network(const Matrix& a, double z);

struct Distances {
  std::vector<double> d;  // d[0] == 0, shortest distances from node 0
};

struct NegativeCycle {
  Cycle vertices;  // canonical form
  double length;   // strictly below -kZeroTol
};

/// Exactly one of the two outcomes: either distances satisfying every
/// triangle inequality d_i + l_ij >= d_j, or a negative-cycle certificate.
using SpOutcome = std::variant<Distances, NegativeCycle>;

inline bool feasible(const SpOutcome& o) {
  return std::holds_alternative<Distances>(o);
}

/// Shortest-path network simplex from node 0, handling negative lengths.
///
/// The spanning tree starts as the star of arcs (0,j); the entering arc is
/// the first violating arc in row-major order, which makes the run (and the
/// cycle it may certify) deterministic. When the entering arc's tail lies in
/// the subtree of its head, the tree path plus the arc is a negative cycle
/// and is returned; otherwise the head's subtree is reparented and shifted.
SpOutcome shortest_paths_or_cycle(const ParametricNetwork& net);

/// Independent label-correcting oracle with predecessor-graph cycle
/// extraction. Same contract as shortest_paths_or_cycle; it exists to check
/// the simplex engine and is not used by any solver.
SpOutcome bellman_ford_oracle(const ParametricNetwork& net);

}  // namespace pcmprio
