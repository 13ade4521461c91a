#pragma once

#include <limits>
#include <string>
#include <variant>
#include <vector>

#include "pcmprio/arc_length.hpp"
#include "pcmprio/matrix.hpp"
#include "pcmprio/network.hpp"

namespace pcmprio {

/// One candidate for a parametric arc length: a reciprocal pair shifted by a
/// constant. Reduced networks take minima over several of these.
struct ArcTerm {
  ArcPair pair;
  double offset = 0.0;
};

/// Parametric arc length l(z) = min over terms of arc_length(pair, z) + off.
/// A minimum of strictly increasing continuous functions, so itself strictly
/// increasing and continuous (piecewise smooth once terms cross).
class ArcFn {
 public:
  ArcFn() = default;
  explicit ArcFn(std::vector<ArcTerm> terms) : terms_(std::move(terms)) {}

  double operator()(double z) const {
    double best = std::numeric_limits<double>::infinity();
    for (const ArcTerm& t : terms_)
      best = std::min(best, arc_length(t.pair, z) + t.offset);
    return best;
  }

  const std::vector<ArcTerm>& terms() const { return terms_; }

 private:
  std::vector<ArcTerm> terms_;
};

/// Minimax deviation problem in difference-constraint form: find w with
/// w[0] = 0 and w_j - w_i <= l_ij(z) for the smallest feasible z >= 0.
/// The original problem has one term per arc; reduced problems carry minima.
struct LwaeProblem {
  int n = 0;
  std::vector<ArcFn> arcs;     // row-major n*n, diagonal empty
  double feasible_level = 0.0; // a z known to be feasible (root bracket)
  std::vector<int> labels;     // original vertex behind each node

  const ArcFn& arc(int i, int j) const {
    return arcs[static_cast<size_t>(i) * n + j];
  }
  double cycle_value(const Cycle& c, double z) const;
  ParametricNetwork network_at(double z) const;
};

/// Wraps a matrix as an LwaeProblem; feasible_level is the worst deviation
/// of the geometric-mean vector, which certifies its own level.
LwaeProblem problem_from_matrix(const Matrix& a);

struct FeasibleAt {
  Weights weights;  // v_j = exp(d_j) from the shortest distances
};
using Feasibility = std::variant<FeasibleAt, NegativeCycle>;

/// Builds N(z) and runs the shortest-path engine: a weight vector certifying
/// the level z, or a negative cycle proving infeasibility.
Feasibility check_feasible(const Matrix& a, double z);
Feasibility check_feasible(const LwaeProblem& p, double z);

enum class Method { kBisection, kCycleCancel };

std::string method_name(Method m);

struct SolveReport {
  double z_opt = 0.0;
  Weights weights;
  Method method = Method::kCycleCancel;
  int iterations = 0;          // bisection halvings / cancellation rounds
  int subproblems_solved = 0;  // feasibility subproblems (#LW)
  std::vector<Cycle> cycle_trace;  // canceled cycles, canonical form
  std::vector<double> z_trace;     // level after each cancellation
  double epsilon = 0.0;
};

/// Bisection on z over [0, G_inf(geometric-mean vector)], keeping the last
/// feasible weight vector; stops once the interval is within epsilon.
SolveReport solve_bisection(const Matrix& a, double epsilon = 1e-6);

/// Successive negative-cycle canceling: start at z = 0; while infeasible,
/// advance z to the root of the certified cycle's length function (found by
/// Anderson-Bjorck on [z, feasible_level]). Each canonical cycle can appear
/// at most once, which bounds the number of subproblems.
SolveReport solve_cycle_cancel(const Matrix& a, double epsilon = 1e-6);
SolveReport solve_cycle_cancel(const LwaeProblem& p, double epsilon);

SolveReport solve(const Matrix& a, Method method, double epsilon = 1e-6);

}  // namespace pcmprio
