#include "pcmprio/solver.hpp"

#include <cmath>
#include <numeric>
#include <set>

#include "pcmprio/metrics.hpp"
#include "pcmprio/root_find.hpp"

namespace pcmprio {

double LwaeProblem::cycle_value(const Cycle& c, double z) const {
  double total = 0.0;
  for (size_t k = 0; k < c.size(); ++k)
    total += arc(c[k], c[(k + 1) % c.size()])(z);
  return total;
}

ParametricNetwork LwaeProblem::network_at(double z) const {
  ParametricNetwork net{n, z, std::vector<double>(static_cast<size_t>(n) * n, 0.0)};
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) net.len[static_cast<size_t>(i) * n + j] = arc(i, j)(z);
  return net;
}

LwaeProblem problem_from_matrix(const Matrix& a) {
  const int n = a.n();
  LwaeProblem p;
  p.n = n;
  p.arcs.resize(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j)
        p.arcs[static_cast<size_t>(i) * n + j] =
            ArcFn({ArcTerm{arc_pair(a, i, j), 0.0}});
  p.feasible_level = gp_error(a, geometric_mean_vector(a),
                              std::numeric_limits<double>::infinity());
  p.labels.resize(n);
  std::iota(p.labels.begin(), p.labels.end(), 0);
  return p;
}

namespace {

Feasibility feasibility_from_outcome(SpOutcome&& out) {
  if (auto* d = std::get_if<Distances>(&out))
    return FeasibleAt{Weights::from_log(d->d)};
  return std::get<NegativeCycle>(out);
}

}  // namespace

Feasibility check_feasible(const LwaeProblem& p, double z) {
  if (z < 0.0) throw Error(ErrorKind::kBadArgument, "z must be nonnegative");
  return feasibility_from_outcome(shortest_paths_or_cycle(p.network_at(z)));
}

Feasibility check_feasible(const Matrix& a, double z) {
  if (z < 0.0) throw Error(ErrorKind::kBadArgument, "z must be nonnegative");
  return feasibility_from_outcome(shortest_paths_or_cycle(build_network(a, z)));
}

std::string method_name(Method m) {
  return m == Method::kBisection ? "bisection" : "cycle-cancel";
}

SolveReport solve_bisection(const Matrix& a, double epsilon) {
  if (!(epsilon > 0.0))
    throw Error(ErrorKind::kBadArgument, "epsilon must be positive");
  SolveReport r;
  r.method = Method::kBisection;
  r.epsilon = epsilon;

  const Weights gm = geometric_mean_vector(a);
  double z_lo = 0.0;
  double z_hi = gp_error(a, gm, std::numeric_limits<double>::infinity());
  Weights best = gm;  // certifies the initial z_hi by construction

  while (z_hi - z_lo > epsilon) {
    const double z_mid = 0.5 * (z_lo + z_hi);
    ++r.iterations;
    ++r.subproblems_solved;
    Feasibility f = check_feasible(a, z_mid);
    if (auto* ok = std::get_if<FeasibleAt>(&f)) {
      z_hi = z_mid;
      best = std::move(ok->weights);
    } else {
      z_lo = z_mid;
    }
  }
  r.z_opt = z_hi;
  r.weights = std::move(best);
  // The geometric-mean initialization itself certifies z_hi when no
  // feasibility subproblem ever ran (already-consistent input).
  if (r.subproblems_solved == 0) r.subproblems_solved = 1;
  return r;
}

SolveReport solve_cycle_cancel(const LwaeProblem& p, double epsilon) {
  if (!(epsilon > 0.0))
    throw Error(ErrorKind::kBadArgument, "epsilon must be positive");
  SolveReport r;
  r.method = Method::kCycleCancel;
  r.epsilon = epsilon;

  double z = 0.0;
  std::set<Cycle> seen;
  for (;;) {
    ++r.subproblems_solved;
    Feasibility f = check_feasible(p, z);
    if (auto* ok = std::get_if<FeasibleAt>(&f)) {
      r.z_opt = z;
      r.weights = std::move(ok->weights);
      r.iterations = static_cast<int>(r.cycle_trace.size());
      return r;
    }
    const NegativeCycle& bad = std::get<NegativeCycle>(f);
    if (!seen.insert(bad.vertices).second)
      throw Error(ErrorKind::kInternal,
                  "negative cycle certified twice; root finding failed");

    auto cycle_fn = [&p, &bad](double zz) {
      return p.cycle_value(bad.vertices, zz);
    };
    const double h_lo = cycle_fn(z);
    if (!(h_lo < 0.0))
      throw Error(ErrorKind::kInternal,
                  "certified cycle is not negative on recomputation");
    // The known-feasible level has no negative cycle, so the cycle function
    // is nonnegative there; nudge upward if rounding says otherwise.
    double z_ub = std::max(p.feasible_level, z + epsilon);
    double h_ub = cycle_fn(z_ub);
    for (int grow = 0; h_ub < 0.0 && grow < 64; ++grow) {
      z_ub += std::max(1e-9, 2.0 * -h_ub);
      h_ub = cycle_fn(z_ub);
    }
    if (h_ub < 0.0)
      throw Error(ErrorKind::kInternal, "no feasible upper bracket found");
    z = anderson_bjorck(cycle_fn, Bracket{z, z_ub, h_lo, h_ub}, epsilon).z;
    r.cycle_trace.push_back(bad.vertices);
    r.z_trace.push_back(z);
  }
}

SolveReport solve_cycle_cancel(const Matrix& a, double epsilon) {
  return solve_cycle_cancel(problem_from_matrix(a), epsilon);
}

SolveReport solve(const Matrix& a, Method method, double epsilon) {
  return method == Method::kBisection ? solve_bisection(a, epsilon)
                                      : solve_cycle_cancel(a, epsilon);
}

}  // namespace pcmprio
