#include "pcmprio/network.hpp"

#include <algorithm>
#include <limits>

namespace pcmprio {

namespace {

double recompute_cycle(const ParametricNetwork& net, const Cycle& c) {
  double total = 0.0;
  for (size_t k = 0; k < c.size(); ++k)
    total += net.length(c[k], c[(k + 1) % c.size()]);
  return total;
}

}  // namespace

ParametricNetwork build_network(const Matrix& a, double z) {
  if (z < 0.0) throw Error(ErrorKind::kBadArgument, "z must be nonnegative");
  const int n = a.n();
  ParametricNetwork net{n, z, std::vector<double>(static_cast<size_t>(n) * n, 0.0)};
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j)
        net.len[static_cast<size_t>(i) * n + j] = arc_length(arc_pair(a, i, j), z);
  return net;
}

SpOutcome shortest_paths_or_cycle(const ParametricNetwork& net) {
  const int n = net.n;
  std::vector<int> parent(n, 0);
  std::vector<double> dist(n, 0.0);
  std::vector<std::vector<int>> kids(n);
  parent[0] = -1;
  kids[0].reserve(n - 1);
  for (int j = 1; j < n; ++j) {
    dist[j] = net.length(0, j);
    kids[0].push_back(j);
  }

  const long pivot_cap = 1000L * n * n;
  for (long pivots = 0;; ++pivots) {
    if (pivots > pivot_cap)
      throw Error(ErrorKind::kInternal, "network simplex exceeded pivot cap");

    int vi = -1, vj = -1;
    for (int i = 0; i < n && vi < 0; ++i)
      for (int j = 0; j < n; ++j) {
        if (i == j) continue;
        if (dist[i] + net.length(i, j) < dist[j] - kZeroTol) {
          vi = i;
          vj = j;
          break;
        }
      }
    if (vi < 0) return Distances{std::move(dist)};

    bool in_subtree = false;
    for (int k = vi; k >= 0; k = parent[k])
      if (k == vj) {
        in_subtree = true;
        break;
      }
    if (in_subtree) {
      // Tree path vj -> ... -> vi plus the entering arc (vi, vj); its length
      // equals the violated reduced cost, strictly below -kZeroTol.
      std::vector<int> up;
      for (int k = vi; k != vj; k = parent[k]) up.push_back(k);
      up.push_back(vj);
      Cycle c(up.rbegin(), up.rend());
      c = canonical_cycle(std::move(c));
      return NegativeCycle{c, recompute_cycle(net, c)};
    }

    const double delta = dist[vi] + net.length(vi, vj) - dist[vj];
    auto& old_kids = kids[parent[vj]];
    old_kids.erase(std::find(old_kids.begin(), old_kids.end(), vj));
    kids[vi].push_back(vj);
    parent[vj] = vi;
    std::vector<int> stack{vj};
    while (!stack.empty()) {
      const int k = stack.back();
      stack.pop_back();
      dist[k] += delta;
      stack.insert(stack.end(), kids[k].begin(), kids[k].end());
    }
  }
}

SpOutcome bellman_ford_oracle(const ParametricNetwork& net) {
  const int n = net.n;
  std::vector<double> dist(n, std::numeric_limits<double>::infinity());
  std::vector<int> pred(n, -1);
  dist[0] = 0.0;
  int last_updated = -1;
  for (int pass = 0; pass <= n; ++pass) {
    bool changed = false;
    for (int i = 0; i < n; ++i) {
      if (!std::isfinite(dist[i])) continue;
      for (int j = 0; j < n; ++j) {
        if (i == j) continue;
        const double cand = dist[i] + net.length(i, j);
        if (cand < dist[j] - kZeroTol) {
          dist[j] = cand;
          pred[j] = i;
          last_updated = j;
          changed = true;
        }
      }
    }
    if (!changed) return Distances{std::move(dist)};
  }

  // Still relaxing after n+1 passes: walk the predecessor graph onto a cycle.
  int x = last_updated;
  for (int k = 0; k < n; ++k) x = pred[x];
  std::vector<int> back;
  int cur = x;
  do {
    back.push_back(cur);
    cur = pred[cur];
  } while (cur != x);
  Cycle c(back.rbegin(), back.rend());
  c = canonical_cycle(std::move(c));
  const double len = recompute_cycle(net, c);
  if (!(len < -kZeroTol))
    throw Error(ErrorKind::kInternal,
                "predecessor-graph cycle is not negative");
  return NegativeCycle{c, len};
}

}  // namespace pcmprio
