#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "pcmprio/errors.hpp"

namespace pcmprio {

class Matrix;

/// One judgment above the diagonal: how many times alternative i beats j.
struct UpperEntry {
  int i;
  int j;  // requires 0 <= i < j < n
  double value;
};

/// Validated positive reciprocal matrix of ratio judgments.
///
/// Invariants: a(i,i) == 1, every entry strictly positive and finite, and
/// a(i,j) * a(j,i) == 1 within kReciprocityTol (relative). Entries are stored
/// as given; only the diagonal is normalized to exactly 1.
class Matrix {
 public:
  static constexpr double kReciprocityTol = 1e-9;

  int n() const { return n_; }
  double at(int i, int j) const { return a_[static_cast<size_t>(i) * n_ + j]; }
  const std::vector<double>& entries() const { return a_; }
  std::vector<std::vector<double>> rows() const;
  double max_entry() const;

 private:
  Matrix(int n, std::vector<double> entries)
      : n_(n), a_(std::move(entries)) {}

  friend Matrix validate_pcm(const std::vector<std::vector<double>>& raw);
  friend Matrix complete_upper_triangle(int n,
                                        const std::vector<UpperEntry>& upper);

  int n_;
  std::vector<double> a_;  // row-major n*n
};

/// Checks shape, positivity, unit diagonal and reciprocity of a raw array.
/// Throws Error with kind kNonSquare / kNonPositiveEntry / kBadDiagonal /
/// kReciprocityViolation pointing at the first offender in row-major order.
Matrix validate_pcm(const std::vector<std::vector<double>>& raw);

/// Builds a matrix from the n(n-1)/2 judgments above the diagonal; the lower
/// triangle is filled with exact reciprocals and the diagonal with 1.
Matrix complete_upper_triangle(int n, const std::vector<UpperEntry>& upper);

/// True iff a(i,j) * a(j,k) == a(i,k) for all triples within relative tol.
bool is_consistent(const Matrix& a, double tol);

/// Priority vector in both scales: v[i] > 0 with v[0] == 1, w[i] = ln v[i].
struct Weights {
  std::vector<double> v;
  std::vector<double> w;

  static Weights from_values(const std::vector<double>& values);
  static Weights from_log(const std::vector<double>& logs);
};

/// Deterministic random stream: identical seeds give identical draws on every
/// platform (mt19937_64 output is pinned by the standard; distributions here
/// are hand-rolled because the standard library ones are not portable).
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next_u64() { return gen_(); }
  /// Uniform integer in [lo, hi].
  int next_int(int lo, int hi);
  /// Uniform in [0, 1).
  double next_real();
  bool next_coin() { return (gen_() >> 17 & 1u) != 0; }
  /// Standard normal via Box-Muller.
  double next_gaussian();

 private:
  std::mt19937_64 gen_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

/// Random instance: for each pair i < j draw k uniformly from {1,...,a_max}
/// and put k and 1/k on the two sides of the diagonal in random order.
Matrix random_pcm(int n, int a_max, RngStream& rng);

}  // namespace pcmprio
