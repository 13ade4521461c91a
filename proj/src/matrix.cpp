#include "pcmprio/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace pcmprio {

namespace {

std::string pos(int i, int j) {
  return "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
}

void check_entry_positive(double value, int i, int j) {
  if (!std::isfinite(value) || value <= 0.0) {
    throw Error(ErrorKind::kNonPositiveEntry,
                "entry " + pos(i, j) + " must be a positive finite number, got " +
                    std::to_string(value),
                i, j, value);
  }
}

}  // namespace

std::vector<std::vector<double>> Matrix::rows() const {
  std::vector<std::vector<double>> out(n_);
  for (int i = 0; i < n_; ++i)
    out[i].assign(a_.begin() + static_cast<long>(i) * n_,
                  a_.begin() + static_cast<long>(i + 1) * n_);
  return out;
}

double Matrix::max_entry() const {
  return *std::max_element(a_.begin(), a_.end());
}

Matrix validate_pcm(const std::vector<std::vector<double>>& raw) {
  const int n = static_cast<int>(raw.size());
  if (n < 2) {
    throw Error(ErrorKind::kNonSquare,
                "matrix must have at least 2 rows, got " + std::to_string(n));
  }
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(raw[i].size()) != n) {
      throw Error(ErrorKind::kNonSquare,
                  "row " + std::to_string(i + 1) + " has " +
                      std::to_string(raw[i].size()) + " entries, expected " +
                      std::to_string(n),
                  i);
    }
  }
  std::vector<double> a(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      check_entry_positive(raw[i][j], i, j);
      a[static_cast<size_t>(i) * n + j] = raw[i][j];
    }
  for (int i = 0; i < n; ++i) {
    const double d = a[static_cast<size_t>(i) * n + i];
    if (std::abs(d - 1.0) > Matrix::kReciprocityTol) {
      throw Error(ErrorKind::kBadDiagonal,
                  "diagonal entry " + pos(i, i) + " must be 1, got " +
                      std::to_string(d),
                  i, i, d);
    }
    a[static_cast<size_t>(i) * n + i] = 1.0;
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const double prod =
          a[static_cast<size_t>(i) * n + j] * a[static_cast<size_t>(j) * n + i];
      if (std::abs(prod - 1.0) > Matrix::kReciprocityTol) {
        throw Error(ErrorKind::kReciprocityViolation,
                    "entries " + pos(i, j) + " and " + pos(j, i) +
                        " are not reciprocal: product is " + std::to_string(prod),
                    i, j, prod);
      }
    }
  return Matrix(n, std::move(a));
}

Matrix complete_upper_triangle(int n, const std::vector<UpperEntry>& upper) {
  if (n < 2) {
    throw Error(ErrorKind::kNonSquare,
                "matrix must have at least 2 rows, got " + std::to_string(n));
  }
  std::vector<double> a(static_cast<size_t>(n) * n, 0.0);
  for (int i = 0; i < n; ++i) a[static_cast<size_t>(i) * n + i] = 1.0;
  for (const UpperEntry& e : upper) {
    if (e.i < 0 || e.j >= n || e.i >= e.j) {
      throw Error(ErrorKind::kBadArgument,
                  "upper-triangle index " + pos(e.i, e.j) + " is out of range",
                  e.i, e.j);
    }
    check_entry_positive(e.value, e.i, e.j);
    a[static_cast<size_t>(e.i) * n + e.j] = e.value;
    a[static_cast<size_t>(e.j) * n + e.i] = 1.0 / e.value;
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (a[static_cast<size_t>(i) * n + j] == 0.0) {
        throw Error(ErrorKind::kMissingEntry,
                    "missing judgment for pair " + pos(i, j), i, j);
      }
    }
  return Matrix(n, std::move(a));
}

bool is_consistent(const Matrix& a, double tol) {
  if (tol <= 0.0)
    throw Error(ErrorKind::kBadArgument, "tolerance must be positive");
  const int n = a.n();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (std::abs(a.at(i, j) * a.at(j, k) - a.at(i, k)) > tol * a.at(i, k))
          return false;
  return true;
}

Weights Weights::from_values(const std::vector<double>& values) {
  if (values.empty() || values[0] <= 0.0)
    throw Error(ErrorKind::kBadArgument, "weight v_1 must be positive");
  Weights out;
  out.v.resize(values.size());
  out.w.resize(values.size());
  for (size_t i = 0; i < values.size(); ++i) {
    if (!(values[i] > 0.0) || !std::isfinite(values[i]))
      throw Error(ErrorKind::kBadArgument,
                  "weights must be positive and finite");
    out.v[i] = values[i] / values[0];
    out.w[i] = std::log(out.v[i]);
  }
  out.v[0] = 1.0;
  out.w[0] = 0.0;
  return out;
}

Weights Weights::from_log(const std::vector<double>& logs) {
  if (logs.empty())
    throw Error(ErrorKind::kBadArgument, "empty weight vector");
  Weights out;
  out.v.resize(logs.size());
  out.w.resize(logs.size());
  for (size_t i = 0; i < logs.size(); ++i) {
    out.w[i] = logs[i] - logs[0];
    out.v[i] = std::exp(out.w[i]);
  }
  out.v[0] = 1.0;
  out.w[0] = 0.0;
  return out;
}

int RngStream::next_int(int lo, int hi) {
  // Modulo bias is ~range/2^64, irrelevant for the small ranges used here.
  const std::uint64_t range = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<int>(gen_() % range);
}

double RngStream::next_real() {
  return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
}

double RngStream::next_gaussian() {
  if (have_spare_) {
    have_spare_ = false;
    return spare_;
  }
  double u, v, s;
  do {
    u = 2.0 * next_real() - 1.0;
    v = 2.0 * next_real() - 1.0;
    s = u * u + v * v;
  } while (s >= 1.0 || s == 0.0);
  const double m = std::sqrt(-2.0 * std::log(s) / s);
  spare_ = v * m;
  have_spare_ = true;
  return u * m;
}

Matrix random_pcm(int n, int a_max, RngStream& rng) {
  if (n < 2) throw Error(ErrorKind::kBadArgument, "n must be at least 2");
  if (a_max < 2) throw Error(ErrorKind::kBadArgument, "a_max must be at least 2");
  std::vector<UpperEntry> upper;
  upper.reserve(static_cast<size_t>(n) * (n - 1) / 2);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const int k = rng.next_int(1, a_max);
      const double value = rng.next_coin() ? static_cast<double>(k)
                                           : 1.0 / static_cast<double>(k);
      upper.push_back({i, j, value});
    }
  return complete_upper_triangle(n, upper);
}

}  // namespace pcmprio
