#include "pcmprio/csv_io.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

namespace pcmprio {

namespace {

std::string trim(const std::string& s) {
  size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

[[noreturn]] void parse_fail(const std::string& source, int line,
                             const std::string& what) {
  throw Error(ErrorKind::kParse,
              source + ":" + std::to_string(line) + ": " + what, line - 1);
}

double parse_number(const std::string& cell, const std::string& source,
                    int line) {
  const size_t slash = cell.find('/');
  if (slash != std::string::npos) {
    long long num = 0, den = 0;
    auto r1 = std::from_chars(cell.data(), cell.data() + slash, num);
    auto r2 =
        std::from_chars(cell.data() + slash + 1, cell.data() + cell.size(), den);
    if (r1.ec != std::errc{} || r1.ptr != cell.data() + slash ||
        r2.ec != std::errc{} || r2.ptr != cell.data() + cell.size() || den == 0) {
      parse_fail(source, line, "bad fraction '" + cell + "'");
    }
    return static_cast<double>(num) / static_cast<double>(den);
  }
  double value = 0.0;
  auto r = std::from_chars(cell.data(), cell.data() + cell.size(), value);
  if (r.ec != std::errc{} || r.ptr != cell.data() + cell.size()) {
    parse_fail(source, line, "bad number '" + cell + "'");
  }
  return value;
}

}  // namespace

Matrix parse_matrix_csv(std::istream& in, const std::string& source_name) {
  std::vector<std::vector<double>> rows;
  std::vector<int> row_lines;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    std::vector<double> row;
    std::stringstream cells(t);
    std::string cell;
    while (std::getline(cells, cell, ',')) {
      const std::string c = trim(cell);
      if (c.empty()) parse_fail(source_name, lineno, "empty entry");
      row.push_back(parse_number(c, source_name, lineno));
    }
    rows.push_back(std::move(row));
    row_lines.push_back(lineno);
  }
  if (rows.empty()) parse_fail(source_name, lineno ? lineno : 1, "no data rows");
  for (size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != rows.size()) {
      parse_fail(source_name, row_lines[r],
                 "expected " + std::to_string(rows.size()) + " entries, got " +
                     std::to_string(rows[r].size()));
    }
  }
  try {
    return validate_pcm(rows);
  } catch (const Error& e) {
    throw Error(e.kind(), source_name + ": " + e.what(), e.i(), e.j(), e.value());
  }
}

Matrix load_matrix_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::kIo, "cannot open '" + path + "'");
  return parse_matrix_csv(in, path);
}

std::string matrix_to_csv(const Matrix& a) {
  std::string out;
  char buf[64];
  for (int i = 0; i < a.n(); ++i) {
    for (int j = 0; j < a.n(); ++j) {
      const double x = a.at(i, j);
      const double rx = 1.0 / x;
      if (std::abs(x - std::round(x)) < 1e-12 && x < 1e15) {
        std::snprintf(buf, sizeof buf, "%lld", static_cast<long long>(std::llround(x)));
      } else if (std::abs(rx - std::round(rx)) < 1e-12 && rx < 1e15) {
        std::snprintf(buf, sizeof buf, "1/%lld", static_cast<long long>(std::llround(rx)));
      } else {
        std::snprintf(buf, sizeof buf, "%.17g", x);
      }
      if (j) out += ',';
      out += buf;
    }
    out += '\n';
  }
  return out;
}

void save_matrix_csv(const Matrix& a, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::kIo, "cannot write '" + path + "'");
  out << matrix_to_csv(a);
  if (!out) throw Error(ErrorKind::kIo, "write failed for '" + path + "'");
}

}  // namespace pcmprio
