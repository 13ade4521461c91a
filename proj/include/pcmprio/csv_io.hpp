#pragma once

#include <iosfwd>
#include <string>

#include "pcmprio/matrix.hpp"

namespace pcmprio {

/// Matrix CSV format: one row per line, comma-separated entries, optional
/// comment lines starting with '#'. Entries are decimals or exact fractions
/// such as "1/3" (integer numerator and denominator, divided once).
Matrix parse_matrix_csv(std::istream& in, const std::string& source_name);

/// Reads and validates a matrix file; parse and validation errors carry the
/// file name and (for parse errors) the 1-based line number.
Matrix load_matrix_csv(const std::string& path);

/// Writes a matrix in the CSV format above. Entries that are integers or
/// exact reciprocals of integers are written as "k" or "1/k", so generated
/// instances round-trip byte-identically; everything else uses %.17g.
void save_matrix_csv(const Matrix& a, const std::string& path);

std::string matrix_to_csv(const Matrix& a);

}  // namespace pcmprio
