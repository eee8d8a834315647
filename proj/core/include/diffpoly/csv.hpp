#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "diffpoly/matrix.hpp"

namespace diffpoly {

/// Matrix CSV: first line `n`, then n lines of n comma-separated values.
/// The writer emits 17 significant digits so a read/write round trip is
/// bit-exact.
void write_matrix_csv(std::ostream& out, const SymMatrix& a);
void write_matrix_csv(const std::string& path, const SymMatrix& a);
SymMatrix read_matrix_csv(std::istream& in);
SymMatrix read_matrix_csv(const std::string& path);

/// Observation CSV: header `N,M`, then N rows of M comma-separated values.
void write_observations_csv(std::ostream& out, const Matrix& x);
void write_observations_csv(const std::string& path, const Matrix& x);
Matrix read_observations_csv(std::istream& in);
Matrix read_observations_csv(const std::string& path);

/// One comma-separated line of 17-significant-digit values.
void write_vector_csv(std::ostream& out, const std::vector<double>& v);
void write_vector_csv(const std::string& path, const std::vector<double>& v);
std::vector<double> read_vector_csv(const std::string& path);

/// Shortest exact decimal representation (17 significant digits).
std::string format_double(double v);

}  // namespace diffpoly
