#pragma once

#include <cstddef>
#include <vector>

namespace diffpoly {

/// Dense row-major matrix. Used for eigenvector bases, observation matrices
/// and other possibly non-symmetric intermediates.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  const std::vector<double>& data() const { return data_; }
  std::vector<double>& data() { return data_; }

  std::vector<double> col(std::size_t j) const;
  std::vector<double> row(std::size_t i) const;

  Matrix transposed() const;

  bool all_finite() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

Matrix operator*(const Matrix& a, const Matrix& b);
std::vector<double> operator*(const Matrix& a, const std::vector<double>& x);

/// Symmetric matrix of order n. Full row-major storage; symmetry is an
/// invariant maintained by construction: set() mirrors the (j,i) entry.
class SymMatrix {
 public:
  SymMatrix() = default;
  explicit SymMatrix(std::size_t n, double fill = 0.0) : n_(n), data_(n * n, fill) {}

  static SymMatrix identity(std::size_t n);
  /// Symmetrizes an arbitrary square matrix: (A + A^T) / 2.
  static SymMatrix from_general(const Matrix& a);
  /// Adopts a matrix that is already symmetric to the last bit.
  static SymMatrix from_exact(const Matrix& a);

  std::size_t order() const { return n_; }

  double operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }
  double at(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

  /// Writes entry (i,j) and its mirror (j,i).
  void set(std::size_t i, std::size_t j, double v) {
    data_[i * n_ + j] = v;
    data_[j * n_ + i] = v;
  }

  const std::vector<double>& data() const { return data_; }

  Matrix to_matrix() const;
  bool all_finite() const;

  std::vector<double> apply(const std::vector<double>& x) const;

 private:
  std::size_t n_ = 0;
  std::vector<double> data_;
};

double frob_norm(const SymMatrix& a);
double l11_norm(const SymMatrix& a);
double trace(const SymMatrix& a);
double frob_norm(const Matrix& a);

/// A^k by repeated squaring; A^0 is the identity. Intermediate products are
/// re-symmetrized to keep the exact-symmetry invariant through rounding.
SymMatrix mat_power(const SymMatrix& a, unsigned k);

SymMatrix sym_mul(const SymMatrix& a, const SymMatrix& b);

}  // namespace diffpoly
