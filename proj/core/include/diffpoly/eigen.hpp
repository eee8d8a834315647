#pragma once

#include <cstddef>
#include <vector>

#include "diffpoly/matrix.hpp"

namespace diffpoly {

/// Orthonormal eigendecomposition of a symmetric matrix. Column i of
/// `vectors` is the eigenvector of `values[i]`; values are sorted in
/// descending order. Repeated eigenvalues yield an arbitrary (but
/// deterministic) orthonormal basis of the eigenspace.
struct Eigenbasis {
  Matrix vectors;              // n x n, columns are eigenvectors
  std::vector<double> values;  // length n, descending

  std::size_t order() const { return values.size(); }
};

/// Symmetric eigendecomposition by cyclic Jacobi rotations.
///
/// Deterministic: fixed sweep order, and each eigenvector is oriented so
/// that its entry of largest absolute value (lowest index on ties) is
/// nonnegative. Off-diagonal convergence threshold 1e-12 * ||A||_F,
/// at most 100 sweeps.
Eigenbasis eig_sym(const SymMatrix& a);

/// X diag(values) X^T for a (sub)set of eigenpairs; result symmetrized.
SymMatrix eig_reconstruct(const Eigenbasis& basis, const std::vector<double>& values);

}  // namespace diffpoly
