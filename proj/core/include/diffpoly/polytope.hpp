#pragma once

#include <cstddef>
#include <vector>

#include "diffpoly/eigen.hpp"
#include "diffpoly/matrix.hpp"

namespace diffpoly {

/// Linear-inequality description of the eigenvalue vectors that reconstruct
/// an entrywise-nonnegative matrix from a fixed orthonormal basis X:
/// one row per entry (i,j), i <= j, with coefficients
/// alpha_ij = X(i,.) .* X(j,.), requiring alpha_ij . lambda >= 0.
/// Together with |lambda_k| <= 1 and lambda_pinned = 1 this is the
/// admissible-diffusion-matrix polytope.
struct PolytopeConstraints {
  std::size_t n = 0;
  std::size_t pinned_index = 0;  // eigenvalue fixed to 1
  Matrix alpha;                  // N(N+1)/2 rows x N columns
  Eigenbasis basis;

  std::size_t row_count() const { return alpha.rows(); }
  /// Row index of entry (i,j), i <= j, in the fixed enumeration order.
  std::size_t row_of(std::size_t i, std::size_t j) const;
};

/// Builds the constraint rows from an orthonormal eigenbasis. The pinned
/// eigenvalue is the one of the basis' largest eigenvalue; if the top
/// eigenvalues tie within 1e-12, the column with the fewest sign changes
/// wins (the constant-sign eigenvector in the exact case).
PolytopeConstraints build_constraints(const Eigenbasis& basis);

/// True iff every constraint row dots to >= -tol, every |lambda_k| <= 1+tol
/// and lambda_pinned >= 1-tol.
bool is_member(const PolytopeConstraints& c, const std::vector<double>& lam, double tol = 1e-9);

/// X diag(lambda) X^T, explicitly symmetrized.
SymMatrix reconstruct(const Eigenbasis& basis, const std::vector<double>& lam);

struct GridPoint {
  double lambda_a;
  double lambda_b;
  bool member;
};

/// Membership over the [-1,1]^2 grid of the two free eigenvalues of an
/// order-3 polytope (the pinned one stays at 1). Step 0.01 gives the
/// standard 201 x 201 sweep.
std::vector<GridPoint> grid_slice_2d(const PolytopeConstraints& c, double step);

}  // namespace diffpoly
