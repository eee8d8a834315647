#pragma once

#include <cstddef>
#include <vector>

#include "diffpoly/lp.hpp"
#include "diffpoly/matrix.hpp"
#include "diffpoly/polytope.hpp"
#include "diffpoly/signals.hpp"

namespace diffpoly {

/// Result of one of the LP selection strategies: the selected eigenvalue
/// vector (aligned to the constraint basis, pinned entry equal to 1) plus
/// solver diagnostics.
struct SelectionResult {
  std::vector<double> lambda;
  double objective = 0.0;
  int iterations = 0;
  int degenerate_columns = 0;
  bool degenerate() const { return degenerate_columns > 0; }
};

/// Trace-minimizing strategy: min sum(lambda) over the polytope. Targets
/// solutions whose reconstruction has an empty diagonal.
SelectionResult solve_simple(const PolytopeConstraints& c);

/// Entry-sum-minimizing strategy: min 1^T X diag(lambda) X^T 1, i.e. the
/// L1,1 norm of the (nonnegative) reconstruction. Coefficient of lambda_i
/// is the squared column sum of eigenvector i.
SelectionResult solve_sparse(const PolytopeConstraints& c);

/// Builds the LinearProgram carrier for either strategy (exposed for
/// problem dumps and tests).
LinearProgram make_strategy_lp(const PolytopeConstraints& c, const std::vector<double>& objective);

struct ProjectionResult {
  std::vector<double> lam_hat;  // closest polytope point to diag(A_m)
  double distance = 0.0;        // || A_m - diag(lam_hat) ||_F
  int iterations = 0;           // Hildreth sweeps used
  bool converged = false;
};

/// Expresses a candidate matrix in the constraint basis (A_m = X^T T_m X),
/// takes the diagonal, and projects that eigenvalue vector onto the
/// polytope (Euclidean norm) with Hildreth's dual coordinate ascent.
/// The reported distance keeps the irreducible off-diagonal mass of A_m.
ProjectionResult project_candidate(const PolytopeConstraints& c, const SymMatrix& t_m);

struct RankedCandidate {
  std::size_t index = 0;
  double distance = 0.0;
  bool converged = false;
  bool failed = false;  // projection threw; candidate ranked last
};

/// Ranks candidate matrices by projection distance to the polytope of the
/// observations' sample covariance, ascending (ties by lower index). Each
/// candidate is rescaled by its top eigenvalue first so all satisfy the
/// unit-spectral-scale convention. Per-candidate failures are recorded,
/// not propagated.
std::vector<RankedCandidate> hypothesis_test(const std::vector<SymMatrix>& candidates,
                                             const ObservationSet& obs);

/// Same ranking against an already-built constraint set.
std::vector<RankedCandidate> rank_candidates(const PolytopeConstraints& c,
                                             const std::vector<SymMatrix>& candidates);

}  // namespace diffpoly
