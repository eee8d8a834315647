#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "diffpoly/matrix.hpp"

namespace diffpoly {

/// min objective . x  subject to
///   constraints(r,.) . x >= rhs[r]   for every row r,
///   box_lo[v] <= x[v] <= box_hi[v],
///   x[v] = value                     for every (v, value) in fixed.
struct LinearProgram {
  std::vector<double> objective;
  Matrix constraints;         // rows x V coefficient matrix
  std::vector<double> rhs;    // one lower bound per row
  std::vector<double> box_lo;
  std::vector<double> box_hi;
  std::map<std::size_t, double> fixed;

  std::size_t var_count() const { return objective.size(); }
};

struct LpSolution {
  std::vector<double> x;        // original variable space, fixed vars included
  double objective = 0.0;
  int iterations = 0;
  /// Nonbasic non-artificial columns with zero reduced cost at the optimum.
  /// A positive count flags a non-unique optimal face.
  int degenerate_columns = 0;
  bool degenerate() const { return degenerate_columns > 0; }
};

/// Dense two-phase primal simplex with Bland's rule. Fixed variables are
/// substituted out, the rest are shifted to [0, hi-lo] and upper bounds and
/// surplus variables enter as slack rows. Pivot tolerance 1e-10, iteration
/// cap 50 * (columns + rows).
///
/// Throws Infeasible when phase 1 cannot zero the artificials and
/// NumericalFailure when the iteration cap is hit.
LpSolution solve_lp(const LinearProgram& lp);

}  // namespace diffpoly
