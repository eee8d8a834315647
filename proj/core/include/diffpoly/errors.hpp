#pragma once

#include <stdexcept>
#include <string>

namespace diffpoly {

/// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Malformed argument: bad dimension, non-finite entry, out-of-range parameter.
struct InvalidInput : Error {
  using Error::Error;
};

/// A graph generator exhausted its retry budget without producing a
/// connected graph (parameters too sparse for the requested order).
struct GenerationFailed : Error {
  using Error::Error;
};

/// A vertex with zero degree makes the normalized diffusion operator undefined.
struct IsolatedVertex : Error {
  using Error::Error;
};

/// A quantity whose defining formula does not apply (e.g. equal eigenvalues
/// in the eigenvector-convergence variance, or a zero matrix in a
/// scale-normalized metric).
struct UndefinedValue : Error {
  using Error::Error;
};

/// Linear program has no feasible point.
struct Infeasible : Error {
  using Error::Error;
};

/// An iterative solver exceeded its iteration cap or hit a degenerate pivot.
struct NumericalFailure : Error {
  using Error::Error;
};

}  // namespace diffpoly
