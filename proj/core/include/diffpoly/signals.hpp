#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "diffpoly/eigen.hpp"
#include "diffpoly/graphs.hpp"
#include "diffpoly/matrix.hpp"
#include "diffpoly/rng.hpp"

namespace diffpoly {

enum class SourceDist {
  kUniform01,  // i.i.d. uniform on [0,1]
  kGaussian,   // i.i.d. standard normal
};

/// N x M signal matrix, one observation per column. For synthetic data the
/// per-column diffusion counts are kept so a run can be replayed exactly.
struct ObservationSet {
  Matrix x;                                // N x M
  std::optional<std::vector<int>> k;       // length M, k_i >= 1; synthetic only

  std::size_t order() const { return x.rows(); }
  std::size_t count() const { return x.cols(); }
};

/// Sample covariance with its eigendecomposition and the sample count it
/// was estimated from.
struct CovarianceEstimate {
  SymMatrix sigma;
  Eigenbasis basis;
  std::int64_t m = 0;
};

/// Draws M i.i.d. source columns, diffuses column i through k_i successive
/// mat-vec applications of T (k_i uniform in [k_min, k_max]) and returns the
/// diffused signals. Column i uses the substream derive_seed(seed, "col", i),
/// so generation is reproducible independent of scheduling.
ObservationSet generate_observations(const DiffusionOperator& t, std::int64_t m, int k_min,
                                     int k_max, SourceDist source, std::uint64_t seed);

/// Sample covariance (1/(M-1)) (X - mean)(X - mean)^T, rows centered on
/// their means, eigendecomposed with eig_sym.
CovarianceEstimate sample_covariance(const ObservationSet& obs);

/// Streaming accumulator for the sample covariance: consumes one column at
/// a time so the full observation matrix never has to be materialized.
/// Chunk accumulators can be merged (in fixed order) for parallel reduction.
class CovarianceAccumulator {
 public:
  explicit CovarianceAccumulator(std::size_t n);

  void add(const std::vector<double>& column);
  void merge(const CovarianceAccumulator& other);
  std::int64_t count() const { return m_; }

  CovarianceEstimate finalize() const;

 private:
  std::size_t n_;
  std::int64_t m_ = 0;
  std::vector<double> sum_;    // running column sum
  SymMatrix outer_;            // running sum of x x^T
};

/// Covariance-only generation path: identical signal model to
/// generate_observations, but columns are folded straight into the
/// accumulator. Use for large M.
CovarianceEstimate generate_covariance(const DiffusionOperator& t, std::int64_t m, int k_min,
                                       int k_max, SourceDist source, std::uint64_t seed);

/// Asymptotic variance of the inner product between an exact covariance
/// eigenvector (eigenvalue lambda_i) and a sample one (lambda_j_hat):
/// lambda_i * lambda_j_hat / ((M-1) (lambda_i - lambda_j_hat)^2).
/// Requires lambda_i != lambda_j_hat.
double anderson_variance(double lambda_i, double lambda_j_hat, std::int64_t m);

/// Maximum-likelihood estimate of a distinct eigenvalue from M samples:
/// ((M-1)/M) * lambda_i.
double mle_eigenvalue(double lambda_i, std::int64_t m);

}  // namespace diffpoly
