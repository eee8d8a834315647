#pragma once

#include <string>
#include <vector>

#include "diffpoly/eigen.hpp"
#include "diffpoly/matrix.hpp"
#include "diffpoly/rng.hpp"

namespace diffpoly {

/// Nonnegative symmetric edge-weight matrix plus the generator parameters
/// that produced it. Generated models are simple (zero diagonal).
struct AdjacencyMatrix {
  SymMatrix w;
  std::string model;    // "random-geometric", "erdos-renyi", "ring", "uniform", "file"
  double param = 0.0;   // R (radius) or P (edge probability); unused otherwise
  int rejected_draws = 0;  // disconnected draws discarded before this sample

  std::size_t order() const { return w.order(); }
};

/// Symmetric nonnegative matrix with top eigenvalue 1 and spectrum in
/// [-1, 1], bundled with its eigendecomposition.
struct DiffusionOperator {
  SymMatrix t;
  Eigenbasis basis;

  std::size_t order() const { return t.order(); }
};

/// Random geometric graph on the unit 2-d torus: vertices are uniform
/// points, edges join pairs with geodesic distance below `r`, edge weight
/// is the inverse distance. Redrawn until connected (every vertex keeps
/// degree >= 1); gives up after 1000 disconnected draws.
AdjacencyMatrix random_geometric(int n, double r, Rng& rng);

/// Erdos-Renyi graph: each unordered pair present independently with
/// probability p, weight 1. Redrawn until connected, 1000-draw budget.
AdjacencyMatrix erdos_renyi(int n, double p, Rng& rng);

/// Binary cycle on n >= 3 vertices.
AdjacencyMatrix ring(int n);

/// Dense symmetric matrix with entries (diagonal included) drawn uniformly
/// in [0,1]. Always connected; permits self-loops.
AdjacencyMatrix uniform_dense(int n, Rng& rng);

/// Flat-torus geodesic distance between two points in [0,1)^2.
double torus_distance(double x1, double y1, double x2, double y2);

/// The normalized-Laplacian diffusion operator D^{-1/2} W D^{-1/2},
/// eigendecomposed and checked against the diffusion-matrix invariants.
DiffusionOperator diffusion_operator(const AdjacencyMatrix& w);

/// Edge-weighted squared-difference energy of a signal:
/// sum over u < v of T(u,v) * (x_u - x_v)^2.
double smoothness(const DiffusionOperator& t, const std::vector<double>& x);

bool is_connected(const SymMatrix& w);

}  // namespace diffpoly
