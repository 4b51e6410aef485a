#pragma once

#include <span>
#include <utility>
#include <vector>

#include "ctwalk/graphs.hpp"
#include "ctwalk/linalg.hpp"
#include "ctwalk/states.hpp"

namespace ctwalk::classical {

/// Walk generator H for dP/dt = HP. Both choices are symmetric with zero
/// column sums, so evolution conserves mass.
enum class GeneratorConvention {
  NormalizedLaplacian,    // A/kappa - I; requires a regular graph
  CombinatorialLaplacian  // A - D
};

Matrix generator(const Graph& g, GeneratorConvention conv);

/// P(t) = e^{tH} P(0) via the spectral decomposition; round-off negatives are
/// clamped and the mass renormalized. Requires t >= 0.
ProbabilityVector evolve(const SpectralDecomposition& h, const ProbabilityVector& p0, double t);
ProbabilityVector evolve(const Matrix& h, const ProbabilityVector& p0, double t);

/// Tensor product of per-factor evolutions; equals evolve on the
/// Kronecker-sum generator started from the tensor-product state.
ProbabilityVector evolve_product(
    std::span<const std::pair<Matrix, ProbabilityVector>> factors, double t);

/// Discrete-time transition matrices on a regular graph: W_d = A/kappa and
/// the lazy variant W_l = I/2 + W_d/2. Column-stochastic.
Matrix simple_walk_matrix(const Graph& g);
Matrix lazy_walk_matrix(const Graph& g);

/// Total-variation distance (L1, no 1/2 factor) between e^{tH} p0 and the
/// uniform distribution.
double stationarity_gap(const SpectralDecomposition& h, const ProbabilityVector& p0, double t);
double stationarity_gap(const Matrix& h, const ProbabilityVector& p0, double t);

}  // namespace ctwalk::classical
