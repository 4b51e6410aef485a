#pragma once

#include <span>
#include <utility>
#include <vector>

#include "ctwalk/graphs.hpp"
#include "ctwalk/linalg.hpp"
#include "ctwalk/states.hpp"

namespace ctwalk::quantum {

/// Hamiltonian choices. On regular graphs the degree term of the Laplacian is
/// a multiple of the identity and only contributes a global phase, so the
/// adjacency variants are observationally equivalent to it.
enum class HamiltonianConvention {
  Adjacency,            // A
  NormalizedAdjacency,  // A/kappa; requires a regular graph
  ProductAveraged       // (1/d) sum_i I (x) (A_i/kappa_i) (x) I over the d factors
};

Matrix hamiltonian(const Graph& g, HamiltonianConvention conv);

/// |psi_t> = e^{-iHt} |psi_0>. t may be negative.
AmplitudeVector evolve(const SpectralDecomposition& h, const AmplitudeVector& psi0, double t);
AmplitudeVector evolve(const Matrix& h, const AmplitudeVector& psi0, double t);

/// Collapse: P(j) = |<j|psi>|^2.
ProbabilityVector measure(const AmplitudeVector& psi);

/// Tensor product of per-factor evolutions. With averaged set, each factor
/// runs to t/d, matching the ProductAveraged Hamiltonian on the full graph;
/// otherwise to t, matching the plain Kronecker sum of the factor Hamiltonians.
AmplitudeVector evolve_product(std::span<const std::pair<Matrix, AmplitudeVector>> factors,
                               double t, bool averaged);

/// Exact Cesaro limit of the probability trajectory, from the spectrum:
/// Pbar(j) = sum over eigenvalue-degeneracy groups G of
/// |sum_{k in G} <j|z_k><z_k|psi_0>|^2. Eigenvalues group at 1e-9.
ProbabilityVector average_distribution(const SpectralDecomposition& h,
                                       const AmplitudeVector& psi0);
ProbabilityVector average_distribution(const Matrix& h, const AmplitudeVector& psi0);

}  // namespace ctwalk::quantum
