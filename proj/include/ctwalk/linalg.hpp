#pragma once

#include <span>

#include "ctwalk/matrix.hpp"

namespace ctwalk {

/// Eigensystem of a Hermitian matrix: real eigenvalues in ascending order,
/// eigenvector j stored as column j of a unitary.
struct SpectralDecomposition {
  RVector eigenvalues;
  Matrix eigenvectors;

  std::size_t dim() const { return eigenvalues.size(); }
};

/// Unitary DFT matrix: F[j][k] = omega^{jk} / sqrt(n), omega = e^{2 pi i / n}.
Matrix fourier_matrix(std::size_t n);

/// Cyclic-shift permutation: P[j][(j+1) mod n] = 1. Requires n >= 2.
/// F^dagger P F = diag(1, omega, ..., omega^{n-1}).
Matrix primary_permutation(std::size_t n);

/// Eigenvalues of the circulant matrix sum_j coeffs[j] P^j:
/// lambda_k = sum_j coeffs[j] omega^{jk}, k = 0..n-1.
CVector circulant_eigenvalues(std::span<const double> coeffs);

/// Kronecker product. Composite index i = i_a * dim(b) + i_b
/// (leftmost factor most significant).
Matrix kron(const Matrix& a, const Matrix& b);

/// Kronecker sum: sum_j I (x) ... (x) A_j (x) ... (x) I.
Matrix kron_sum(std::span<const Matrix> factors);

/// Cyclic Jacobi rotations; complex Hermitian handled via per-pivot phase,
/// real-symmetric input takes an all-real fast path. Sweeps until the
/// off-diagonal Frobenius mass falls below 1e-12 relative to the input norm.
/// Throws ValidationError unless the input is Hermitian within 1e-10.
SpectralDecomposition hermitian_eigendecomposition(const Matrix& m);

/// V diag(e^{scale * lambda_j}) V^dagger v.
CVector expm_action(const SpectralDecomposition& decomp, cplx scale, std::span<const cplx> v);

/// V diag(lambda) V^dagger, for reconstruction checks.
Matrix reconstruct(const SpectralDecomposition& decomp);

}  // namespace ctwalk
