#include "ctwalk/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

#include "ctwalk/errors.hpp"
#include "ctwalk/kernels.hpp"

namespace ctwalk {

namespace {

constexpr double kHermitianTol = 1e-10;
constexpr double kConvergenceRel = 1e-12;
constexpr int kMaxSweeps = 60;

double off_diagonal_frobenius(const Matrix& a) {
  double acc = 0.0;
  const std::size_t n = a.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) acc += std::norm(a(i, j));
  return std::sqrt(acc);
}

double frobenius(const Matrix& a) {
  double acc = 0.0;
  for (const auto& e : a.entries()) acc += std::norm(e);
  return std::sqrt(acc);
}

// Smaller-angle root of t^2 + 2*tau*t - 1 = 0.
double jacobi_tangent(double tau) {
  if (tau >= 0.0) return 1.0 / (tau + std::hypot(1.0, tau));
  return -1.0 / (-tau + std::hypot(1.0, tau));
}

// Cyclic Jacobi on a real symmetric matrix. a is overwritten with the
// diagonalized matrix, v accumulates the orthogonal transform (a0 = v a v^T).
void jacobi_real(std::vector<double>& a, std::vector<double>& v, std::size_t n,
                 double off_target, double skip_threshold) {
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    double off2 = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) off2 += 2.0 * a[i * n + j] * a[i * n + j];
    if (std::sqrt(off2) <= off_target) return;

    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a[p * n + q];
        if (std::abs(apq) <= skip_threshold) continue;
        const double tau = (a[q * n + q] - a[p * n + p]) / (2.0 * apq);
        const double t = jacobi_tangent(tau);
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        // A <- R^T A R with R = [[c, s], [-s, c]] acting on (p, q).
        for (std::size_t i = 0; i < n; ++i) {
          const double aip = a[i * n + p], aiq = a[i * n + q];
          a[i * n + p] = c * aip - s * aiq;
          a[i * n + q] = s * aip + c * aiq;
        }
        for (std::size_t i = 0; i < n; ++i) {
          const double api = a[p * n + i], aqi = a[q * n + i];
          a[p * n + i] = c * api - s * aqi;
          a[q * n + i] = s * api + c * aqi;
        }
        a[p * n + q] = 0.0;
        a[q * n + p] = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
          const double vip = v[i * n + p], viq = v[i * n + q];
          v[i * n + p] = c * vip - s * viq;
          v[i * n + q] = s * vip + c * viq;
        }
      }
    }
  }
  throw ValidationError("hermitian_eigendecomposition: Jacobi sweeps did not converge");
}

// Complex Hermitian variant: each pivot is reduced to the real case by the
// phase theta of a_pq. The pivot unitary is U_pp = c, U_pq = s,
// U_qp = -s e^{-i theta}, U_qq = c e^{-i theta}, applied as A <- U^dagger A U,
// V <- V U.
void jacobi_complex(Matrix& a, Matrix& v, double off_target, double skip_threshold) {
  const std::size_t n = a.dim();
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    if (off_diagonal_frobenius(a) <= off_target) return;

    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const cplx apq = a(p, q);
        const double b = std::abs(apq);
        if (b <= skip_threshold) continue;
        const cplx phase = apq / b;  // e^{i theta}
        const double tau = (a(q, q).real() - a(p, p).real()) / (2.0 * b);
        const double t = jacobi_tangent(tau);
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        const cplx sp = s * phase;              // s e^{i theta}
        const cplx spc = s * std::conj(phase);  // s e^{-i theta}
        // Columns: A <- A U, with U_pp = c, U_pq = s, U_qp = -s e^{-i theta},
        // U_qq = c e^{-i theta}.
        for (std::size_t i = 0; i < n; ++i) {
          const cplx aip = a(i, p), aiq = a(i, q);
          a(i, p) = c * aip - spc * aiq;
          a(i, q) = s * aip + c * std::conj(phase) * aiq;
        }
        // Rows: A <- U^dagger A.
        for (std::size_t i = 0; i < n; ++i) {
          const cplx api = a(p, i), aqi = a(q, i);
          a(p, i) = c * api - sp * aqi;
          a(q, i) = s * api + c * phase * aqi;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();
        for (std::size_t i = 0; i < n; ++i) {
          const cplx vip = v(i, p), viq = v(i, q);
          v(i, p) = c * vip - spc * viq;
          v(i, q) = s * vip + c * std::conj(phase) * viq;
        }
      }
    }
  }
  throw ValidationError("hermitian_eigendecomposition: Jacobi sweeps did not converge");
}

}  // namespace

Matrix fourier_matrix(std::size_t n) {
  if (n == 0) throw ValidationError("fourier_matrix: dimension must be >= 1");
  Matrix f(n);
  const double norm = 1.0 / std::sqrt(static_cast<double>(n));
  const double step = 2.0 * std::numbers::pi / static_cast<double>(n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) {
      // omega^{jk} with the exponent reduced mod n to keep the argument small.
      const double arg = step * static_cast<double>((j * k) % n);
      f(j, k) = norm * cplx(std::cos(arg), std::sin(arg));
    }
  return f;
}

Matrix primary_permutation(std::size_t n) {
  if (n < 2) throw ValidationError("primary_permutation: dimension must be >= 2");
  Matrix p(n);
  for (std::size_t j = 0; j < n; ++j) p(j, (j + 1) % n) = 1.0;
  return p;
}

CVector circulant_eigenvalues(std::span<const double> coeffs) {
  const std::size_t n = coeffs.size();
  if (n == 0) throw ValidationError("circulant_eigenvalues: coefficient list must be non-empty");
  CVector lambda(n);
  const double step = 2.0 * std::numbers::pi / static_cast<double>(n);
  for (std::size_t k = 0; k < n; ++k) {
    cplx acc(0.0, 0.0);
    for (std::size_t j = 0; j < n; ++j) {
      const double arg = step * static_cast<double>((j * k) % n);
      acc += coeffs[j] * cplx(std::cos(arg), std::sin(arg));
    }
    lambda[k] = acc;
  }
  return lambda;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.dim() * b.dim());
  kernels::kron(a.data(), a.dim(), b.data(), b.dim(), out.data());
  return out;
}

Matrix kron_sum(std::span<const Matrix> factors) {
  if (factors.empty()) throw ValidationError("kron_sum: factor list must be non-empty");
  std::size_t total = 1;
  for (const auto& f : factors) total *= f.dim();
  Matrix out(total);
  for (std::size_t j = 0; j < factors.size(); ++j) {
    Matrix term = Matrix::identity(1);
    for (std::size_t i = 0; i < factors.size(); ++i)
      term = kron(term, i == j ? factors[i] : Matrix::identity(factors[i].dim()));
    out += term;
  }
  return out;
}

SpectralDecomposition hermitian_eigendecomposition(const Matrix& m) {
  if (!m.is_hermitian(kHermitianTol))
    throw ValidationError("hermitian_eigendecomposition: matrix is not Hermitian within 1e-10");
  const std::size_t n = m.dim();
  if (n == 0) throw ValidationError("hermitian_eigendecomposition: dimension must be >= 1");

  // Symmetrize away round-off within the contract tolerance.
  Matrix a(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = 0.5 * (m(i, j) + std::conj(m(j, i)));

  const double scale = std::max(1.0, frobenius(a));
  const double off_target = kConvergenceRel * scale;
  const double skip_threshold = off_target / (10.0 * static_cast<double>(n));

  RVector eigenvalues(n);
  Matrix vectors(n);

  if (a.is_symmetric_real(0.0)) {
    std::vector<double> ar(n * n), vr(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
      vr[i * n + i] = 1.0;
      for (std::size_t j = 0; j < n; ++j) ar[i * n + j] = a(i, j).real();
    }
    jacobi_real(ar, vr, n, off_target, skip_threshold);
    for (std::size_t j = 0; j < n; ++j) eigenvalues[j] = ar[j * n + j];
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) vectors(i, j) = vr[i * n + j];
  } else {
    Matrix v = Matrix::identity(n);
    jacobi_complex(a, v, off_target, skip_threshold);
    for (std::size_t j = 0; j < n; ++j) eigenvalues[j] = a(j, j).real();
    vectors = std::move(v);
  }

  // Ascending eigenvalue order, columns permuted to match.
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return eigenvalues[x] < eigenvalues[y]; });

  SpectralDecomposition out;
  out.eigenvalues.resize(n);
  out.eigenvectors = Matrix(n);
  for (std::size_t j = 0; j < n; ++j) {
    out.eigenvalues[j] = eigenvalues[order[j]];
    for (std::size_t i = 0; i < n; ++i) out.eigenvectors(i, j) = vectors(i, order[j]);
  }
  return out;
}

CVector expm_action(const SpectralDecomposition& decomp, cplx scale, std::span<const cplx> v) {
  const std::size_t n = decomp.dim();
  if (v.size() != n) throw ValidationError("expm_action: vector dimension mismatch");
  CVector w(n);
  kernels::matvec_dagger(decomp.eigenvectors.data(), v.data(), w.data(), n);
  for (std::size_t j = 0; j < n; ++j) w[j] *= std::exp(scale * decomp.eigenvalues[j]);
  CVector out(n);
  kernels::matvec(decomp.eigenvectors.data(), w.data(), out.data(), n);
  return out;
}

Matrix reconstruct(const SpectralDecomposition& decomp) {
  const std::size_t n = decomp.dim();
  Matrix scaled(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      scaled(i, j) = decomp.eigenvectors(i, j) * decomp.eigenvalues[j];
  return scaled * decomp.eigenvectors.dagger();
}

}  // namespace ctwalk
