#pragma once

#include <complex>
#include <cstddef>

// Dense inner loops. The default entry points parallelize with OpenMP across
// independent output elements, so results are bitwise identical to the serial
// reference for any thread count. kernels::ref holds the plain serial loops;
// tests check the two paths agree and bench/ compares their throughput.

namespace ctwalk::kernels {

using cplx = std::complex<double>;

/// out = a * b, n x n, row-major. out must not alias a or b.
void gemm(const cplx* a, const cplx* b, cplx* out, std::size_t n);

/// y = a * x. y must not alias x.
void matvec(const cplx* a, const cplx* x, cplx* y, std::size_t n);

/// y = a^dagger * x. y must not alias x.
void matvec_dagger(const cplx* a, const cplx* x, cplx* y, std::size_t n);

/// out = a (x) b, Kronecker product, (na*nb) x (na*nb).
void kron(const cplx* a, std::size_t na, const cplx* b, std::size_t nb, cplx* out);

namespace ref {
void gemm(const cplx* a, const cplx* b, cplx* out, std::size_t n);
void matvec(const cplx* a, const cplx* x, cplx* y, std::size_t n);
void matvec_dagger(const cplx* a, const cplx* x, cplx* y, std::size_t n);
void kron(const cplx* a, std::size_t na, const cplx* b, std::size_t nb, cplx* out);
}  // namespace ref

}  // namespace ctwalk::kernels
