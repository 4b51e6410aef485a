#include "ctwalk/kernels.hpp"

namespace ctwalk::kernels {

namespace {
// Below this dimension the OpenMP fork/join overhead dominates.
constexpr std::size_t kParallelDim = 48;
}  // namespace

namespace ref {

void gemm(const cplx* a, const cplx* b, cplx* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    cplx* row = out + i * n;
    for (std::size_t j = 0; j < n; ++j) row[j] = cplx(0.0, 0.0);
    for (std::size_t k = 0; k < n; ++k) {
      const cplx aik = a[i * n + k];
      const cplx* brow = b + k * n;
      for (std::size_t j = 0; j < n; ++j) row[j] += aik * brow[j];
    }
  }
}

void matvec(const cplx* a, const cplx* x, cplx* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    cplx acc(0.0, 0.0);
    const cplx* row = a + i * n;
    for (std::size_t j = 0; j < n; ++j) acc += row[j] * x[j];
    y[i] = acc;
  }
}

void matvec_dagger(const cplx* a, const cplx* x, cplx* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    cplx acc(0.0, 0.0);
    for (std::size_t j = 0; j < n; ++j) acc += std::conj(a[j * n + i]) * x[j];
    y[i] = acc;
  }
}

void kron(const cplx* a, std::size_t na, const cplx* b, std::size_t nb, cplx* out) {
  const std::size_t n = na * nb;
  for (std::size_t ia = 0; ia < na; ++ia) {
    for (std::size_t ib = 0; ib < nb; ++ib) {
      cplx* row = out + (ia * nb + ib) * n;
      for (std::size_t ja = 0; ja < na; ++ja) {
        const cplx aij = a[ia * na + ja];
        const cplx* brow = b + ib * nb;
        for (std::size_t jb = 0; jb < nb; ++jb) row[ja * nb + jb] = aij * brow[jb];
      }
    }
  }
}

}  // namespace ref

void gemm(const cplx* a, const cplx* b, cplx* out, std::size_t n) {
#pragma omp parallel for schedule(static) if (n >= kParallelDim)
  for (std::size_t i = 0; i < n; ++i) {
    cplx* row = out + i * n;
    for (std::size_t j = 0; j < n; ++j) row[j] = cplx(0.0, 0.0);
    for (std::size_t k = 0; k < n; ++k) {
      const cplx aik = a[i * n + k];
      const cplx* brow = b + k * n;
      for (std::size_t j = 0; j < n; ++j) row[j] += aik * brow[j];
    }
  }
}

void matvec(const cplx* a, const cplx* x, cplx* y, std::size_t n) {
#pragma omp parallel for schedule(static) if (n >= kParallelDim * 4)
  for (std::size_t i = 0; i < n; ++i) {
    cplx acc(0.0, 0.0);
    const cplx* row = a + i * n;
    for (std::size_t j = 0; j < n; ++j) acc += row[j] * x[j];
    y[i] = acc;
  }
}

void matvec_dagger(const cplx* a, const cplx* x, cplx* y, std::size_t n) {
#pragma omp parallel for schedule(static) if (n >= kParallelDim * 4)
  for (std::size_t i = 0; i < n; ++i) {
    cplx acc(0.0, 0.0);
    for (std::size_t j = 0; j < n; ++j) acc += std::conj(a[j * n + i]) * x[j];
    y[i] = acc;
  }
}

void kron(const cplx* a, std::size_t na, const cplx* b, std::size_t nb, cplx* out) {
  const std::size_t n = na * nb;
#pragma omp parallel for schedule(static) if (n >= kParallelDim)
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t ia = i / nb;
    const std::size_t ib = i % nb;
    cplx* row = out + i * n;
    for (std::size_t ja = 0; ja < na; ++ja) {
      const cplx aij = a[ia * na + ja];
      const cplx* brow = b + ib * nb;
      for (std::size_t jb = 0; jb < nb; ++jb) row[ja * nb + jb] = aij * brow[jb];
    }
  }
}

}  // namespace ctwalk::kernels
