#pragma once

// Independent numerical oracles used to freeze expected values. These stay
// off the spectral path under test: plain loops, truncated Taylor series with
// scaling-and-squaring, and rectangle-rule time averages.

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include "ctwalk/matrix.hpp"

namespace oracle {

using ctwalk::cplx;
using ctwalk::CVector;
using ctwalk::Matrix;
using ctwalk::RVector;

inline Matrix multiply_naive(const Matrix& a, const Matrix& b) {
  const std::size_t n = a.dim();
  Matrix out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const cplx aik = a(i, k);
      for (std::size_t j = 0; j < n; ++j) out(i, j) += aik * b(k, j);
    }
  return out;
}

inline CVector apply_naive(const Matrix& a, const CVector& x) {
  const std::size_t n = a.dim();
  CVector y(n, cplx(0.0, 0.0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) y[i] += a(i, j) * x[j];
  return y;
}

/// e^{scale * M} by scaling-and-squaring over a 60-term Taylor series.
inline Matrix expm_taylor(const Matrix& m, cplx scale) {
  const std::size_t n = m.dim();

  Matrix scaled(n);
  double max_entry = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      scaled(i, j) = scale * m(i, j);
      max_entry = std::max(max_entry, std::abs(scaled(i, j)));
    }

  // Halve until a crude norm bound is below 1/2.
  int squarings = 0;
  double bound = max_entry * static_cast<double>(n);
  while (bound > 0.5 && squarings < 64) {
    bound *= 0.5;
    ++squarings;
  }
  const double inv = std::ldexp(1.0, -squarings);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) scaled(i, j) *= inv;

  Matrix result = Matrix::identity(n);
  Matrix term = Matrix::identity(n);
  for (int k = 1; k <= 60; ++k) {
    term = multiply_naive(term, scaled);
    const double factor = 1.0 / static_cast<double>(k);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) term(i, j) *= factor;
    result += term;
  }
  for (int s = 0; s < squarings; ++s) result = multiply_naive(result, result);
  return result;
}

inline CVector expm_taylor_action(const Matrix& m, cplx scale, const CVector& v) {
  return apply_naive(expm_taylor(m, scale), v);
}

/// (1/T) integral of |<j|e^{-iHt}|psi_0>|^2 dt by the rectangle rule with a
/// precomputed one-step propagator.
inline RVector average_distribution_quadrature(const Matrix& h, const CVector& psi0, double total_time,
                                               double dt) {
  const std::size_t n = h.dim();
  const Matrix step = expm_taylor(h, cplx(0.0, -dt));
  const auto samples = static_cast<std::size_t>(total_time / dt);
  RVector acc(n, 0.0);
  CVector psi = psi0;
  for (std::size_t s = 0; s < samples; ++s) {
    psi = apply_naive(step, psi);
    for (std::size_t j = 0; j < n; ++j) acc[j] += std::norm(psi[j]);
  }
  for (auto& a : acc) a /= static_cast<double>(samples);
  return acc;
}

inline Matrix random_hermitian(std::mt19937& gen, std::size_t dim) {
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  Matrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    m(i, i) = dist(gen);
    for (std::size_t j = i + 1; j < dim; ++j) {
      const cplx v(dist(gen), dist(gen));
      m(i, j) = v;
      m(j, i) = std::conj(v);
    }
  }
  return m;
}

inline Matrix random_real_symmetric(std::mt19937& gen, std::size_t dim) {
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  Matrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    m(i, i) = dist(gen);
    for (std::size_t j = i + 1; j < dim; ++j) {
      const double v = dist(gen);
      m(i, j) = v;
      m(j, i) = v;
    }
  }
  return m;
}

inline Matrix random_complex(std::mt19937& gen, std::size_t dim) {
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  Matrix m(dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) m(i, j) = cplx(dist(gen), dist(gen));
  return m;
}

}  // namespace oracle
