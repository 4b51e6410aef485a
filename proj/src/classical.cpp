#include "ctwalk/classical.hpp"

#include <cmath>

#include "ctwalk/errors.hpp"

namespace ctwalk::classical {

Matrix generator(const Graph& g, GeneratorConvention conv) {
  const std::size_t n = g.vertex_count();
  if (conv == GeneratorConvention::NormalizedLaplacian) {
    const auto kappa = is_regular(g);
    if (!kappa)
      throw ValidationError("generator: NormalizedLaplacian requires a regular graph");
    if (*kappa == 0)
      throw ValidationError("generator: NormalizedLaplacian requires degree >= 1");
    Matrix h = g.adjacency;
    h *= 1.0 / static_cast<double>(*kappa);
    for (std::size_t i = 0; i < n; ++i) h(i, i) -= 1.0;
    return h;
  }
  Matrix h = g.adjacency;
  for (std::size_t i = 0; i < n; ++i) h(i, i) -= static_cast<double>(degree(g, i));
  return h;
}

ProbabilityVector evolve(const SpectralDecomposition& h, const ProbabilityVector& p0, double t) {
  if (t < 0.0) throw ValidationError("classical evolve: time must be non-negative");
  if (h.dim() != p0.dim()) throw ValidationError("classical evolve: dimension mismatch");
  CVector v(p0.dim());
  for (std::size_t i = 0; i < p0.dim(); ++i) v[i] = p0[i];
  const CVector out = expm_action(h, cplx(t, 0.0), v);
  RVector result(out.size());
  for (std::size_t i = 0; i < out.size(); ++i) result[i] = out[i].real();
  return ProbabilityVector(std::move(result));
}

ProbabilityVector evolve(const Matrix& h, const ProbabilityVector& p0, double t) {
  return evolve(hermitian_eigendecomposition(h), p0, t);
}

ProbabilityVector evolve_product(
    std::span<const std::pair<Matrix, ProbabilityVector>> factors, double t) {
  if (factors.empty()) throw ValidationError("evolve_product: factor list must be non-empty");
  ProbabilityVector out = evolve(factors[0].first, factors[0].second, t);
  for (std::size_t i = 1; i < factors.size(); ++i)
    out = tensor(out, evolve(factors[i].first, factors[i].second, t));
  return out;
}

Matrix simple_walk_matrix(const Graph& g) {
  const auto kappa = is_regular(g);
  if (!kappa || *kappa == 0)
    throw ValidationError("simple_walk_matrix: requires a regular graph of degree >= 1");
  Matrix w = g.adjacency;
  w *= 1.0 / static_cast<double>(*kappa);
  return w;
}

Matrix lazy_walk_matrix(const Graph& g) {
  Matrix w = simple_walk_matrix(g);
  w *= 0.5;
  for (std::size_t i = 0; i < w.dim(); ++i) w(i, i) += 0.5;
  return w;
}

double stationarity_gap(const SpectralDecomposition& h, const ProbabilityVector& p0, double t) {
  const ProbabilityVector p = evolve(h, p0, t);
  const double u = 1.0 / static_cast<double>(p.dim());
  double gap = 0.0;
  for (std::size_t i = 0; i < p.dim(); ++i) gap += std::abs(p[i] - u);
  return gap;
}

double stationarity_gap(const Matrix& h, const ProbabilityVector& p0, double t) {
  return stationarity_gap(hermitian_eigendecomposition(h), p0, t);
}

}  // namespace ctwalk::classical
