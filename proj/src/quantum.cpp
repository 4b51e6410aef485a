#include "ctwalk/quantum.hpp"

#include <cmath>

#include "ctwalk/errors.hpp"

namespace ctwalk::quantum {

namespace {
constexpr double kDegeneracyTol = 1e-9;
}

Matrix hamiltonian(const Graph& g, HamiltonianConvention conv) {
  switch (conv) {
    case HamiltonianConvention::Adjacency:
      return g.adjacency;
    case HamiltonianConvention::NormalizedAdjacency: {
      const auto kappa = is_regular(g);
      if (!kappa || *kappa == 0)
        throw ValidationError("hamiltonian: NormalizedAdjacency requires a regular graph");
      Matrix h = g.adjacency;
      h *= 1.0 / static_cast<double>(*kappa);
      return h;
    }
    case HamiltonianConvention::ProductAveraged: {
      const auto factors = factor_graphs(g);
      std::vector<Matrix> terms;
      terms.reserve(factors.size());
      for (const auto& f : factors) {
        const auto kappa = is_regular(f);
        if (!kappa || *kappa == 0)
          throw ValidationError("hamiltonian: ProductAveraged requires regular factors");
        Matrix a = f.adjacency;
        a *= 1.0 / static_cast<double>(*kappa);
        terms.push_back(std::move(a));
      }
      Matrix h = kron_sum(terms);
      h *= 1.0 / static_cast<double>(factors.size());
      return h;
    }
  }
  throw ValidationError("hamiltonian: unknown convention");
}

AmplitudeVector evolve(const SpectralDecomposition& h, const AmplitudeVector& psi0, double t) {
  if (h.dim() != psi0.dim()) throw ValidationError("quantum evolve: dimension mismatch");
  return AmplitudeVector(expm_action(h, cplx(0.0, -t), psi0.entries()));
}

AmplitudeVector evolve(const Matrix& h, const AmplitudeVector& psi0, double t) {
  return evolve(hermitian_eigendecomposition(h), psi0, t);
}

ProbabilityVector measure(const AmplitudeVector& psi) {
  RVector p(psi.dim());
  for (std::size_t i = 0; i < psi.dim(); ++i) p[i] = std::norm(psi[i]);
  return ProbabilityVector(std::move(p));
}

AmplitudeVector evolve_product(std::span<const std::pair<Matrix, AmplitudeVector>> factors,
                               double t, bool averaged) {
  if (factors.empty()) throw ValidationError("evolve_product: factor list must be non-empty");
  const double t_factor = averaged ? t / static_cast<double>(factors.size()) : t;
  AmplitudeVector out = evolve(factors[0].first, factors[0].second, t_factor);
  for (std::size_t i = 1; i < factors.size(); ++i)
    out = tensor(out, evolve(factors[i].first, factors[i].second, t_factor));
  return out;
}

ProbabilityVector average_distribution(const SpectralDecomposition& h,
                                       const AmplitudeVector& psi0) {
  const std::size_t n = h.dim();
  if (n != psi0.dim()) throw ValidationError("average_distribution: dimension mismatch");

  // Overlaps alpha_k = <z_k|psi_0>.
  CVector alpha(n);
  for (std::size_t k = 0; k < n; ++k) {
    cplx acc(0.0, 0.0);
    for (std::size_t i = 0; i < n; ++i) acc += std::conj(h.eigenvectors(i, k)) * psi0[i];
    alpha[k] = acc;
  }

  RVector pbar(n, 0.0);
  std::size_t group_start = 0;
  while (group_start < n) {
    std::size_t group_end = group_start + 1;
    while (group_end < n &&
           h.eigenvalues[group_end] - h.eigenvalues[group_end - 1] <= kDegeneracyTol)
      ++group_end;
    for (std::size_t j = 0; j < n; ++j) {
      cplx acc(0.0, 0.0);
      for (std::size_t k = group_start; k < group_end; ++k)
        acc += h.eigenvectors(j, k) * alpha[k];
      pbar[j] += std::norm(acc);
    }
    group_start = group_end;
  }
  return ProbabilityVector(std::move(pbar));
}

ProbabilityVector average_distribution(const Matrix& h, const AmplitudeVector& psi0) {
  return average_distribution(hermitian_eigendecomposition(h), psi0);
}

}  // namespace ctwalk::quantum
