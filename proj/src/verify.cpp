#include "ctwalk/verify.hpp"

#include <cmath>
#include <functional>
#include <random>

#include "ctwalk/classical.hpp"
#include "ctwalk/closedforms.hpp"
#include "ctwalk/graphs.hpp"
#include "ctwalk/mixing.hpp"
#include "ctwalk/quantum.hpp"

namespace ctwalk::verify {

namespace {

constexpr std::size_t kProductDimCap = 512;

std::vector<std::size_t> decode_position(std::size_t v, std::size_t n, std::size_t d) {
  std::vector<std::size_t> k(d);
  for (std::size_t i = d; i-- > 0;) {
    k[i] = v % n;
    v /= n;
  }
  return k;
}

double grid_time(int i, int grid_points, double t_max) {
  return t_max * static_cast<double>(i) / static_cast<double>(grid_points - 1);
}

// Kronecker sum of the per-factor normalized Laplacians A_i/kappa_i - I_i;
// the generator the classical closed forms solve.
Matrix factor_laplacian_sum(const Graph& g) {
  const auto factors = factor_graphs(g);
  std::vector<Matrix> terms;
  terms.reserve(factors.size());
  for (const auto& f : factors)
    terms.push_back(classical::generator(f, classical::GeneratorConvention::NormalizedLaplacian));
  return kron_sum(terms);
}

struct GridCheck {
  std::string name;
  double max_error = 0.0;

  void update(double err) { max_error = std::max(max_error, err); }
};

// max over the grid and all vertices of |closed form - engine probability|.
double classical_grid_error(const Matrix& h, std::size_t dim, int grid_points, double t_max,
                            const std::function<double(std::size_t, double)>& form) {
  const auto decomp = hermitian_eigendecomposition(h);
  const auto p0 = ProbabilityVector::point_mass(dim, 0);
  double err = 0.0;
  for (int i = 0; i < grid_points; ++i) {
    const double t = grid_time(i, grid_points, t_max);
    const auto p = classical::evolve(decomp, p0, t);
    for (std::size_t k = 0; k < dim; ++k) err = std::max(err, std::abs(p[k] - form(k, t)));
  }
  return err;
}

double quantum_grid_error(const Matrix& h, std::size_t dim, int grid_points, double t_max,
                          const std::function<cplx(std::size_t, double)>& form) {
  const auto decomp = hermitian_eigendecomposition(h);
  const auto psi0 = AmplitudeVector::basis_state(dim, 0);
  double err = 0.0;
  for (int i = 0; i < grid_points; ++i) {
    const double t = grid_time(i, grid_points, t_max);
    const auto psi = quantum::evolve(decomp, psi0, t);
    for (std::size_t k = 0; k < dim; ++k) err = std::max(err, std::abs(psi[k] - form(k, t)));
  }
  return err;
}

std::size_t ipow_sz(std::size_t base, std::size_t e) {
  std::size_t r = 1;
  while (e-- > 0) r *= base;
  return r;
}

}  // namespace

std::vector<CheckResult> closedform_checks(std::size_t max_n, std::size_t max_d, int grid_points,
                                           double t_max, double tol) {
  std::vector<CheckResult> out;
  auto add = [&](std::string name, double err) {
    out.push_back({std::move(name), err, tol, err <= tol});
  };

  // Cycles, classical and quantum, d identical factors.
  for (std::size_t n = 3; n <= max_n; ++n) {
    for (std::size_t d = 1; d <= max_d; ++d) {
      const std::size_t dim = ipow_sz(n, d);
      if (dim > kProductDimCap) continue;
      std::vector<Graph> factors(d, build(GraphSpec::cycle(n)));
      const Graph g = direct_product(factors);

      double err = classical_grid_error(
          factor_laplacian_sum(g), dim, grid_points, t_max, [&](std::size_t v, double t) {
            std::vector<double> vals;
            for (std::size_t k : decode_position(v, n, d))
              vals.push_back(closedforms::cycle_classical(n, k, t));
            return closedforms::product_position_probability(vals);
          });
      add("closedform/classical/cycle n=" + std::to_string(n) + " d=" + std::to_string(d), err);

      err = quantum_grid_error(
          quantum::hamiltonian(g, quantum::HamiltonianConvention::ProductAveraged), dim,
          grid_points, t_max, [&](std::size_t v, double t) {
            cplx amp(1.0, 0.0);
            for (std::size_t k : decode_position(v, n, d))
              amp *= closedforms::cycle_quantum(n, k, t, d);
            return amp;
          });
      add("closedform/quantum/cycle n=" + std::to_string(n) + " d=" + std::to_string(d), err);
    }
  }

  // Complete graphs, classical and quantum.
  for (std::size_t n = 2; n <= max_n; ++n) {
    for (std::size_t d = 1; d <= max_d; ++d) {
      const std::size_t dim = ipow_sz(n, d);
      if (dim > kProductDimCap) continue;
      std::vector<Graph> factors(d, build(GraphSpec::complete(n)));
      const Graph g = direct_product(factors);

      double err = classical_grid_error(
          factor_laplacian_sum(g), dim, grid_points, t_max, [&](std::size_t v, double t) {
            std::vector<double> vals;
            for (std::size_t k : decode_position(v, n, d))
              vals.push_back(closedforms::complete_classical(n, k, t));
            return closedforms::product_position_probability(vals);
          });
      add("closedform/classical/complete n=" + std::to_string(n) + " d=" + std::to_string(d),
          err);

      err = quantum_grid_error(
          quantum::hamiltonian(g, quantum::HamiltonianConvention::ProductAveraged), dim,
          grid_points, t_max, [&](std::size_t v, double t) {
            std::size_t zeros = 0;
            for (std::size_t k : decode_position(v, n, d)) zeros += k == 0 ? 1 : 0;
            return closedforms::complete_quantum(n, zeros, d, t);
          });
      add("closedform/quantum/complete n=" + std::to_string(n) + " d=" + std::to_string(d), err);
    }
  }

  // Charter K_2 (x) C_n.
  for (std::size_t n = 2; n <= max_n; ++n) {
    const Graph g = build(GraphSpec::charter(n));
    const std::size_t dim = 2 * n;

    double err = classical_grid_error(
        factor_laplacian_sum(g), dim, grid_points, t_max,
        [&](std::size_t k, double t) { return closedforms::charter_classical(n, k, t); });
    add("closedform/classical/charter n=" + std::to_string(n), err);

    const auto decomp = hermitian_eigendecomposition(
        quantum::hamiltonian(g, quantum::HamiltonianConvention::ProductAveraged));
    const auto psi0 = AmplitudeVector::basis_state(dim, 0);
    err = 0.0;
    for (int i = 0; i < grid_points; ++i) {
      const double t = grid_time(i, grid_points, t_max);
      const auto p = quantum::measure(quantum::evolve(decomp, psi0, t));
      for (std::size_t k = 0; k < dim; ++k)
        err = std::max(err, std::abs(p[k] - closedforms::charter_quantum(n, k, t)));
    }
    add("closedform/quantum/charter n=" + std::to_string(n), err);
  }

  // Hypercubes (products of K_2).
  for (std::size_t d = 1; d <= max_d; ++d) {
    const Graph g = build(GraphSpec::hypercube(d));
    const std::size_t dim = ipow_sz(2, d);

    double err = classical_grid_error(
        classical::generator(g, classical::GeneratorConvention::CombinatorialLaplacian), dim,
        grid_points, t_max, [&](std::size_t v, double t) {
          std::vector<double> vals;
          for (std::size_t k : decode_position(v, 2, d))
            vals.push_back(closedforms::complete_classical(2, k, t));
          return closedforms::product_position_probability(vals);
        });
    add("closedform/classical/hypercube n=" + std::to_string(d), err);

    err = quantum_grid_error(
        quantum::hamiltonian(g, quantum::HamiltonianConvention::ProductAveraged), dim,
        grid_points, t_max, [&](std::size_t v, double t) {
          std::size_t weight = 0;
          for (std::size_t k : decode_position(v, 2, d)) weight += k;
          return closedforms::hypercube_quantum(d, weight, t);
        });
    add("closedform/quantum/hypercube n=" + std::to_string(d), err);
  }

  return out;
}

std::vector<CheckResult> factorization_checks(int combinations, double tol) {
  // Pool: C_3..C_6 then K_2..K_5.
  const auto pool_spec = [](std::size_t idx) {
    return idx < 4 ? GraphSpec::cycle(3 + idx) : GraphSpec::complete(2 + (idx - 4));
  };
  std::mt19937 gen(0x77a1c5u);

  std::vector<CheckResult> out;
  for (int combo = 0; combo < combinations; ++combo) {
    const std::size_t d = 2 + gen() % 3;
    std::vector<Graph> factors;
    std::string label;
    std::size_t dim = 1;
    while (factors.size() < d) {
      const std::size_t idx = gen() % 8;
      const Graph f = build(pool_spec(idx));
      if (dim * f.vertex_count() > 128) continue;
      dim *= f.vertex_count();
      label += (label.empty() ? "" : "x") + std::string(idx < 4 ? "C" : "K") +
               std::to_string(f.vertex_count());
      factors.push_back(f);
    }

    std::vector<std::size_t> starts;
    for (const auto& f : factors) starts.push_back(gen() % f.vertex_count());

    // Classical: per-factor normalized Laplacians.
    {
      std::vector<std::pair<Matrix, ProbabilityVector>> parts;
      std::vector<Matrix> hs;
      for (std::size_t i = 0; i < factors.size(); ++i) {
        Matrix h = classical::generator(factors[i],
                                        classical::GeneratorConvention::NormalizedLaplacian);
        parts.emplace_back(h, ProbabilityVector::point_mass(factors[i].vertex_count(), starts[i]));
        hs.push_back(std::move(h));
      }
      const auto full = hermitian_eigendecomposition(kron_sum(hs));
      ProbabilityVector p0 = parts[0].second;
      for (std::size_t i = 1; i < parts.size(); ++i) p0 = tensor(p0, parts[i].second);

      double err = 0.0;
      for (double t : {0.1, 1.0, 5.0, 20.0}) {
        const auto via_product = classical::evolve_product(parts, t);
        const auto via_matrix = classical::evolve(full, p0, t);
        for (std::size_t i = 0; i < p0.dim(); ++i)
          err = std::max(err, std::abs(via_product[i] - via_matrix[i]));
      }
      out.push_back({"factorization/classical " + label, err, tol, err <= tol});
    }

    // Quantum: per-factor normalized adjacencies, plain sum and averaged.
    {
      std::vector<std::pair<Matrix, AmplitudeVector>> parts;
      std::vector<Matrix> hs;
      for (std::size_t i = 0; i < factors.size(); ++i) {
        Matrix h =
            quantum::hamiltonian(factors[i], quantum::HamiltonianConvention::NormalizedAdjacency);
        parts.emplace_back(h, AmplitudeVector::basis_state(factors[i].vertex_count(), starts[i]));
        hs.push_back(std::move(h));
      }
      Matrix sum = kron_sum(hs);
      const auto full_plain = hermitian_eigendecomposition(sum);
      sum *= 1.0 / static_cast<double>(factors.size());
      const auto full_avg = hermitian_eigendecomposition(sum);
      AmplitudeVector psi0 = parts[0].second;
      for (std::size_t i = 1; i < parts.size(); ++i) psi0 = tensor(psi0, parts[i].second);

      double err = 0.0;
      for (double t : {0.1, 1.0, 5.0, 20.0}) {
        const auto plain_product = quantum::evolve_product(parts, t, false);
        const auto plain_matrix = quantum::evolve(full_plain, psi0, t);
        const auto avg_product = quantum::evolve_product(parts, t, true);
        const auto avg_matrix = quantum::evolve(full_avg, psi0, t);
        err = std::max(err, max_abs_diff(plain_product.entries(), plain_matrix.entries()));
        err = std::max(err, max_abs_diff(avg_product.entries(), avg_matrix.entries()));
      }
      out.push_back({"factorization/quantum " + label, err, tol, err <= tol});
    }
  }
  return out;
}

std::vector<CheckResult> hygiene_checks() {
  std::vector<CheckResult> out;
  auto add = [&](std::string name, double err, double tol) {
    out.push_back({std::move(name), err, tol, err <= tol});
  };

  const std::vector<GraphSpec> families = {
      GraphSpec::cycle(3),     GraphSpec::cycle(5),     GraphSpec::cycle(8),
      GraphSpec::complete(2),  GraphSpec::complete(4),  GraphSpec::complete(5),
      GraphSpec::hypercube(1), GraphSpec::hypercube(3), GraphSpec::hypercube(4),
      GraphSpec::charter(2),   GraphSpec::charter(3),   GraphSpec::charter(5),
      GraphSpec::circulant(7, {0, 1, 1, 0, 0, 1, 1})};

  // Fourier unitarity up to n = 64.
  {
    double err = 0.0;
    for (std::size_t n = 1; n <= 64; ++n) {
      const Matrix f = fourier_matrix(n);
      const Matrix gram = f.dagger() * f;
      err = std::max(err, max_abs_diff(gram, Matrix::identity(n)));
    }
    add("hygiene/fourier-unitarity", err, 1e-10);
  }

  for (const auto& spec : families) {
    const Graph g = build(spec);
    const std::size_t dim = g.vertex_count();
    const std::string label = graph_spec_to_json(spec);
    const Matrix h = quantum::hamiltonian(g, quantum::HamiltonianConvention::NormalizedAdjacency);
    const auto decomp = hermitian_eigendecomposition(h);

    // Eigendecomposition contracts.
    add("hygiene/reconstruction " + label, max_abs_diff(reconstruct(decomp), h),
        1e-9 * static_cast<double>(dim));
    add("hygiene/orthonormality " + label,
        max_abs_diff(decomp.eigenvectors.dagger() * decomp.eigenvectors, Matrix::identity(dim)),
        1e-10);

    const auto psi0 = AmplitudeVector::basis_state(dim, 0);

    // Unitarity: norm preserved across positive and negative times.
    {
      double err = 0.0;
      for (double t : {-50.0, -11.3, -0.5, 0.0, 0.7, 5.0, 50.0}) {
        const CVector psi = expm_action(decomp, cplx(0.0, -t), psi0.entries());
        err = std::max(err, std::abs(l2_norm(psi) - 1.0));
      }
      add("hygiene/unitarity " + label, err, 1e-10);
    }

    // Classical mass conservation and nonnegativity before renormalization.
    {
      const Matrix gen = classical::generator(g, classical::GeneratorConvention::NormalizedLaplacian);
      const auto gen_decomp = hermitian_eigendecomposition(gen);
      CVector p0(dim, cplx(0.0, 0.0));
      p0[0] = 1.0;
      double mass_err = 0.0;
      double negativity = 0.0;
      for (double t : {0.0, 0.5, 3.0, 20.0, 100.0}) {
        const CVector p = expm_action(gen_decomp, cplx(t, 0.0), p0);
        double sum = 0.0;
        for (const auto& e : p) {
          sum += e.real();
          negativity = std::min(negativity, e.real());
        }
        mass_err = std::max(mass_err, std::abs(sum - 1.0));
      }
      add("hygiene/mass-conservation " + label, mass_err, 1e-10);
      add("hygiene/nonnegativity " + label, -negativity, 1e-12);

      // Semigroup, classical.
      const auto p_two_step = classical::evolve(
          gen_decomp, classical::evolve(gen_decomp, ProbabilityVector::point_mass(dim, 0), 0.9),
          2.3);
      const auto p_one_step =
          classical::evolve(gen_decomp, ProbabilityVector::point_mass(dim, 0), 3.2);
      double err = 0.0;
      for (std::size_t i = 0; i < dim; ++i)
        err = std::max(err, std::abs(p_two_step[i] - p_one_step[i]));
      add("hygiene/semigroup-classical " + label, err, 1e-9);
    }

    // Semigroup, spectral propagator.
    {
      const CVector two = expm_action(decomp, cplx(0.0, -1.4),
                                      expm_action(decomp, cplx(0.0, -2.1), psi0.entries()));
      const CVector one = expm_action(decomp, cplx(0.0, -3.5), psi0.entries());
      add("hygiene/semigroup-quantum " + label, max_abs_diff(two, one), 1e-9);
    }

    // Phase shift: measure identical under H and H + cI.
    {
      double err = 0.0;
      for (double c : {0.37, 2.0}) {
        Matrix shifted = h;
        for (std::size_t i = 0; i < dim; ++i) shifted(i, i) += c;
        const auto shifted_decomp = hermitian_eigendecomposition(shifted);
        for (double t : {0.8, 7.7}) {
          const auto p = quantum::measure(quantum::evolve(decomp, psi0, t));
          const auto q = quantum::measure(quantum::evolve(shifted_decomp, psi0, t));
          for (std::size_t i = 0; i < dim; ++i) err = std::max(err, std::abs(p[i] - q[i]));
        }
      }
      add("hygiene/phase-shift " + label, err, 1e-12);
    }

    // Time parity of probabilities for real symmetric H, real start.
    {
      double err = 0.0;
      for (double t : {0.6, 4.2, 31.0}) {
        const auto fwd = quantum::measure(quantum::evolve(decomp, psi0, t));
        const auto bwd = quantum::measure(quantum::evolve(decomp, psi0, -t));
        for (std::size_t i = 0; i < dim; ++i)
          err = std::max(err, std::abs(fwd[i] - bwd[i]));
      }
      add("hygiene/time-parity " + label, err, 1e-10);
    }
  }

  return out;
}

}  // namespace ctwalk::verify
