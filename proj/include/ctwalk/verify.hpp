#pragma once

#include <string>
#include <vector>

namespace ctwalk::verify {

struct CheckResult {
  std::string name;
  double max_error = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

/// Every closed form against its spectral-engine counterpart on a uniform
/// grid of grid_points times over [0, t_max]; single graphs up to max_n
/// vertices per factor, products up to max_d identical factors
/// (total dimension capped at 512).
std::vector<CheckResult> closedform_checks(std::size_t max_n, std::size_t max_d, int grid_points,
                                           double t_max, double tol);

/// Seeded pseudo-random factor combinations from {C_3..C_6, K_2..K_5} with
/// total dimension <= 128: tensor-product evolution against the assembled
/// Kronecker-sum matrix, classical and quantum, at t in {0.1, 1, 5, 20}.
/// Deterministic: fixed seed, portable generator.
std::vector<CheckResult> factorization_checks(int combinations, double tol);

/// Unitarity, mass conservation, semigroup, phase-shift invariance and
/// time-parity at their stated tolerances, across the example families.
std::vector<CheckResult> hygiene_checks();

}  // namespace ctwalk::verify
