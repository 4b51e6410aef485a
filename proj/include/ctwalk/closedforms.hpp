#pragma once

#include <span>

#include "ctwalk/matrix.hpp"

// Analytic solutions for the worked graph families, in the same conventions
// as the engines (classical generator A/kappa - I per factor, quantum
// propagator e^{-iHt}). They serve as fast evaluators and as cross-checks
// against the spectral engines.

namespace ctwalk::closedforms {

enum class Family {
  CycleClassical,
  CompleteClassical,
  CharterClassical,
  HypercubeClassical,
  CycleQuantum,
  CompleteQuantum,
  CharterQuantum,
  HypercubeQuantum,
};

const char* family_name(Family f);

/// C_n walk from vertex 0: (1/n) sum_j e^{t(cos(2 pi j/n)-1)} cos(2 pi jk/n).
/// n = 2 reduces to the K_2 form (1 +- e^{-2t})/2.
double cycle_classical(std::size_t n, std::size_t k, double t);

/// K_n walk from vertex 0: (1/n)(1 + e^{-nt/(n-1)}) at 0, (1/n)(1 - e^{-nt/(n-1)}) elsewhere.
double complete_classical(std::size_t n, std::size_t k, double t);

/// Product over per-factor closed-form values.
double product_position_probability(std::span<const double> factor_values);

/// K_2 (x) C_n from vertex 0; k in 0..2n-1 (upper block k < n).
double charter_classical(std::size_t n, std::size_t k, double t);

/// C_n amplitude from vertex 0 with the per-factor time t/divisor:
/// (1/n) sum_j e^{-i (t/d) cos(2 pi j/n)} omega^{jk}.
cplx cycle_quantum(std::size_t n, std::size_t k, double t, std::size_t divisor);

/// Amplitude on K_n^{(x)d} at a position with zero_count zero coordinates.
/// Under e^{-iHt}, the degenerate eigenvalue -1/(n-1) contributes
/// e^{+it/((n-1)d)}; the prefactor on every term is e^{-it/d}.
cplx complete_quantum(std::size_t n, std::size_t zero_count, std::size_t d, double t);

/// K_2 (x) C_n probability at vertex k in 0..2n-1:
/// cos^2(t/2) (k < n) or sin^2(t/2) (k >= n) times |(1/n) sum_j ...|^2.
double charter_quantum(std::size_t n, std::size_t k, double t);

/// Amplitude on the n-cube at Hamming weight k:
/// cos(t/n)^{n-k} (-i sin(t/n))^k.
cplx hypercube_quantum(std::size_t n, std::size_t hamming_weight, double t);

}  // namespace ctwalk::closedforms
