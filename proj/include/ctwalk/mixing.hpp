#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ctwalk/linalg.hpp"
#include "ctwalk/states.hpp"

namespace ctwalk::mixing {

/// Total variation in the L1 convention, sum_x |p(x) - q(x)|, range [0, 2].
/// (No 1/2 factor: epsilon thresholds here are calibrated to this scale.)
double total_variation(const ProbabilityVector& p, const ProbabilityVector& q);

struct MixingReport {
  double best_time = 0.0;
  double best_tv = 0.0;
  double epsilon_target = 0.0;
  bool achieved = false;
  std::vector<std::pair<double, double>> tv_trace;  // coarse-grid (t, tv) samples
};

/// Minimizes the TV distance to uniform of the quantum walk distribution over
/// t in (0, t_max]: a coarse grid followed by golden-section refinement of the
/// best bracket down to |dt| <= 1e-8. Requires t_max > 0 and grid_points >= 16.
MixingReport instantaneous_mixing_search(const Matrix& h, const AmplitudeVector& psi0,
                                         double t_max, int grid_points, double epsilon);

struct MixingClaim {
  std::string name;
  bool expect_achieved = false;
  double epsilon = 0.0;
  double horizon = 0.0;
  MixingReport report;
  bool verified = false;  // report.achieved == expect_achieved
};

/// The worked exact-mixing facts as runnable checks: C_3, C_4, K_2, K_3, K_4
/// reach TV <= 1e-6; C_5, C_6, K_5 and charter n = 3..5 stay above 1e-3 over
/// t in (0, 200] (a bounded-horizon assertion, not a proof).
std::vector<MixingClaim> exact_mixing_claims();

struct AverageMixingResult {
  ProbabilityVector distribution;
  double tv_to_uniform = 0.0;
  bool is_uniform = false;  // tv_to_uniform <= 1e-6
};

AverageMixingResult average_mixing_check(const Matrix& h, const AmplitudeVector& psi0);

struct BalancedGroups {
  std::vector<std::vector<std::size_t>> groups;  // vertex indices, one list per value
  std::vector<double> values;                    // common value of each group
};

/// Partitions the 2n charter probabilities at time t into equal-value groups
/// (tolerance 1e-8). Charter only, n in {3, 4}.
BalancedGroups balanced_property_check(std::size_t n, double t);

}  // namespace ctwalk::mixing
