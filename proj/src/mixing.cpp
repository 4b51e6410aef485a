#include "ctwalk/mixing.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "ctwalk/closedforms.hpp"
#include "ctwalk/errors.hpp"
#include "ctwalk/graphs.hpp"
#include "ctwalk/quantum.hpp"

namespace ctwalk::mixing {

namespace {

constexpr double kRefineWidth = 1e-8;
constexpr double kUniformTol = 1e-6;
constexpr double kGroupTol = 1e-8;

double tv_to_uniform(const SpectralDecomposition& h, const AmplitudeVector& psi0, double t) {
  const auto p = quantum::measure(quantum::evolve(h, psi0, t));
  const double u = 1.0 / static_cast<double>(p.dim());
  double tv = 0.0;
  for (std::size_t i = 0; i < p.dim(); ++i) tv += std::abs(p[i] - u);
  return tv;
}

}  // namespace

double total_variation(const ProbabilityVector& p, const ProbabilityVector& q) {
  if (p.dim() != q.dim()) throw ValidationError("total_variation: dimension mismatch");
  double tv = 0.0;
  for (std::size_t i = 0; i < p.dim(); ++i) tv += std::abs(p[i] - q[i]);
  return tv;
}

MixingReport instantaneous_mixing_search(const Matrix& h, const AmplitudeVector& psi0,
                                         double t_max, int grid_points, double epsilon) {
  if (t_max <= 0.0) throw ValidationError("mixing search: t_max must be positive");
  if (grid_points < 16) throw ValidationError("mixing search: need at least 16 grid points");

  const auto decomp = hermitian_eigendecomposition(h);

  MixingReport report;
  report.epsilon_target = epsilon;
  report.tv_trace.resize(grid_points);

  // Coarse grid over (0, t_max].
#pragma omp parallel for schedule(static)
  for (int i = 0; i < grid_points; ++i) {
    const double t = t_max * static_cast<double>(i + 1) / static_cast<double>(grid_points);
    report.tv_trace[i] = {t, tv_to_uniform(decomp, psi0, t)};
  }

  std::size_t best = 0;
  for (std::size_t i = 1; i < report.tv_trace.size(); ++i)
    if (report.tv_trace[i].second < report.tv_trace[best].second) best = i;
  report.best_time = report.tv_trace[best].first;
  report.best_tv = report.tv_trace[best].second;

  // Golden-section refinement inside the bracket around the best sample.
  // Assumes local unimodality; the refined value can only improve on the
  // coarse minimum because the incumbent is kept.
  double lo = best > 0 ? report.tv_trace[best - 1].first
                       : t_max / static_cast<double>(grid_points) * 1e-3;
  double hi = best + 1 < report.tv_trace.size() ? report.tv_trace[best + 1].first : t_max;
  constexpr double kInvPhi = 0.6180339887498949;
  double x1 = hi - kInvPhi * (hi - lo);
  double x2 = lo + kInvPhi * (hi - lo);
  double f1 = tv_to_uniform(decomp, psi0, x1);
  double f2 = tv_to_uniform(decomp, psi0, x2);
  while (hi - lo > kRefineWidth) {
    if (f1 <= f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - kInvPhi * (hi - lo);
      f1 = tv_to_uniform(decomp, psi0, x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + kInvPhi * (hi - lo);
      f2 = tv_to_uniform(decomp, psi0, x2);
    }
    const double ft = std::min(f1, f2);
    const double xt = f1 <= f2 ? x1 : x2;
    if (ft < report.best_tv) {
      report.best_tv = ft;
      report.best_time = xt;
    }
  }

  report.achieved = report.best_tv <= epsilon;
  return report;
}

std::vector<MixingClaim> exact_mixing_claims() {
  struct ClaimSpec {
    std::string name;
    GraphSpec graph;
    bool expect_achieved;
    double epsilon;
  };
  const double horizon = 200.0;
  const int grid = 20000;
  const std::vector<ClaimSpec> claims = {
      {"C3 exact mixing", GraphSpec::cycle(3), true, 1e-6},
      {"C4 exact mixing", GraphSpec::cycle(4), true, 1e-6},
      {"K2 exact mixing", GraphSpec::complete(2), true, 1e-6},
      {"K3 exact mixing", GraphSpec::complete(3), true, 1e-6},
      {"K4 exact mixing", GraphSpec::complete(4), true, 1e-6},
      {"C5 no mixing on horizon", GraphSpec::cycle(5), false, 1e-3},
      {"C6 no mixing on horizon", GraphSpec::cycle(6), false, 1e-3},
      {"K5 no mixing on horizon", GraphSpec::complete(5), false, 1e-3},
      {"charter(3) no mixing on horizon", GraphSpec::charter(3), false, 1e-3},
      {"charter(4) no mixing on horizon", GraphSpec::charter(4), false, 1e-3},
      {"charter(5) no mixing on horizon", GraphSpec::charter(5), false, 1e-3},
  };

  std::vector<MixingClaim> out;
  out.reserve(claims.size());
  for (const auto& c : claims) {
    const Graph g = build(c.graph);
    const bool product = std::holds_alternative<CharterSpec>(c.graph.family);
    const Matrix h = quantum::hamiltonian(
        g, product ? quantum::HamiltonianConvention::ProductAveraged
                   : quantum::HamiltonianConvention::NormalizedAdjacency);
    MixingClaim claim;
    claim.name = c.name;
    claim.expect_achieved = c.expect_achieved;
    claim.epsilon = c.epsilon;
    claim.horizon = horizon;
    claim.report = instantaneous_mixing_search(
        h, AmplitudeVector::basis_state(g.vertex_count(), 0), horizon, grid, c.epsilon);
    claim.verified = claim.report.achieved == c.expect_achieved;
    out.push_back(std::move(claim));
  }
  return out;
}

AverageMixingResult average_mixing_check(const Matrix& h, const AmplitudeVector& psi0) {
  auto dist = quantum::average_distribution(h, psi0);
  const double tv = total_variation(dist, ProbabilityVector::uniform(dist.dim()));
  return AverageMixingResult{std::move(dist), tv, tv <= kUniformTol};
}

BalancedGroups balanced_property_check(std::size_t n, double t) {
  if (n != 3 && n != 4)
    throw ValidationError("balanced_property_check: charter n must be 3 or 4");
  std::vector<double> probs(2 * n);
  for (std::size_t k = 0; k < 2 * n; ++k) probs[k] = closedforms::charter_quantum(n, k, t);

  std::vector<std::size_t> order(2 * n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return probs[a] < probs[b]; });

  BalancedGroups out;
  std::size_t start = 0;
  while (start < order.size()) {
    std::size_t end = start + 1;
    while (end < order.size() && probs[order[end]] - probs[order[end - 1]] <= kGroupTol) ++end;
    std::vector<std::size_t> group(order.begin() + start, order.begin() + end);
    std::sort(group.begin(), group.end());
    double mean = 0.0;
    for (std::size_t v : group) mean += probs[v];
    mean /= static_cast<double>(group.size());
    out.groups.push_back(std::move(group));
    out.values.push_back(mean);
    start = end;
  }
  return out;
}

}  // namespace ctwalk::mixing
