#pragma once

#include <span>

#include "ctwalk/matrix.hpp"

namespace ctwalk {

/// Probability mass per vertex. Construction clamps round-off negatives in
/// (-1e-12, 0) to zero, requires the mass to be within 1e-8 of 1, and
/// renormalizes exactly; anything worse is rejected as a contract violation.
class ProbabilityVector {
 public:
  explicit ProbabilityVector(RVector entries);

  static ProbabilityVector point_mass(std::size_t dim, std::size_t vertex);
  static ProbabilityVector uniform(std::size_t dim);

  std::size_t dim() const { return entries_.size(); }
  double operator[](std::size_t i) const { return entries_[i]; }
  const RVector& entries() const { return entries_; }

 private:
  RVector entries_;
};

/// Complex amplitude per vertex, unit L2 norm (checked within 1e-12 of 1,
/// then renormalized exactly).
class AmplitudeVector {
 public:
  explicit AmplitudeVector(CVector entries);

  static AmplitudeVector basis_state(std::size_t dim, std::size_t vertex);

  std::size_t dim() const { return entries_.size(); }
  cplx operator[](std::size_t i) const { return entries_[i]; }
  const CVector& entries() const { return entries_; }

 private:
  CVector entries_;
};

/// p (x) q, composite index i = i_p * dim(q) + i_q.
ProbabilityVector tensor(const ProbabilityVector& p, const ProbabilityVector& q);
AmplitudeVector tensor(const AmplitudeVector& a, const AmplitudeVector& b);

}  // namespace ctwalk
