#include "ctwalk/states.hpp"

#include <cmath>
#include <utility>

#include "ctwalk/errors.hpp"

namespace ctwalk {

namespace {
constexpr double kNegativeClamp = 1e-12;
constexpr double kMassDrift = 1e-8;
constexpr double kNormDrift = 1e-12;
}  // namespace

ProbabilityVector::ProbabilityVector(RVector entries) : entries_(std::move(entries)) {
  if (entries_.empty()) throw ValidationError("probability vector: must be non-empty");
  double sum = 0.0;
  for (auto& e : entries_) {
    if (e < 0.0) {
      if (e < -kNegativeClamp)
        throw ValidationError("probability vector: entry below -1e-12");
      e = 0.0;
    }
    sum += e;
  }
  if (std::abs(sum - 1.0) > kMassDrift)
    throw ValidationError("probability vector: mass differs from 1 beyond drift tolerance");
  for (auto& e : entries_) e /= sum;
}

ProbabilityVector ProbabilityVector::point_mass(std::size_t dim, std::size_t vertex) {
  if (vertex >= dim) throw ValidationError("point_mass: vertex index out of range");
  RVector v(dim, 0.0);
  v[vertex] = 1.0;
  return ProbabilityVector(std::move(v));
}

ProbabilityVector ProbabilityVector::uniform(std::size_t dim) {
  if (dim == 0) throw ValidationError("uniform: dimension must be >= 1");
  return ProbabilityVector(RVector(dim, 1.0 / static_cast<double>(dim)));
}

AmplitudeVector::AmplitudeVector(CVector entries) : entries_(std::move(entries)) {
  if (entries_.empty()) throw ValidationError("amplitude vector: must be non-empty");
  const double norm = l2_norm(entries_);
  if (std::abs(norm - 1.0) > kNormDrift)
    throw ValidationError("amplitude vector: L2 norm differs from 1 beyond 1e-12");
  for (auto& e : entries_) e /= norm;
}

AmplitudeVector AmplitudeVector::basis_state(std::size_t dim, std::size_t vertex) {
  if (vertex >= dim) throw ValidationError("basis_state: vertex index out of range");
  CVector v(dim, cplx(0.0, 0.0));
  v[vertex] = 1.0;
  return AmplitudeVector(std::move(v));
}

ProbabilityVector tensor(const ProbabilityVector& p, const ProbabilityVector& q) {
  RVector out(p.dim() * q.dim());
  for (std::size_t i = 0; i < p.dim(); ++i)
    for (std::size_t j = 0; j < q.dim(); ++j) out[i * q.dim() + j] = p[i] * q[j];
  return ProbabilityVector(std::move(out));
}

AmplitudeVector tensor(const AmplitudeVector& a, const AmplitudeVector& b) {
  CVector out(a.dim() * b.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < b.dim(); ++j) out[i * b.dim() + j] = a[i] * b[j];
  return AmplitudeVector(std::move(out));
}

}  // namespace ctwalk
