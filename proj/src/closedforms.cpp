#include "ctwalk/closedforms.hpp"

#include <cmath>
#include <numbers>

#include "ctwalk/errors.hpp"

namespace ctwalk::closedforms {

namespace {

constexpr double kTau = 2.0 * std::numbers::pi;

void check_vertex(std::size_t k, std::size_t limit, const char* who) {
  if (k >= limit) throw ValidationError(std::string(who) + ": vertex index out of range");
}

void check_time(double t, const char* who) {
  if (t < 0.0) throw ValidationError(std::string(who) + ": time must be non-negative");
}

// Integer powers; std::pow(complex, real) maps 0^0 to 0.
cplx ipow(cplx base, std::size_t e) {
  cplx r(1.0, 0.0);
  for (; e > 0; --e) r *= base;
  return r;
}

}  // namespace

const char* family_name(Family f) {
  switch (f) {
    case Family::CycleClassical: return "cycle-classical";
    case Family::CompleteClassical: return "complete-classical";
    case Family::CharterClassical: return "charter-classical";
    case Family::HypercubeClassical: return "hypercube-classical";
    case Family::CycleQuantum: return "cycle-quantum";
    case Family::CompleteQuantum: return "complete-quantum";
    case Family::CharterQuantum: return "charter-quantum";
    case Family::HypercubeQuantum: return "hypercube-quantum";
  }
  return "unknown";
}

double cycle_classical(std::size_t n, std::size_t k, double t) {
  if (n == 0) throw ValidationError("cycle_classical: n must be >= 1");
  check_vertex(k, n, "cycle_classical");
  check_time(t, "cycle_classical");
  // Decaying exponents cos(2 pi j/n) - 1; the j <-> n-j symmetry cancels the
  // imaginary parts, so the real combination uses cos directly.
  double acc = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    const double angle = kTau * static_cast<double>(j) / static_cast<double>(n);
    acc += std::exp(t * (std::cos(angle) - 1.0)) *
           std::cos(angle * static_cast<double>(k));
  }
  return acc / static_cast<double>(n);
}

double complete_classical(std::size_t n, std::size_t k, double t) {
  if (n < 2) throw ValidationError("complete_classical: n must be >= 2");
  check_vertex(k, n, "complete_classical");
  check_time(t, "complete_classical");
  const double decay = std::exp(-static_cast<double>(n) * t / static_cast<double>(n - 1));
  const double nd = static_cast<double>(n);
  return k == 0 ? (1.0 + (nd - 1.0) * decay) / nd : (1.0 - decay) / nd;
}

double product_position_probability(std::span<const double> factor_values) {
  if (factor_values.empty())
    throw ValidationError("product_position_probability: factor list must be non-empty");
  double p = 1.0;
  for (double v : factor_values) p *= v;
  return p;
}

double charter_classical(std::size_t n, std::size_t k, double t) {
  if (n < 2) throw ValidationError("charter_classical: n must be >= 2");
  check_vertex(k, 2 * n, "charter_classical");
  check_time(t, "charter_classical");
  const double block = k < n ? 0.5 * (1.0 + std::exp(-2.0 * t)) : 0.5 * (1.0 - std::exp(-2.0 * t));
  return block * cycle_classical(n, k % n, t);
}

cplx cycle_quantum(std::size_t n, std::size_t k, double t, std::size_t divisor) {
  if (n == 0) throw ValidationError("cycle_quantum: n must be >= 1");
  if (divisor == 0) throw ValidationError("cycle_quantum: divisor must be >= 1");
  check_vertex(k, n, "cycle_quantum");
  const double s = t / static_cast<double>(divisor);
  cplx acc(0.0, 0.0);
  for (std::size_t j = 0; j < n; ++j) {
    const double angle = kTau * static_cast<double>(j) / static_cast<double>(n);
    const double phase = angle * static_cast<double>(k) - s * std::cos(angle);
    acc += cplx(std::cos(phase), std::sin(phase));
  }
  return acc / static_cast<double>(n);
}

cplx complete_quantum(std::size_t n, std::size_t zero_count, std::size_t d, double t) {
  if (n < 2) throw ValidationError("complete_quantum: n must be >= 2");
  if (d == 0) throw ValidationError("complete_quantum: d must be >= 1");
  if (zero_count > d) throw ValidationError("complete_quantum: zero count exceeds factor count");
  const double nd = static_cast<double>(n);
  const double dd = static_cast<double>(d);
  const cplx top = std::exp(cplx(0.0, -t / dd));                  // eigenvalue +1
  const cplx rest = std::exp(cplx(0.0, t / ((nd - 1.0) * dd)));   // eigenvalue -1/(n-1)
  const cplx at_zero = (top + (nd - 1.0) * rest) / nd;
  const cplx elsewhere = (top - rest) / nd;
  return ipow(at_zero, zero_count) * ipow(elsewhere, d - zero_count);
}

double charter_quantum(std::size_t n, std::size_t k, double t) {
  if (n < 2) throw ValidationError("charter_quantum: n must be >= 2");
  check_vertex(k, 2 * n, "charter_quantum");
  const cplx ring = cycle_quantum(n, k % n, t, 2);
  const double block = k < n ? std::cos(0.5 * t) : std::sin(0.5 * t);
  return block * block * std::norm(ring);
}

cplx hypercube_quantum(std::size_t n, std::size_t hamming_weight, double t) {
  if (n == 0) throw ValidationError("hypercube_quantum: n must be >= 1");
  if (hamming_weight > n)
    throw ValidationError("hypercube_quantum: Hamming weight exceeds cube dimension");
  const double angle = t / static_cast<double>(n);
  const cplx stay(std::cos(angle), 0.0);
  const cplx hop(0.0, -std::sin(angle));
  return ipow(stay, n - hamming_weight) * ipow(hop, hamming_weight);
}

}  // namespace ctwalk::closedforms
