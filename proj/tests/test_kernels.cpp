#include <doctest.h>

#include <random>

#include "ctwalk/kernels.hpp"
#include "ctwalk/matrix.hpp"
#include "oracles.hpp"

using namespace ctwalk;

// The OpenMP kernels split work over independent output elements, so they
// must agree with the serial reference bitwise, not just within tolerance.

TEST_CASE("gemm matches the serial reference exactly") {
  std::mt19937 gen(11);
  for (std::size_t n : {1, 2, 7, 33, 64, 129}) {
    const Matrix a = oracle::random_complex(gen, n);
    const Matrix b = oracle::random_complex(gen, n);
    CVector out(n * n), ref(n * n);
    kernels::gemm(a.data(), b.data(), out.data(), n);
    kernels::ref::gemm(a.data(), b.data(), ref.data(), n);
    for (std::size_t i = 0; i < out.size(); ++i) {
      REQUIRE(out[i].real() == ref[i].real());
      REQUIRE(out[i].imag() == ref[i].imag());
    }
  }
}

TEST_CASE("matvec and matvec_dagger match the serial reference exactly") {
  std::mt19937 gen(12);
  for (std::size_t n : {1, 5, 60, 200, 301}) {
    const Matrix a = oracle::random_complex(gen, n);
    CVector x(n);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    for (auto& e : x) e = cplx(dist(gen), dist(gen));

    CVector y(n), yref(n);
    kernels::matvec(a.data(), x.data(), y.data(), n);
    kernels::ref::matvec(a.data(), x.data(), yref.data(), n);
    for (std::size_t i = 0; i < n; ++i) REQUIRE(y[i] == yref[i]);

    kernels::matvec_dagger(a.data(), x.data(), y.data(), n);
    kernels::ref::matvec_dagger(a.data(), x.data(), yref.data(), n);
    for (std::size_t i = 0; i < n; ++i) REQUIRE(y[i] == yref[i]);
  }
}

TEST_CASE("kron matches the serial reference exactly") {
  std::mt19937 gen(13);
  for (auto [na, nb] : {std::pair<std::size_t, std::size_t>{1, 1}, {2, 3}, {5, 4}, {12, 11}}) {
    const Matrix a = oracle::random_complex(gen, na);
    const Matrix b = oracle::random_complex(gen, nb);
    const std::size_t n = na * nb;
    CVector out(n * n), ref(n * n);
    kernels::kron(a.data(), na, b.data(), nb, out.data());
    kernels::ref::kron(a.data(), na, b.data(), nb, ref.data());
    for (std::size_t i = 0; i < out.size(); ++i) REQUIRE(out[i] == ref[i]);
  }
}

TEST_CASE("gemm agrees with the naive triple loop") {
  std::mt19937 gen(14);
  const Matrix a = oracle::random_complex(gen, 17);
  const Matrix b = oracle::random_complex(gen, 17);
  const Matrix prod = a * b;
  CHECK(max_abs_diff(prod, oracle::multiply_naive(a, b)) < 1e-13);
}

TEST_CASE("matvec against naive application") {
  std::mt19937 gen(15);
  const Matrix a = oracle::random_complex(gen, 23);
  CVector x(23);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  for (auto& e : x) e = cplx(dist(gen), dist(gen));
  CHECK(max_abs_diff(a * std::span<const cplx>(x), oracle::apply_naive(a, x)) < 1e-13);
}
