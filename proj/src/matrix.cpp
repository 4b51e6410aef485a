#include "ctwalk/matrix.hpp"

#include <cmath>
#include <utility>

#include "ctwalk/errors.hpp"
#include "ctwalk/kernels.hpp"

namespace ctwalk {

Matrix::Matrix(std::size_t dim, CVector entries) : dim_(dim), entries_(std::move(entries)) {
  if (entries_.size() != dim * dim)
    throw ValidationError("matrix: entry count must equal dim^2");
}

Matrix Matrix::identity(std::size_t dim) {
  Matrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

bool Matrix::is_hermitian(double tol) const {
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = i; j < dim_; ++j)
      if (std::abs((*this)(i, j) - std::conj((*this)(j, i))) > tol) return false;
  return true;
}

bool Matrix::is_symmetric_real(double tol) const {
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j)
      if (std::abs((*this)(i, j).imag()) > tol) return false;
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = i + 1; j < dim_; ++j)
      if (std::abs((*this)(i, j).real() - (*this)(j, i).real()) > tol) return false;
  return true;
}

bool Matrix::is_unitary(double tol) const {
  Matrix prod = dagger() * (*this);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) {
      const cplx expect = (i == j) ? cplx(1.0, 0.0) : cplx(0.0, 0.0);
      if (std::abs(prod(i, j) - expect) > tol) return false;
    }
  return true;
}

Matrix Matrix::dagger() const {
  Matrix out(dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) out(j, i) = std::conj((*this)(i, j));
  return out;
}

Matrix& Matrix::operator+=(const Matrix& other) {
  if (other.dim_ != dim_) throw ValidationError("matrix addition: dimension mismatch");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += other.entries_[i];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& other) {
  if (other.dim_ != dim_) throw ValidationError("matrix subtraction: dimension mismatch");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= other.entries_[i];
  return *this;
}

Matrix& Matrix::operator*=(cplx scalar) {
  for (auto& e : entries_) e *= scalar;
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.dim() != b.dim()) throw ValidationError("matrix product: dimension mismatch");
  Matrix out(a.dim());
  kernels::gemm(a.data(), b.data(), out.data(), a.dim());
  return out;
}

Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
Matrix operator*(cplx scalar, Matrix a) { return a *= scalar; }

CVector operator*(const Matrix& a, std::span<const cplx> x) {
  if (a.dim() != x.size()) throw ValidationError("matrix-vector product: dimension mismatch");
  CVector y(a.dim());
  kernels::matvec(a.data(), x.data(), y.data(), a.dim());
  return y;
}

double max_abs(const Matrix& a) {
  double m = 0.0;
  for (const auto& e : a.entries()) m = std::max(m, std::abs(e));
  return m;
}

double max_abs_diff(const Matrix& a, const Matrix& b) {
  if (a.dim() != b.dim()) throw ValidationError("max_abs_diff: dimension mismatch");
  double m = 0.0;
  for (std::size_t i = 0; i < a.entries().size(); ++i)
    m = std::max(m, std::abs(a.entries()[i] - b.entries()[i]));
  return m;
}

double max_abs_diff(std::span<const cplx> a, std::span<const cplx> b) {
  if (a.size() != b.size()) throw ValidationError("max_abs_diff: dimension mismatch");
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

double l2_norm(std::span<const cplx> v) {
  double acc = 0.0;
  for (const auto& e : v) acc += std::norm(e);
  return std::sqrt(acc);
}

}  // namespace ctwalk
