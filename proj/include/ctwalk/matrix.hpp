#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace ctwalk {

using cplx = std::complex<double>;
using CVector = std::vector<cplx>;
using RVector = std::vector<double>;

/// Dense square complex matrix, row-major storage.
class Matrix {
 public:
  Matrix() = default;
  explicit Matrix(std::size_t dim) : dim_(dim), entries_(dim * dim) {}
  Matrix(std::size_t dim, CVector entries);

  static Matrix identity(std::size_t dim);

  std::size_t dim() const { return dim_; }

  cplx& operator()(std::size_t r, std::size_t c) { return entries_[r * dim_ + c]; }
  const cplx& operator()(std::size_t r, std::size_t c) const { return entries_[r * dim_ + c]; }

  cplx* data() { return entries_.data(); }
  const cplx* data() const { return entries_.data(); }
  const CVector& entries() const { return entries_; }

  /// max |a_ij - conj(a_ji)| <= tol
  bool is_hermitian(double tol) const;
  /// real entries (|Im| <= tol) and max |a_ij - a_ji| <= tol
  bool is_symmetric_real(double tol) const;
  /// max |(A^dagger A - I)_ij| <= tol
  bool is_unitary(double tol) const;

  Matrix dagger() const;

  Matrix& operator+=(const Matrix& other);
  Matrix& operator-=(const Matrix& other);
  Matrix& operator*=(cplx scalar);

 private:
  std::size_t dim_ = 0;
  CVector entries_;
};

Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator+(Matrix a, const Matrix& b);
Matrix operator-(Matrix a, const Matrix& b);
Matrix operator*(cplx scalar, Matrix a);
CVector operator*(const Matrix& a, std::span<const cplx> x);

double max_abs(const Matrix& a);
double max_abs_diff(const Matrix& a, const Matrix& b);
double max_abs_diff(std::span<const cplx> a, std::span<const cplx> b);
double l2_norm(std::span<const cplx> v);

}  // namespace ctwalk
