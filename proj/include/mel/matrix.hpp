// mel/matrix.hpp
//
// Copyright 2026 The mel authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0

#ifndef MEL_MATRIX_HPP_
#define MEL_MATRIX_HPP_

#include <complex>
#include <cstddef>
#include <vector>

namespace mel {

using complexd = std::complex<double>;

// Dense complex matrix, row-major. Sized for desk-scale work (n <= 8,
// superoperators up to 64x64); no attempt at blocking or sparsity.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_ && rows_ > 0; }

  complexd& operator()(std::size_t i, std::size_t j) {
    return data_[i * cols_ + j];
  }
  const complexd& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  const std::vector<complexd>& data() const { return data_; }

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  Matrix& operator*=(complexd s);

  Matrix adjoint() const;
  Matrix transpose() const;
  Matrix conj() const;

  double frobenius_norm() const;
  double max_abs() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<complexd> data_;
};

Matrix operator+(Matrix a, const Matrix& b);
Matrix operator-(Matrix a, const Matrix& b);
Matrix operator*(complexd s, Matrix a);
Matrix operator*(const Matrix& a, const Matrix& b);

complexd trace(const Matrix& a);

// Trace inner product Tr a^* b on the operator Hilbert space.
complexd trace_inner(const Matrix& a, const Matrix& b);

// max_ij |a_ij - conj(a_ji)|; zero for exactly Hermitian input.
double hermiticity_defect(const Matrix& a);

// (a + a^*)/2
Matrix hermitian_part(const Matrix& a);

// Kronecker product a (x) b.
Matrix kron(const Matrix& a, const Matrix& b);

// Column-stacking vectorization: vec index of entry (i,j) is j*n + i.
std::vector<complexd> vec(const Matrix& a);
Matrix unvec(const std::vector<complexd>& v, std::size_t n);

// Complex square matrix equal to its conjugate transpose within 1e-12.
// The wrapped storage is exactly Hermitian (symmetrized on construction).
class HermitianMatrix {
 public:
  explicit HermitianMatrix(const Matrix& m);

  std::size_t dim() const { return m_.rows(); }
  const Matrix& raw() const { return m_; }
  const complexd& operator()(std::size_t i, std::size_t j) const {
    return m_(i, j);
  }

  static HermitianMatrix diagonal(const std::vector<double>& d);
  static HermitianMatrix identity(std::size_t n);

 private:
  Matrix m_;
};

inline constexpr double kHermitianTol = 1e-12;

}  // namespace mel

#endif  // MEL_MATRIX_HPP_
