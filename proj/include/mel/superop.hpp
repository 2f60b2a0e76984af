// mel/superop.hpp
//
// Copyright 2026 The mel authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0

#ifndef MEL_SUPEROP_HPP_
#define MEL_SUPEROP_HPP_

#include <functional>
#include <utility>

#include "mel/matrix.hpp"

namespace mel {

// Linear map on the n^2-dimensional operator Hilbert space with trace
// inner product, materialized as a dense n^2 x n^2 matrix acting on
// column-stacked operators. Intended for n <= 8.
class Superoperator {
 public:
  Superoperator(std::size_t dim, Matrix matrix);

  static Superoperator identity(std::size_t dim);

  std::size_t dim() const { return dim_; }
  const Matrix& matrix() const { return matrix_; }

  Matrix apply(const Matrix& h) const;

  // Smallest eigenvalue with respect to the trace inner product; requires
  // a self-adjoint superoperator (defect within 1e-10).
  double min_eigenvalue() const;

 private:
  std::size_t dim_;
  Matrix matrix_;
};

// L_x(h) = xh and R_x(h) = hx. The two families commute: L_x R_y = R_y L_x
// for all x, y.
std::pair<Superoperator, Superoperator> left_right_superops(
    const HermitianMatrix& x);

// Joint functional calculus g(L_x, R_y) of the commuting pair of left and
// right multiplications: in the basis of matrix units u_i v_j^* built from
// eigenvectors of x and y it acts diagonally with weights g(lambda_i, mu_j).
// Spectra of x and y must be positive; the kernel is evaluated on the
// spectral rectangle and may throw its own domain errors.
Superoperator bivariate_calculus(
    const std::function<double(double, double)>& g, const HermitianMatrix& x,
    const HermitianMatrix& y);

}  // namespace mel

#endif  // MEL_SUPEROP_HPP_
