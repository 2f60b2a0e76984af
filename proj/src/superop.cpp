// mel/superop.cpp
//
// Copyright 2026 The mel authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0

#include "mel/superop.hpp"

#include <string>

#include "mel/errors.hpp"
#include "mel/spectral.hpp"

namespace mel {

Superoperator::Superoperator(std::size_t dim, Matrix matrix)
    : dim_(dim), matrix_(std::move(matrix)) {
  if (dim_ == 0 || matrix_.rows() != dim_ * dim_ ||
      matrix_.cols() != dim_ * dim_) {
    throw DimensionError("Superoperator: matrix must be n^2 x n^2 for n = " +
                         std::to_string(dim_));
  }
}

Superoperator Superoperator::identity(std::size_t dim) {
  return Superoperator(dim, Matrix::identity(dim * dim));
}

Matrix Superoperator::apply(const Matrix& h) const {
  if (h.rows() != dim_ || h.cols() != dim_)
    throw DimensionError("Superoperator::apply: operand dimension mismatch");
  const std::vector<complexd> v = vec(h);
  std::vector<complexd> w(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    complexd s = 0.0;
    for (std::size_t j = 0; j < v.size(); ++j) s += matrix_(i, j) * v[j];
    w[i] = s;
  }
  return unvec(w, dim_);
}

double Superoperator::min_eigenvalue() const {
  // Column stacking is an isometry for the trace inner product, so the
  // spectrum of the vectorized matrix is the spectrum of the map.
  return mel::min_eigenvalue(matrix_);
}

std::pair<Superoperator, Superoperator> left_right_superops(
    const HermitianMatrix& x) {
  const std::size_t n = x.dim();
  const Matrix eye = Matrix::identity(n);
  // vec(x h) = (I (x) x) vec(h), vec(h x) = (x^T (x) I) vec(h).
  Superoperator left(n, kron(eye, x.raw()));
  Superoperator right(n, kron(x.raw().transpose(), eye));
  return {left, right};
}

Superoperator bivariate_calculus(
    const std::function<double(double, double)>& g, const HermitianMatrix& x,
    const HermitianMatrix& y) {
  const std::size_t n = x.dim();
  if (y.dim() != n)
    throw DimensionError("bivariate_calculus: x and y dimensions differ");
  const SpectralDecomposition xd = eigh(x);
  const SpectralDecomposition yd = eigh(y);
  for (double lam : xd.eigenvalues)
    if (!(lam > 0.0))
      throw DomainError("bivariate_calculus: x has non-positive eigenvalue " +
                        std::to_string(lam));
  for (double mu : yd.eigenvalues)
    if (!(mu > 0.0))
      throw DomainError("bivariate_calculus: y has non-positive eigenvalue " +
                        std::to_string(mu));

  // Column (j*n + i) of W = conj(V) (x) U is vec(u_i v_j^*), the matrix
  // unit on which L_x acts by lambda_i and R_y by mu_j.
  const Matrix w = kron(yd.eigenvectors.conj(), xd.eigenvectors);
  std::vector<double> weights(n * n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i)
      weights[j * n + i] = g(xd.eigenvalues[i], yd.eigenvalues[j]);

  Matrix m(n * n, n * n);
  for (std::size_t r = 0; r < n * n; ++r)
    for (std::size_t c = 0; c < n * n; ++c) {
      complexd s = 0.0;
      for (std::size_t k = 0; k < n * n; ++k)
        s += weights[k] * w(r, k) * std::conj(w(c, k));
      m(r, c) = s;
    }
  return Superoperator(n, std::move(m));
}

}  // namespace mel
