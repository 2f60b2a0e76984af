// mel/spectral.cpp
//
// Copyright 2026 The mel authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0

#include "mel/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "mel/errors.hpp"

namespace mel {

namespace {

double off_diagonal_norm(const Matrix& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (i != j) s += std::norm(a(i, j));
  return std::sqrt(s);
}

// One Jacobi rotation zeroing a(p,q). a <- J^* a J, u <- u J where the
// (p,q) block of J is [[c, s*phase], [-s*conj(phase), c]].
void rotate(Matrix& a, Matrix& u, std::size_t p, std::size_t q) {
  const complexd apq = a(p, q);
  const double mag = std::abs(apq);
  if (mag == 0.0) return;
  const complexd phase = apq / mag;
  const double app = a(p, p).real();
  const double aqq = a(q, q).real();
  const double tau = (aqq - app) / (2.0 * mag);
  const double t =
      tau == 0.0 ? 1.0
                 : std::copysign(1.0, tau) /
                       (std::abs(tau) + std::sqrt(1.0 + tau * tau));
  const double c = 1.0 / std::sqrt(1.0 + t * t);
  const double s = t * c;

  const std::size_t n = a.rows();
  // Column update (right-multiply by J).
  for (std::size_t i = 0; i < n; ++i) {
    const complexd aip = a(i, p);
    const complexd aiq = a(i, q);
    a(i, p) = c * aip - s * std::conj(phase) * aiq;
    a(i, q) = s * phase * aip + c * aiq;
  }
  // Row update (left-multiply by J^*).
  for (std::size_t j = 0; j < n; ++j) {
    const complexd apj = a(p, j);
    const complexd aqj = a(q, j);
    a(p, j) = c * apj - s * phase * aqj;
    a(q, j) = s * std::conj(phase) * apj + c * aqj;
  }
  for (std::size_t i = 0; i < u.rows(); ++i) {
    const complexd uip = u(i, p);
    const complexd uiq = u(i, q);
    u(i, p) = c * uip - s * std::conj(phase) * uiq;
    u(i, q) = s * phase * uip + c * uiq;
  }
}

SpectralDecomposition jacobi(Matrix a) {
  const std::size_t n = a.rows();
  Matrix u = Matrix::identity(n);
  const double scale = a.frobenius_norm();
  const double threshold = 1e-13 * scale;
  constexpr int kMaxSweeps = 100;

  if (scale > 0.0) {
    int sweep = 0;
    while (off_diagonal_norm(a) > threshold) {
      if (sweep++ >= kMaxSweeps) {
        throw ConvergenceError(
            "Jacobi eigensolver: off-diagonal residual " +
                std::to_string(off_diagonal_norm(a)) + " after " +
                std::to_string(kMaxSweeps) + " sweeps (threshold " +
                std::to_string(threshold) + ")",
            off_diagonal_norm(a));
      }
      for (std::size_t p = 0; p + 1 < n; ++p)
        for (std::size_t q = p + 1; q < n; ++q) rotate(a, u, p, q);
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return a(i, i).real() < a(j, j).real();
  });

  SpectralDecomposition d;
  d.eigenvalues.resize(n);
  d.eigenvectors = Matrix(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    d.eigenvalues[k] = a(order[k], order[k]).real();
    for (std::size_t i = 0; i < n; ++i)
      d.eigenvectors(i, k) = u(i, order[k]);
  }
  return d;
}

}  // namespace

Matrix SpectralDecomposition::reconstruct() const {
  return assemble(eigenvalues);
}

Matrix SpectralDecomposition::assemble(const std::vector<double>& mapped) const {
  const std::size_t n = eigenvalues.size();
  if (mapped.size() != n)
    throw DimensionError("assemble: mapped eigenvalue count mismatch");
  Matrix r(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      complexd s = 0.0;
      for (std::size_t k = 0; k < n; ++k)
        s += mapped[k] * eigenvectors(i, k) * std::conj(eigenvectors(j, k));
      r(i, j) = s;
    }
  return r;
}

SpectralDecomposition eigh(const HermitianMatrix& a) { return jacobi(a.raw()); }

SpectralDecomposition eigh_raw(const Matrix& a) {
  if (!a.square()) throw DimensionError("eigh_raw: non-square input");
  const double defect = hermiticity_defect(a);
  if (defect > 1e-10 * std::max(1.0, a.frobenius_norm())) {
    throw ContractError("eigh_raw: input not self-adjoint, defect " +
                        std::to_string(defect));
  }
  return jacobi(hermitian_part(a));
}

double min_eigenvalue(const Matrix& a) {
  return eigh_raw(a).eigenvalues.front();
}

}  // namespace mel
