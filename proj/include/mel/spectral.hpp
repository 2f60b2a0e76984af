// mel/spectral.hpp
//
// Copyright 2026 The mel authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0

#ifndef MEL_SPECTRAL_HPP_
#define MEL_SPECTRAL_HPP_

#include <vector>

#include "mel/matrix.hpp"

namespace mel {

// Eigensystem of a Hermitian matrix: a = U diag(lambda) U^*.
struct SpectralDecomposition {
  std::vector<double> eigenvalues;  // ascending
  Matrix eigenvectors;              // unitary, columns

  Matrix reconstruct() const;
  // U diag(f(lambda_i)) U^* for a scalar sequence already mapped through f.
  Matrix assemble(const std::vector<double>& mapped) const;
};

// Cyclic Jacobi rotations on the complex Hermitian matrix. Converged when
// the off-diagonal Frobenius residual drops below 1e-13 * ||a||_F; at most
// 100 sweeps, after which a ConvergenceError carries the residual.
SpectralDecomposition eigh(const HermitianMatrix& a);

// Same solver on raw storage; the input must be Hermitian within 1e-10
// (used for superoperator matrices, which accumulate a little more noise
// than freshly constructed operands).
SpectralDecomposition eigh_raw(const Matrix& a);

// Smallest eigenvalue of a self-adjoint matrix; input defect beyond 1e-10
// is a contract error. Operator order A >= B is decided downstream via
// min_eigenvalue(A - B) >= -eta.
double min_eigenvalue(const Matrix& a);

}  // namespace mel

#endif  // MEL_SPECTRAL_HPP_
