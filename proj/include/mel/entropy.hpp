// mel/entropy.hpp
//
// Copyright 2026 The mel authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0

#ifndef MEL_ENTROPY_HPP_
#define MEL_ENTROPY_HPP_

#include <vector>

#include "mel/function_spec.hpp"
#include "mel/matrix.hpp"

namespace mel {

// Finite discrete distribution over positive definite matrices of one
// common dimension. Probabilities must sum to 1 within 1e-12 and every
// outcome must have spectrum in (0, inf).
class MatrixEnsemble {
 public:
  struct Outcome {
    double probability;
    HermitianMatrix matrix;
  };

  explicit MatrixEnsemble(std::vector<Outcome> outcomes);

  const std::vector<Outcome>& outcomes() const { return outcomes_; }
  std::size_t dim() const;

  HermitianMatrix mean() const;

 private:
  std::vector<Outcome> outcomes_;
};

// Sum of phi over the eigenvalues of a; spectrum must be positive.
double trace_phi(const ScalarFunctionSpec& spec, const HermitianMatrix& a);

// H_phi(Z) = E[Tr phi(Z)] - Tr phi(E[Z]). Nonnegative for convex catalog
// phi, identically zero for single-outcome ensembles and for affine phi.
double matrix_phi_entropy(const ScalarFunctionSpec& spec,
                          const MatrixEnsemble& z);

}  // namespace mel

#endif  // MEL_ENTROPY_HPP_
