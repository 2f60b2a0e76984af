// mel/entropy.cpp
//
// Copyright 2026 The mel authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0

#include "mel/entropy.hpp"

#include <cmath>
#include <string>

#include "mel/errors.hpp"
#include "mel/spectral.hpp"

namespace mel {

MatrixEnsemble::MatrixEnsemble(std::vector<Outcome> outcomes)
    : outcomes_(std::move(outcomes)) {
  if (outcomes_.empty())
    throw ContractError("MatrixEnsemble: at least one outcome required");
  const std::size_t n = outcomes_.front().matrix.dim();
  double total = 0.0;
  for (const Outcome& o : outcomes_) {
    if (o.matrix.dim() != n)
      throw ContractError("MatrixEnsemble: outcomes have mixed dimensions");
    if (!(o.probability > 0.0 && o.probability <= 1.0))
      throw ContractError("MatrixEnsemble: probability " +
                          std::to_string(o.probability) + " outside (0, 1]");
    const SpectralDecomposition d = eigh(o.matrix);
    if (!(d.eigenvalues.front() > 0.0))
      throw ContractError("MatrixEnsemble: outcome has eigenvalue " +
                          std::to_string(d.eigenvalues.front()) +
                          " outside (0, inf)");
    total += o.probability;
  }
  if (std::abs(total - 1.0) > 1e-12)
    throw ContractError("MatrixEnsemble: probabilities sum to " +
                        std::to_string(total) + ", not 1 within 1e-12");
}

std::size_t MatrixEnsemble::dim() const {
  return outcomes_.front().matrix.dim();
}

HermitianMatrix MatrixEnsemble::mean() const {
  Matrix m(dim(), dim());
  for (const Outcome& o : outcomes_)
    m += complexd(o.probability) * o.matrix.raw();
  return HermitianMatrix(hermitian_part(m));
}

double trace_phi(const ScalarFunctionSpec& spec, const HermitianMatrix& a) {
  const SpectralDecomposition d = eigh(a);
  double s = 0.0;
  for (double lam : d.eigenvalues) {
    if (!(lam > 0.0))
      throw DomainError("trace_phi: eigenvalue " + std::to_string(lam) +
                        " outside (0, inf)");
    s += spec.phi(lam);
  }
  return s;
}

double matrix_phi_entropy(const ScalarFunctionSpec& spec,
                          const MatrixEnsemble& z) {
  // Affine phi cancels algebraically: E[Tr(c0 + c1 Z)] = Tr(c0 + c1 E[Z]).
  if (spec.is_affine()) return 0.0;
  double expectation = 0.0;
  for (const auto& o : z.outcomes())
    expectation += o.probability * trace_phi(spec, o.matrix);
  return expectation - trace_phi(spec, z.mean());
}

}  // namespace mel
