// mel/sampling.cpp
//
// Copyright 2026 The mel authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0

#include "mel/sampling.hpp"

#include <algorithm>
#include <cmath>

#include "mel/spectral.hpp"

namespace mel {

HermitianMatrix sample_pd(std::size_t n, Rng& rng, double cond_cap) {
  Matrix b(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      b(i, j) = complexd(rng.normal(), rng.normal()) / std::sqrt(2.0);
  Matrix a = b * b.adjoint();
  for (std::size_t i = 0; i < n; ++i) a(i, i) += 1e-3;

  SpectralDecomposition d = eigh(HermitianMatrix(hermitian_part(a)));
  const double hi = std::max(std::min(d.eigenvalues.back(), 1e2), 1e-2);
  const double lo = std::max(1e-2, hi / cond_cap);
  std::vector<double> clamped(d.eigenvalues.size());
  for (std::size_t k = 0; k < clamped.size(); ++k)
    clamped[k] = std::clamp(d.eigenvalues[k], lo, hi);
  return HermitianMatrix(d.assemble(clamped));
}

HermitianMatrix sample_hermitian(std::size_t n, Rng& rng) {
  Matrix g(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      g(i, j) = complexd(rng.normal(), rng.normal()) / std::sqrt(2.0);
  return HermitianMatrix(hermitian_part(g));
}

CanonicalMeasure sample_canonical_measure(Rng& rng) {
  std::vector<CanonicalMeasure::Atom> atoms;
  const int count = 1 + static_cast<int>(rng.below(5));
  for (int k = 0; k < count; ++k) {
    const double lambda =
        rng.uniform() < 0.3 ? 0.0 : std::exp(rng.uniform(-3.0, 2.0));
    atoms.push_back({lambda, rng.uniform(0.1, 2.0)});
  }
  return CanonicalMeasure::from_reference(rng.uniform(-1.0, 1.0),
                                          rng.uniform(-1.0, 1.0),
                                          rng.uniform(0.0, 1.0),
                                          std::move(atoms));
}

}  // namespace mel
