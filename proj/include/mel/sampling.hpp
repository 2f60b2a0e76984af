// mel/sampling.hpp
//
// Copyright 2026 The mel authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0

#ifndef MEL_SAMPLING_HPP_
#define MEL_SAMPLING_HPP_

#include "mel/function_spec.hpp"
#include "mel/matrix.hpp"
#include "mel/rng.hpp"

namespace mel {

// Random positive definite matrix with eigenvalues in [1e-2, 1e2] and
// condition number at most cond_cap: B B^* + eps I from complex Gaussian
// B, then spectral clamping.
HermitianMatrix sample_pd(std::size_t n, Rng& rng, double cond_cap = 1e3);

// (G + G^*)/2 from complex Gaussian G, entries O(1).
HermitianMatrix sample_hermitian(std::size_t n, Rng& rng);

// Random canonical measure: 1-5 atoms, lambda = 0 with probability 0.3
// otherwise log-uniform in [e^-3, e^2], weights in [0.1, 2], beta in
// [0, 1], affine constants fixed from random reference values at 1.
CanonicalMeasure sample_canonical_measure(Rng& rng);

}  // namespace mel

#endif  // MEL_SAMPLING_HPP_
