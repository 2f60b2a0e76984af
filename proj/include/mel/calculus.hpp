// mel/calculus.hpp
//
// Copyright 2026 The mel authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0

#ifndef MEL_CALCULUS_HPP_
#define MEL_CALCULUS_HPP_

#include <functional>
#include <span>
#include <vector>

#include "mel/matrix.hpp"
#include "mel/spectral.hpp"

namespace mel {

// A scalar function on (0, infinity) together with its derivative; the
// derivative supplies the coincidence limit of divided differences.
struct C1Function {
  std::function<double(double)> value;
  std::function<double(double)> deriv;
};

// Relative eigenvalue gap below which the divided difference switches to
// the derivative at the midpoint; the quotient loses all precision below
// sqrt(machine-epsilon) gaps.
inline constexpr double kCoincidenceTol = 1e-7;

// Floor under Loewner entries; below it the Frechet differential is
// treated as non-invertible.
inline constexpr double kLoewnerFloor = 1e-14;

// [t,s]_f = (f(t)-f(s))/(t-s), f'((t+s)/2) at coincidence. t, s > 0.
double divided_difference(const C1Function& f, double t, double s);

// Matrix of divided differences [lambda_i, lambda_j]_f. Real symmetric;
// returned with zero imaginary parts. All eigenvalues must be positive.
Matrix loewner_matrix(const C1Function& f, std::span<const double> eigenvalues);

// U diag(f(lambda_i)) U^* for x with positive spectrum. A non-positive
// eigenvalue raises a DomainError naming the offender.
Matrix apply_univariate(const std::function<double(double)>& f,
                        const HermitianMatrix& x);

// Frechet differential df(x)h = U [ (U^* h U) o L_f(lambda) ] U^* where o
// is the Hadamard product; complex-linear in h, maps self-adjoint h to
// self-adjoint output.
Matrix frechet_diff(const C1Function& f, const HermitianMatrix& x,
                    const Matrix& h);

// Entry-wise division by the Loewner matrix in the eigenbasis; two-sided
// inverse of frechet_diff. Requires every Loewner entry above the floor,
// otherwise NearSingularDifferential.
Matrix frechet_diff_inverse(const C1Function& f, const HermitianMatrix& x,
                            const Matrix& h);

// Variants reusing a precomputed decomposition of x (the checkers call
// these in tight loops).
Matrix frechet_diff(const C1Function& f, const SpectralDecomposition& xd,
                    const Matrix& h);
Matrix frechet_diff_inverse(const C1Function& f,
                            const SpectralDecomposition& xd, const Matrix& h);

}  // namespace mel

#endif  // MEL_CALCULUS_HPP_
