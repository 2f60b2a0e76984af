// mel/calculus.cpp
//
// Copyright 2026 The mel authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0

#include "mel/calculus.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "mel/errors.hpp"

namespace mel {

namespace {

void require_positive(double t, const char* where) {
  if (!(t > 0.0)) {
    throw DomainError(std::string(where) + ": argument " + std::to_string(t) +
                      " outside (0, inf)");
  }
}

void require_positive_spectrum(const std::vector<double>& eigenvalues,
                               const char* where) {
  for (double lam : eigenvalues) {
    if (!(lam > 0.0)) {
      throw DomainError(std::string(where) + ": eigenvalue " +
                        std::to_string(lam) + " outside (0, inf)");
    }
  }
}

// Conjugate h into the eigenbasis, transform entry-wise, conjugate back.
Matrix hadamard_in_eigenbasis(const SpectralDecomposition& xd, const Matrix& h,
                              const Matrix& weights) {
  const Matrix& u = xd.eigenvectors;
  const Matrix hu = u.adjoint() * h * u;
  Matrix scaled(hu.rows(), hu.cols());
  for (std::size_t i = 0; i < hu.rows(); ++i)
    for (std::size_t j = 0; j < hu.cols(); ++j)
      scaled(i, j) = hu(i, j) * weights(i, j);
  return u * scaled * u.adjoint();
}

void require_matching_dim(const SpectralDecomposition& xd, const Matrix& h) {
  const std::size_t n = xd.eigenvalues.size();
  if (h.rows() != n || h.cols() != n)
    throw DimensionError("frechet_diff: h is " + std::to_string(h.rows()) +
                         "x" + std::to_string(h.cols()) + ", expected " +
                         std::to_string(n) + "x" + std::to_string(n));
}

}  // namespace

double divided_difference(const C1Function& f, double t, double s) {
  require_positive(t, "divided_difference");
  require_positive(s, "divided_difference");
  const double gap = std::abs(t - s);
  if (gap <= kCoincidenceTol * std::max({1.0, std::abs(t), std::abs(s)})) {
    return f.deriv(0.5 * (t + s));
  }
  return (f.value(t) - f.value(s)) / (t - s);
}

Matrix loewner_matrix(const C1Function& f,
                      std::span<const double> eigenvalues) {
  const std::size_t n = eigenvalues.size();
  Matrix l(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      const double v = divided_difference(f, eigenvalues[i], eigenvalues[j]);
      l(i, j) = v;
      l(j, i) = v;
    }
  return l;
}

Matrix apply_univariate(const std::function<double(double)>& f,
                        const HermitianMatrix& x) {
  const SpectralDecomposition xd = eigh(x);
  require_positive_spectrum(xd.eigenvalues, "apply_univariate");
  std::vector<double> mapped(xd.eigenvalues.size());
  std::transform(xd.eigenvalues.begin(), xd.eigenvalues.end(), mapped.begin(),
                 f);
  return xd.assemble(mapped);
}

Matrix frechet_diff(const C1Function& f, const SpectralDecomposition& xd,
                    const Matrix& h) {
  require_matching_dim(xd, h);
  require_positive_spectrum(xd.eigenvalues, "frechet_diff");
  return hadamard_in_eigenbasis(xd, h, loewner_matrix(f, xd.eigenvalues));
}

Matrix frechet_diff(const C1Function& f, const HermitianMatrix& x,
                    const Matrix& h) {
  return frechet_diff(f, eigh(x), h);
}

Matrix frechet_diff_inverse(const C1Function& f,
                            const SpectralDecomposition& xd, const Matrix& h) {
  require_matching_dim(xd, h);
  require_positive_spectrum(xd.eigenvalues, "frechet_diff_inverse");
  Matrix l = loewner_matrix(f, xd.eigenvalues);
  for (std::size_t i = 0; i < l.rows(); ++i)
    for (std::size_t j = 0; j < l.cols(); ++j) {
      const double entry = l(i, j).real();
      if (entry < kLoewnerFloor) {
        throw NearSingularDifferential(
            "frechet_diff_inverse: Loewner entry " + std::to_string(entry) +
            " at (" + std::to_string(i) + "," + std::to_string(j) +
            ") below 1e-14; f is not strictly increasing there");
      }
      l(i, j) = 1.0 / entry;
    }
  return hadamard_in_eigenbasis(xd, h, l);
}

Matrix frechet_diff_inverse(const C1Function& f, const HermitianMatrix& x,
                            const Matrix& h) {
  return frechet_diff_inverse(f, eigh(x), h);
}

}  // namespace mel
