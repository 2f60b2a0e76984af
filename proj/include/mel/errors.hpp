// mel/errors.hpp
//
// Copyright 2026 The mel authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0

#ifndef MEL_ERRORS_HPP_
#define MEL_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace mel {

// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// A scalar argument left the domain of a function (typically t <= 0).
class DomainError : public Error {
 public:
  explicit DomainError(const std::string& msg) : Error(msg) {}
};

// Shapes of operands do not match.
class DimensionError : public Error {
 public:
  explicit DimensionError(const std::string& msg) : Error(msg) {}
};

// An input violated a structural contract (e.g. non-Hermitian matrix,
// probabilities not summing to one).
class ContractError : public Error {
 public:
  explicit ContractError(const std::string& msg) : Error(msg) {}
};

// The eigensolver did not reach the off-diagonal residual threshold
// within the sweep budget.
class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& msg, double residual)
      : Error(msg), residual_(residual) {}
  double residual() const { return residual_; }

 private:
  double residual_;
};

// A Loewner entry fell below the invertibility floor; f is not strictly
// increasing on the relevant spectral interval.
class NearSingularDifferential : public Error {
 public:
  explicit NearSingularDifferential(const std::string& msg) : Error(msg) {}
};

// The kernel g(t,s) = (s-t)/(f(s)-f(t)) is undefined for affine specs.
class DegenerateKernel : public Error {
 public:
  explicit DegenerateKernel(const std::string& msg) : Error(msg) {}
};

// A limit or extrapolation failed to stabilize.
class NumericalInstability : public Error {
 public:
  explicit NumericalInstability(const std::string& msg) : Error(msg) {}
};

}  // namespace mel

#endif  // MEL_ERRORS_HPP_
