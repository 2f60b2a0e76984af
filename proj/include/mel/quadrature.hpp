// mel/quadrature.hpp
//
// Copyright 2026 The mel authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0

#ifndef MEL_QUADRATURE_HPP_
#define MEL_QUADRATURE_HPP_

#include <functional>
#include <vector>

namespace mel {

// Gauss-Legendre rule transplanted to [0, 1].
struct Quadrature {
  std::vector<double> nodes;
  std::vector<double> weights;

  double integrate(const std::function<double(double)>& f) const;
};

// Nodes by Newton iteration on the Legendre recurrence.
Quadrature gauss_legendre_unit(int order);

// The 64-node rule used by the Hermite and trace-identity checks.
const Quadrature& gauss_legendre_64();

}  // namespace mel

#endif  // MEL_QUADRATURE_HPP_
