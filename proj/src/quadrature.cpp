// mel/quadrature.cpp
//
// Copyright 2026 The mel authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0

#include "mel/quadrature.hpp"

#include <cmath>
#include <numbers>

namespace mel {

double Quadrature::integrate(const std::function<double(double)>& f) const {
  double s = 0.0;
  for (std::size_t k = 0; k < nodes.size(); ++k) s += weights[k] * f(nodes[k]);
  return s;
}

Quadrature gauss_legendre_unit(int order) {
  Quadrature q;
  q.nodes.resize(order);
  q.weights.resize(order);
  for (int i = 0; i < order; ++i) {
    // Chebyshev-based initial guess for the i-th root of P_order.
    double x = std::cos(std::numbers::pi * (i + 0.75) / (order + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      // Legendre recurrence for P_order(x) and P'_order(x).
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= order; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = order * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    // Roots come out descending in i; order within the arrays is immaterial.
    q.nodes[i] = 0.5 * (1.0 + x);
    q.weights[i] = 1.0 / ((1.0 - x * x) * dp * dp);
  }
  return q;
}

const Quadrature& gauss_legendre_64() {
  static const Quadrature q = gauss_legendre_unit(64);
  return q;
}

}  // namespace mel
