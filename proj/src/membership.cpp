// mel/membership.cpp
//
// Copyright 2026 The mel authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0

#include "mel/membership.hpp"

#include <algorithm>
#include <cmath>

#include "mel/errors.hpp"
#include "mel/spectral.hpp"
#include "mel/superop.hpp"

namespace mel {

namespace {

constexpr std::uint64_t kCondTag[4] = {0x636f6e6431ull, 0x636f6e6432ull,
                                       0x636f6e6433ull, 0x636f6e6434ull};

const Matrix& find_operand(
    const std::vector<std::pair<std::string, Matrix>>& ops,
    const std::string& name) {
  for (const auto& [key, m] : ops)
    if (key == name) return m;
  throw ContractError("witness is missing operand '" + name + "'");
}

HermitianMatrix as_hermitian(const Matrix& m) {
  return HermitianMatrix(hermitian_part(m));
}

HermitianMatrix convex_mix(const Matrix& a, const Matrix& b, double lambda) {
  return as_hermitian(complexd(lambda) * a + complexd(1.0 - lambda) * b);
}

double real_pairing(const Matrix& h, const Matrix& m) {
  return trace_inner(h, m).real();
}

// Tr h* df(x)^{-1} h
double inverse_form(const ScalarFunctionSpec& spec, const HermitianMatrix& x,
                    const Matrix& h) {
  return real_pairing(h, frechet_diff_inverse(spec.f_pair(), x, h));
}

// Tr h* df(x) h
double forward_form(const ScalarFunctionSpec& spec, const HermitianMatrix& x,
                    const Matrix& h) {
  return real_pairing(h, frechet_diff(spec.f_pair(), x, h));
}

// Tr (y-x)(f(y)-f(x))
double bivariate_trace(const ScalarFunctionSpec& spec,
                       const HermitianMatrix& x, const HermitianMatrix& y) {
  const auto fn = [&spec](double t) { return spec.f(t); };
  const Matrix diff = y.raw() - x.raw();
  const Matrix fdiff = apply_univariate(fn, y) - apply_univariate(fn, x);
  return trace(diff * fdiff).real();
}

Matrix g_superop(const ScalarFunctionSpec& spec, const HermitianMatrix& x,
                 const HermitianMatrix& y) {
  const auto kernel = [&spec](double t, double s) {
    return g_kernel(spec, t, s);
  };
  return bivariate_calculus(kernel, x, y).matrix();
}

Witness slack_i(const ScalarFunctionSpec& spec,
                const std::vector<std::pair<std::string, Matrix>>& ops,
                double lambda) {
  const HermitianMatrix x1 = as_hermitian(find_operand(ops, "x1"));
  const HermitianMatrix x2 = as_hermitian(find_operand(ops, "x2"));
  const Matrix& h = find_operand(ops, "h");
  const HermitianMatrix xbar =
      convex_mix(x1.raw(), x2.raw(), lambda);
  Witness w;
  w.operands = ops;
  w.lambda = lambda;
  w.lhs = inverse_form(spec, xbar, h);
  w.rhs = lambda * inverse_form(spec, x1, h) +
          (1.0 - lambda) * inverse_form(spec, x2, h);
  w.gap = w.lhs - w.rhs;  // concavity: lhs dominates
  w.scale = 1.0 + std::abs(w.rhs);
  return w;
}

Witness slack_ii(const ScalarFunctionSpec& spec,
                 const std::vector<std::pair<std::string, Matrix>>& ops,
                 double lambda) {
  const HermitianMatrix x1 = as_hermitian(find_operand(ops, "x1"));
  const HermitianMatrix x2 = as_hermitian(find_operand(ops, "x2"));
  const Matrix& h1 = find_operand(ops, "h1");
  const Matrix& h2 = find_operand(ops, "h2");
  const HermitianMatrix xbar = convex_mix(x1.raw(), x2.raw(), lambda);
  const Matrix hbar = complexd(lambda) * h1 + complexd(1.0 - lambda) * h2;
  Witness w;
  w.operands = ops;
  w.lambda = lambda;
  w.lhs = lambda * forward_form(spec, x1, h1) +
          (1.0 - lambda) * forward_form(spec, x2, h2);
  w.rhs = forward_form(spec, xbar, hbar);
  w.gap = w.lhs - w.rhs;  // joint convexity: combination dominates
  w.scale = 1.0 + std::abs(w.rhs);
  return w;
}

Witness slack_iii(const ScalarFunctionSpec& spec,
                  const std::vector<std::pair<std::string, Matrix>>& ops,
                  double lambda) {
  const HermitianMatrix x1 = as_hermitian(find_operand(ops, "x1"));
  const HermitianMatrix y1 = as_hermitian(find_operand(ops, "y1"));
  const HermitianMatrix x2 = as_hermitian(find_operand(ops, "x2"));
  const HermitianMatrix y2 = as_hermitian(find_operand(ops, "y2"));
  const HermitianMatrix xbar = convex_mix(x1.raw(), x2.raw(), lambda);
  const HermitianMatrix ybar = convex_mix(y1.raw(), y2.raw(), lambda);
  Witness w;
  w.operands = ops;
  w.lambda = lambda;
  w.lhs = lambda * bivariate_trace(spec, x1, y1) +
          (1.0 - lambda) * bivariate_trace(spec, x2, y2);
  w.rhs = bivariate_trace(spec, xbar, ybar);
  w.gap = w.lhs - w.rhs;
  w.scale = 1.0 + std::abs(w.rhs);
  return w;
}

Witness slack_iv(const ScalarFunctionSpec& spec,
                 const std::vector<std::pair<std::string, Matrix>>& ops,
                 double lambda) {
  const HermitianMatrix x1 = as_hermitian(find_operand(ops, "x1"));
  const HermitianMatrix y1 = as_hermitian(find_operand(ops, "y1"));
  const HermitianMatrix x2 = as_hermitian(find_operand(ops, "x2"));
  const HermitianMatrix y2 = as_hermitian(find_operand(ops, "y2"));
  const HermitianMatrix xbar = convex_mix(x1.raw(), x2.raw(), lambda);
  const HermitianMatrix ybar = convex_mix(y1.raw(), y2.raw(), lambda);
  const Matrix combo = complexd(lambda) * g_superop(spec, x1, y1) +
                       complexd(1.0 - lambda) * g_superop(spec, x2, y2);
  const Matrix diff = g_superop(spec, xbar, ybar) - combo;
  Witness w;
  w.operands = ops;
  w.lambda = lambda;
  w.gap = min_eigenvalue(diff);  // operator concavity of g(L_x, R_y)
  w.lhs = w.gap;
  w.rhs = combo.frobenius_norm();
  w.scale = 1.0 + w.rhs;
  return w;
}

using OperandSampler = std::vector<std::pair<std::string, Matrix>> (*)(
    std::size_t, Rng&);

std::vector<std::pair<std::string, Matrix>> sample_ops_i(std::size_t n,
                                                         Rng& rng) {
  return {{"x1", sample_pd(n, rng).raw()},
          {"x2", sample_pd(n, rng).raw()},
          {"h", sample_hermitian(n, rng).raw()}};
}

std::vector<std::pair<std::string, Matrix>> sample_ops_ii(std::size_t n,
                                                          Rng& rng) {
  return {{"x1", sample_pd(n, rng).raw()},
          {"x2", sample_pd(n, rng).raw()},
          {"h1", sample_hermitian(n, rng).raw()},
          {"h2", sample_hermitian(n, rng).raw()}};
}

// Random PD matrix with i.i.d. log-uniform spectrum in [1e-2, 1e2];
// spreads the pair conditions across well-separated scales, which the
// Gaussian Gram construction rarely produces.
Matrix log_uniform_pd(std::size_t n, Rng& rng) {
  Matrix d(n, n);
  for (std::size_t i = 0; i < n; ++i)
    d(i, i) = std::exp(rng.uniform(std::log(1e-2), std::log(1e2)));
  const Matrix u = eigh(sample_hermitian(n, rng)).eigenvectors;
  return hermitian_part(u * d * u.adjoint());
}

std::vector<std::pair<std::string, Matrix>> sample_ops_pairs(std::size_t n,
                                                             Rng& rng) {
  if (rng.uniform() < 0.5) {
    return {{"x1", sample_pd(n, rng).raw()},
            {"y1", sample_pd(n, rng).raw()},
            {"x2", sample_pd(n, rng).raw()},
            {"y2", sample_pd(n, rng).raw()}};
  }
  // Structured mode: a nearly coincident pair at one scale against an
  // independent pair at another. Convexity violations of the pair
  // conditions concentrate here; members are unaffected.
  const Matrix x1 = log_uniform_pd(n, rng);
  const Matrix dir = sample_hermitian(n, rng).raw();
  const double eps = rng.uniform(0.05, 0.5) *
                     min_eigenvalue(x1) / (dir.frobenius_norm() + 1e-12);
  const Matrix y1 = hermitian_part(x1 + complexd(eps) * dir);
  return {{"x1", x1},
          {"y1", y1},
          {"x2", log_uniform_pd(n, rng)},
          {"y2", log_uniform_pd(n, rng)}};
}

OperandSampler sampler_for(Condition c) {
  switch (c) {
    case Condition::i:
      return &sample_ops_i;
    case Condition::ii:
      return &sample_ops_ii;
    case Condition::iii:
    case Condition::iv:
      return &sample_ops_pairs;
  }
  return &sample_ops_pairs;
}

ConditionVerdict run_checker(Condition c, const ScalarFunctionSpec& spec,
                             std::size_t n, int trials, std::uint64_t seed,
                             double tol) {
  ConditionVerdict v;
  v.condition = c;
  v.tol = tol;
  v.seed = seed;
  if (spec.is_affine()) {
    // Members by definition; the kernels are degenerate so there is
    // nothing to sample.
    v.passed = true;
    v.affine_short_circuit = true;
    return v;
  }
  const std::uint64_t tag = kCondTag[static_cast<int>(c)];
  OperandSampler sampler = sampler_for(c);
  for (int trial = 0; trial < trials; ++trial) {
    Rng rng(mix_seed(seed, tag, static_cast<std::uint64_t>(trial)));
    try {
      const auto ops = sampler(n, rng);
      const double lambda_draw = rng.uniform();
      // Midpoint plus a uniform draw; random lambda guards against
      // midpoint-only artifacts.
      for (double lambda : {0.5, lambda_draw}) {
        Witness w = evaluate_slack(c, spec, ops, lambda);
        const double normalized = w.gap / w.scale;
        v.worst_gap = std::min(v.worst_gap, normalized);
        if (normalized < -tol && !v.witness) v.witness = std::move(w);
      }
      ++v.trials;
    } catch (const NearSingularDifferential&) {
      ++v.skipped;
    }
  }
  if (v.skipped > std::max(1, trials / 20)) {
    v.skip_cap_exceeded = true;
    v.passed = false;
    return v;
  }
  v.passed = v.worst_gap >= -tol;
  return v;
}

}  // namespace

std::string condition_name(Condition c) {
  switch (c) {
    case Condition::i:
      return "I";
    case Condition::ii:
      return "II";
    case Condition::iii:
      return "III";
    case Condition::iv:
      return "IV";
  }
  return "?";
}

Witness evaluate_slack(Condition c, const ScalarFunctionSpec& spec,
                       const std::vector<std::pair<std::string, Matrix>>& ops,
                       double lambda) {
  switch (c) {
    case Condition::i:
      return slack_i(spec, ops, lambda);
    case Condition::ii:
      return slack_ii(spec, ops, lambda);
    case Condition::iii:
      return slack_iii(spec, ops, lambda);
    case Condition::iv:
      return slack_iv(spec, ops, lambda);
  }
  throw ContractError("evaluate_slack: unknown condition");
}

ConditionVerdict check_condition_i(const ScalarFunctionSpec& spec,
                                   std::size_t n, int trials,
                                   std::uint64_t seed, double tol) {
  return run_checker(Condition::i, spec, n, trials, seed, tol);
}

ConditionVerdict check_condition_ii(const ScalarFunctionSpec& spec,
                                    std::size_t n, int trials,
                                    std::uint64_t seed, double tol) {
  return run_checker(Condition::ii, spec, n, trials, seed, tol);
}

ConditionVerdict check_condition_iii(const ScalarFunctionSpec& spec,
                                     std::size_t n, int trials,
                                     std::uint64_t seed, double tol) {
  return run_checker(Condition::iii, spec, n, trials, seed, tol);
}

ConditionVerdict check_condition_iv(const ScalarFunctionSpec& spec,
                                    std::size_t n, int trials,
                                    std::uint64_t seed, double tol) {
  return run_checker(Condition::iv, spec, n, trials, seed, tol);
}

EquivalenceReport cross_equivalence(const ScalarFunctionSpec& spec,
                                    std::size_t n, int trials,
                                    std::uint64_t seed, double tol) {
  EquivalenceReport r;
  r.affine = spec.is_affine();
  r.verdicts = {check_condition_i(spec, n, trials, seed, tol),
                check_condition_ii(spec, n, trials, seed, tol),
                check_condition_iii(spec, n, trials, seed, tol),
                check_condition_iv(spec, n, trials, seed, tol)};
  r.all_passed = true;
  r.agree = true;
  for (const auto& v : r.verdicts) {
    r.all_passed = r.all_passed && v.passed;
    if (v.passed != r.verdicts[0].passed) r.agree = false;
  }
  return r;
}

double replay_violation(const ViolationReport& report) {
  return evaluate_slack(report.condition, report.spec, report.witness.operands,
                        report.witness.lambda)
      .gap;
}

std::optional<ViolationReport> search_counterexample(
    const ScalarFunctionSpec& spec, std::size_t n_max, long budget,
    std::uint64_t seed, double tol) {
  if (spec.is_affine()) return std::nullopt;

  long used = 0;
  const auto violating = [tol](const Witness& w) {
    return w.gap < -std::max(1e-6, tol * w.scale);
  };

  for (std::size_t n = 1; n <= n_max && used < budget; ++n) {
    Witness best;
    bool have_best = false;

    // Random restarts on condition iii, the cheapest form.
    const long restarts = std::max<long>(1, (budget - used) / (2 * n_max));
    for (long r = 0; r < restarts && used < budget; ++r) {
      Rng rng(mix_seed(seed, 0x736561726368ull ^ n,
                       static_cast<std::uint64_t>(r)));
      const auto ops = sample_ops_pairs(n, rng);
      const double lambda_draw = rng.uniform();
      for (double lambda : {0.5, lambda_draw}) {
        Witness w = evaluate_slack(Condition::iii, spec, ops, lambda);
        ++used;
        if (violating(w)) {
          return ViolationReport{spec, Condition::iii, n, std::move(w), seed,
                                 used};
        }
        if (!have_best || w.gap / w.scale < best.gap / best.scale) {
          best = std::move(w);
          have_best = true;
        }
      }
    }

    // Local refinement: perturb one Hermitian coordinate of the most
    // negative restart and keep downhill moves.
    if (have_best) {
      Rng rng(mix_seed(seed, 0x726566696e65ull, n));
      double step = 0.1;
      const long refine_budget = std::min<long>(budget - used, 400);
      for (long it = 0; it < refine_budget && used < budget; ++it) {
        auto ops = best.operands;
        auto& target = ops[rng.below(ops.size())].second;
        const std::size_t i = rng.below(n);
        const std::size_t j = rng.below(n);
        const complexd delta =
            i == j ? complexd(step * rng.normal(), 0.0)
                   : complexd(step * rng.normal(), step * rng.normal());
        target(i, j) += delta;
        if (i != j) target(j, i) += std::conj(delta);
        try {
          // Operands must stay positive definite.
          bool pd = true;
          for (const auto& [key, m] : ops)
            pd = pd && min_eigenvalue(hermitian_part(m)) > 1e-6;
          if (!pd) continue;
          Witness w = evaluate_slack(Condition::iii, spec, ops, best.lambda);
          ++used;
          if (violating(w)) {
            return ViolationReport{spec, Condition::iii, n, std::move(w), seed,
                                   used};
          }
          if (w.gap / w.scale < best.gap / best.scale) {
            best = std::move(w);
          } else {
            step *= 0.97;
          }
        } catch (const NearSingularDifferential&) {
          continue;
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace mel
