// mel/membership.hpp
//
// Copyright 2026 The mel authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0

#ifndef MEL_MEMBERSHIP_HPP_
#define MEL_MEMBERSHIP_HPP_

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mel/function_spec.hpp"
#include "mel/matrix.hpp"
#include "mel/sampling.hpp"

namespace mel {

// The four equivalent membership conditions:
//   i   - concavity of x -> Tr h* df(x)^{-1} h
//   ii  - joint convexity of (x,h) -> Tr h* df(x) h
//   iii - joint convexity of (x,y) -> Tr (y-x)(f(y)-f(x))
//   iv  - operator concavity of (x,y) -> g(L_x, R_y)
enum class Condition { i, ii, iii, iv };

std::string condition_name(Condition c);

// One sampled trial pinned down completely: the operands, the mixing
// parameter, and both sides of the inequality. Replaying through
// evaluate_slack reproduces the gap bit for bit.
struct Witness {
  std::vector<std::pair<std::string, Matrix>> operands;
  double lambda = 0.5;
  double lhs = 0.0;    // side that the condition requires to dominate
  double rhs = 0.0;    // the other side (for iv: Frobenius scale of the combo)
  double gap = 0.0;    // signed slack; negative past tolerance = violation
  double scale = 1.0;  // relative-tolerance normalization, 1 + |rhs|
};

struct ConditionVerdict {
  Condition condition = Condition::i;
  bool passed = false;
  int trials = 0;   // completed trials
  int skipped = 0;  // near-singular-differential skips
  bool skip_cap_exceeded = false;
  double worst_gap = 0.0;  // most negative normalized slack observed
  double tol = 0.0;
  std::uint64_t seed = 0;
  bool affine_short_circuit = false;
  std::optional<Witness> witness;  // first violation by trial index
};

// Recomputes the slack of a witnessed trial for the given condition.
// Shares every code path with the checkers, so replay is exact.
Witness evaluate_slack(Condition c, const ScalarFunctionSpec& spec,
                       const std::vector<std::pair<std::string, Matrix>>& ops,
                       double lambda);

ConditionVerdict check_condition_i(const ScalarFunctionSpec& spec,
                                   std::size_t n, int trials,
                                   std::uint64_t seed, double tol);
ConditionVerdict check_condition_ii(const ScalarFunctionSpec& spec,
                                    std::size_t n, int trials,
                                    std::uint64_t seed, double tol);
ConditionVerdict check_condition_iii(const ScalarFunctionSpec& spec,
                                     std::size_t n, int trials,
                                     std::uint64_t seed, double tol);
ConditionVerdict check_condition_iv(const ScalarFunctionSpec& spec,
                                    std::size_t n, int trials,
                                    std::uint64_t seed, double tol);

// All four checkers on a shared master seed. Disagreement beyond
// tolerance is a numerical anomaly, never a refutation of the
// equivalence.
struct EquivalenceReport {
  std::array<ConditionVerdict, 4> verdicts;
  bool agree = false;
  bool all_passed = false;
  bool affine = false;
};

EquivalenceReport cross_equivalence(const ScalarFunctionSpec& spec,
                                    std::size_t n, int trials,
                                    std::uint64_t seed, double tol);

struct ViolationReport {
  ScalarFunctionSpec spec = ScalarFunctionSpec::standard_entropy();
  Condition condition = Condition::iii;
  std::size_t dimension = 0;
  Witness witness;
  std::uint64_t seed = 0;
  long evaluations = 0;  // budget consumed before the hit
};

// Replays the stored witness and returns the recomputed gap.
double replay_violation(const ViolationReport& report);

// Escalating random search over dimensions 1..n_max with local
// refinement (coordinate hill-climbing) on the most negative slack of
// condition iii. Returns the first violation with gap below
// -max(1e-6, tol*scale), or nothing within the budget.
std::optional<ViolationReport> search_counterexample(
    const ScalarFunctionSpec& spec, std::size_t n_max, long budget,
    std::uint64_t seed, double tol = 1e-8);

// Default relative slack tolerance used throughout the checkers.
inline constexpr double kDefaultTol = 1e-8;

}  // namespace mel

#endif  // MEL_MEMBERSHIP_HPP_
