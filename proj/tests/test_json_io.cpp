// tests/test_json_io.cpp
//
// Copyright 2026 The mel authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0

#include <doctest.h>

#include "mel/errors.hpp"
#include "mel/json_io.hpp"
#include "mel/rng.hpp"
#include "mel/sampling.hpp"

using namespace mel;

TEST_CASE("matrix json: round trip is exact") {
  Rng rng(101);
  const Matrix m = sample_hermitian(3, rng).raw();
  const Matrix back = matrix_from_json(matrix_to_json(m));
  CHECK((back - m).max_abs() == 0.0);

  // Real matrices omit the imaginary block; defaulting restores zeros.
  const Matrix real = HermitianMatrix::diagonal({1.5, -2.0}).raw();
  const json j = matrix_to_json(real);
  CHECK_FALSE(j.contains("im"));
  CHECK((matrix_from_json(j) - real).max_abs() == 0.0);
}

TEST_CASE("matrix json: malformed documents are input errors") {
  CHECK_THROWS_AS(matrix_from_json(json::parse(R"({"n": 2})")), ContractError);
  CHECK_THROWS_AS(
      matrix_from_json(json::parse(R"({"n": 2, "re": [[1, 0]]})")),
      ContractError);
  CHECK_THROWS_AS(matrix_from_json(json::parse(
                      R"({"n": 2, "re": [[1, 0], [0, 1]], "im": [[0]]})")),
                  ContractError);
}

TEST_CASE("hermitian json: strict self-adjointness check") {
  const json good = json::parse(R"({"n": 2, "re": [[1, 2], [2, 3]]})");
  CHECK(hermitian_from_json(good).dim() == 2);
  const json bad = json::parse(R"({"n": 2, "re": [[1, 2], [2.1, 3]]})");
  CHECK_THROWS_AS(hermitian_from_json(bad), ContractError);
}

TEST_CASE("function spec json: round trips for every kind") {
  const std::vector<ScalarFunctionSpec> specs = {
      ScalarFunctionSpec::affine(1.5, -0.5),
      ScalarFunctionSpec::standard_entropy(),
      ScalarFunctionSpec::power(1.75),
      ScalarFunctionSpec::canonical(CanonicalMeasure::from_reference(
          0.0, 1.0, 0.3, {{0.0, 0.7}, {2.5, 0.2}}))};
  for (const auto& spec : specs) {
    const json j = spec_to_json(spec);
    const ScalarFunctionSpec back = spec_from_json(j);
    CHECK(spec_to_json(back).dump() == j.dump());
    for (double t : {0.3, 1.0, 4.0}) {
      CHECK(back.phi(t) == spec.phi(t));
      CHECK(back.f(t) == spec.f(t));
    }
  }
}

TEST_CASE("function spec json: invalid kinds and parameters") {
  CHECK_THROWS_AS(spec_from_json(json::parse(R"({"kind": "mystery"})")),
                  ContractError);
  CHECK_THROWS_AS(spec_from_json(json::parse(R"({"kind": "power"})")),
                  ContractError);
  CHECK_THROWS_AS(
      spec_from_json(json::parse(R"({"kind": "affine", "c0": 1.0})")),
      ContractError);
  CHECK_THROWS_AS(
      spec_from_json(json::parse(
          R"({"kind": "canonical", "beta": -1.0, "atoms": [], "a": 0, "b": 0})")),
      ContractError);
  CHECK_THROWS_AS(
      spec_from_json(json::parse(
          R"({"kind": "canonical", "beta": 0.5, "atoms": [[-1.0, 1.0]], "a": 0, "b": 0})")),
      ContractError);
}

TEST_CASE("ensemble json: round trip and validation") {
  Rng rng(103);
  std::vector<MatrixEnsemble::Outcome> out = {{0.25, sample_pd(2, rng)},
                                              {0.75, sample_pd(2, rng)}};
  const MatrixEnsemble e(std::move(out));
  const json j = ensemble_to_json(e);
  const MatrixEnsemble back = ensemble_from_json(j);
  CHECK(ensemble_to_json(back).dump() == j.dump());

  CHECK_THROWS_AS(ensemble_from_json(json::parse(R"({"outcomes": []})")),
                  ContractError);
  CHECK_THROWS_AS(ensemble_from_json(json::parse(R"({})")), ContractError);
}

TEST_CASE("witness and violation json: bit-exact round trip") {
  const ScalarFunctionSpec spec = ScalarFunctionSpec::power(3.0);
  const auto hit = search_counterexample(spec, 2, 5000, 201);
  REQUIRE(hit.has_value());

  const json wj = witness_to_json(hit->witness);
  const Witness w = witness_from_json(wj);
  CHECK(w.gap == hit->witness.gap);
  CHECK(w.lambda == hit->witness.lambda);
  for (std::size_t k = 0; k < w.operands.size(); ++k) {
    CHECK(w.operands[k].first == hit->witness.operands[k].first);
    CHECK((w.operands[k].second - hit->witness.operands[k].second).max_abs() ==
          0.0);
  }

  const json vj = violation_to_json(*hit);
  const ViolationReport back = violation_from_json(vj);
  // Serialized operands replay to the identical gap.
  CHECK(replay_violation(back) == hit->witness.gap);
  CHECK(violation_to_json(back).dump() == vj.dump());
}

TEST_CASE("report serialization is byte-stable across runs") {
  const ScalarFunctionSpec spec = ScalarFunctionSpec::power(1.5);
  const auto a = cross_equivalence(spec, 2, 50, 42, kDefaultTol);
  const auto b = cross_equivalence(spec, 2, 50, 42, kDefaultTol);
  CHECK(equivalence_to_json(a).dump(2) == equivalence_to_json(b).dump(2));

  const auto v1 = check_condition_iii(ScalarFunctionSpec::power(3.0), 2, 300,
                                      42, kDefaultTol);
  const auto v2 = check_condition_iii(ScalarFunctionSpec::power(3.0), 2, 300,
                                      42, kDefaultTol);
  CHECK(verdict_to_json(v1).dump(2) == verdict_to_json(v2).dump(2));
}

TEST_CASE("load_json_argument: inline text and file paths") {
  const json inline_doc = load_json_argument(R"({"kind": "xlogx"})");
  CHECK(inline_doc["kind"] == "xlogx");
  CHECK_THROWS_AS(load_json_argument("/nonexistent/path.json"), ContractError);
  CHECK_THROWS_AS(load_json_argument("{not json"), ContractError);
}
