// mel/json_io.cpp
//
// Copyright 2026 The mel authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0

#include "mel/json_io.hpp"

#include <fstream>
#include <sstream>

#include "mel/errors.hpp"

namespace mel {

namespace {

std::vector<std::vector<double>> part_to_rows(const Matrix& m, bool imag) {
  std::vector<std::vector<double>> rows(m.rows(),
                                        std::vector<double>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      rows[i][j] = imag ? m(i, j).imag() : m(i, j).real();
  return rows;
}

bool has_imaginary_part(const Matrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (m(i, j).imag() != 0.0) return true;
  return false;
}

// Re-throws library-level JSON errors as input contract violations.
template <typename Fn>
auto contract_guard(const char* what, Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const nlohmann::json::exception& e) {
    throw ContractError(std::string(what) + ": " + e.what());
  }
}

}  // namespace

json matrix_to_json(const Matrix& m) {
  json j;
  j["n"] = m.rows();
  j["re"] = part_to_rows(m, false);
  if (has_imaginary_part(m)) j["im"] = part_to_rows(m, true);
  return j;
}

Matrix matrix_from_json(const json& j) {
  return contract_guard("matrix JSON", [&]() -> Matrix {
  if (!j.is_object() || !j.contains("n") || !j.contains("re"))
    throw ContractError("matrix JSON must contain \"n\" and \"re\"");
  const std::size_t n = j.at("n").get<std::size_t>();
  if (n < 1) throw ContractError("matrix JSON: n must be >= 1");
  const auto& re = j.at("re");
  if (!re.is_array() || re.size() != n)
    throw ContractError("matrix JSON: \"re\" must be an n x n array");
  const bool has_im = j.contains("im");
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& row = re.at(i);
    if (!row.is_array() || row.size() != n)
      throw ContractError("matrix JSON: \"re\" row has wrong length");
    for (std::size_t k = 0; k < n; ++k) {
      double im_val = 0.0;
      if (has_im) im_val = j.at("im").at(i).at(k).get<double>();
      m(i, k) = complexd(row.at(k).get<double>(), im_val);
    }
  }
  return m;
  });
}

HermitianMatrix hermitian_from_json(const json& j) {
  return HermitianMatrix(matrix_from_json(j));  // strict 1e-12 rejection
}

json spec_to_json(const ScalarFunctionSpec& spec) {
  json j;
  switch (spec.kind()) {
    case ScalarFunctionSpec::Kind::affine:
      j["kind"] = "affine";
      j["c0"] = spec.c0();
      j["c1"] = spec.c1();
      break;
    case ScalarFunctionSpec::Kind::standard_entropy:
      j["kind"] = "xlogx";
      break;
    case ScalarFunctionSpec::Kind::power:
      j["kind"] = "power";
      j["p"] = spec.exponent();
      break;
    case ScalarFunctionSpec::Kind::canonical: {
      const CanonicalMeasure& m = spec.measure();
      j["kind"] = "canonical";
      j["beta"] = m.beta;
      json atoms = json::array();
      for (const auto& atom : m.atoms)
        atoms.push_back(json::array({atom.lambda, atom.weight}));
      j["atoms"] = atoms;
      j["a"] = m.a;
      j["b"] = m.b;
      break;
    }
  }
  return j;
}

ScalarFunctionSpec spec_from_json(const json& j) {
  return contract_guard("function spec JSON", [&]() -> ScalarFunctionSpec {
  if (!j.is_object() || !j.contains("kind"))
    throw ContractError("function spec JSON must contain \"kind\"");
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "affine") {
    return ScalarFunctionSpec::affine(j.at("c0").get<double>(),
                                      j.at("c1").get<double>());
  }
  if (kind == "xlogx") return ScalarFunctionSpec::standard_entropy();
  if (kind == "power") return ScalarFunctionSpec::power(j.at("p").get<double>());
  if (kind == "canonical") {
    CanonicalMeasure m;
    m.beta = j.value("beta", 0.0);
    m.a = j.value("a", 0.0);
    m.b = j.value("b", 0.0);
    for (const auto& atom : j.value("atoms", json::array())) {
      if (!atom.is_array() || atom.size() != 2)
        throw ContractError("canonical spec: atoms must be [lambda, weight]");
      m.atoms.push_back({atom.at(0).get<double>(), atom.at(1).get<double>()});
    }
    m.validate();
    return ScalarFunctionSpec::canonical(std::move(m));
  }
  throw ContractError("unknown function spec kind '" + kind + "'");
  });
}

MatrixEnsemble ensemble_from_json(const json& j) {
  return contract_guard("ensemble JSON", [&]() -> MatrixEnsemble {
    if (!j.is_object() || !j.contains("outcomes"))
      throw ContractError("ensemble JSON must contain \"outcomes\"");
    std::vector<MatrixEnsemble::Outcome> outcomes;
    for (const auto& o : j.at("outcomes")) {
      outcomes.push_back(
          {o.at("p").get<double>(), hermitian_from_json(o.at("matrix"))});
    }
    return MatrixEnsemble(std::move(outcomes));
  });
}

json ensemble_to_json(const MatrixEnsemble& e) {
  json outcomes = json::array();
  for (const auto& o : e.outcomes()) {
    json entry;
    entry["p"] = o.probability;
    entry["matrix"] = matrix_to_json(o.matrix.raw());
    outcomes.push_back(entry);
  }
  json j;
  j["outcomes"] = outcomes;
  return j;
}

json witness_to_json(const Witness& w) {
  json ops = json::object();
  for (const auto& [name, m] : w.operands) ops[name] = matrix_to_json(m);
  json j;
  j["operands"] = ops;
  j["lambda"] = w.lambda;
  j["lhs"] = w.lhs;
  j["rhs"] = w.rhs;
  j["gap"] = w.gap;
  j["scale"] = w.scale;
  return j;
}

Witness witness_from_json(const json& j) {
  return contract_guard("witness JSON", [&]() -> Witness {
  Witness w;
  for (const auto& [name, m] : j.at("operands").items())
    w.operands.emplace_back(name, matrix_from_json(m));
  w.lambda = j.at("lambda").get<double>();
  w.lhs = j.at("lhs").get<double>();
  w.rhs = j.at("rhs").get<double>();
  w.gap = j.at("gap").get<double>();
  w.scale = j.at("scale").get<double>();
  return w;
  });
}

json verdict_to_json(const ConditionVerdict& v) {
  json j;
  j["condition"] = condition_name(v.condition);
  j["passed"] = v.passed;
  j["trials"] = v.trials;
  j["skipped"] = v.skipped;
  j["skip_cap_exceeded"] = v.skip_cap_exceeded;
  j["worst_gap"] = v.worst_gap;
  j["tol"] = v.tol;
  j["seed"] = v.seed;
  j["affine_short_circuit"] = v.affine_short_circuit;
  if (v.witness) j["witness"] = witness_to_json(*v.witness);
  return j;
}

json equivalence_to_json(const EquivalenceReport& r) {
  json verdicts = json::array();
  for (const auto& v : r.verdicts) verdicts.push_back(verdict_to_json(v));
  json j;
  j["verdicts"] = verdicts;
  j["agree"] = r.agree;
  j["all_passed"] = r.all_passed;
  j["affine"] = r.affine;
  return j;
}

json violation_to_json(const ViolationReport& r) {
  json j;
  j["spec"] = spec_to_json(r.spec);
  j["condition"] = condition_name(r.condition);
  j["dimension"] = r.dimension;
  j["witness"] = witness_to_json(r.witness);
  j["seed"] = r.seed;
  j["evaluations"] = r.evaluations;
  return j;
}

ViolationReport violation_from_json(const json& j) {
  return contract_guard("violation JSON", [&]() -> ViolationReport {
  ViolationReport r;
  r.spec = spec_from_json(j.at("spec"));
  const std::string c = j.at("condition").get<std::string>();
  if (c == "I") r.condition = Condition::i;
  else if (c == "II") r.condition = Condition::ii;
  else if (c == "III") r.condition = Condition::iii;
  else if (c == "IV") r.condition = Condition::iv;
  else throw ContractError("violation JSON: unknown condition '" + c + "'");
  r.dimension = j.at("dimension").get<std::size_t>();
  r.witness = witness_from_json(j.at("witness"));
  r.seed = j.at("seed").get<std::uint64_t>();
  r.evaluations = j.value("evaluations", 0L);
  return r;
  });
}

json load_json_argument(const std::string& arg) {
  return contract_guard("JSON argument", [&]() -> json {
    if (!arg.empty() && arg.front() == '{') return json::parse(arg);
    std::ifstream in(arg);
    if (!in) throw ContractError("cannot open JSON file '" + arg + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return json::parse(ss.str());
  });
}

}  // namespace mel
