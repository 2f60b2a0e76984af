// mel/json_io.hpp
//
// Copyright 2026 The mel authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0

#ifndef MEL_JSON_IO_HPP_
#define MEL_JSON_IO_HPP_

#include <json.hpp>

#include "mel/entropy.hpp"
#include "mel/function_spec.hpp"
#include "mel/matrix.hpp"
#include "mel/membership.hpp"

namespace mel {

// Insertion-ordered documents keep reports byte-identical run to run.
using json = nlohmann::ordered_json;

// Matrix wire format: {"n": int, "re": [[...]], "im": [[...]]} with "im"
// optional and defaulting to zero.
json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const json& j);
HermitianMatrix hermitian_from_json(const json& j);  // strict 1e-12 check

json spec_to_json(const ScalarFunctionSpec& spec);
ScalarFunctionSpec spec_from_json(const json& j);

MatrixEnsemble ensemble_from_json(const json& j);
json ensemble_to_json(const MatrixEnsemble& e);

json witness_to_json(const Witness& w);
Witness witness_from_json(const json& j);

json verdict_to_json(const ConditionVerdict& v);

json equivalence_to_json(const EquivalenceReport& r);

json violation_to_json(const ViolationReport& r);
ViolationReport violation_from_json(const json& j);

// Parses either inline JSON (text starting with '{') or the content of
// the file at the given path.
json load_json_argument(const std::string& arg);

}  // namespace mel

#endif  // MEL_JSON_IO_HPP_
