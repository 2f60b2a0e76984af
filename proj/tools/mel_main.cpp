// tools/mel_main.cpp
//
// Copyright 2026 The mel authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// Command-line surface for the mel library. All numerics live in the
// library; this file only parses arguments, routes calls, and renders
// reports. Exit codes: 0 pass / nothing found, 1 violation found,
// 2 input error, 3 numerical anomaly.

#include <CLI11.hpp>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "mel/entropy.hpp"
#include "mel/errors.hpp"
#include "mel/json_io.hpp"
#include "mel/membership.hpp"
#include "mel/rng.hpp"
#include "mel/sampling.hpp"
#include "mel/superop.hpp"

namespace {

using mel::json;

constexpr int kExitPass = 0;
constexpr int kExitViolation = 1;
constexpr int kExitInput = 2;
constexpr int kExitAnomaly = 3;

constexpr std::uint64_t kDefaultSeed = 0x6d656c2d30ULL;

struct Options {
  std::string fn;
  std::string ensemble;
  std::string x, h, y;
  std::string dims = "2";
  int trials = 200;
  std::uint64_t seed = kDefaultSeed;
  bool seed_given = false;
  double tol = mel::kDefaultTol;
  long budget = 10000;
  std::string format = "json";
  std::string out;
};

void add_common(CLI::App* cmd, Options& o) {
  cmd->add_option("--seed", o.seed, "master RNG seed (fallback: MEL_SEED)")
      ->each([&o](const std::string&) { o.seed_given = true; });
  cmd->add_option("--tol", o.tol, "relative slack tolerance");
  cmd->add_option("--format", o.format, "output format: json|text")
      ->check(CLI::IsMember({"json", "text"}));
  cmd->add_option("--out", o.out, "write the report to this path");
}

std::uint64_t resolve_seed(Options& o) {
  if (!o.seed_given) {
    if (const char* env = std::getenv("MEL_SEED")) {
      o.seed = std::strtoull(env, nullptr, 10);
      o.seed_given = true;
    }
  }
  if (!o.seed_given)
    std::cerr << "note: seed defaulted to " << o.seed << "\n";
  return o.seed;
}

std::vector<std::size_t> parse_dims(const std::string& dims) {
  std::vector<std::size_t> out;
  std::stringstream ss(dims);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    const long n = std::strtol(tok.c_str(), nullptr, 10);
    if (n < 1 || n > 8)
      throw mel::ContractError("--n entries must be integers in [1, 8]");
    out.push_back(static_cast<std::size_t>(n));
  }
  if (out.empty()) throw mel::ContractError("--n must list dimensions");
  return out;
}

void emit(const Options& o, const json& report, const std::string& text) {
  const std::string payload =
      o.format == "json" ? report.dump(2) + "\n" : text;
  if (o.out.empty()) {
    std::cout << payload;
  } else {
    std::ofstream f(o.out);
    if (!f) throw mel::ContractError("cannot write to '" + o.out + "'");
    f << payload;
  }
}

json config_json(const Options& o, const std::string& command) {
  json c;
  c["command"] = command;
  c["seed"] = o.seed;
  c["tol"] = o.tol;
  c["trials"] = o.trials;
  c["n"] = o.dims;
  c["budget"] = o.budget;
  return c;
}

int cmd_check(Options& o) {
  const mel::ScalarFunctionSpec spec =
      mel::spec_from_json(mel::load_json_argument(o.fn));
  resolve_seed(o);
  const auto dims = parse_dims(o.dims);

  json report;
  report["config"] = config_json(o, "check");
  report["spec"] = mel::spec_to_json(spec);
  json runs = json::array();
  std::ostringstream text;
  bool anomaly = false, violation = false;
  if (spec.is_affine())
    text << spec.label() << ": member by definition (affine)\n";
  for (std::size_t n : dims) {
    const mel::EquivalenceReport r =
        mel::cross_equivalence(spec, n, o.trials, o.seed, o.tol);
    anomaly |= !r.agree;
    violation |= r.agree && !r.all_passed;
    json run;
    run["n"] = n;
    run["report"] = mel::equivalence_to_json(r);
    runs.push_back(run);
    text << "n=" << n << "  ";
    for (const auto& v : r.verdicts)
      text << mel::condition_name(v.condition) << ":"
           << (v.passed ? "PASS" : "FAIL") << "  ";
    text << (r.agree ? "" : "[DISAGREE]") << "\n";
  }
  report["runs"] = runs;
  report["verdict"] =
      anomaly ? "anomaly" : (violation ? "violation" : "pass");
  emit(o, report, text.str());
  return anomaly ? kExitAnomaly : (violation ? kExitViolation : kExitPass);
}

int cmd_entropy(Options& o) {
  const mel::ScalarFunctionSpec spec =
      mel::spec_from_json(mel::load_json_argument(o.fn));
  const mel::MatrixEnsemble ensemble =
      mel::ensemble_from_json(mel::load_json_argument(o.ensemble));
  const double h = mel::matrix_phi_entropy(spec, ensemble);
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", h);
  json report;
  report["config"] = config_json(o, "entropy");
  report["spec"] = mel::spec_to_json(spec);
  report["entropy"] = h;
  emit(o, report, std::string(buf) + "\n");
  return kExitPass;
}

int cmd_calculus(Options& o, const std::string& op) {
  const mel::ScalarFunctionSpec spec =
      mel::spec_from_json(mel::load_json_argument(o.fn));
  const mel::HermitianMatrix x =
      mel::hermitian_from_json(mel::load_json_argument(o.x));
  json result;
  if (op == "apply") {
    result = mel::matrix_to_json(
        mel::apply_univariate([&spec](double t) { return spec.phi(t); }, x));
  } else if (op == "dfrechet" || op == "dfrechet-inv") {
    const mel::Matrix h =
        mel::hermitian_from_json(mel::load_json_argument(o.h)).raw();
    const mel::Matrix d =
        op == "dfrechet"
            ? mel::frechet_diff(spec.f_pair(), x, h)
            : mel::frechet_diff_inverse(spec.f_pair(), x, h);
    result = mel::matrix_to_json(d);
  } else {  // bivariate
    const mel::HermitianMatrix y =
        mel::hermitian_from_json(mel::load_json_argument(o.y));
    const mel::Superoperator s = mel::bivariate_calculus(
        [&spec](double t, double v) { return mel::g_kernel(spec, t, v); }, x,
        y);
    result = mel::matrix_to_json(s.matrix());
  }
  json report;
  report["config"] = config_json(o, "calculus " + op);
  report["spec"] = mel::spec_to_json(spec);
  report["result"] = result;
  emit(o, report, result.dump(2) + "\n");
  return kExitPass;
}

int cmd_search(Options& o) {
  const mel::ScalarFunctionSpec spec =
      mel::spec_from_json(mel::load_json_argument(o.fn));
  resolve_seed(o);
  const auto dims = parse_dims(o.dims);
  const std::size_t n_max = *std::max_element(dims.begin(), dims.end());

  const auto hit =
      mel::search_counterexample(spec, n_max, o.budget, o.seed, o.tol);
  json report;
  report["config"] = config_json(o, "search");
  report["spec"] = mel::spec_to_json(spec);
  report["found"] = hit.has_value();
  std::ostringstream text;
  if (hit) {
    report["violation"] = mel::violation_to_json(*hit);
    text << "violation: condition " << mel::condition_name(hit->condition)
         << " at n=" << hit->dimension << ", gap " << hit->witness.gap
         << "\n";
  } else {
    text << "no violation within budget " << o.budget << "\n";
  }
  emit(o, report, text.str());
  return hit ? kExitViolation : kExitPass;
}

int cmd_equivalence_suite(Options& o) {
  resolve_seed(o);
  const auto dims = parse_dims(o.dims);

  std::vector<mel::ScalarFunctionSpec> specs = {
      mel::ScalarFunctionSpec::affine(1.0, 2.0),
      mel::ScalarFunctionSpec::standard_entropy()};
  for (double p : {1.0, 1.25, 1.5, 1.75, 2.0, 2.5, 3.0})
    specs.push_back(mel::ScalarFunctionSpec::power(p));
  for (int k = 0; k < 20; ++k) {
    mel::Rng rng(mel::mix_seed(o.seed, 0x63616e6f6eULL, k));
    specs.push_back(
        mel::ScalarFunctionSpec::canonical(mel::sample_canonical_measure(rng)));
  }

  json report;
  report["config"] = config_json(o, "equivalence-suite");
  json entries = json::array();
  std::ostringstream text;
  bool anomaly = false;
  for (const auto& spec : specs) {
    for (std::size_t n : dims) {
      const mel::EquivalenceReport r =
          mel::cross_equivalence(spec, n, o.trials, o.seed, o.tol);
      anomaly |= !r.agree;
      json e;
      e["spec"] = mel::spec_to_json(spec);
      e["n"] = n;
      e["agree"] = r.agree;
      e["all_passed"] = r.all_passed;
      entries.push_back(e);
      text << spec.label() << " n=" << n << ": "
           << (r.agree ? (r.all_passed ? "pass" : "fail (agreed)")
                       : "DISAGREE")
           << "\n";
    }
  }
  report["specs"] = entries;
  report["verdict"] = anomaly ? "anomaly" : "agree";
  emit(o, report, text.str());
  return anomaly ? kExitAnomaly : kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"matrix entropy laboratory"};
  app.require_subcommand(1);
  Options o;

  CLI::App* check = app.add_subcommand("check", "run the four condition checkers");
  check->add_option("--fn", o.fn, "function spec (inline JSON or path)")
      ->required();
  check->add_option("--n", o.dims, "comma-separated dimensions");
  check->add_option("--trials", o.trials, "trials per condition");
  add_common(check, o);

  CLI::App* entropy = app.add_subcommand("entropy", "evaluate the entropy functional");
  entropy->add_option("--fn", o.fn, "function spec")->required();
  entropy->add_option("--ensemble", o.ensemble, "ensemble JSON or path")
      ->required();
  add_common(entropy, o);

  CLI::App* calculus = app.add_subcommand("calculus", "matrix calculus queries");
  calculus->require_subcommand(1);
  std::vector<std::pair<const char*, const char*>> ops = {
      {"apply", "matrix function phi(x)"},
      {"dfrechet", "differential df(x)h"},
      {"dfrechet-inv", "inverse differential df(x)^{-1}h"},
      {"bivariate", "superoperator g(L_x, R_y)"}};
  for (const auto& [name, desc] : ops) {
    CLI::App* c = calculus->add_subcommand(name, desc);
    // Long-only help so the short -h does not collide with --h below.
    c->set_help_flag("--help", "print help");
    c->add_option("--fn", o.fn, "function spec")->required();
    c->add_option("--x", o.x, "Hermitian matrix JSON or path")->required();
    if (std::string(name) == "dfrechet" || std::string(name) == "dfrechet-inv")
      c->add_option("--h", o.h, "Hermitian direction")->required();
    if (std::string(name) == "bivariate")
      c->add_option("--y", o.y, "second Hermitian matrix")->required();
    add_common(c, o);
  }

  CLI::App* search = app.add_subcommand("search", "counterexample search");
  search->add_option("--fn", o.fn, "function spec")->required();
  search->add_option("--n", o.dims, "dimensions (max is used)");
  search->add_option("--budget", o.budget, "evaluation budget");
  add_common(search, o);

  CLI::App* suite =
      app.add_subcommand("equivalence-suite", "agreement across the catalog");
  suite->add_option("--n", o.dims, "comma-separated dimensions");
  suite->add_option("--trials", o.trials, "trials per condition");
  add_common(suite, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    if (check->parsed()) return cmd_check(o);
    if (entropy->parsed()) return cmd_entropy(o);
    if (calculus->parsed())
      return cmd_calculus(o,
                          calculus->get_subcommands().front()->get_name());
    if (search->parsed()) return cmd_search(o);
    if (suite->parsed()) return cmd_equivalence_suite(o);
  } catch (const mel::ContractError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const mel::DomainError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const mel::DimensionError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const mel::Error& e) {
    std::cerr << "numerical anomaly: " << e.what() << "\n";
    return kExitAnomaly;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitAnomaly;
  }
  return kExitInput;
}
