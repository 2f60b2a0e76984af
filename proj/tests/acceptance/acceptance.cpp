// tests/acceptance/acceptance.cpp
//
// Copyright 2026 The mel authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// End-to-end acceptance gate. Each numbered criterion prints exactly one
// PASS/FAIL line; the exit code is the number of failed criteria.
// argv[1] is the fixtures directory holding the archived violations.

#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "mel/calculus.hpp"
#include "mel/entropy.hpp"
#include "mel/errors.hpp"
#include "mel/json_io.hpp"
#include "mel/membership.hpp"
#include "mel/quadrature.hpp"
#include "mel/rng.hpp"
#include "mel/sampling.hpp"
#include "mel/spectral.hpp"
#include "mel/superop.hpp"

using namespace mel;

namespace {

int g_failures = 0;

void report(int number, const std::string& name, bool ok,
            const std::string& detail) {
  std::printf("%s  criterion %d (%s)%s%s\n", ok ? "PASS" : "FAIL", number,
              name.c_str(), detail.empty() ? "" : ": ", detail.c_str());
  std::fflush(stdout);
  if (!ok) ++g_failures;
}

std::vector<ScalarFunctionSpec> member_specs() {
  std::vector<ScalarFunctionSpec> specs = {
      ScalarFunctionSpec::affine(1.0, 2.0),
      ScalarFunctionSpec::standard_entropy()};
  for (double p : {1.0, 1.25, 1.5, 1.75, 2.0})
    specs.push_back(ScalarFunctionSpec::power(p));
  return specs;
}

std::vector<ScalarFunctionSpec> smooth_members() {
  return {ScalarFunctionSpec::standard_entropy(),
          ScalarFunctionSpec::power(1.25), ScalarFunctionSpec::power(1.5),
          ScalarFunctionSpec::power(1.75), ScalarFunctionSpec::power(2.0),
          ScalarFunctionSpec::canonical(CanonicalMeasure::from_reference(
              0.0, 1.0, 0.25, {{0.0, 1.0}, {1.5, 0.4}}))};
}

// 1. Membership: every declared member passes all four checkers at
//    n in {2,3,4}, 200 trials, relative slack tolerance 1e-8.
void criterion_1() {
  bool ok = true;
  std::string detail;
  for (const auto& spec : member_specs()) {
    for (std::size_t n : {2, 3, 4}) {
      const EquivalenceReport r = cross_equivalence(spec, n, 200, 101, 1e-8);
      if (!r.all_passed || !r.agree) {
        ok = false;
        detail = spec.label() + " at n=" + std::to_string(n);
      }
    }
  }
  report(1, "membership suite", ok, detail);
}

// 2. Equivalence: >= 30 specs, the four checkers agree on every seed.
void criterion_2() {
  std::vector<ScalarFunctionSpec> specs = member_specs();
  specs.push_back(ScalarFunctionSpec::affine(0.0, 1.0));
  specs.push_back(ScalarFunctionSpec::power(2.5));
  specs.push_back(ScalarFunctionSpec::power(3.0));
  for (int k = 0; k < 20; ++k) {
    Rng rng(mix_seed(202, 0x63616e6f6eULL, k));
    specs.push_back(ScalarFunctionSpec::canonical(sample_canonical_measure(rng)));
  }
  bool ok = specs.size() >= 30;
  std::string detail = "specs=" + std::to_string(specs.size());
  for (const auto& spec : specs) {
    const EquivalenceReport r = cross_equivalence(spec, 2, 200, 202, 1e-8);
    if (!r.agree) {
      ok = false;
      detail = "disagreement for " + spec.label();
    }
  }
  report(2, "equivalence agreement", ok, detail);
}

// 3. Non-members: powers 2.5 and 3 fall within a 1e4 budget at n <= 2,
//    and the archived fixture witnesses replay to their recorded gaps.
void criterion_3(const std::string& fixtures) {
  bool ok = true;
  std::string detail;
  for (double p : {2.5, 3.0}) {
    const auto hit =
        search_counterexample(ScalarFunctionSpec::power(p), 2, 10000, 303);
    if (!hit || hit->witness.gap >= -1e-6) {
      ok = false;
      detail = "no violation for p=" + std::to_string(p);
    }
  }
  for (const char* name : {"violation_p25.json", "violation_p3.json"}) {
    try {
      const json doc = load_json_argument(fixtures + "/" + name);
      const ViolationReport rep = violation_from_json(doc.at("violation"));
      if (std::abs(replay_violation(rep) - rep.witness.gap) > 1e-12 ||
          rep.witness.gap >= -1e-6) {
        ok = false;
        detail = std::string("fixture replay drifted: ") + name;
      }
    } catch (const std::exception& e) {
      ok = false;
      detail = std::string(name) + ": " + e.what();
    }
  }
  report(3, "non-member violations", ok, detail);
}

// 4. Calculus oracles: differential vs central finite differences over
//    100 triples; inverse composition; the trace identity against the
//    integrated quadratic form along the segment.
void criterion_4() {
  bool ok = true;
  std::string detail;
  Rng rng(404);
  const auto catalog = smooth_members();

  for (int rep = 0; rep < 100 && ok; ++rep) {
    const ScalarFunctionSpec& spec = catalog[rep % catalog.size()];
    const std::size_t n = 2 + rng.below(3);
    const HermitianMatrix x = sample_pd(n, rng);
    const Matrix h = sample_hermitian(n, rng).raw();
    const Matrix d = frechet_diff(spec.f_pair(), x, h);

    const double eps = 1e-5;
    const auto fn = [&spec](double t) { return spec.f(t); };
    const Matrix fd =
        complexd(1.0 / (2.0 * eps)) *
        (apply_univariate(
             fn, HermitianMatrix(hermitian_part(x.raw() + complexd(eps) * h))) -
         apply_univariate(
             fn,
             HermitianMatrix(hermitian_part(x.raw() - complexd(eps) * h))));
    if ((d - fd).frobenius_norm() > 1e-6 * std::max(1.0, fd.frobenius_norm())) {
      ok = false;
      detail = "finite-difference mismatch for " + spec.label();
    }

    const Matrix round =
        frechet_diff_inverse(spec.f_pair(), x, frechet_diff(spec.f_pair(), x, h));
    if ((round - h).frobenius_norm() > 1e-10 * (1.0 + h.frobenius_norm())) {
      ok = false;
      detail = "inverse composition drift for " + spec.label();
    }
  }

  // Tr (y-x)(f(y)-f(x)) = int_0^1 Tr (y-x) df(x + t(y-x)) (y-x) dt.
  const Quadrature& q = gauss_legendre_64();
  for (int rep = 0; rep < 20 && ok; ++rep) {
    const ScalarFunctionSpec& spec = catalog[rep % catalog.size()];
    const std::size_t n = 2 + rng.below(3);
    const HermitianMatrix x = sample_pd(n, rng, 100.0);
    const HermitianMatrix y = sample_pd(n, rng, 100.0);
    const Matrix diff = y.raw() - x.raw();
    const auto fn = [&spec](double t) { return spec.f(t); };
    const double direct =
        trace(diff * (apply_univariate(fn, y) - apply_univariate(fn, x)))
            .real();
    const double integrated = q.integrate([&](double t) {
      const HermitianMatrix xt =
          HermitianMatrix(hermitian_part(x.raw() + complexd(t) * diff));
      return trace_inner(diff, frechet_diff(spec.f_pair(), xt, diff)).real();
    });
    if (std::abs(direct - integrated) > 1e-7 * (1.0 + std::abs(direct))) {
      ok = false;
      detail = "trace identity residual for " + spec.label();
    }
  }
  report(4, "calculus oracles", ok, detail);
}

// 5. Bivariate identity: the diagonal superoperator route matches the
//    inverse differential, and the block-matrix route matches g(L_x,R_y).
void criterion_5() {
  bool ok = true;
  std::string detail;
  Rng rng(505);
  const auto catalog = smooth_members();
  for (int rep = 0; rep < 100 && ok; ++rep) {
    const ScalarFunctionSpec& spec = catalog[rep % catalog.size()];
    const std::size_t n = 2 + rng.below(2);
    const HermitianMatrix x = sample_pd(n, rng);
    const HermitianMatrix y = sample_pd(n, rng);
    const Matrix h = sample_hermitian(n, rng).raw();
    const auto kernel = [&spec](double t, double s) {
      return g_kernel(spec, t, s);
    };

    const double via_superop =
        trace_inner(h, bivariate_calculus(kernel, x, x).apply(h)).real();
    const double via_inverse =
        trace_inner(h, frechet_diff_inverse(spec.f_pair(), x, h)).real();
    if (std::abs(via_superop - via_inverse) >
        1e-10 * (1.0 + std::abs(via_inverse))) {
      ok = false;
      detail = "diagonal route mismatch for " + spec.label();
    }

    // Z = diag(x, y), H carrying h in the upper corner: the (1,2) block
    // of df(Z)^{-1} H is exactly g across the two spectra.
    Matrix z(2 * n, 2 * n), bigh(2 * n, 2 * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        z(i, j) = x(i, j);
        z(n + i, n + j) = y(i, j);
        bigh(i, n + j) = h(i, j);
      }
    const double via_block =
        trace_inner(bigh, frechet_diff_inverse(
                              spec.f_pair(),
                              HermitianMatrix(hermitian_part(z)), bigh))
            .real();
    const double via_bivariate =
        trace_inner(h, bivariate_calculus(kernel, x, y).apply(h)).real();
    if (std::abs(via_block - via_bivariate) >
        1e-10 * (1.0 + std::abs(via_bivariate))) {
      ok = false;
      detail = "block route mismatch for " + spec.label();
    }
  }
  report(5, "bivariate identity", ok, detail);
}

// 6. Hermite integral: the divided-difference kernel equals the 64-node
//    quadrature of f' along the segment, scalar and operator versions.
void criterion_6() {
  bool ok = true;
  std::string detail;
  Rng rng(606);
  const auto catalog = smooth_members();
  const Quadrature& q = gauss_legendre_64();

  for (const auto& spec : catalog) {
    for (int rep = 0; rep < 200 && ok; ++rep) {
      // Pairs with ratio at most 1e2: 64 nodes resolve these to 1e-8;
      // extreme ratios within [1e-2,1e2]^2 would need far more nodes.
      const double t = std::exp(rng.uniform(std::log(1e-2), std::log(1e2)));
      const double ratio = std::exp(rng.uniform(-std::log(100.0),
                                                std::log(100.0)));
      const double s = std::min(1e2, std::max(1e-2, t * ratio));
      if (hermite_check(spec, t, s) >
          1e-8 * (1.0 + std::abs(k_kernel(spec, t, s)))) {
        ok = false;
        detail = "scalar residual for " + spec.label();
      }
    }
  }

  for (int rep = 0; rep < 20 && ok; ++rep) {
    const ScalarFunctionSpec& spec = catalog[rep % catalog.size()];
    const std::size_t n = 2 + rng.below(3);
    const HermitianMatrix x = sample_pd(n, rng, 100.0);
    const Matrix h = sample_hermitian(n, rng).raw();
    const double direct = trace_inner(h, frechet_diff(spec.f_pair(), x, h)).real();
    const double integrated = q.integrate([&](double lambda) {
      const auto kernel = [&spec, lambda](double t, double s) {
        return spec.fprime(lambda * t + (1.0 - lambda) * s);
      };
      return trace_inner(h, bivariate_calculus(kernel, x, x).apply(h)).real();
    });
    if (std::abs(direct - integrated) > 1e-7 * (1.0 + std::abs(direct))) {
      ok = false;
      detail = "operator residual for " + spec.label();
    }
  }
  report(6, "Hermite integral", ok, detail);
}

// 7. Canonical form: derivative consistency, the affine-constant
//    identities, and the stabilized limit at zero.
void criterion_7() {
  bool ok = true;
  std::string detail;
  Rng rng(707);
  for (int rep = 0; rep < 50 && ok; ++rep) {
    const double phi1 = rng.uniform(-1.0, 1.0);
    const double dphi1 = rng.uniform(-1.0, 1.0);
    Rng gen(mix_seed(707, 0x6d656173ULL, rep));
    CanonicalMeasure m = sample_canonical_measure(gen);
    const double beta = m.beta;
    m = CanonicalMeasure::from_reference(phi1, dphi1, beta, m.atoms);

    // Affine constants exactly as declared.
    if (m.a != phi1 - dphi1 + beta / 2.0 || m.b != dphi1 - beta) {
      ok = false;
      detail = "affine constants drift";
    }
    if (std::abs(canonical_phi(m, 1.0) - phi1) > 1e-12 ||
        std::abs(canonical_f(m, 1.0) - dphi1) > 1e-12) {
      ok = false;
      detail = "reference values not reproduced";
    }

    // Second difference of phi against f' with Richardson extrapolation.
    for (double t : {0.05, 0.3, 1.7, 9.0, 40.0}) {
      const auto stencil = [&](double hh) {
        return (canonical_phi(m, t + hh) - 2.0 * canonical_phi(m, t) +
                canonical_phi(m, t - hh)) /
               (hh * hh);
      };
      const double h = 0.02 * t;
      const double second = (4.0 * stencil(h / 2.0) - stencil(h)) / 3.0;
      const double exact = canonical_fprime(m, t);
      if (std::abs(second - exact) > 1e-6 * (1.0 + std::abs(exact))) {
        ok = false;
        detail = "second difference at t=" + std::to_string(t);
      }
    }

    // Limit at zero stabilizes and respects a + sum w(1+lambda).
    try {
      double bound = m.a;
      for (const auto& atom : m.atoms)
        bound += atom.weight * (1.0 + atom.lambda);
      if (zero_limit_estimate(m) > bound + 1e-9) {
        ok = false;
        detail = "zero limit exceeds bound";
      }
    } catch (const std::exception& e) {
      ok = false;
      detail = std::string("zero limit unstable: ") + e.what();
    }
  }
  report(7, "canonical form", ok, detail);
}

// 8. Entropy functional: nonnegativity, exact zeros, unitary invariance,
//    scalar reduction.
void criterion_8() {
  bool ok = true;
  std::string detail;
  Rng rng(808);

  const auto make_ensemble = [&rng](std::size_t n, int outcomes) {
    std::vector<double> probs(outcomes);
    double total = 0.0;
    for (auto& p : probs) total += (p = rng.uniform(0.1, 1.0));
    std::vector<MatrixEnsemble::Outcome> out;
    double acc = 0.0;
    for (int k = 0; k < outcomes; ++k) {
      double p = (k + 1 == outcomes) ? 1.0 - acc : probs[k] / total;
      acc += p;
      out.push_back({p, sample_pd(n, rng)});
    }
    return MatrixEnsemble(std::move(out));
  };

  const std::vector<ScalarFunctionSpec> convex = {
      ScalarFunctionSpec::standard_entropy(), ScalarFunctionSpec::power(1.5),
      ScalarFunctionSpec::power(2.0),
      ScalarFunctionSpec::canonical(CanonicalMeasure::from_reference(
          0.0, 0.0, 0.3, {{0.0, 0.6}, {2.0, 0.4}}))};
  for (const auto& spec : convex) {
    for (int rep = 0; rep < 100 && ok; ++rep) {
      const MatrixEnsemble z =
          make_ensemble(1 + rng.below(4), 2 + static_cast<int>(rng.below(4)));
      if (matrix_phi_entropy(spec, z) < -1e-10) {
        ok = false;
        detail = "negative entropy for " + spec.label();
      }
    }
  }

  for (int rep = 0; rep < 10 && ok; ++rep) {
    const MatrixEnsemble single({{1.0, sample_pd(3, rng)}});
    for (const auto& spec : convex)
      if (std::abs(matrix_phi_entropy(spec, single)) >= 1e-12) {
        ok = false;
        detail = "deterministic ensemble not exactly zero";
      }
    const MatrixEnsemble z = make_ensemble(2, 3);
    if (matrix_phi_entropy(ScalarFunctionSpec::affine(2.0, -1.0), z) != 0.0) {
      ok = false;
      detail = "affine annihilation inexact";
    }
  }

  for (int rep = 0; rep < 10 && ok; ++rep) {
    const MatrixEnsemble z = make_ensemble(3, 3);
    const Matrix u = eigh(sample_hermitian(3, rng)).eigenvectors;
    std::vector<MatrixEnsemble::Outcome> rotated;
    for (const auto& o : z.outcomes())
      rotated.push_back(
          {o.probability,
           HermitianMatrix(hermitian_part(u * o.matrix.raw() * u.adjoint()))});
    const MatrixEnsemble zu(std::move(rotated));
    for (const auto& spec : convex)
      if (std::abs(matrix_phi_entropy(spec, z) -
                   matrix_phi_entropy(spec, zu)) > 1e-10) {
        ok = false;
        detail = "unitary invariance drift for " + spec.label();
      }
  }

  for (int rep = 0; rep < 10 && ok; ++rep) {
    const MatrixEnsemble z = make_ensemble(1, 4);
    for (const auto& spec : convex) {
      double e_phi = 0.0, e = 0.0;
      for (const auto& o : z.outcomes()) {
        e_phi += o.probability * spec.phi(o.matrix(0, 0).real());
        e += o.probability * o.matrix(0, 0).real();
      }
      if (std::abs(matrix_phi_entropy(spec, z) - (e_phi - spec.phi(e))) >
          1e-12 * (1.0 + std::abs(e_phi))) {
        ok = false;
        detail = "scalar reduction mismatch";
      }
    }
  }
  report(8, "entropy functional", ok, detail);
}

// 9. Reproducibility: identical seeds give byte-identical reports.
void criterion_9() {
  const auto render = []() {
    json doc;
    doc["equivalence"] = json::array();
    for (const auto& spec :
         {ScalarFunctionSpec::standard_entropy(), ScalarFunctionSpec::power(1.5),
          ScalarFunctionSpec::power(3.0)})
      doc["equivalence"].push_back(
          equivalence_to_json(cross_equivalence(spec, 2, 100, 909, 1e-8)));
    const auto hit =
        search_counterexample(ScalarFunctionSpec::power(2.5), 2, 5000, 909);
    doc["search"] = hit ? violation_to_json(*hit) : json(nullptr);
    return doc.dump(2);
  };
  const std::string first = render();
  const std::string second = render();
  report(9, "byte-identical reports", first == second,
         first == second ? "" : "report bytes differ between reruns");
}

}  // namespace

int main(int argc, char** argv) {
  const std::string fixtures = argc > 1 ? argv[1] : "tests/fixtures";
  criterion_1();
  criterion_2();
  criterion_3(fixtures);
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();
  if (g_failures == 0)
    std::printf("all 9 acceptance criteria passed\n");
  else
    std::printf("%d acceptance criteria FAILED\n", g_failures);
  return g_failures;
}
