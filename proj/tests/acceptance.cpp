// Copyright 2026 The RoNM Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// One PASS/FAIL line per acceptance criterion. Exit status 0 iff all pass.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "ronm/cli.hpp"
#include "ronm/measures.hpp"
#include "ronm/verify.hpp"

using namespace ronm;

namespace {

constexpr std::uint64_t kSeed = 42;

struct Outcome {
  bool pass;
  std::string detail;
};

GKLSModel dephasing(RateFunction rate) {
  const ComplexMatrix sz{{1.0, 0.0}, {0.0, -1.0}};
  return GKLSModel(Hamiltonian(ComplexMatrix(2)), {{sz, std::move(rate)}});
}

std::string fmt(const char* f, double a, double b = 0.0, double c = 0.0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a, b, c);
  return buf;
}

Outcome suite_outcome(const SuiteResult& r) {
  std::string detail;
  for (const auto& c : r.checks) {
    if (!detail.empty()) detail += "; ";
    detail += c.name + fmt("=%.2e", c.worst) + (c.pass ? "" : " (FAIL)");
  }
  return {r.pass(), detail};
}

Outcome criterion1() {
  const GKLSModel neg = dephasing(RateFunction::constant(-0.5));
  const GKLSModel pos = dephasing(RateFunction::constant(0.5));
  const double r_neg = ronm_rate(neg, 0.5), g_neg = rhp_integrand(neg, 0.5);
  const double r_pos = ronm_rate(pos, 0.5), g_pos = rhp_integrand(pos, 0.5);
  const bool pass = std::abs(r_neg - 0.5) <= 1e-6 && std::abs(g_neg - 1.0) <= 2e-6 &&
                    std::abs(r_pos) <= 1e-9 && std::abs(g_pos) <= 1e-9;
  return {pass, fmt("rate(-0.5)=%.12g rhp(-0.5)=%.12g", r_neg, g_neg) +
                    fmt(" rate(+0.5)=%.3g rhp(+0.5)=%.3g", r_pos, g_pos)};
}

Outcome criterion2() {
  const GKLSModel m = dephasing(RateFunction::sinusoid(1.0, 1.0));
  const double two_pi = 2.0 * std::numbers::pi;
  const double n = total_ronm(m, 0.0, two_pi, 2000);
  const double g = total_rhp(m, 0.0, two_pi, 2000);
  const bool pass =
      std::abs(n - 2.0) <= 1e-4 && std::abs(g - 4.0) <= 2e-4 && std::abs(n / g - 0.5) <= 1e-6;
  return {pass, fmt("total_ronm=%.10f rhp_total=%.10f ratio=%.12f", n, g, n / g)};
}

Outcome criterion9() {
  bool same = true;
  std::string worst;
  for (const auto& suite : suite_names()) {
    std::string outputs[2];
    int codes[2];
    for (int k = 0; k < 2; ++k) {
      const std::string seed = std::to_string(kSeed);
      const char* argv[] = {"ronm", "verify", "--suite", suite.c_str(), "--seed", seed.c_str()};
      std::ostringstream out, err;
      codes[k] = run_cli(6, argv, out, err);
      outputs[k] = out.str();
    }
    if (outputs[0] != outputs[1] || codes[0] != codes[1] || outputs[0].empty()) {
      same = false;
      worst = suite;
    }
  }
  return {same, same ? "all suites byte-identical across two runs" : "differs: " + worst};
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double budget_s;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "dephasing rate law", 1.0, criterion1},
      {2, "RoNM-RHP equivalence", 10.0, criterion2},
      {3, "duality suite", 30.0, [] { return suite_outcome(verify_duality(kSeed)); }},
      {4, "properties suite", 60.0, [] { return suite_outcome(verify_properties(kSeed)); }},
      {5, "state discrimination equality", 60.0, [] { return suite_outcome(verify_theorem2(kSeed)); }},
      {6, "channel discrimination equality", 60.0, [] { return suite_outcome(verify_theorem3(kSeed)); }},
      {7, "single-shot information bound", 60.0, [] { return suite_outcome(verify_theorem4(kSeed)); }},
      {8, "convexity of the free set", 60.0, [] { return suite_outcome(verify_theorem1(kSeed)); }},
      {9, "verify determinism", 120.0, criterion9},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o{false, ""};
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = secs < c.budget_s;
    const bool pass = o.pass && in_time;
    if (!pass) ++failures;
    std::printf("%s [%d] %s (%.3f s, budget %.0f s%s): %s\n", pass ? "PASS" : "FAIL", c.id, c.name,
                secs, c.budget_s, in_time ? "" : ", over budget", o.detail.c_str());
  }
  std::printf("%s %d/%zu criteria\n", failures == 0 ? "PASS" : "FAIL",
              static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
