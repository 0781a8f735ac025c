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


#include "ronm/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <random>
#include <stdexcept>

#include "ronm/choi.hpp"
#include "ronm/dynamics.hpp"
#include "ronm/games.hpp"
#include "ronm/measures.hpp"
#include "ronm/sampling.hpp"

namespace ronm {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Independent stream per check so adding a check never shifts another's corpus.
Rng stream(std::uint64_t seed, std::uint32_t tag) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32), tag};
  return Rng(seq);
}

CheckResult check(std::string name, double worst, double tolerance) {
  return {std::move(name), worst <= tolerance, worst, tolerance};
}

double ronm_of(const IntermediateMap& map) { return ronm_closed_form(choi_of_map(map)); }

GKLSModel dephasing(RateFunction rate) {
  const ComplexMatrix sz{{1.0, 0.0}, {0.0, -1.0}};
  return GKLSModel(Hamiltonian(ComplexMatrix(2)), {{sz, std::move(rate)}});
}

IntermediateMap markovian_exponential(std::size_t d, Rng& rng, double t_start = 0.0) {
  std::uniform_int_distribution<std::size_t> count(1, 3);
  std::uniform_real_distribution<double> log_eps(std::log(1e-3), 0.0);
  const std::size_t n = count(rng);
  const double eps = std::exp(log_eps(rng));
  return intermediate_map(sample_markovian_model(d, n, rng()), t_start, eps,
                          Construction::kExponential);
}

IntermediateMap markovian_first_order(std::size_t d, Rng& rng, double t = 0.0) {
  std::uniform_int_distribution<std::size_t> count(1, 3);
  const std::size_t n = count(rng);
  return intermediate_map(sample_markovian_model(d, n, rng()), t, kDefaultEpsilon);
}

std::size_t pick_dim(Rng& rng) { return std::uniform_int_distribution<std::size_t>(2, 3)(rng); }

StateEnsemble random_ensemble(std::size_t n, std::size_t count, Rng& rng) {
  const std::vector<double> p = random_probabilities(count, rng);
  std::vector<WeightedState> items;
  for (std::size_t k = 0; k < count; ++k) items.push_back({p[k], random_density(n, rng)});
  return StateEnsemble(std::move(items));
}

}  // namespace

bool SuiteResult::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"properties", "duality",  "theorem1", "theorem2",
                                              "theorem3",   "theorem4", "rhp"};
  return names;
}

SuiteResult verify_properties(std::uint64_t seed) {
  SuiteResult out{"properties", seed, {}};

  {
    Rng rng = stream(seed, 1);
    double free_worst = 0.0;
    double misclassified = 0.0;
    for (int k = 0; k < 60; ++k) {
      const std::size_t d = pick_dim(rng);
      IntermediateMap map = k % 3 == 0   ? markovian_exponential(d, rng)
                            : k % 3 == 1 ? random_channel(d, 1 + k % 4, rng)
                                         : markovian_first_order(d, rng);
      const ChoiMatrix choi = choi_of_map(map);
      const double n = ronm_closed_form(choi);
      free_worst = std::max(free_worst, n);
      if (!is_cp(choi).cp) misclassified += 1.0;
    }
    for (int k = 0; k < 60; ++k) {
      const ChoiMatrix choi = choi_of_map(random_non_cp_map(pick_dim(rng), rng));
      if (ronm_closed_form(choi) <= 1e-10 || is_cp(choi).cp) misclassified += 1.0;
    }
    out.checks.push_back(check("faithfulness.free_maps_zero", free_worst, 1e-10));
    out.checks.push_back(check("faithfulness.classification", misclassified, 0.0));
  }

  {
    Rng rng = stream(seed, 2);
    double worst = -1.0;
    for (int k = 0; k < 50; ++k) {
      const std::size_t d = pick_dim(rng);
      const IntermediateMap a = random_non_cp_map(d, rng);
      const IntermediateMap b =
          k % 2 == 0 ? random_non_cp_map(d, rng) : random_channel(d, 2, rng);
      const double na = ronm_of(a), nb = ronm_of(b);
      for (int i = 0; i <= 10; ++i) {
        const double p = 0.1 * i;
        worst = std::max(worst, ronm_of(mix_maps(p, a, b)) - (p * na + (1.0 - p) * nb));
      }
    }
    out.checks.push_back(check("convexity", worst, 1e-10));
  }

  {
    Rng rng = stream(seed, 3);
    double worst = -1.0;
    for (int k = 0; k < 100; ++k) {
      const std::size_t d = pick_dim(rng);
      const IntermediateMap lambda = random_non_cp_map(d, rng);
      const double t_end = lambda.t_start + lambda.epsilon;
      const IntermediateMap gamma = k % 2 == 0 ? random_channel(d, 1 + k % 4, rng, t_end)
                                               : markovian_exponential(d, rng, t_end);
      worst = std::max(worst, ronm_of(compose_maps(gamma, lambda)) - ronm_of(lambda));
    }
    out.checks.push_back(check("monotonicity", worst, 1e-10));
  }

  {
    // N_R(Γ₂∘Γ₁∘Λ) <= N_R(Γ₁∘Λ) <= N_R(Λ) with Γᵢ Markovian exponentials.
    Rng rng = stream(seed, 4);
    double worst = -1.0;
    for (int k = 0; k < 50; ++k) {
      const std::size_t d = pick_dim(rng);
      const IntermediateMap lambda = random_non_cp_map(d, rng);
      const IntermediateMap g1 = markovian_exponential(d, rng, lambda.t_start + lambda.epsilon);
      const IntermediateMap once = compose_maps(g1, lambda);
      const IntermediateMap g2 = markovian_exponential(d, rng, once.t_start + once.epsilon);
      const double n0 = ronm_of(lambda), n1 = ronm_of(once), n2 = ronm_of(compose_maps(g2, once));
      worst = std::max({worst, n1 - n0, n2 - n1});
    }
    out.checks.push_back(check("monotonicity.repeated", worst, 1e-10));
  }
  return out;
}

SuiteResult verify_duality(std::uint64_t seed) {
  SuiteResult out{"duality", seed, {}};
  Rng rng = stream(seed, 10);
  std::uniform_real_distribution<double> spread(0.2, 4.0);
  double gap = 0.0, primal_err = 0.0, dual_err = 0.0, infeasible = 0.0;
  for (int k = 0; k < 500; ++k) {
    const std::size_t d = k % 2 == 0 ? 2 : 3;
    const ChoiMatrix choi{d, random_trace_one_hermitian(d * d, rng, spread(rng))};
    const double reference = 0.5 * (trace_norm(choi.matrix) - 1.0);
    const PrimalSolution primal = primal_solution(choi);
    const Witness w = dual_witness(choi);
    gap = std::max(gap, std::abs(primal.value - w.value));
    primal_err = std::max(primal_err, std::abs(primal.value - reference));
    dual_err = std::max(dual_err, std::abs(w.value - reference));
    infeasible = std::max({infeasible, -primal.min_eig_delta, -primal.min_eig_slack,
                           -min_eigenvalue(w.matrix),
                           max_eigenvalue(w.matrix) - 1.0});
  }
  out.checks.push_back(check("duality.gap", gap, 1e-10));
  out.checks.push_back(check("duality.primal_closed_form", primal_err, 1e-10));
  out.checks.push_back(check("duality.dual_closed_form", dual_err, 1e-10));
  out.checks.push_back(check("duality.feasibility", infeasible, 1e-10));
  return out;
}

SuiteResult verify_theorem1(std::uint64_t seed) {
  SuiteResult out{"theorem1", seed, {}};
  Rng rng = stream(seed, 20);
  const double grid[] = {0.25, 0.5, 0.75};
  double worst = 0.0;
  for (int k = 0; k < 100; ++k) {
    const std::size_t d = pick_dim(rng);
    const IntermediateMap a = markovian_first_order(d, rng);
    const IntermediateMap b = markovian_first_order(d, rng);
    worst = std::max(worst, ronm_of(mix_maps(grid[k % 3], a, b)));
  }
  out.checks.push_back(check("theorem1.mixture_ronm", worst, 1e-9));
  return out;
}

SuiteResult verify_theorem2(std::uint64_t seed) {
  SuiteResult out{"theorem2", seed, {}};

  {
    double worst = 0.0;
    const GKLSModel model = dephasing(RateFunction::constant(-1.0));
    for (double eg : {-0.001, -0.01, -0.1}) {
      const IntermediateMap map = intermediate_map(model, 0.0, -eg);
      const double ratio = state_advantage_ratio(map);
      worst = std::max({worst, std::abs(ratio - (1.0 + ronm_of(map))),
                        std::abs(ratio - (1.0 - eg))});
    }
    out.checks.push_back(check("theorem2.dephasing_equality", worst, 1e-10));
  }

  {
    Rng rng = stream(seed, 30);
    double worst = 0.0;
    for (int k = 0; k < 100; ++k) {
      const IntermediateMap map = random_non_cp_map(pick_dim(rng), rng);
      worst = std::max(worst, std::abs(state_advantage_ratio(map) - (1.0 + ronm_of(map))));
    }
    out.checks.push_back(check("theorem2.random_equality", worst, 1e-10));
  }

  {
    Rng rng = stream(seed, 31);
    std::uniform_int_distribution<std::size_t> count(2, 4);
    double bound_worst = -1.0, baseline_worst = -1.0;
    for (int k = 0; k < 200; ++k) {
      const std::size_t d = pick_dim(rng);
      const std::size_t m = count(rng);
      const StateEnsemble ensemble = random_ensemble(d * d, m, rng);
      const POVM povm(random_povm(d * d, m, rng));
      const IntermediateMap map = random_non_cp_map(d, rng);
      const double relaxed = relaxed_free_success(ensemble, povm);
      bound_worst = std::max(bound_worst, state_disc_success(ensemble, povm, map) -
                                              (1.0 + ronm_of(map)) * relaxed);
      if (k % 10 == 0) {
        baseline_worst = std::max(
            baseline_worst, markovian_baseline_success(ensemble, povm, 20, rng()) - relaxed);
      }
    }
    out.checks.push_back(check("theorem2.upper_bound", bound_worst, 1e-9));
    out.checks.push_back(check("theorem2.markovian_denominator", baseline_worst, 1e-9));
  }
  return out;
}

SuiteResult verify_theorem3(std::uint64_t seed) {
  SuiteResult out{"theorem3", seed, {}};
  Rng rng = stream(seed, 40);
  double worst = 0.0;
  for (int k = 0; k < 50; ++k) {
    const std::size_t d = pick_dim(rng);
    const std::size_t size = 1 + static_cast<std::size_t>(k % 4);
    const std::vector<double> p = random_probabilities(size, rng);
    std::vector<WeightedMap> items;
    double max_ronm = 0.0;
    for (std::size_t j = 0; j < size; ++j) {
      IntermediateMap map = (k + j) % 5 == 4 ? markovian_exponential(d, rng)
                                             : random_non_cp_map(d, rng);
      max_ronm = std::max(max_ronm, ronm_of(map));
      items.push_back({p[j], std::move(map)});
    }
    const double ratio = channel_advantage_ratio(MapEnsemble(std::move(items)));
    worst = std::max(worst, std::abs(ratio - (1.0 + max_ronm)));
  }
  out.checks.push_back(check("theorem3.equality", worst, 1e-10));
  return out;
}

SuiteResult verify_theorem4(std::uint64_t seed) {
  SuiteResult out{"theorem4", seed, {}};
  Rng rng = stream(seed, 50);
  std::uniform_int_distribution<std::size_t> count(2, 3);
  double bound_worst = -std::numeric_limits<double>::infinity(), markovian_worst = 0.0;
  for (int k = 0; k < 6; ++k) {
    const std::size_t d = k % 2 == 0 ? 2 : 3;
    const bool markovian = k >= 4;
    const IntermediateMap map =
        markovian ? (k == 4 ? markovian_exponential(d, rng) : markovian_first_order(d, rng))
                  : random_non_cp_map(d, rng);
    std::vector<StateEnsemble> ensembles;
    std::vector<POVM> povms;
    for (int c = 0; c < 200; ++c) {
      ensembles.push_back(random_ensemble(d * d, count(rng), rng));
      povms.emplace_back(random_povm(d * d, count(rng), rng));
    }
    const InfoBoundReport report = info_bound_check(map, ensembles, povms);
    if (!markovian) {
      bound_worst = std::max(bound_worst, report.max_gap - report.bound);
    } else {
      for (const auto& e : report.entries) markovian_worst = std::max(markovian_worst, std::abs(e.gap));
    }
  }
  out.checks.push_back(check("theorem4.bound", bound_worst, 1e-8));
  out.checks.push_back(check("theorem4.markovian_zero_gap", markovian_worst, 0.0));
  return out;
}

SuiteResult verify_rhp(std::uint64_t seed) {
  SuiteResult out{"rhp", seed, {}};

  {
    Rng rng = stream(seed, 60);
    double worst = 0.0;
    const GKLSModel fixed[] = {dephasing(RateFunction::constant(-0.5)),
                               dephasing(RateFunction::constant(0.5)),
                               dephasing(RateFunction::sinusoid(1.0, 1.0))};
    for (const auto& model : fixed) {
      for (int i = 0; i <= 20; ++i) {
        const double t = 2.0 * kPi * i / 20.0;
        worst = std::max(worst, std::abs(rhp_integrand(model, t) - 2.0 * ronm_rate(model, t)));
      }
    }
    for (int k = 0; k < 40; ++k) {
      const std::size_t d = pick_dim(rng);
      const GKLSModel model = random_gkls_model(d, 1 + k % 3, -1.0, 1.0, rng);
      worst = std::max(worst, std::abs(rhp_integrand(model, 0.0) - 2.0 * ronm_rate(model, 0.0)));
    }
    out.checks.push_back(check("rhp.pointwise", worst, 1e-6));
  }

  {
    // Plain ‖I⊗(I + εL)(Φ⁺)‖₁ − 1 over ε, extrapolated the same way, against 2·rate.
    Rng rng = stream(seed, 61);
    double worst = 0.0;
    const auto direct = [](const GKLSModel& model, double t, double eps) {
      const ChoiMatrix c = choi_of_map(intermediate_map(model, t, eps));
      return (trace_norm(c.matrix) - 1.0) / eps;
    };
    for (int k = 0; k < 20; ++k) {
      const GKLSModel model = random_gkls_model(pick_dim(rng), 1 + k % 3, -1.0, 1.0, rng);
      const double g = 2.0 * direct(model, 0.0, 0.5e-4) - direct(model, 0.0, 1e-4);
      worst = std::max(worst, std::abs(g - 2.0 * ronm_rate(model, 0.0, 1e-4)));
    }
    out.checks.push_back(check("rhp.direct_trace_norm", worst, 1e-6));
  }

  {
    const GKLSModel model = dephasing(RateFunction::sinusoid(1.0, 1.0));
    const double n = total_ronm(model, 0.0, 2.0 * kPi, 2000);
    const double g = total_rhp(model, 0.0, 2.0 * kPi, 2000);
    out.checks.push_back(check("rhp.total_ronm", std::abs(n - 2.0), 1e-4));
    out.checks.push_back(check("rhp.total_rhp", std::abs(g - 4.0), 2e-4));
    out.checks.push_back(check("rhp.ratio", std::abs(n / g - 0.5), 1e-6));
  }
  return out;
}

SuiteResult run_suite(std::string_view name, std::uint64_t seed) {
  if (name == "properties") return verify_properties(seed);
  if (name == "duality") return verify_duality(seed);
  if (name == "theorem1") return verify_theorem1(seed);
  if (name == "theorem2") return verify_theorem2(seed);
  if (name == "theorem3") return verify_theorem3(seed);
  if (name == "theorem4") return verify_theorem4(seed);
  if (name == "rhp") return verify_rhp(seed);
  throw std::invalid_argument("unknown suite '" + std::string(name) + "'");
}

void print_suite(const SuiteResult& result, std::ostream& out) {
  char buf[256];
  std::snprintf(buf, sizeof buf, "suite %s seed %llu\n", result.suite.c_str(),
                static_cast<unsigned long long>(result.seed));
  out << buf;
  std::size_t passed = 0;
  for (const auto& c : result.checks) {
    passed += c.pass ? 1 : 0;
    std::snprintf(buf, sizeof buf, "%s %s worst=%.6e tol=%.1e\n", c.pass ? "PASS" : "FAIL",
                  c.name.c_str(), c.worst, c.tolerance);
    out << buf;
  }
  std::snprintf(buf, sizeof buf, "%s %zu/%zu\n", result.pass() ? "PASS" : "FAIL", passed,
                result.checks.size());
  out << buf;
}

}  // namespace ronm
