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


#include "ronm/cli.hpp"

#include <cerrno>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "ronm/error.hpp"
#include "ronm/json_format.hpp"
#include "ronm/measures.hpp"
#include "ronm/model_io.hpp"
#include "ronm/sweep.hpp"
#include "ronm/verify.hpp"

namespace ronm {

namespace {

// --epsilon wins over RONM_EPSILON, which wins over the built-in default.
double resolve_epsilon(const std::optional<double>& flag) {
  if (flag) {
    if (!(*flag > 0.0)) throw ParseError("--epsilon", "must be > 0");
    return *flag;
  }
  const char* env = std::getenv("RONM_EPSILON");
  if (env == nullptr || *env == '\0') return kDefaultEpsilon;
  char* end = nullptr;
  errno = 0;
  const double v = std::strtod(env, &end);
  if (errno != 0 || end == env || *end != '\0' || !(v > 0.0)) {
    throw ParseError("RONM_EPSILON", std::string("expected a positive number, got '") + env + "'");
  }
  return v;
}

nlohmann::json marginal_json(const TpCheck& c) {
  return {{"tp", c.tp}, {"deviation", c.deviation}};
}

nlohmann::json report_json(const MeasureReport& r, std::size_t dim) {
  const auto& dec = r.decomposition;
  nlohmann::json decomposition = {
      {"s_star", dec.s_star},
      {"trace_delta_plus", dec.delta_plus.trace().real()},
      {"trace_delta_minus", dec.delta_minus.trace().real()},
      {"trace_delta_star", dec.delta_star.trace().real()},
      {"trace_tau_star", dec.tau_star ? nlohmann::json(dec.tau_star->trace().real())
                                      : nlohmann::json(nullptr)}};
  return {{"dim", dim},
          {"t", r.t},
          {"epsilon", r.epsilon},
          {"ronm", r.ronm},
          {"ronm_over_epsilon", r.ronm / r.epsilon},
          {"ronm_rate", r.ronm_rate},
          {"rhp_integrand", r.rhp_integrand},
          {"witness_value", r.witness.value},
          {"primal_value", r.primal},
          {"duality_gap", r.duality_gap},
          {"decomposition", std::move(decomposition)},
          {"is_cp", r.cp.cp},
          {"min_eigenvalue", r.cp.min_eigenvalue},
          {"delta_star_marginal", marginal_json(r.delta_star_marginal)},
          {"tau_star_marginal", r.tau_star_marginal ? marginal_json(*r.tau_star_marginal)
                                                    : nlohmann::json(nullptr)}};
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Robustness of non-Markovianity toolkit", "ronm"};
  app.require_subcommand(1);

  std::string model_file, out_file, format = "csv", suite;
  std::optional<double> epsilon;
  std::optional<int> steps;
  double t = 0.0;
  unsigned threads = 0;
  std::uint64_t seed = 42;

  auto* sweep = app.add_subcommand("sweep", "Evaluate rates on the model's time grid");
  sweep->add_option("--model", model_file, "Model JSON file")->required();
  sweep->add_option("--out", out_file, "Output file (stdout when omitted)");
  sweep->add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}));
  sweep->add_option("--epsilon", epsilon, "Intermediate-map step");
  sweep->add_option("--steps", steps, "Override horizon.steps (even)");
  sweep->add_option("--threads", threads, "Worker threads (0 = all cores)");

  auto* measure = app.add_subcommand("measure", "Full report at a single time");
  measure->add_option("--model", model_file, "Model JSON file")->required();
  measure->add_option("--t", t, "Time point")->required();
  measure->add_option("--epsilon", epsilon, "Intermediate-map step");

  auto* verify = app.add_subcommand("verify", "Run a seeded invariant suite");
  verify->add_option("--suite", suite, "Suite name")
      ->required()
      ->check(CLI::IsMember(suite_names()));
  verify->add_option("--seed", seed, "Corpus seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitParseError;
  }

  try {
    if (*verify) {
      const SuiteResult result = run_suite(suite, seed);
      print_suite(result, out);
      return result.pass() ? kExitOk : kExitInvariantFailure;
    }

    const ModelSpec spec = load_model_file(model_file);
    const double eps = resolve_epsilon(epsilon);

    if (*measure) {
      out << dump_json(report_json(measure_at(spec.model, t, eps), spec.dim)) << '\n';
      return kExitOk;
    }

    Horizon horizon = spec.horizon;
    if (steps) {
      if (*steps < 2 || *steps % 2 != 0) throw ParseError("--steps", "must be an even integer >= 2");
      horizon.steps = *steps;
    }
    const SweepResult result = run_sweep(spec.model, horizon, eps, threads);
    std::ofstream file;
    if (!out_file.empty()) {
      file.open(out_file);
      if (!file) throw ParseError("--out", "cannot open '" + out_file + "' for writing");
    }
    std::ostream& sink = out_file.empty() ? out : file;
    if (format == "json") {
      sink << dump_json(to_json(result)) << '\n';
    } else {
      write_csv(result, sink);
    }
    return kExitOk;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitParseError;
  } catch (const Error& e) {
    err << "numeric error: " << e.what() << '\n';
    return kExitNumericError;
  }
}

}  // namespace ronm
