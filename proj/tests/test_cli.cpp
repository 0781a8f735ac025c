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


#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "ronm/cli.hpp"
#include "ronm/json_format.hpp"
#include "ronm/model_io.hpp"
#include "ronm/sweep.hpp"

using namespace ronm;
namespace fs = std::filesystem;

namespace {

const std::string kModels = RONM_MODELS_DIR;

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "ronm");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

fs::path temp_file(const std::string& name, const std::string& contents) {
  const fs::path p = fs::temp_directory_path() / ("ronm_test_" + name);
  std::ofstream(p) << contents;
  return p;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

const char* kDephasingNeg = R"({
  "dim": 2,
  "hamiltonian": "zero",
  "dissipators": [{"operator": "sigma_z", "rate": {"kind": "constant", "params": [-0.5]}}],
  "horizon": {"t0": 0.0, "t1": 1.0, "steps": 10}
})";

}  // namespace

TEST_CASE("presets expand to exact matrices") {
  const ComplexMatrix sm = preset_matrix("sigma_minus", 2);
  CHECK(sm(0, 1) == Complex(1.0));
  CHECK(sm(1, 0) == Complex(0.0));
  CHECK(preset_matrix("sigma_y", 2)(0, 1) == Complex(0.0, -1.0));
  CHECK(max_abs_diff(preset_matrix("identity", 3), ComplexMatrix::identity(3)) == 0.0);
  CHECK_THROWS(preset_matrix("sigma_x", 3));
}

TEST_CASE("model parsing") {
  const ModelSpec sin_model = load_model_file(kModels + "/dephasing_sin.json");
  CHECK(sin_model.dim == 2);
  CHECK(sin_model.horizon.steps == 2000);
  REQUIRE(sin_model.model.dissipators().size() == 1);
  CHECK(std::abs(sin_model.model.dissipators()[0].rate(1.0) - std::sin(1.0)) <= 1e-15);

  const ModelSpec markov = load_model_file(kModels + "/random_markovian.json");
  CHECK(markov.model.dissipators().size() == 3);
  CHECK(markov.model.hamiltonian()(0.0)(0, 1) == Complex(0.12, -0.41));
  CHECK(markov.model.dissipators()[2].op(1, 1) == Complex(-0.5));

  const auto doc = nlohmann::json::parse(R"({
    "dim": 2,
    "hamiltonian": {"table": [{"t": 0, "matrix": "sigma_x"}, {"t": 1, "matrix": {"preset": "sigma_z", "scale": 2}}]},
    "dissipators": [{"operator": "sigma_plus", "rate": {"kind": "table", "params": [[0, 1], [1, -1]]}}],
    "horizon": {"t0": 0, "t1": 1, "steps": 4}
  })");
  const ModelSpec tab = parse_model(doc);
  CHECK(tab.model.hamiltonian()(0.5)(0, 1) == Complex(0.5));
  CHECK(tab.model.dissipators()[0].rate(0.25) == doctest::Approx(0.5));
}

TEST_CASE("parse errors name the offending field") {
  const auto expect_field = [](const std::string& text, const std::string& field) {
    try {
      parse_model(nlohmann::json::parse(text));
      CHECK_MESSAGE(false, "expected a parse error for " << field);
    } catch (const ParseError& e) {
      CHECK(e.field() == field);
    }
  };
  expect_field(R"({"horizon": {"t0": 0, "t1": 1, "steps": 2}})", "dim");
  expect_field(R"({"dim": 2, "dissipators": [{"operator": "sigma_q", "rate": {"kind": "constant", "params": [1]}}],
                  "horizon": {"t0": 0, "t1": 1, "steps": 2}})",
               "dissipators[0].operator");
  expect_field(R"({"dim": 2, "dissipators": [{"operator": "sigma_z", "rate": {"kind": "cubic", "params": [1]}}],
                  "horizon": {"t0": 0, "t1": 1, "steps": 2}})",
               "dissipators[0].rate.kind");
  expect_field(R"({"dim": 2, "hamiltonian": [[[1, 0], [0, 0]], [[0, 0]]],
                  "horizon": {"t0": 0, "t1": 1, "steps": 2}})",
               "hamiltonian[1]");
  expect_field(R"({"dim": 2, "hamiltonian": [[[1, 0], [0, 1]], [[0, 0], [1, 0]]],
                  "horizon": {"t0": 0, "t1": 1, "steps": 2}})",
               "hamiltonian");
  expect_field(R"({"dim": 2, "horizon": {"t0": 0, "t1": 1, "steps": 3}})", "horizon.steps");
  expect_field(R"({"dim": 2, "horizon": {"t0": 0, "t1": 1}})", "horizon.steps");

  const fs::path bad = temp_file("bad.json", R"({"dim": 2, "dissipators": [{"operator": "sigma_z",
      "rate": {"kind": "sinusoid", "params": ["a", 1]}}], "horizon": {"t0": 0, "t1": 1, "steps": 2}})");
  const Run r = run({"sweep", "--model", bad.string()});
  CHECK(r.code == kExitParseError);
  CHECK(r.err.find("dissipators[0].rate.params[0]") != std::string::npos);

  CHECK(run({"measure", "--model", "/nonexistent/model.json", "--t", "0"}).code == kExitParseError);
  CHECK(run({"sweep"}).code == kExitParseError);
  CHECK(run({"verify", "--suite", "nope"}).code == kExitParseError);
}

TEST_CASE("json formatting") {
  CHECK(format_double(0.1) == "0.10000000000000001");
  CHECK(format_double(2.0) == "2.0");
  CHECK(format_double(-0.0) == "0.0");
  CHECK(format_double(std::nan("")) == "null");
  const nlohmann::json j = {{"b", 1}, {"a", {0.5, true}}};
  CHECK(dump_json(j, -1) == R"({"a":[0.5,true],"b":1})");
}

TEST_CASE("sweep of the sinusoidal dephasing model") {
  const fs::path out = fs::temp_directory_path() / "ronm_test_sin.json";
  const Run r = run({"sweep", "--model", kModels + "/dephasing_sin.json", "--out", out.string(),
                     "--format", "json"});
  REQUIRE(r.code == kExitOk);
  const auto doc = nlohmann::json::parse(slurp(out));
  const double n = doc["footer"]["n_total"];
  const double g = doc["footer"]["rhp_total"];
  CHECK(std::abs(n - 2.0) <= 1e-4);
  CHECK(std::abs(g - 4.0) <= 2e-4);
  CHECK(std::abs(double(doc["footer"]["n_norm"]) - n / (1.0 + n)) <= 1e-15);
  REQUIRE(doc["rows"].size() == 2001);
  double prev = -1.0;
  for (const auto& row : doc["rows"]) {
    const double t = row["t"];
    CHECK(t > prev);
    prev = t;
    CHECK(std::abs(double(row["rhp_integrand"]) - 2.0 * double(row["ronm_rate"])) <= 1e-6);
  }
}

TEST_CASE("sweep csv for a Markovian model") {
  const Run r = run({"sweep", "--model", kModels + "/random_markovian.json"});
  REQUIRE(r.code == kExitOk);
  std::istringstream in(r.out);
  std::string line;
  std::getline(in, line);
  CHECK(line == "t,ronm_rate,rhp_integrand,is_cp,min_eigenvalue");
  int rows = 0;
  std::string footer;
  while (std::getline(in, line)) {
    if (line.rfind("#", 0) == 0) {
      footer = line;
      continue;
    }
    ++rows;
    std::stringstream ss(line);
    std::string t, rate, rhp, cp;
    std::getline(ss, t, ',');
    std::getline(ss, rate, ',');
    std::getline(ss, rhp, ',');
    std::getline(ss, cp, ',');
    CHECK(std::abs(std::stod(rate)) <= 1e-9);
    CHECK(cp == "true");
  }
  CHECK(rows == 201);
  REQUIRE(footer.rfind("# n_total=", 0) == 0);
  const double n_total = std::stod(footer.substr(10));
  CHECK(std::abs(n_total) <= 1e-9);
}

TEST_CASE("sweep output is independent of the worker count") {
  const ModelSpec spec = load_model_file(kModels + "/dephasing_sin.json");
  Horizon h = spec.horizon;
  h.steps = 200;
  std::ostringstream one, four;
  write_csv(run_sweep(spec.model, h, 1e-6, 1), one);
  write_csv(run_sweep(spec.model, h, 1e-6, 4), four);
  CHECK(one.str() == four.str());

  const Run a = run({"sweep", "--model", kModels + "/dephasing_sin.json", "--steps", "100",
                     "--threads", "3", "--format", "json"});
  const Run b = run({"sweep", "--model", kModels + "/dephasing_sin.json", "--steps", "100",
                     "--threads", "1", "--format", "json"});
  CHECK(a.code == kExitOk);
  CHECK(a.out == b.out);
  CHECK(run({"sweep", "--model", kModels + "/dephasing_sin.json", "--steps", "7"}).code ==
        kExitParseError);
}

TEST_CASE("measure reports") {
  const fs::path model = temp_file("dephasing_neg.json", kDephasingNeg);
  const Run r = run({"measure", "--model", model.string(), "--t", "0.5", "--epsilon", "1e-6"});
  REQUIRE(r.code == kExitOk);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(std::abs(double(doc["ronm"]) - 5e-7) <= 1e-12);
  CHECK(std::abs(double(doc["ronm_over_epsilon"]) - 0.5) <= 1e-6);
  CHECK(double(doc["duality_gap"]) <= 1e-10);
  CHECK(doc["is_cp"] == false);
  CHECK(std::abs(double(doc["decomposition"]["trace_tau_star"]) - 1.0) <= 1e-9);
  CHECK(doc["delta_star_marginal"].contains("deviation"));

  const Run m = run({"measure", "--model", kModels + "/random_markovian.json", "--t", "2.0"});
  REQUIRE(m.code == kExitOk);
  const auto mdoc = nlohmann::json::parse(m.out);
  CHECK(double(mdoc["ronm"]) == 0.0);
  CHECK(std::abs(double(mdoc["witness_value"])) <= 1e-12);
  CHECK(double(mdoc["duality_gap"]) <= 1e-10);
  CHECK(mdoc["tau_star_marginal"].is_null());
}

TEST_CASE("epsilon from the environment") {
  const fs::path model = temp_file("dephasing_env.json", kDephasingNeg);
  setenv("RONM_EPSILON", "1e-5", 1);
  const auto env = nlohmann::json::parse(run({"measure", "--model", model.string(), "--t", "0"}).out);
  CHECK(double(env["epsilon"]) == 1e-5);
  const auto flag = nlohmann::json::parse(
      run({"measure", "--model", model.string(), "--t", "0", "--epsilon", "2e-6"}).out);
  CHECK(double(flag["epsilon"]) == 2e-6);
  setenv("RONM_EPSILON", "-3", 1);
  CHECK(run({"measure", "--model", model.string(), "--t", "0"}).code == kExitParseError);
  unsetenv("RONM_EPSILON");
  const auto def = nlohmann::json::parse(run({"measure", "--model", model.string(), "--t", "0"}).out);
  CHECK(double(def["epsilon"]) == 1e-6);
}

TEST_CASE("numeric failures exit with code 3") {
  const fs::path model = temp_file("overflow.json", R"({
    "dim": 2,
    "dissipators": [{"operator": "sigma_z", "rate": {"kind": "constant", "params": [1e308]}}],
    "horizon": {"t0": 0, "t1": 1, "steps": 2}
  })");
  const Run r = run({"measure", "--model", model.string(), "--t", "0", "--epsilon", "1e10"});
  CHECK(r.code == kExitNumericError);
  CHECK(r.err.find("numeric error") != std::string::npos);
}

TEST_CASE("verify suites") {
  for (const char* suite : {"properties", "rhp", "theorem2"}) {
    const Run r = run({"verify", "--suite", suite, "--seed", "42"});
    CHECK_MESSAGE(r.code == kExitOk, r.out);
    CHECK(r.out.find("FAIL") == std::string::npos);
  }
  const Run rhp = run({"verify", "--suite", "rhp", "--seed", "42"});
  CHECK(rhp.out.find("rhp.pointwise") != std::string::npos);
  const Run t2 = run({"verify", "--suite", "theorem2", "--seed", "42"});
  CHECK(t2.out.find("PASS theorem2.dephasing_equality") != std::string::npos);
  const Run again = run({"verify", "--suite", "theorem2", "--seed", "42"});
  CHECK(t2.out == again.out);
}
