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


#pragma once

#include <ostream>
#include <vector>

#include "json.hpp"
#include "ronm/dynamics.hpp"
#include "ronm/model_io.hpp"

namespace ronm {

struct SweepRow {
  double t;
  double ronm_rate;
  double rhp_integrand;
  bool is_cp;
  double min_eigenvalue;
};

struct SweepFooter {
  double n_total;
  double rhp_total;
  double n_norm;
};

struct SweepResult {
  double epsilon;
  std::vector<SweepRow> rows;  // ordered by t
  SweepFooter footer;
};

// Evaluates horizon.steps + 1 grid points on a worker pool. threads == 0
// picks std::thread::hardware_concurrency(). The footer integrates the rows
// with composite Simpson, so steps must be even.
SweepResult run_sweep(const GKLSModel& model, const Horizon& horizon, double epsilon,
                      unsigned threads = 0);

void write_csv(const SweepResult& result, std::ostream& out);

nlohmann::json to_json(const SweepResult& result);

}  // namespace ronm
