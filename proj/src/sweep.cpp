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


#include "ronm/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <exception>
#include <mutex>
#include <thread>

#include "ronm/choi.hpp"
#include "ronm/error.hpp"
#include "ronm/json_format.hpp"
#include "ronm/measures.hpp"

namespace ronm {

SweepResult run_sweep(const GKLSModel& model, const Horizon& horizon, double epsilon,
                      unsigned threads) {
  if (!(horizon.t1 > horizon.t0) || horizon.steps < 2 || horizon.steps % 2 != 0) {
    throw Error(ErrorCode::kBadInterval, "sweep needs t1 > t0 and an even step count >= 2");
  }
  if (!(epsilon > 0.0)) throw Error(ErrorCode::kNonPositiveEpsilon, "epsilon must be > 0");

  const auto n = static_cast<std::size_t>(horizon.steps) + 1;
  const double h = (horizon.t1 - horizon.t0) / horizon.steps;
  std::vector<SweepRow> rows(n);

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  const auto worker = [&] {
    for (std::size_t k = next++; k < n; k = next++) {
      try {
        const double t = k + 1 == n ? horizon.t1 : horizon.t0 + h * static_cast<double>(k);
        const CpCheck cp =
            is_cp(choi_of_map(intermediate_map(model, t, epsilon, Construction::kFirstOrder)));
        rows[k] = {t, ronm_rate(model, t, epsilon), rhp_integrand(model, t, epsilon), cp.cp,
                   cp.min_eigenvalue};
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = n;
      }
    }
  };

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, n));
  std::vector<std::thread> pool;
  for (unsigned i = 1; i < threads; ++i) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);

  std::vector<double> rate(n), rhp(n);
  for (std::size_t k = 0; k < n; ++k) {
    rate[k] = rows[k].ronm_rate;
    rhp[k] = rows[k].rhp_integrand;
  }
  SweepFooter footer{simpson(rate, h), simpson(rhp, h), 0.0};
  // Richardson noise can leave a total of order -1e-15 for Markovian models.
  footer.n_norm = normalized_ronm(std::max(0.0, footer.n_total));
  return {epsilon, std::move(rows), footer};
}

void write_csv(const SweepResult& result, std::ostream& out) {
  out << "t,ronm_rate,rhp_integrand,is_cp,min_eigenvalue\n";
  for (const auto& r : result.rows) {
    out << format_double(r.t) << ',' << format_double(r.ronm_rate) << ','
        << format_double(r.rhp_integrand) << ',' << (r.is_cp ? "true" : "false") << ','
        << format_double(r.min_eigenvalue) << '\n';
  }
  out << "# n_total=" << format_double(result.footer.n_total)
      << " rhp_total=" << format_double(result.footer.rhp_total)
      << " n_norm=" << format_double(result.footer.n_norm)
      << " epsilon=" << format_double(result.epsilon) << '\n';
}

nlohmann::json to_json(const SweepResult& result) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& r : result.rows) {
    rows.push_back({{"t", r.t},
                    {"ronm_rate", r.ronm_rate},
                    {"rhp_integrand", r.rhp_integrand},
                    {"is_cp", r.is_cp},
                    {"min_eigenvalue", r.min_eigenvalue}});
  }
  return {{"epsilon", result.epsilon},
          {"rows", std::move(rows)},
          {"footer",
           {{"n_total", result.footer.n_total},
            {"rhp_total", result.footer.rhp_total},
            {"n_norm", result.footer.n_norm}}}};
}

}  // namespace ronm
