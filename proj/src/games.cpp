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

#include "ronm/games.hpp"

#include <cmath>
#include <limits>

#include "ronm/error.hpp"
#include "ronm/measures.hpp"
#include "ronm/sampling.hpp"

namespace ronm {

namespace {

constexpr double kProbTol = 1e-12;

void require_probabilities(const std::vector<double>& p, const char* what) {
  double total = 0.0;
  for (double x : p) {
    if (!(x >= 0.0) || !std::isfinite(x)) {
      throw Error(ErrorCode::kInvalidDistribution, std::string(what) + ": negative weight");
    }
    total += x;
  }
  if (std::abs(total - 1.0) > kProbTol) {
    throw Error(ErrorCode::kInvalidDistribution, std::string(what) + ": weights do not sum to 1");
  }
}

std::size_t system_dim(std::size_t bipartite_dim) {
  const auto d = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(bipartite_dim))));
  if (d * d != bipartite_dim || d < 2) {
    throw Error(ErrorCode::kDimensionMismatch, "operator is not on a d x d bipartite space");
  }
  return d;
}

ComplexMatrix block(const ComplexMatrix& m, std::size_t d, std::size_t a, std::size_t b) {
  ComplexMatrix out(d);
  for (std::size_t k = 0; k < d; ++k) {
    for (std::size_t l = 0; l < d; ++l) out(k, l) = m(a * d + k, b * d + l);
  }
  return out;
}

// W = d Σ_j p_j Σ_ab (σ_j)_abᵀ ⊗ (M_j)_ba, so that Tr[ρ_Γ W] equals
// Σ_j p_j Tr[(I⊗Γ)(σ_j) M_j] for every map Γ.
ComplexMatrix game_operator_terms(const std::vector<WeightedState>& states,
                                  const std::vector<ComplexMatrix>& elements) {
  const std::size_t n2 = states.front().state.dim();
  const std::size_t d = system_dim(n2);
  ComplexMatrix w(n2);
  const std::size_t pairs = std::min(states.size(), elements.size());
  for (std::size_t j = 0; j < pairs; ++j) {
    if (states[j].probability == 0.0) continue;
    for (std::size_t a = 0; a < d; ++a) {
      for (std::size_t b = 0; b < d; ++b) {
        const ComplexMatrix m_ba = block(elements[j], d, b, a);
        if (m_ba.max_abs() == 0.0) continue;
        w += (states[j].probability * static_cast<double>(d)) *
             kron(block(states[j].state, d, a, b).transpose(), m_ba);
      }
    }
  }
  return 0.5 * (w + w.adjoint());
}

double log2_info(const std::vector<std::vector<double>>& q, double prior_max) {
  double guess = 0.0;
  for (std::size_t y = 0; y < q.front().size(); ++y) {
    double best = 0.0;
    for (const auto& row : q) best = std::max(best, row[y]);
    guess += best;
  }
  if (guess <= 0.0) return -std::numeric_limits<double>::infinity();
  return std::log2(guess) - std::log2(prior_max);
}

std::vector<std::vector<double>> floored_joint_via_choi(const StateEnsemble& ensemble,
                                                        const POVM& povm,
                                                        const ChoiMatrix& choi) {
  std::vector<std::vector<double>> q;
  for (const auto& item : ensemble.items()) {
    const ComplexMatrix out = apply_on_second_from_choi(choi, item.state);
    std::vector<double> row;
    for (const auto& m : povm.elements()) {
      row.push_back(std::max(0.0, item.probability * trace_product(out, m)));
    }
    q.push_back(std::move(row));
  }
  return q;
}

}  // namespace

StateEnsemble::StateEnsemble(std::vector<WeightedState> items) : items_(std::move(items)) {
  if (items_.empty()) throw Error(ErrorCode::kEmptyEnsemble, "state ensemble is empty");
  std::vector<double> p;
  for (const auto& it : items_) {
    p.push_back(it.probability);
    if (it.state.dim() != items_.front().state.dim()) {
      throw Error(ErrorCode::kDimensionMismatch, "ensemble states differ in dimension");
    }
    if (!is_hermitian(it.state) || std::abs(it.state.trace().real() - 1.0) > 1e-9 ||
        min_eigenvalue(it.state) < -1e-9) {
      throw Error(ErrorCode::kInvalidArgument, "ensemble state is not a density matrix");
    }
  }
  require_probabilities(p, "state ensemble");
}

POVM::POVM(std::vector<ComplexMatrix> elements) : elements_(std::move(elements)) {
  if (elements_.empty()) throw Error(ErrorCode::kInvalidArgument, "POVM has no elements");
  const std::size_t n = elements_.front().dim();
  ComplexMatrix sum(n);
  for (const auto& m : elements_) {
    if (m.dim() != n) throw Error(ErrorCode::kDimensionMismatch, "POVM elements differ in size");
    if (!is_hermitian(m) || (m.max_abs() > 0.0 && min_eigenvalue(m) < -kZeroTol)) {
      throw Error(ErrorCode::kInvalidArgument, "POVM element is not positive semidefinite");
    }
    sum += m;
  }
  if (max_abs_diff(sum, ComplexMatrix::identity(n)) > 1e-10) {
    throw Error(ErrorCode::kInvalidArgument, "POVM elements do not sum to the identity");
  }
}

MapEnsemble::MapEnsemble(std::vector<WeightedMap> items) : items_(std::move(items)) {
  if (items_.empty()) throw Error(ErrorCode::kEmptyEnsemble, "map ensemble is empty");
  std::vector<double> p;
  for (const auto& it : items_) {
    p.push_back(it.probability);
    if (it.map.dim != items_.front().map.dim) {
      throw Error(ErrorCode::kDimensionMismatch, "ensemble maps differ in dimension");
    }
  }
  require_probabilities(p, "map ensemble");
}

JointDistribution::JointDistribution(std::vector<std::vector<double>> p) : p_(std::move(p)) {
  if (p_.empty() || p_.front().empty()) {
    throw Error(ErrorCode::kInvalidDistribution, "joint distribution is empty");
  }
  double total = 0.0;
  for (const auto& row : p_) {
    if (row.size() != p_.front().size()) {
      throw Error(ErrorCode::kInvalidDistribution, "joint distribution rows differ in length");
    }
    for (double x : row) {
      if (!(x >= 0.0) || !std::isfinite(x)) {
        throw Error(ErrorCode::kInvalidDistribution, "joint distribution has a negative entry");
      }
      total += x;
    }
  }
  if (std::abs(total - 1.0) > kProbTol) {
    throw Error(ErrorCode::kInvalidDistribution, "joint distribution does not sum to 1");
  }
}

double state_disc_success(const StateEnsemble& ensemble, const POVM& povm,
                          const IntermediateMap& map) {
  if (povm.size() < ensemble.size()) {
    throw Error(ErrorCode::kPovmCountMismatch, "POVM has fewer elements than the ensemble");
  }
  if (ensemble.dim() != map.dim * map.dim || povm.dim() != ensemble.dim()) {
    throw Error(ErrorCode::kDimensionMismatch, "state_disc_success");
  }
  double total = 0.0;
  for (std::size_t j = 0; j < ensemble.size(); ++j) {
    const auto& [p, sigma] = ensemble.items()[j];
    if (p == 0.0) continue;
    total += p * trace_product(apply_on_second(map, sigma), povm.elements()[j]);
  }
  return total;
}

ComplexMatrix game_operator(const StateEnsemble& ensemble, const POVM& povm) {
  if (povm.dim() != ensemble.dim()) throw Error(ErrorCode::kDimensionMismatch, "game_operator");
  return game_operator_terms(ensemble.items(), povm.elements());
}

double relaxed_free_success(const StateEnsemble& ensemble, const POVM& povm) {
  return max_eigenvalue(game_operator(ensemble, povm));
}

double state_advantage_ratio(const IntermediateMap& map) {
  const ChoiMatrix choi = choi_of_map(map);
  const Witness witness = dual_witness(choi);
  const std::size_t n = map.dim * map.dim;
  const StateEnsemble ensemble({{1.0, maximally_entangled(map.dim)}});
  const POVM povm({witness.matrix, ComplexMatrix::identity(n) - witness.matrix});
  return state_disc_success(ensemble, povm, map) / relaxed_free_success(ensemble, povm);
}

double markovian_baseline_success(const StateEnsemble& ensemble, const POVM& povm,
                                  std::size_t n_samples, std::uint64_t seed) {
  if (n_samples == 0) throw Error(ErrorCode::kInvalidArgument, "need at least one sample");
  const std::size_t d = system_dim(ensemble.dim());
  Rng rng(seed);
  std::uniform_int_distribution<std::size_t> n_diss(1, 3);
  std::uniform_real_distribution<double> log_eps(std::log(1e-3), 0.0);
  double best = state_disc_success(ensemble, povm, identity_map(d));
  for (std::size_t k = 1; k < n_samples; ++k) {
    const std::size_t count = n_diss(rng);
    const double eps = std::exp(log_eps(rng));
    const GKLSModel model = sample_markovian_model(d, count, rng());
    const IntermediateMap map = intermediate_map(model, 0.0, eps, Construction::kExponential);
    best = std::max(best, state_disc_success(ensemble, povm, map));
  }
  return best;
}

double channel_disc_success(const MapEnsemble& ensemble, const POVM& povm,
                            const ComplexMatrix& psi) {
  if (povm.size() != ensemble.size() + 1) {
    throw Error(ErrorCode::kPovmCountMismatch, "channel game needs N + 1 POVM elements");
  }
  const std::size_t d = ensemble.items().front().map.dim;
  if (psi.dim() != d * d || povm.dim() != d * d) {
    throw Error(ErrorCode::kDimensionMismatch, "channel_disc_success");
  }
  double total = 0.0;
  for (std::size_t j = 0; j < ensemble.size(); ++j) {
    const auto& [p, map] = ensemble.items()[j];
    if (p == 0.0 || povm.elements()[j].max_abs() == 0.0) continue;
    total += p * trace_product(apply_on_second(map, psi), povm.elements()[j]);
  }
  return total;
}

double channel_advantage_ratio(const MapEnsemble& ensemble) {
  std::size_t best = 0;
  double best_r = -1.0;
  std::vector<double> r;
  for (std::size_t j = 0; j < ensemble.size(); ++j) {
    if (!(ensemble.items()[j].probability > 0.0)) {
      throw Error(ErrorCode::kInvalidArgument, "channel_advantage_ratio needs every p_j > 0");
    }
    r.push_back(ronm_closed_form(choi_of_map(ensemble.items()[j].map)));
    if (r.back() > best_r) {
      best_r = r.back();
      best = j;
    }
  }
  const std::size_t d = ensemble.items().front().map.dim;
  const std::size_t n = d * d;
  const ComplexMatrix x = dual_witness(choi_of_map(ensemble.items()[best].map)).matrix;
  std::vector<ComplexMatrix> elements(ensemble.size(), ComplexMatrix(n));
  elements[best] = x;
  elements.push_back(ComplexMatrix::identity(n) - x);
  const POVM povm(elements);
  const ComplexMatrix psi = maximally_entangled(d);

  // Each Γ_j ranges over the relaxed free set independently, so the optimum
  // splits into one largest-eigenvalue problem per outcome.
  double denominator = 0.0;
  for (std::size_t j = 0; j < ensemble.size(); ++j) {
    if (elements[j].max_abs() == 0.0) continue;
    const ComplexMatrix w = game_operator_terms({{1.0, psi}}, {elements[j]});
    denominator += ensemble.items()[j].probability * max_eigenvalue(w);
  }
  return channel_disc_success(ensemble, povm, psi) / denominator;
}

double min_information(const JointDistribution& joint) {
  double prior_max = 0.0;
  for (const auto& row : joint.p()) {
    double px = 0.0;
    for (double x : row) px += x;
    prior_max = std::max(prior_max, px);
  }
  return log2_info(joint.p(), prior_max);
}

JointGameResult joint_from_game(const StateEnsemble& ensemble, const POVM& povm,
                                const IntermediateMap& map) {
  if (ensemble.dim() != map.dim * map.dim || povm.dim() != ensemble.dim()) {
    throw Error(ErrorCode::kDimensionMismatch, "joint_from_game");
  }
  std::vector<std::vector<double>> p;
  double floored = 0.0, total = 0.0;
  for (const auto& item : ensemble.items()) {
    const ComplexMatrix out = apply_on_second(map, item.state);
    std::vector<double> row;
    for (const auto& m : povm.elements()) {
      double v = item.probability * trace_product(out, m);
      if (v < 0.0) {
        floored -= v;
        v = 0.0;
      }
      total += v;
      row.push_back(v);
    }
    p.push_back(std::move(row));
  }
  if (!(total > 0.0)) throw Error(ErrorCode::kInvalidDistribution, "game has no positive mass");
  for (auto& row : p) {
    for (auto& v : row) v /= total;
  }
  return {JointDistribution(std::move(p)), floored, total};
}

InfoBoundReport info_bound_check(const IntermediateMap& map,
                                 const std::vector<StateEnsemble>& ensembles,
                                 const std::vector<POVM>& povms) {
  if (ensembles.empty() || povms.empty()) {
    throw Error(ErrorCode::kEmptyEnsemble, "info_bound_check needs nonempty corpora");
  }
  if (ensembles.size() != povms.size()) {
    throw Error(ErrorCode::kInvalidArgument, "ensemble and POVM corpora differ in size");
  }
  const ChoiMatrix choi = choi_of_map(map);
  const OptimalDecomposition dec = optimal_decomposition(choi);
  const ChoiMatrix free_choi{choi.sys_dim, dec.delta_star, choi.t_start, choi.epsilon};

  InfoBoundReport report;
  report.ronm = ronm_closed_form(choi);
  report.bound = std::log2(1.0 + report.ronm);
  report.max_gap = -std::numeric_limits<double>::infinity();
  report.holds = true;
  for (std::size_t i = 0; i < ensembles.size(); ++i) {
    double prior_max = 0.0;
    for (const auto& item : ensembles[i].items()) prior_max = std::max(prior_max, item.probability);
    const double info_map = log2_info(floored_joint_via_choi(ensembles[i], povms[i], choi), prior_max);
    const double info_free =
        log2_info(floored_joint_via_choi(ensembles[i], povms[i], free_choi), prior_max);
    const double gap = info_map == info_free ? 0.0 : info_map - info_free;
    report.entries.push_back({info_map, info_free, gap});
    report.max_gap = std::max(report.max_gap, gap);
    if (!(gap <= report.bound + 1e-8)) report.holds = false;
  }
  return report;
}

}  // namespace ronm
