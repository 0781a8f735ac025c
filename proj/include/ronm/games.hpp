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

// Discrimination games and single-shot information quantities that give the
// robustness its operational meaning. Success probabilities of non-CP maps
// are reported raw and may leave [0, 1].

#include <cstdint>
#include <vector>

#include "ronm/choi.hpp"
#include "ronm/dynamics.hpp"
#include "ronm/numkernel.hpp"

namespace ronm {

struct WeightedState {
  double probability;
  ComplexMatrix state;  // d² × d² density matrix
};

class StateEnsemble {
 public:
  // Throws kInvalidDistribution for bad weights and kInvalidArgument for a
  // state that is not PSD with unit trace.
  explicit StateEnsemble(std::vector<WeightedState> items);

  const std::vector<WeightedState>& items() const noexcept { return items_; }
  std::size_t size() const noexcept { return items_.size(); }
  std::size_t dim() const noexcept { return items_.front().state.dim(); }

 private:
  std::vector<WeightedState> items_;
};

class POVM {
 public:
  // Throws kInvalidArgument unless every element is PSD and they sum to I.
  explicit POVM(std::vector<ComplexMatrix> elements);

  const std::vector<ComplexMatrix>& elements() const noexcept { return elements_; }
  std::size_t size() const noexcept { return elements_.size(); }
  std::size_t dim() const noexcept { return elements_.front().dim(); }

 private:
  std::vector<ComplexMatrix> elements_;
};

struct WeightedMap {
  double probability;
  IntermediateMap map;
};

class MapEnsemble {
 public:
  explicit MapEnsemble(std::vector<WeightedMap> items);

  const std::vector<WeightedMap>& items() const noexcept { return items_; }
  std::size_t size() const noexcept { return items_.size(); }

 private:
  std::vector<WeightedMap> items_;
};

// p(x, y); rows indexed by the ensemble, columns by the measurement outcome.
class JointDistribution {
 public:
  // Throws kInvalidDistribution for negative entries or a total away from 1.
  explicit JointDistribution(std::vector<std::vector<double>> p);

  const std::vector<std::vector<double>>& p() const noexcept { return p_; }

 private:
  std::vector<std::vector<double>> p_;
};

// Σ_j p_j Tr[(I⊗Λ)(σ_j) M_j]; extra POVM elements are ignored.
double state_disc_success(const StateEnsemble& ensemble, const POVM& povm,
                          const IntermediateMap& map);

// Largest W-eigenvalue, where Tr[ρ_Γ W] is the success probability of the game
// played through a map Γ with Choi matrix ρ_Γ: the maximum over the relaxed
// free set of PSD unit-trace Choi matrices.
double relaxed_free_success(const StateEnsemble& ensemble, const POVM& povm);

// The operator W above.
ComplexMatrix game_operator(const StateEnsemble& ensemble, const POVM& povm);

// Witness instance: ensemble {1, |Φ⁺⟩⟨Φ⁺|}, POVM {X, I − X}.
double state_advantage_ratio(const IntermediateMap& map);

// Best success over n_samples seeded Markovian maps (exponential propagators,
// identity included as sample zero).
double markovian_baseline_success(const StateEnsemble& ensemble, const POVM& povm,
                                  std::size_t n_samples, std::uint64_t seed);

// Σ_{j<N} p_j Tr[(I⊗Λ_j)(Ψ) M_j]; the POVM carries one extra inconclusive element.
double channel_disc_success(const MapEnsemble& ensemble, const POVM& povm,
                            const ComplexMatrix& psi);

double channel_advantage_ratio(const MapEnsemble& ensemble);

// H_min(X) − H_min(X|Y) in bits.
double min_information(const JointDistribution& joint);

struct JointGameResult {
  JointDistribution joint;
  double floored_mass;   // total |p(x,y)| removed from negative entries
  double normalization;  // sum of the floored entries before renormalizing
};

JointGameResult joint_from_game(const StateEnsemble& ensemble, const POVM& povm,
                                const IntermediateMap& map);

struct InfoBoundEntry {
  double info_map;      // I_min through Λ
  double info_free;     // I_min through Γ* = δ*
  double gap;           // info_map − info_free
};

struct InfoBoundReport {
  double ronm;
  double bound;    // log₂(1 + N_R)
  double max_gap;
  bool holds;      // every gap <= bound + 1e-8
  std::vector<InfoBoundEntry> entries;
};

// Pairs ensembles[i] with povms[i]. Both arms use the prior's min-entropy and
// the floored, unnormalized p(x, y), i.e. the quantities in the bound's proof.
InfoBoundReport info_bound_check(const IntermediateMap& map,
                                 const std::vector<StateEnsemble>& ensembles,
                                 const std::vector<POVM>& povms);

}  // namespace ronm
