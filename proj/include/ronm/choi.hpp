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

// Choi–Jamiołkowski representation with the map acting on the second factor
// of the normalized maximally entangled state, so TP maps have unit trace.

#include <cstddef>

#include "ronm/dynamics.hpp"
#include "ronm/numkernel.hpp"

namespace ronm {

struct ChoiMatrix {
  std::size_t sys_dim;
  ComplexMatrix matrix;  // sys_dim² × sys_dim²
  double t_start = 0.0;
  double epsilon = 0.0;
};

// |Φ⁺⟩⟨Φ⁺| with |Φ⁺⟩ = d^{-1/2} Σ_i |i⟩|i⟩. Requires d >= 2.
ComplexMatrix maximally_entangled(std::size_t d);

// Partial traces of a (d·d)×(d·d) matrix over the first or second factor.
ComplexMatrix partial_trace_first(const ComplexMatrix& m, std::size_t d);
ComplexMatrix partial_trace_second(const ComplexMatrix& m, std::size_t d);

// (I ⊗ Λ)(σ) for a bipartite σ, applying the map block by block.
ComplexMatrix apply_on_second(const IntermediateMap& map, const ComplexMatrix& bipartite);

ChoiMatrix choi_of_map(const IntermediateMap& map);

// Inverse of choi_of_map: the superoperator whose Choi matrix is `choi`.
IntermediateMap map_from_choi(const ChoiMatrix& choi);

// Λ(ρ) = d · Tr₁[(ρᵀ ⊗ I) ρ_Λ].
ComplexMatrix apply_from_choi(const ChoiMatrix& choi, const ComplexMatrix& rho);

// (I ⊗ Λ)(σ) with Λ given only through its Choi matrix.
ComplexMatrix apply_on_second_from_choi(const ChoiMatrix& choi, const ComplexMatrix& bipartite);

struct CpCheck {
  bool cp;
  double min_eigenvalue;
};

// CP iff the smallest Choi eigenvalue is >= -kZeroTol.
CpCheck is_cp(const ChoiMatrix& choi);

struct TpCheck {
  bool tp;
  double deviation;  // ‖Tr_out(choi) − I/d‖_max
};

TpCheck is_tp_marginal(const ChoiMatrix& choi);

}  // namespace ronm
