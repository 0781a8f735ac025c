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

// Robustness of non-Markovianity of a Choi matrix, its optimal pseudo-mixture,
// the primal and dual programs over the relaxed free set (PSD, unit trace),
// and the short-time rates whose time integrals give the total measures.

#include <optional>

#include "ronm/choi.hpp"
#include "ronm/dynamics.hpp"
#include "ronm/numkernel.hpp"

namespace ronm {

// ρ = (1 + s*) δ* − s* τ*, built from the spectral split ρ = Δ⁺ − Δ⁻.
struct OptimalDecomposition {
  double s_star;
  ComplexMatrix delta_plus;
  ComplexMatrix delta_minus;
  ComplexMatrix delta_star;
  std::optional<ComplexMatrix> tau_star;  // empty when s* = 0
};

// Optimal solution X of the dual program.
struct Witness {
  ComplexMatrix matrix;
  double value;  // Tr[ρX] − 1
};

struct PrimalSolution {
  double value;          // Tr[δ] − 1
  ComplexMatrix delta;   // optimal δ = Δ⁺
  double min_eig_delta;  // feasibility: δ >= 0
  double min_eig_slack;  // feasibility: δ − ρ >= 0
};

struct MeasureReport {
  double t;
  double epsilon;
  double ronm;
  double ronm_rate;
  double rhp_integrand;
  OptimalDecomposition decomposition;
  Witness witness;
  double primal;
  double duality_gap;
  CpCheck cp;
  TpCheck delta_star_marginal;
  std::optional<TpCheck> tau_star_marginal;
};

// (‖ρ‖₁ − 1)/2 clamped at zero. Throws kNotHermitian or kTraceNotOne.
double ronm_closed_form(const ChoiMatrix& choi);

OptimalDecomposition optimal_decomposition(const ChoiMatrix& choi);

// X = I − P₋, P₋ the projector onto the eigenvectors with λ < −kZeroTol.
Witness dual_witness(const ChoiMatrix& choi);

PrimalSolution primal_solution(const ChoiMatrix& choi);
double primal_value(const ChoiMatrix& choi);

// lim N_R/ε via Richardson 2 r(ε/2) − r(ε) on first-order maps.
double ronm_rate(const GKLSModel& model, double t, double epsilon = kDefaultEpsilon);

// lim (‖ρ_Λ‖₁ − 1)/ε with the same Richardson scheme.
double rhp_integrand(const GKLSModel& model, double t, double epsilon = kDefaultEpsilon);

struct QuadratureOptions {
  double epsilon = kDefaultEpsilon;
  // Split the interval where the rate switches between zero and positive and
  // integrate each smooth piece separately.
  bool refine_kinks = false;
};

// Composite Simpson of ronm_rate over [t0, t1] with `steps` panels (even, >= 2).
double total_ronm(const GKLSModel& model, double t0, double t1, int steps,
                  const QuadratureOptions& options = {});

// Same quadrature applied to rhp_integrand.
double total_rhp(const GKLSModel& model, double t0, double t1, int steps,
                 const QuadratureOptions& options = {});

// total / (1 + total). Throws kNegativeInput.
double normalized_ronm(double total);

// Composite Simpson weights applied to equally spaced samples.
double simpson(std::span<const double> samples, double h);

MeasureReport measure_at(const GKLSModel& model, double t, double epsilon = kDefaultEpsilon);

}  // namespace ronm
