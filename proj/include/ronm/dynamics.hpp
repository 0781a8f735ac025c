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

// Time-dependent GKLS generators and the short-time intermediate maps they
// induce, stored as column-stacking superoperators.

#include <cstdint>
#include <utility>
#include <vector>

#include "ronm/numkernel.hpp"

namespace ronm {

// Default short-time window used when taking the eps -> 0+ limit.
inline constexpr double kDefaultEpsilon = 1e-6;

// Real-valued rate gamma(t). Negative values are allowed; they are what makes
// a model non-Markovian.
class RateFunction {
 public:
  enum class Kind { kConstant, kSinusoid, kPolynomial, kTable };

  static RateFunction constant(double value);
  // amplitude * sin(omega * t + phase) + offset
  static RateFunction sinusoid(double amplitude, double omega, double phase = 0.0,
                               double offset = 0.0);
  // coefficients[0] + coefficients[1] t + coefficients[2] t^2 + ...
  static RateFunction polynomial(std::vector<double> coefficients);
  // Piecewise-linear through (t, value) points sorted by t; clamps outside.
  static RateFunction table(std::vector<std::pair<double, double>> points);

  Kind kind() const noexcept { return kind_; }
  const std::vector<double>& params() const noexcept { return params_; }
  const std::vector<std::pair<double, double>>& points() const noexcept { return points_; }

  double operator()(double t) const;

 private:
  RateFunction(Kind kind, std::vector<double> params,
               std::vector<std::pair<double, double>> points = {});

  Kind kind_;
  std::vector<double> params_;
  std::vector<std::pair<double, double>> points_;
};

// H(t): either one constant matrix or a table of (t, H) samples interpolated
// linearly and clamped at the ends.
class Hamiltonian {
 public:
  explicit Hamiltonian(ComplexMatrix constant);
  explicit Hamiltonian(std::vector<std::pair<double, ComplexMatrix>> samples);

  std::size_t dim() const noexcept { return samples_.front().second.dim(); }
  bool is_constant() const noexcept { return samples_.size() == 1; }
  const std::vector<std::pair<double, ComplexMatrix>>& samples() const noexcept {
    return samples_;
  }

  ComplexMatrix operator()(double t) const;

 private:
  std::vector<std::pair<double, ComplexMatrix>> samples_;
};

struct Dissipator {
  ComplexMatrix op;
  RateFunction rate;
};

// dρ/dt = -i[H(t), ρ] + Σ_k γ_k(t) (V_k ρ V_k† - ½{V_k† V_k, ρ}).
// Immutable once constructed.
class GKLSModel {
 public:
  // Throws kDimensionMismatch for a V_k that is not d×d and kNotHermitian for
  // a non-Hermitian Hamiltonian sample.
  GKLSModel(Hamiltonian hamiltonian, std::vector<Dissipator> dissipators);

  std::size_t dim() const noexcept { return dim_; }
  const Hamiltonian& hamiltonian() const noexcept { return hamiltonian_; }
  const std::vector<Dissipator>& dissipators() const noexcept { return dissipators_; }

 private:
  std::size_t dim_;
  Hamiltonian hamiltonian_;
  std::vector<Dissipator> dissipators_;
};

enum class Construction {
  kFirstOrder,   // I + eps L_t
  kExponential,  // exp(eps L_{t + eps/2})
  kComposed,     // product of two maps
  kExplicit,     // supplied superoperator (identity, fixed channels, Choi-backed)
};

// Λ(t+ε, t) as a d²×d² matrix acting on vec(ρ).
struct IntermediateMap {
  std::size_t dim;
  ComplexMatrix superop;
  double t_start;
  double epsilon;
  Construction construction;

  ComplexMatrix apply(const ComplexMatrix& rho) const;
};

IntermediateMap identity_map(std::size_t dim, double t_start = 0.0, double epsilon = 0.0);

// Wraps a superoperator; throws kDimensionMismatch unless it is d²×d².
IntermediateMap explicit_map(std::size_t dim, ComplexMatrix superop, double t_start = 0.0,
                             double epsilon = 0.0);

ComplexMatrix apply_generator(const GKLSModel& model, double t, const ComplexMatrix& rho);

ComplexMatrix generator_superoperator(const GKLSModel& model, double t);

// Throws kNonPositiveEpsilon for epsilon <= 0.
IntermediateMap intermediate_map(const GKLSModel& model, double t, double epsilon,
                                 Construction mode = Construction::kFirstOrder);

// later ∘ earlier. Throws kTimeMismatch unless later starts where earlier ends
// (within 1e-12) and kDimensionMismatch for different system sizes.
IntermediateMap compose_maps(const IntermediateMap& later, const IntermediateMap& earlier);

// p a + (1 - p) b on the superoperators; both maps must share (d, t, eps).
IntermediateMap mix_maps(double p, const IntermediateMap& a, const IntermediateMap& b);

// Random Markovian model: Hermitian H with normal entries, random V_k and
// constant rates uniform in [0, 1]. Deterministic in `seed`. d in {2, 3, 4}.
GKLSModel sample_markovian_model(std::size_t dim, std::size_t n_dissipators, std::uint64_t seed);

}  // namespace ronm
