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

// Seeded random objects shared by the verification suites, the Markovian
// baseline in the games module, and the tests.

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "ronm/dynamics.hpp"
#include "ronm/numkernel.hpp"

namespace ronm {

using Rng = std::mt19937_64;

// Entries with independent N(0, 1/2) real and imaginary parts.
ComplexMatrix random_ginibre(std::size_t dim, Rng& rng);

// (G + G†)/2 for a Ginibre G.
ComplexMatrix random_hermitian(std::size_t dim, Rng& rng);

// exp(iH) for a random Hermitian H.
ComplexMatrix random_unitary(std::size_t dim, Rng& rng);

// G G† / Tr[G G†] for a Ginibre G of the given rank.
ComplexMatrix random_density(std::size_t dim, Rng& rng, std::size_t rank = 0);

// Trace-one Hermitian I/n + spread * H0 / n, H0 traceless with unit spectral
// norm; spread > 1 can push the minimum eigenvalue below zero.
ComplexMatrix random_trace_one_hermitian(std::size_t dim, Rng& rng, double spread);

// k-outcome POVM S^{-1/2} G_i S^{-1/2} with S = Σ G_i and G_i random PSD.
std::vector<ComplexMatrix> random_povm(std::size_t dim, std::size_t outcomes, Rng& rng);

// Probability vector drawn from a flat Dirichlet.
std::vector<double> random_probabilities(std::size_t n, Rng& rng);

// GKLS model whose constant rates are uniform in [rate_lo, rate_hi]; with
// rate_lo < 0 the model is generally non-Markovian.
GKLSModel random_gkls_model(std::size_t dim, std::size_t n_dissipators, double rate_lo,
                            double rate_hi, Rng& rng);

// CPTP map with Kraus operators G_k S^{-1/2}, S = Σ G_k†G_k, G_k Ginibre.
IntermediateMap random_channel(std::size_t dim, std::size_t n_kraus, Rng& rng,
                               double t_start = 0.0, double epsilon = 0.0);

// First-order map I + εL at t = 0 for a GKLS model whose rates are all
// negative, ε uniform in [0.01, 0.2]. Never CP.
IntermediateMap random_non_cp_map(std::size_t dim, Rng& rng);

}  // namespace ronm
