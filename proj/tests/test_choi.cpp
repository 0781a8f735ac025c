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

#include "ronm/choi.hpp"
#include "ronm/error.hpp"
#include "ronm/sampling.hpp"

using namespace ronm;

namespace {

const ComplexMatrix kSz{{1.0, 0.0}, {0.0, -1.0}};

GKLSModel dephasing(double gamma) {
  return GKLSModel(Hamiltonian(ComplexMatrix(2)), {{kSz, RateFunction::constant(gamma)}});
}

// ρ ↦ Tr(ρ)·I/d as a superoperator: vec(I)·vec(I)ᵀ/d.
IntermediateMap depolarizing(std::size_t d) {
  ComplexMatrix s(d * d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) s(i * d + i, j * d + j) = 1.0 / static_cast<double>(d);
  }
  return explicit_map(d, s);
}

}  // namespace

TEST_CASE("maximally entangled projector") {
  const ComplexMatrix phi = maximally_entangled(2);
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) {
      const bool corner = (i == 0 || i == 3) && (j == 0 || j == 3);
      CHECK(std::abs(phi(i, j) - (corner ? 0.5 : 0.0)) <= 1e-16);
    }
  }
  for (std::size_t d : {2, 3, 4}) {
    const ComplexMatrix p = maximally_entangled(d);
    CHECK(std::abs(p.trace() - 1.0) <= 1e-15);
    CHECK(max_abs_diff(p * p, p) <= 1e-15);
    const ComplexMatrix half = ComplexMatrix::identity(d) * (1.0 / static_cast<double>(d));
    CHECK(max_abs_diff(partial_trace_first(p, d), half) <= 1e-15);
    CHECK(max_abs_diff(partial_trace_second(p, d), half) <= 1e-15);
  }
  CHECK_THROWS_AS(maximally_entangled(1), Error);
}

TEST_CASE("Choi matrices of simple maps") {
  const ChoiMatrix id = choi_of_map(identity_map(2, 0.5, 0.1));
  CHECK(max_abs_diff(id.matrix, maximally_entangled(2)) <= 1e-16);
  CHECK(id.t_start == 0.5);
  CHECK(id.epsilon == 0.1);
  const auto e = hermitian_eig(id.matrix);
  CHECK(std::abs(e.eigenvalues[0] - 1.0) <= 1e-15);
  for (int i = 1; i < 4; ++i) CHECK(std::abs(e.eigenvalues[i]) <= 1e-15);

  CHECK(max_abs_diff(choi_of_map(depolarizing(2)).matrix, ComplexMatrix::identity(4) * 0.25) <=
        1e-16);
}

TEST_CASE("first-order dephasing Choi matrix") {
  for (double eg : {-0.01, 0.02, -0.1}) {
    const double gamma = eg < 0 ? -1.0 : 1.0;
    const double eps = std::abs(eg);
    const ChoiMatrix c = choi_of_map(intermediate_map(dephasing(gamma), 0.0, eps));
    const ComplexMatrix phi = maximally_entangled(2);
    const ComplexMatrix z = kron(ComplexMatrix::identity(2), kSz);
    const ComplexMatrix expected = phi * (1.0 - eg) + z * phi * z * eg;
    CHECK(max_abs_diff(c.matrix, expected) <= 1e-15);
    const auto ev = hermitian_eig(c.matrix).eigenvalues;
    CHECK(std::abs(ev[0] - (1.0 - eg)) <= 1e-15);
    if (eg < 0) {
      CHECK(std::abs(ev[3] - eg) <= 1e-15);
    } else {
      CHECK(std::abs(ev[1] - eg) <= 1e-15);
    }
    CHECK(is_tp_marginal(c).tp);
  }
}

TEST_CASE("inverse Choi round trip") {
  Rng rng(41);
  const ComplexMatrix rho = random_density(2, rng);
  CHECK(max_abs_diff(apply_from_choi(choi_of_map(identity_map(2)), rho), rho) <= 1e-15);
  const ChoiMatrix dep{2, ComplexMatrix::identity(4) * 0.25};
  CHECK(max_abs_diff(apply_from_choi(dep, rho), ComplexMatrix::identity(2) * 0.5) <= 1e-15);
  CHECK_THROWS_AS(apply_from_choi(dep, ComplexMatrix(3)), Error);

  for (int k = 0; k < 50; ++k) {
    const std::size_t d = 2 + static_cast<std::size_t>(k % 3);
    const IntermediateMap map =
        k % 2 == 0 ? random_channel(d, 1 + k % 3, rng) : random_non_cp_map(d, rng);
    const ComplexMatrix r = random_density(d, rng);
    const ChoiMatrix c = choi_of_map(map);
    CHECK(max_abs_diff(apply_from_choi(c, r), map.apply(r)) <= 1e-10);
    CHECK(max_abs_diff(map_from_choi(c).superop, map.superop) <= 1e-10);
  }
}

TEST_CASE("complete positivity test") {
  const CpCheck id = is_cp(choi_of_map(identity_map(2)));
  CHECK(id.cp);
  CHECK(std::abs(id.min_eigenvalue) <= 1e-15);

  const CpCheck neg = is_cp(choi_of_map(intermediate_map(dephasing(-1.0), 0.0, 0.01)));
  CHECK_FALSE(neg.cp);
  CHECK(std::abs(neg.min_eigenvalue + 0.01) <= 1e-15);

  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const GKLSModel m = sample_markovian_model(2 + seed % 3, 1 + seed % 3, seed);
    const CpCheck c = is_cp(choi_of_map(intermediate_map(m, 0.0, 1e-6)));
    CHECK(c.cp);
    CHECK(c.min_eigenvalue >= -1e-10);
  }
}

TEST_CASE("trace and trace norm of Choi matrices") {
  Rng rng(43);
  for (int k = 0; k < 40; ++k) {
    const std::size_t d = 2 + static_cast<std::size_t>(k % 3);
    const bool cp = k % 2 == 0;
    const IntermediateMap map = cp ? random_channel(d, 2, rng) : random_non_cp_map(d, rng);
    const ChoiMatrix c = choi_of_map(map);
    CHECK(std::abs(c.matrix.trace() - 1.0) <= 1e-9);
    const double tn = trace_norm(c.matrix);
    CHECK(is_cp(c).cp == cp);
    if (cp) {
      CHECK(std::abs(tn - 1.0) <= kZeroTol);
    } else {
      CHECK(tn > 1.0 + kZeroTol);
    }
  }
}

TEST_CASE("trace-preservation marginal") {
  const TpCheck id = is_tp_marginal(choi_of_map(identity_map(3)));
  CHECK(id.tp);
  CHECK(id.deviation == 0.0);
  for (double gamma : {-2.0, 0.5}) {
    for (double eps : {1e-6, 0.1}) {
      CHECK(is_tp_marginal(choi_of_map(intermediate_map(dephasing(gamma), 0.0, eps))).tp);
    }
  }
  // A non-trace-preserving map is flagged: ρ ↦ 2ρ scaled back to trace one by a marginal skew.
  ComplexMatrix skew = maximally_entangled(2);
  skew(0, 0) += 0.05;
  skew(3, 3) -= 0.05;
  const TpCheck bad = is_tp_marginal({2, skew});
  CHECK_FALSE(bad.tp);
  CHECK(std::abs(bad.deviation - 0.05) <= 1e-15);
}

TEST_CASE("Choi of a composition is the channel applied to the Choi matrix") {
  Rng rng(47);
  for (int k = 0; k < 30; ++k) {
    const std::size_t d = 2 + static_cast<std::size_t>(k % 3);
    const IntermediateMap lambda = random_non_cp_map(d, rng);
    const IntermediateMap gamma =
        random_channel(d, 1 + k % 3, rng, lambda.t_start + lambda.epsilon);
    const ComplexMatrix lhs = choi_of_map(compose_maps(gamma, lambda)).matrix;
    const ComplexMatrix rhs = apply_on_second(gamma, choi_of_map(lambda).matrix);
    CHECK(max_abs_diff(lhs, rhs) <= 1e-10);
    const ChoiMatrix gc = choi_of_map(gamma);
    CHECK(max_abs_diff(apply_on_second_from_choi(gc, choi_of_map(lambda).matrix), rhs) <= 1e-10);
  }
}
