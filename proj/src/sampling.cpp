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

#include "ronm/sampling.hpp"

#include <cmath>

#include "ronm/error.hpp"

namespace ronm {

ComplexMatrix random_ginibre(std::size_t dim, Rng& rng) {
  std::normal_distribution<double> normal(0.0, std::sqrt(0.5));
  ComplexMatrix g(dim);
  for (auto& x : g.entries()) {
    const double re = normal(rng);
    const double im = normal(rng);
    x = Complex(re, im);
  }
  return g;
}

ComplexMatrix random_hermitian(std::size_t dim, Rng& rng) {
  const ComplexMatrix g = random_ginibre(dim, rng);
  return 0.5 * (g + g.adjoint());
}

ComplexMatrix random_unitary(std::size_t dim, Rng& rng) {
  return matrix_exp(Complex(0.0, 1.0) * random_hermitian(dim, rng));
}

ComplexMatrix random_density(std::size_t dim, Rng& rng, std::size_t rank) {
  if (rank == 0 || rank > dim) rank = dim;
  ComplexMatrix g = random_ginibre(dim, rng);
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = rank; j < dim; ++j) g(i, j) = 0.0;
  }
  ComplexMatrix rho = g * g.adjoint();
  rho *= Complex(1.0 / rho.trace().real());
  return 0.5 * (rho + rho.adjoint());
}

ComplexMatrix random_trace_one_hermitian(std::size_t dim, Rng& rng, double spread) {
  ComplexMatrix h = random_hermitian(dim, rng);
  const Complex shift = h.trace() / static_cast<double>(dim);
  for (std::size_t i = 0; i < dim; ++i) h(i, i) -= shift;
  const auto eig = hermitian_eig(h);
  const double scale =
      std::max(std::abs(eig.eigenvalues.front()), std::abs(eig.eigenvalues.back()));
  ComplexMatrix out = ComplexMatrix::identity(dim);
  if (scale > 0.0) out += h * (spread / scale);
  out *= Complex(1.0 / static_cast<double>(dim));
  // Pin the trace exactly; the traceless part carries rounding only.
  const double tr = out.trace().real();
  for (std::size_t i = 0; i < dim; ++i) out(i, i) += (1.0 - tr) / static_cast<double>(dim);
  return out;
}

std::vector<ComplexMatrix> random_povm(std::size_t dim, std::size_t outcomes, Rng& rng) {
  if (outcomes == 0) throw Error(ErrorCode::kInvalidArgument, "random_povm: zero outcomes");
  std::vector<ComplexMatrix> g;
  ComplexMatrix total(dim);
  for (std::size_t k = 0; k < outcomes; ++k) {
    const ComplexMatrix a = random_ginibre(dim, rng);
    g.push_back(a * a.adjoint());
    total += g.back();
  }
  const auto eig = hermitian_eig(0.5 * (total + total.adjoint()));
  const ComplexMatrix inv_sqrt =
      spectral_apply(eig, [](double lambda) { return 1.0 / std::sqrt(lambda); });
  std::vector<ComplexMatrix> povm;
  ComplexMatrix sum(dim);
  for (auto& gi : g) {
    ComplexMatrix m = inv_sqrt * gi * inv_sqrt;
    povm.push_back(0.5 * (m + m.adjoint()));
    sum += povm.back();
  }
  // Absorb the residual so the elements sum to I to machine precision.
  povm.back() += ComplexMatrix::identity(dim) - sum;
  return povm;
}

std::vector<double> random_probabilities(std::size_t n, Rng& rng) {
  std::exponential_distribution<double> expo(1.0);
  std::vector<double> p(n);
  double total = 0.0;
  for (auto& x : p) {
    x = expo(rng);
    total += x;
  }
  for (auto& x : p) x /= total;
  return p;
}

GKLSModel random_gkls_model(std::size_t dim, std::size_t n_dissipators, double rate_lo,
                            double rate_hi, Rng& rng) {
  ComplexMatrix h = random_hermitian(dim, rng);
  std::uniform_real_distribution<double> rate(rate_lo, rate_hi);
  std::vector<Dissipator> dissipators;
  for (std::size_t k = 0; k < n_dissipators; ++k) {
    ComplexMatrix v = random_ginibre(dim, rng);
    double frob = 0.0;
    for (const auto& x : v.entries()) frob += std::norm(x);
    v *= Complex(1.0 / std::sqrt(frob));
    dissipators.push_back({std::move(v), RateFunction::constant(rate(rng))});
  }
  return GKLSModel(Hamiltonian(std::move(h)), std::move(dissipators));
}

IntermediateMap random_channel(std::size_t dim, std::size_t n_kraus, Rng& rng, double t_start,
                               double epsilon) {
  if (n_kraus == 0) throw Error(ErrorCode::kInvalidArgument, "random_channel: zero Kraus operators");
  std::vector<ComplexMatrix> g;
  ComplexMatrix total(dim);
  for (std::size_t k = 0; k < n_kraus; ++k) {
    g.push_back(random_ginibre(dim, rng));
    total += g.back().adjoint() * g.back();
  }
  const ComplexMatrix inv_sqrt = spectral_apply(
      hermitian_eig(0.5 * (total + total.adjoint())),
      [](double lambda) { return 1.0 / std::sqrt(lambda); });
  ComplexMatrix superop(dim * dim);
  for (const auto& gi : g) {
    const ComplexMatrix k = gi * inv_sqrt;
    superop += kron(k.conj(), k);
  }
  return explicit_map(dim, std::move(superop), t_start, epsilon);
}

IntermediateMap random_non_cp_map(std::size_t dim, Rng& rng) {
  std::uniform_int_distribution<std::size_t> count(1, 2);
  std::uniform_real_distribution<double> eps(0.01, 0.2);
  const std::size_t n = count(rng);
  const GKLSModel model = random_gkls_model(dim, n, -1.0, -0.1, rng);
  return intermediate_map(model, 0.0, eps(rng), Construction::kFirstOrder);
}

}  // namespace ronm
