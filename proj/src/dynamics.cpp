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

#include "ronm/dynamics.hpp"

#include <algorithm>
#include <cmath>

#include "ronm/error.hpp"
#include "ronm/sampling.hpp"

namespace ronm {

RateFunction::RateFunction(Kind kind, std::vector<double> params,
                           std::vector<std::pair<double, double>> points)
    : kind_(kind), params_(std::move(params)), points_(std::move(points)) {}

RateFunction RateFunction::constant(double value) { return RateFunction(Kind::kConstant, {value}); }

RateFunction RateFunction::sinusoid(double amplitude, double omega, double phase, double offset) {
  return RateFunction(Kind::kSinusoid, {amplitude, omega, phase, offset});
}

RateFunction RateFunction::polynomial(std::vector<double> coefficients) {
  if (coefficients.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "polynomial rate needs at least one coefficient");
  }
  return RateFunction(Kind::kPolynomial, std::move(coefficients));
}

RateFunction RateFunction::table(std::vector<std::pair<double, double>> points) {
  if (points.empty()) throw Error(ErrorCode::kInvalidArgument, "rate table is empty");
  for (std::size_t k = 1; k < points.size(); ++k) {
    if (!(points[k].first > points[k - 1].first)) {
      throw Error(ErrorCode::kInvalidArgument, "rate table times must be strictly increasing");
    }
  }
  return RateFunction(Kind::kTable, {}, std::move(points));
}

double RateFunction::operator()(double t) const {
  switch (kind_) {
    case Kind::kConstant:
      return params_[0];
    case Kind::kSinusoid:
      return params_[0] * std::sin(params_[1] * t + params_[2]) + params_[3];
    case Kind::kPolynomial: {
      double acc = 0.0;
      for (auto it = params_.rbegin(); it != params_.rend(); ++it) acc = acc * t + *it;
      return acc;
    }
    case Kind::kTable: {
      if (t <= points_.front().first) return points_.front().second;
      if (t >= points_.back().first) return points_.back().second;
      const auto hi = std::upper_bound(points_.begin(), points_.end(), t,
                                       [](double x, const auto& p) { return x < p.first; });
      const auto lo = hi - 1;
      const double w = (t - lo->first) / (hi->first - lo->first);
      return (1.0 - w) * lo->second + w * hi->second;
    }
  }
  return 0.0;
}

Hamiltonian::Hamiltonian(ComplexMatrix constant) {
  samples_.emplace_back(0.0, std::move(constant));
}

Hamiltonian::Hamiltonian(std::vector<std::pair<double, ComplexMatrix>> samples)
    : samples_(std::move(samples)) {
  if (samples_.empty()) throw Error(ErrorCode::kInvalidArgument, "Hamiltonian table is empty");
  for (std::size_t k = 1; k < samples_.size(); ++k) {
    if (samples_[k].second.dim() != samples_[0].second.dim()) {
      throw Error(ErrorCode::kDimensionMismatch, "Hamiltonian samples differ in dimension");
    }
    if (!(samples_[k].first > samples_[k - 1].first)) {
      throw Error(ErrorCode::kInvalidArgument, "Hamiltonian table times must be increasing");
    }
  }
}

ComplexMatrix Hamiltonian::operator()(double t) const {
  if (samples_.size() == 1 || t <= samples_.front().first) return samples_.front().second;
  if (t >= samples_.back().first) return samples_.back().second;
  const auto hi = std::upper_bound(samples_.begin(), samples_.end(), t,
                                   [](double x, const auto& s) { return x < s.first; });
  const auto lo = hi - 1;
  const double w = (t - lo->first) / (hi->first - lo->first);
  return (1.0 - w) * lo->second + w * hi->second;
}

GKLSModel::GKLSModel(Hamiltonian hamiltonian, std::vector<Dissipator> dissipators)
    : dim_(hamiltonian.dim()),
      hamiltonian_(std::move(hamiltonian)),
      dissipators_(std::move(dissipators)) {
  for (const auto& [t, h] : hamiltonian_.samples()) {
    if (!is_hermitian(h)) {
      throw Error(ErrorCode::kNotHermitian, "Hamiltonian sample at t=" + std::to_string(t));
    }
  }
  for (std::size_t k = 0; k < dissipators_.size(); ++k) {
    if (dissipators_[k].op.dim() != dim_) {
      throw Error(ErrorCode::kDimensionMismatch,
                  "dissipator " + std::to_string(k) + " is not " + std::to_string(dim_) + "x" +
                      std::to_string(dim_));
    }
  }
}

ComplexMatrix IntermediateMap::apply(const ComplexMatrix& rho) const {
  if (rho.dim() != dim) throw Error(ErrorCode::kDimensionMismatch, "IntermediateMap::apply");
  const auto v = vec(rho);
  return unvec(superop.apply(v));
}

IntermediateMap identity_map(std::size_t dim, double t_start, double epsilon) {
  return {dim, ComplexMatrix::identity(dim * dim), t_start, epsilon, Construction::kExplicit};
}

IntermediateMap explicit_map(std::size_t dim, ComplexMatrix superop, double t_start,
                             double epsilon) {
  if (superop.dim() != dim * dim) {
    throw Error(ErrorCode::kDimensionMismatch, "superoperator must be d^2 x d^2");
  }
  return {dim, std::move(superop), t_start, epsilon, Construction::kExplicit};
}

ComplexMatrix apply_generator(const GKLSModel& model, double t, const ComplexMatrix& rho) {
  if (rho.dim() != model.dim()) {
    throw Error(ErrorCode::kDimensionMismatch, "apply_generator: state dimension");
  }
  const Complex minus_i(0.0, -1.0);
  const ComplexMatrix h = model.hamiltonian()(t);
  ComplexMatrix out = minus_i * (h * rho - rho * h);
  for (const auto& d : model.dissipators()) {
    const double gamma = d.rate(t);
    if (gamma == 0.0) continue;
    const ComplexMatrix vd = d.op.adjoint();
    const ComplexMatrix vdv = vd * d.op;
    out += gamma * (d.op * rho * vd - 0.5 * (vdv * rho + rho * vdv));
  }
  return out;
}

ComplexMatrix generator_superoperator(const GKLSModel& model, double t) {
  // vec(A X B) = (Bᵀ ⊗ A) vec(X)
  const std::size_t d = model.dim();
  const ComplexMatrix id = ComplexMatrix::identity(d);
  const ComplexMatrix h = model.hamiltonian()(t);
  ComplexMatrix s = Complex(0.0, -1.0) * (kron(id, h) - kron(h.transpose(), id));
  for (const auto& diss : model.dissipators()) {
    const double gamma = diss.rate(t);
    if (gamma == 0.0) continue;
    const ComplexMatrix vdv = diss.op.adjoint() * diss.op;
    s += gamma * (kron(diss.op.conj(), diss.op) - 0.5 * kron(id, vdv) -
                  0.5 * kron(vdv.transpose(), id));
  }
  return s;
}

IntermediateMap intermediate_map(const GKLSModel& model, double t, double epsilon,
                                 Construction mode) {
  if (!(epsilon > 0.0)) {
    throw Error(ErrorCode::kNonPositiveEpsilon, "epsilon must be > 0");
  }
  const std::size_t d = model.dim();
  switch (mode) {
    case Construction::kFirstOrder: {
      ComplexMatrix superop = ComplexMatrix::identity(d * d);
      superop += epsilon * generator_superoperator(model, t);
      return {d, std::move(superop), t, epsilon, mode};
    }
    case Construction::kExponential:
      return {d, matrix_exp(epsilon * generator_superoperator(model, t + 0.5 * epsilon)), t,
              epsilon, mode};
    default:
      throw Error(ErrorCode::kInvalidArgument,
                  "intermediate_map builds first-order or exponential maps only");
  }
}

IntermediateMap compose_maps(const IntermediateMap& later, const IntermediateMap& earlier) {
  if (later.dim != earlier.dim) throw Error(ErrorCode::kDimensionMismatch, "compose_maps");
  if (std::abs(later.t_start - (earlier.t_start + earlier.epsilon)) > 1e-12) {
    throw Error(ErrorCode::kTimeMismatch, "later map must start where the earlier one ends");
  }
  return {earlier.dim, later.superop * earlier.superop, earlier.t_start,
          earlier.epsilon + later.epsilon, Construction::kComposed};
}

IntermediateMap mix_maps(double p, const IntermediateMap& a, const IntermediateMap& b) {
  if (a.dim != b.dim) throw Error(ErrorCode::kDimensionMismatch, "mix_maps");
  if (!(p >= 0.0 && p <= 1.0)) throw Error(ErrorCode::kInvalidArgument, "mix weight outside [0,1]");
  Construction c = a.construction == b.construction ? a.construction : Construction::kExplicit;
  return {a.dim, p * a.superop + (1.0 - p) * b.superop, a.t_start, a.epsilon, c};
}

GKLSModel sample_markovian_model(std::size_t dim, std::size_t n_dissipators, std::uint64_t seed) {
  if (dim < 2 || dim > 4) {
    throw Error(ErrorCode::kInvalidArgument, "sample_markovian_model supports d in {2,3,4}");
  }
  Rng rng(seed);
  return random_gkls_model(dim, n_dissipators, 0.0, 1.0, rng);
}

}  // namespace ronm
