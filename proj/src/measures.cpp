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

#include "ronm/measures.hpp"

#include <cmath>
#include <functional>
#include <vector>

#include "ronm/error.hpp"

namespace ronm {

namespace {

constexpr double kTraceTol = 1e-9;

void require_choi_shape(const ChoiMatrix& choi, const char* where) {
  if (!is_hermitian(choi.matrix)) {
    throw Error(ErrorCode::kNotHermitian, std::string(where) + ": Choi matrix is not Hermitian");
  }
  const double tr = choi.matrix.trace().real();
  if (std::abs(tr - 1.0) > kTraceTol) {
    throw Error(ErrorCode::kTraceNotOne,
                std::string(where) + ": trace " + std::to_string(tr) + " differs from 1");
  }
}

ChoiMatrix first_order_choi(const GKLSModel& model, double t, double epsilon) {
  return choi_of_map(intermediate_map(model, t, epsilon, Construction::kFirstOrder));
}

// Choi matrix of I + εL_t written in an orthonormal basis whose first vector
// is |Φ⁺⟩: e₀e₀† + ε H C H with C = (I⊗L_t)(|Φ⁺⟩⟨Φ⁺|) and H the Householder
// reflection exchanging e₀ and |Φ⁺⟩. The spectrum matches first_order_choi,
// but no O(ε) entry is ever added to an O(1) one, so eigenvalues of size ε
// keep their relative accuracy. trace_defect = Tr ρ − 1 is taken from ε·Tr C
// directly instead of from the rounded diagonal.
struct AlignedChoi {
  ComplexMatrix matrix;
  double trace_defect;
};

AlignedChoi aligned_first_order_choi(const GKLSModel& model, double t, double epsilon) {
  if (!(epsilon > 0.0)) throw Error(ErrorCode::kNonPositiveEpsilon, "epsilon must be > 0");
  const std::size_t d = model.dim();
  const std::size_t n = d * d;
  const ChoiMatrix c = choi_of_map(explicit_map(d, generator_superoperator(model, t), t, epsilon));

  std::vector<Complex> w(n, 0.0);
  const double amp = 1.0 / std::sqrt(static_cast<double>(d));
  for (std::size_t i = 0; i < d; ++i) w[i * d + i] = -amp;
  w[0] += 1.0;
  double w2 = 0.0;
  for (const auto& x : w) w2 += std::norm(x);
  ComplexMatrix h = ComplexMatrix::identity(n);
  h -= ComplexMatrix::outer(w) * (2.0 / w2);

  ComplexMatrix m = (h * c.matrix * h) * epsilon;
  m = 0.5 * (m + m.adjoint());
  const double defect = m.trace().real();
  m(0, 0) += 1.0;
  return {std::move(m), defect};
}

double richardson(const std::function<double(double)>& r, double epsilon) {
  return 2.0 * r(0.5 * epsilon) - r(epsilon);
}

double integrate(const std::function<double(double)>& f, double t0, double t1, int steps,
                 bool refine_kinks) {
  if (!(t1 > t0) || steps < 2 || steps % 2 != 0) {
    throw Error(ErrorCode::kBadInterval, "need t1 > t0 and an even panel count >= 2");
  }
  const double h = (t1 - t0) / steps;
  std::vector<double> samples(static_cast<std::size_t>(steps) + 1);
  for (int i = 0; i <= steps; ++i) samples[i] = f(t0 + i * h);
  if (!refine_kinks) return simpson(samples, h);

  // A kink sits wherever the integrand leaves or reaches zero; locate each to
  // 1e-8 by bisection and integrate the smooth pieces on their own.
  constexpr double kActive = 1e-9;
  std::vector<double> cuts{t0};
  for (int i = 0; i < steps; ++i) {
    const bool a = samples[i] > kActive;
    const bool b = samples[i + 1] > kActive;
    if (a == b) continue;
    double lo = t0 + i * h, hi = t0 + (i + 1) * h;
    while (hi - lo > 1e-8) {
      const double mid = 0.5 * (lo + hi);
      if ((f(mid) > kActive) == a) lo = mid; else hi = mid;
    }
    cuts.push_back(0.5 * (lo + hi));
  }
  cuts.push_back(t1);

  double total = 0.0;
  for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
    const double a = cuts[k], b = cuts[k + 1];
    if (!(b > a)) continue;
    int n = static_cast<int>(std::ceil(steps * (b - a) / (t1 - t0)));
    n = std::max(2, n + (n % 2));
    const double hk = (b - a) / n;
    std::vector<double> piece(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) piece[i] = f(a + i * hk);
    total += simpson(piece, hk);
  }
  return total;
}

}  // namespace

double ronm_closed_form(const ChoiMatrix& choi) {
  require_choi_shape(choi, "ronm_closed_form");
  // ‖ρ‖₁ − 1 = (‖ρ‖₁ − Tr ρ) + (Tr ρ − 1); the split keeps tiny values exact.
  const double excess = trace_norm_excess(choi.matrix) + (choi.matrix.trace().real() - 1.0);
  return std::max(0.0, 0.5 * excess);
}

OptimalDecomposition optimal_decomposition(const ChoiMatrix& choi) {
  require_choi_shape(choi, "optimal_decomposition");
  const auto eig = hermitian_eig(choi.matrix);
  ComplexMatrix plus = spectral_apply(eig, [](double l) { return l > kZeroTol ? l : 0.0; });
  ComplexMatrix minus = spectral_apply(eig, [](double l) { return l < -kZeroTol ? -l : 0.0; });
  const double s = minus.trace().real();

  if (s == 0.0) {
    return {0.0, std::move(plus), std::move(minus), choi.matrix, std::nullopt};
  }
  ComplexMatrix delta_star = plus * (1.0 / (1.0 + s));
  ComplexMatrix tau_star = minus * (1.0 / s);
  return {s, std::move(plus), std::move(minus), std::move(delta_star), std::move(tau_star)};
}

Witness dual_witness(const ChoiMatrix& choi) {
  require_choi_shape(choi, "dual_witness");
  const auto eig = hermitian_eig(choi.matrix);
  ComplexMatrix x = spectral_apply(eig, [](double l) { return l < -kZeroTol ? 0.0 : 1.0; });
  const double value = trace_product(choi.matrix, x) - 1.0;
  return {std::move(x), value};
}

PrimalSolution primal_solution(const ChoiMatrix& choi) {
  require_choi_shape(choi, "primal_value");
  const auto eig = hermitian_eig(choi.matrix);
  ComplexMatrix delta = spectral_apply(eig, [](double l) { return l > 0.0 ? l : 0.0; });
  const ComplexMatrix slack = delta - choi.matrix;
  // Symmetrize away rounding before the feasibility eigenvalue checks.
  const double min_delta = min_eigenvalue(0.5 * (delta + delta.adjoint()));
  const double min_slack = min_eigenvalue(0.5 * (slack + slack.adjoint()));
  const double value = delta.trace().real() - 1.0;
  return {value, std::move(delta), min_delta, min_slack};
}

double primal_value(const ChoiMatrix& choi) { return primal_solution(choi).value; }

double ronm_rate(const GKLSModel& model, double t, double epsilon) {
  return richardson(
      [&](double eps) {
        const AlignedChoi a = aligned_first_order_choi(model, t, eps);
        return std::max(0.0, 0.5 * (trace_norm_excess(a.matrix) + a.trace_defect)) / eps;
      },
      epsilon);
}

double rhp_integrand(const GKLSModel& model, double t, double epsilon) {
  return richardson(
      [&](double eps) {
        const AlignedChoi a = aligned_first_order_choi(model, t, eps);
        return (trace_norm_excess(a.matrix) + a.trace_defect) / eps;
      },
      epsilon);
}

double total_ronm(const GKLSModel& model, double t0, double t1, int steps,
                  const QuadratureOptions& options) {
  return integrate([&](double t) { return ronm_rate(model, t, options.epsilon); }, t0, t1, steps,
                   options.refine_kinks);
}

double total_rhp(const GKLSModel& model, double t0, double t1, int steps,
                 const QuadratureOptions& options) {
  return integrate([&](double t) { return rhp_integrand(model, t, options.epsilon); }, t0, t1,
                   steps, options.refine_kinks);
}

double normalized_ronm(double total) {
  if (total < 0.0 || std::isnan(total)) {
    throw Error(ErrorCode::kNegativeInput, "normalized_ronm needs total >= 0");
  }
  if (std::isinf(total)) return 1.0;
  return total / (1.0 + total);
}

double simpson(std::span<const double> samples, double h) {
  const std::size_t n = samples.size() - 1;
  if (samples.size() < 3 || n % 2 != 0) {
    throw Error(ErrorCode::kBadInterval, "simpson needs an even number of panels");
  }
  double acc = samples.front() + samples.back();
  for (std::size_t i = 1; i < n; ++i) acc += (i % 2 == 1 ? 4.0 : 2.0) * samples[i];
  return acc * h / 3.0;
}

MeasureReport measure_at(const GKLSModel& model, double t, double epsilon) {
  const ChoiMatrix choi = first_order_choi(model, t, epsilon);
  MeasureReport r{t,
                  epsilon,
                  ronm_closed_form(choi),
                  ronm_rate(model, t, epsilon),
                  rhp_integrand(model, t, epsilon),
                  optimal_decomposition(choi),
                  dual_witness(choi),
                  0.0,
                  0.0,
                  is_cp(choi),
                  {},
                  std::nullopt};
  r.primal = primal_value(choi);
  r.duality_gap = std::abs(r.primal - r.witness.value);
  r.delta_star_marginal = is_tp_marginal({choi.sys_dim, r.decomposition.delta_star, t, epsilon});
  if (r.decomposition.tau_star) {
    r.tau_star_marginal = is_tp_marginal({choi.sys_dim, *r.decomposition.tau_star, t, epsilon});
  }
  return r;
}

}  // namespace ronm
