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

#include "ronm/choi.hpp"

#include <cmath>

#include "ronm/error.hpp"

namespace ronm {

namespace {

void require_bipartite(const ComplexMatrix& m, std::size_t d, const char* where) {
  if (m.dim() != d * d) {
    throw Error(ErrorCode::kDimensionMismatch, std::string(where) + ": expected " +
                                                   std::to_string(d * d) + "x" +
                                                   std::to_string(d * d));
  }
}

}  // namespace

ComplexMatrix maximally_entangled(std::size_t d) {
  if (d < 2) throw Error(ErrorCode::kInvalidArgument, "maximally_entangled requires d >= 2");
  ComplexMatrix phi(d * d);
  const double w = 1.0 / static_cast<double>(d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) phi(i * d + i, j * d + j) = w;
  }
  return phi;
}

ComplexMatrix partial_trace_first(const ComplexMatrix& m, std::size_t d) {
  require_bipartite(m, d, "partial_trace_first");
  ComplexMatrix out(d);
  for (std::size_t a = 0; a < d; ++a) {
    for (std::size_t k = 0; k < d; ++k) {
      for (std::size_t l = 0; l < d; ++l) out(k, l) += m(a * d + k, a * d + l);
    }
  }
  return out;
}

ComplexMatrix partial_trace_second(const ComplexMatrix& m, std::size_t d) {
  require_bipartite(m, d, "partial_trace_second");
  ComplexMatrix out(d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      for (std::size_t k = 0; k < d; ++k) out(i, j) += m(i * d + k, j * d + k);
    }
  }
  return out;
}

ComplexMatrix apply_on_second(const IntermediateMap& map, const ComplexMatrix& bipartite) {
  const std::size_t d = map.dim;
  require_bipartite(bipartite, d, "apply_on_second");
  ComplexMatrix out(d * d);
  ComplexMatrix block(d);
  for (std::size_t a = 0; a < d; ++a) {
    for (std::size_t b = 0; b < d; ++b) {
      for (std::size_t k = 0; k < d; ++k) {
        for (std::size_t l = 0; l < d; ++l) block(k, l) = bipartite(a * d + k, b * d + l);
      }
      const ComplexMatrix mapped = map.apply(block);
      for (std::size_t k = 0; k < d; ++k) {
        for (std::size_t l = 0; l < d; ++l) out(a * d + k, b * d + l) = mapped(k, l);
      }
    }
  }
  return out;
}

ChoiMatrix choi_of_map(const IntermediateMap& map) {
  return {map.dim, apply_on_second(map, maximally_entangled(map.dim)), map.t_start, map.epsilon};
}

IntermediateMap map_from_choi(const ChoiMatrix& choi) {
  const std::size_t d = choi.sys_dim;
  require_bipartite(choi.matrix, d, "map_from_choi");
  // Λ(|i⟩⟨j|)(k, l) = d · choi(i d + k, j d + l)
  ComplexMatrix superop(d * d);
  const double scale = static_cast<double>(d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      for (std::size_t k = 0; k < d; ++k) {
        for (std::size_t l = 0; l < d; ++l) {
          superop(k + l * d, i + j * d) = scale * choi.matrix(i * d + k, j * d + l);
        }
      }
    }
  }
  return explicit_map(d, std::move(superop), choi.t_start, choi.epsilon);
}

ComplexMatrix apply_from_choi(const ChoiMatrix& choi, const ComplexMatrix& rho) {
  const std::size_t d = choi.sys_dim;
  require_bipartite(choi.matrix, d, "apply_from_choi");
  if (rho.dim() != d) throw Error(ErrorCode::kDimensionMismatch, "apply_from_choi: state");
  const ComplexMatrix lifted = kron(rho.transpose(), ComplexMatrix::identity(d)) * choi.matrix;
  return static_cast<double>(d) * partial_trace_first(lifted, d);
}

ComplexMatrix apply_on_second_from_choi(const ChoiMatrix& choi, const ComplexMatrix& bipartite) {
  const std::size_t d = choi.sys_dim;
  require_bipartite(bipartite, d, "apply_on_second_from_choi");
  ComplexMatrix out(d * d);
  ComplexMatrix block(d);
  for (std::size_t a = 0; a < d; ++a) {
    for (std::size_t b = 0; b < d; ++b) {
      for (std::size_t k = 0; k < d; ++k) {
        for (std::size_t l = 0; l < d; ++l) block(k, l) = bipartite(a * d + k, b * d + l);
      }
      const ComplexMatrix mapped = apply_from_choi(choi, block);
      for (std::size_t k = 0; k < d; ++k) {
        for (std::size_t l = 0; l < d; ++l) out(a * d + k, b * d + l) = mapped(k, l);
      }
    }
  }
  return out;
}

CpCheck is_cp(const ChoiMatrix& choi) {
  const double lambda_min = min_eigenvalue(choi.matrix);
  return {lambda_min >= -kZeroTol, lambda_min};
}

TpCheck is_tp_marginal(const ChoiMatrix& choi) {
  const std::size_t d = choi.sys_dim;
  const ComplexMatrix marginal = partial_trace_second(choi.matrix, d);
  const double deviation =
      max_abs_diff(marginal, ComplexMatrix::identity(d) * (1.0 / static_cast<double>(d)));
  return {deviation <= 1e-9, deviation};
}

}  // namespace ronm
