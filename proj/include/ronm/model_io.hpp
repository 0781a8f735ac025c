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

#include <cstddef>
#include <stdexcept>
#include <string>

#include "json.hpp"
#include "ronm/dynamics.hpp"
#include "ronm/numkernel.hpp"

namespace ronm {

// Raised for malformed model files. field() is a dotted path such as
// "dissipators[1].rate.params".
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string field, const std::string& message)
      : std::runtime_error(field + ": " + message), field_(std::move(field)) {}

  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

struct Horizon {
  double t0 = 0.0;
  double t1 = 1.0;
  int steps = 100;
};

struct ModelSpec {
  std::size_t dim;
  GKLSModel model;
  Horizon horizon;
};

// Named operators: "zero", "identity" (any dimension); "sigma_x", "sigma_y",
// "sigma_z", "sigma_minus", "sigma_plus" (dimension 2).
ComplexMatrix preset_matrix(const std::string& name, std::size_t dim);

ModelSpec parse_model(const nlohmann::json& doc);

ModelSpec load_model_file(const std::string& path);

}  // namespace ronm
