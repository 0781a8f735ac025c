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

// Deterministic JSON text: object keys sorted, doubles at 17 significant
// digits, non-finite values written as null.

#include <string>

#include "json.hpp"

namespace ronm {

std::string format_double(double value);

std::string dump_json(const nlohmann::json& value, int indent = 2);

}  // namespace ronm
