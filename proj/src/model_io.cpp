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


#include "ronm/model_io.hpp"

#include <fstream>
#include <sstream>
#include <utility>
#include <vector>

#include "ronm/error.hpp"

namespace ronm {

namespace {

using nlohmann::json;

std::string join(const std::string& path, const std::string& key) {
  return path.empty() ? key : path + "." + key;
}

std::string index(const std::string& path, std::size_t i) {
  return path + "[" + std::to_string(i) + "]";
}

const json& member(const json& obj, const std::string& key, const std::string& path) {
  if (!obj.is_object()) throw ParseError(path.empty() ? "$" : path, "expected an object");
  const auto it = obj.find(key);
  if (it == obj.end()) throw ParseError(join(path, key), "missing field");
  return *it;
}

double number(const json& v, const std::string& path) {
  if (!v.is_number()) throw ParseError(path, "expected a number");
  return v.get<double>();
}

Complex complex_entry(const json& v, const std::string& path) {
  if (v.is_number()) return {v.get<double>(), 0.0};
  if (!v.is_array() || v.size() != 2) throw ParseError(path, "expected a [re, im] pair");
  return {number(v[0], index(path, 0)), number(v[1], index(path, 1))};
}

ComplexMatrix matrix_literal(const json& v, std::size_t dim, const std::string& path) {
  if (!v.is_array() || v.size() != dim) {
    throw ParseError(path, "expected " + std::to_string(dim) + " rows");
  }
  ComplexMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    const std::string row_path = index(path, i);
    const json& row = v[i];
    if (!row.is_array() || row.size() != dim) {
      throw ParseError(row_path, "expected " + std::to_string(dim) + " entries");
    }
    for (std::size_t j = 0; j < dim; ++j) m(i, j) = complex_entry(row[j], index(row_path, j));
  }
  return m;
}

ComplexMatrix preset(const std::string& name, std::size_t dim, const std::string& path) {
  try {
    return preset_matrix(name, dim);
  } catch (const Error& e) {
    throw ParseError(path, e.what());
  }
}

// Matrix literal, preset name, or {"preset"|"matrix": ..., "scale": s}.
ComplexMatrix operator_spec(const json& v, std::size_t dim, const std::string& path) {
  if (v.is_string()) return preset(v.get<std::string>(), dim, path);
  if (v.is_array()) return matrix_literal(v, dim, path);
  if (v.is_object()) {
    ComplexMatrix m(dim);
    if (v.contains("preset")) {
      const json& p = v["preset"];
      if (!p.is_string()) throw ParseError(join(path, "preset"), "expected a string");
      m = preset(p.get<std::string>(), dim, join(path, "preset"));
    } else if (v.contains("matrix")) {
      m = matrix_literal(v["matrix"], dim, join(path, "matrix"));
    } else {
      throw ParseError(path, "expected a \"preset\" or \"matrix\" field");
    }
    if (v.contains("scale")) m *= Complex(number(v["scale"], join(path, "scale")));
    return m;
  }
  throw ParseError(path, "expected a matrix literal, preset name or object");
}

Hamiltonian hamiltonian_spec(const json& v, std::size_t dim, const std::string& path) {
  if (v.is_object() && v.contains("table")) {
    const json& table = v["table"];
    const std::string tpath = join(path, "table");
    if (!table.is_array() || table.empty()) throw ParseError(tpath, "expected a non-empty list");
    std::vector<std::pair<double, ComplexMatrix>> samples;
    for (std::size_t k = 0; k < table.size(); ++k) {
      const std::string kpath = index(tpath, k);
      const double t = number(member(table[k], "t", kpath), join(kpath, "t"));
      if (!samples.empty() && !(t > samples.back().first)) {
        throw ParseError(join(kpath, "t"), "sample times must increase");
      }
      samples.emplace_back(t, operator_spec(member(table[k], "matrix", kpath), dim,
                                            join(kpath, "matrix")));
    }
    try {
      return Hamiltonian(std::move(samples));
    } catch (const Error& e) {
      throw ParseError(tpath, e.what());
    }
  }
  try {
    return Hamiltonian(operator_spec(v, dim, path));
  } catch (const Error& e) {
    throw ParseError(path, e.what());
  }
}

RateFunction rate_spec(const json& v, const std::string& path) {
  const json& kind_v = member(v, "kind", path);
  if (!kind_v.is_string()) throw ParseError(join(path, "kind"), "expected a string");
  const std::string kind = kind_v.get<std::string>();
  const std::string ppath = join(path, "params");
  const json& params = member(v, "params", path);
  if (!params.is_array()) throw ParseError(ppath, "expected a list");

  if (kind == "table") {
    std::vector<std::pair<double, double>> points;
    for (std::size_t k = 0; k < params.size(); ++k) {
      const std::string kp = index(ppath, k);
      if (!params[k].is_array() || params[k].size() != 2) {
        throw ParseError(kp, "expected a [t, value] pair");
      }
      points.emplace_back(number(params[k][0], index(kp, 0)), number(params[k][1], index(kp, 1)));
    }
    try {
      return RateFunction::table(std::move(points));
    } catch (const Error& e) {
      throw ParseError(ppath, e.what());
    }
  }

  std::vector<double> p;
  for (std::size_t k = 0; k < params.size(); ++k) p.push_back(number(params[k], index(ppath, k)));
  if (kind == "constant") {
    if (p.size() != 1) throw ParseError(ppath, "constant takes [value]");
    return RateFunction::constant(p[0]);
  }
  if (kind == "sinusoid") {
    if (p.size() < 2 || p.size() > 4) {
      throw ParseError(ppath, "sinusoid takes [amplitude, omega, phase?, offset?]");
    }
    p.resize(4, 0.0);
    return RateFunction::sinusoid(p[0], p[1], p[2], p[3]);
  }
  if (kind == "polynomial") {
    if (p.empty()) throw ParseError(ppath, "polynomial needs at least one coefficient");
    return RateFunction::polynomial(std::move(p));
  }
  throw ParseError(join(path, "kind"), "unknown rate kind '" + kind + "'");
}

Horizon horizon_spec(const json& v, const std::string& path) {
  Horizon h;
  h.t0 = number(member(v, "t0", path), join(path, "t0"));
  h.t1 = number(member(v, "t1", path), join(path, "t1"));
  const json& steps = member(v, "steps", path);
  if (!steps.is_number_integer()) throw ParseError(join(path, "steps"), "expected an integer");
  h.steps = steps.get<int>();
  if (!(h.t1 > h.t0)) throw ParseError(join(path, "t1"), "must exceed t0");
  if (h.steps < 2 || h.steps % 2 != 0) {
    throw ParseError(join(path, "steps"), "must be an even integer >= 2");
  }
  return h;
}

}  // namespace

ComplexMatrix preset_matrix(const std::string& name, std::size_t dim) {
  if (dim == 0) throw Error(ErrorCode::kInvalidArgument, "dimension must be positive");
  if (name == "zero") return ComplexMatrix(dim);
  if (name == "identity") return ComplexMatrix::identity(dim);
  const Complex i(0.0, 1.0);
  ComplexMatrix m;
  if (name == "sigma_x") {
    m = {{0.0, 1.0}, {1.0, 0.0}};
  } else if (name == "sigma_y") {
    m = {{0.0, -i}, {i, 0.0}};
  } else if (name == "sigma_z") {
    m = {{1.0, 0.0}, {0.0, -1.0}};
  } else if (name == "sigma_minus") {
    m = {{0.0, 1.0}, {0.0, 0.0}};
  } else if (name == "sigma_plus") {
    m = {{0.0, 0.0}, {1.0, 0.0}};
  } else {
    throw Error(ErrorCode::kInvalidArgument, "unknown preset '" + name + "'");
  }
  if (dim != 2) {
    throw Error(ErrorCode::kDimensionMismatch, "preset '" + name + "' needs dim 2");
  }
  return m;
}

ModelSpec parse_model(const json& doc) {
  if (!doc.is_object()) throw ParseError("$", "model must be a JSON object");
  const json& dim_v = member(doc, "dim", "");
  if (!dim_v.is_number_integer() || dim_v.get<long long>() < 1) {
    throw ParseError("dim", "expected a positive integer");
  }
  const auto dim = static_cast<std::size_t>(dim_v.get<long long>());

  Hamiltonian hamiltonian = doc.contains("hamiltonian")
                                ? hamiltonian_spec(doc["hamiltonian"], dim, "hamiltonian")
                                : Hamiltonian(ComplexMatrix(dim));

  std::vector<Dissipator> dissipators;
  if (doc.contains("dissipators")) {
    const json& list = doc["dissipators"];
    if (!list.is_array()) throw ParseError("dissipators", "expected a list");
    for (std::size_t k = 0; k < list.size(); ++k) {
      const std::string path = index("dissipators", k);
      ComplexMatrix op = operator_spec(member(list[k], "operator", path), dim,
                                       join(path, "operator"));
      RateFunction rate = rate_spec(member(list[k], "rate", path), join(path, "rate"));
      dissipators.push_back({std::move(op), std::move(rate)});
    }
  }

  const Horizon horizon = horizon_spec(member(doc, "horizon", ""), "horizon");
  try {
    return {dim, GKLSModel(std::move(hamiltonian), std::move(dissipators)), horizon};
  } catch (const Error& e) {
    throw ParseError("hamiltonian", e.what());
  }
}

ModelSpec load_model_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("$", "cannot open model file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  json doc;
  try {
    doc = json::parse(buf.str());
  } catch (const json::parse_error& e) {
    throw ParseError("$", std::string("invalid JSON: ") + e.what());
  }
  return parse_model(doc);
}

}  // namespace ronm
