#include "liederiv/fixture.hpp"

#include <fstream>

#include <nlohmann/json.hpp>

#include "liederiv/errors.hpp"

namespace liederiv {

namespace {

using nlohmann::json;

Vec parse_rational_array(const json& j) {
  if (!j.is_array()) {
    throw InputError("fixture: expected an array of rational strings");
  }
  Vec out;
  out.reserve(j.size());
  for (const auto& entry : j) {
    if (!entry.is_string()) {
      throw InputError("fixture: scalars must be rational strings");
    }
    out.push_back(parse_rational(entry.get<std::string>()));
  }
  return out;
}

Matrix parse_matrix(const json& j, std::size_t dim) {
  if (!j.is_array() || j.size() != dim) {
    throw InputError("fixture: action matrix has the wrong number of rows");
  }
  Matrix m(dim, dim);
  for (std::size_t r = 0; r < dim; ++r) {
    const Vec row = parse_rational_array(j[r]);
    if (row.size() != dim) {
      throw InputError("fixture: action matrix row has the wrong length");
    }
    m.set_row(r, row);
  }
  return m;
}

LieAlgebra parse_algebra(const json& j) {
  if (!j.contains("basis_labels") || !j.contains("structure_constants")) {
    throw InputError("fixture: algebra needs basis_labels and "
                     "structure_constants");
  }
  std::vector<std::string> labels;
  for (const auto& label : j.at("basis_labels")) {
    if (!label.is_string()) {
      throw InputError("fixture: basis labels must be strings");
    }
    labels.push_back(label.get<std::string>());
  }
  const std::size_t dim = labels.size();
  const json& table = j.at("structure_constants");
  if (!table.is_array() || table.size() != dim) {
    throw InputError("fixture: structure constant table shape mismatch");
  }
  std::vector<std::vector<Vec>> constants;
  constants.reserve(dim);
  for (const auto& row : table) {
    if (!row.is_array() || row.size() != dim) {
      throw InputError("fixture: structure constant table shape mismatch");
    }
    std::vector<Vec> parsed_row;
    parsed_row.reserve(dim);
    for (const auto& entry : row) {
      Vec coords = parse_rational_array(entry);
      if (coords.size() != dim) {
        throw InputError("fixture: structure constant vector length mismatch");
      }
      parsed_row.push_back(std::move(coords));
    }
    constants.push_back(std::move(parsed_row));
  }
  std::optional<std::size_t> cartan;
  if (j.contains("cartan_index") && !j.at("cartan_index").is_null()) {
    cartan = j.at("cartan_index").get<std::size_t>();
  }
  return LieAlgebra(std::move(labels), std::move(constants), cartan);
}

Module parse_module(const json& j, const LieAlgebra& algebra) {
  if (!j.contains("action")) {
    throw InputError("fixture: module needs an action array");
  }
  const json& action_json = j.at("action");
  if (!action_json.is_array() || action_json.size() != algebra.dim()) {
    throw InputError(
        "fixture: module needs one action matrix per basis element");
  }
  std::size_t dim = 0;
  if (!action_json.empty()) {
    if (!action_json[0].is_array()) {
      throw InputError("fixture: action matrices must be arrays of rows");
    }
    dim = action_json[0].size();
  }
  std::vector<Matrix> action;
  action.reserve(algebra.dim());
  for (const auto& matrix_json : action_json) {
    action.push_back(parse_matrix(matrix_json, dim));
  }
  std::optional<std::vector<long long>> weights;
  if (j.contains("weight_labels") && !j.at("weight_labels").is_null()) {
    weights = std::vector<long long>();
    for (const auto& w : j.at("weight_labels")) {
      weights->push_back(w.get<long long>());
    }
  }
  return Module(algebra, std::move(action), std::move(weights));
}

}  // namespace

Fixture load_fixture(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw IoError("cannot open fixture file: " + path);
  }
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw IoError("fixture is not valid JSON: " + std::string(e.what()));
  }
  try {
    if (j.value("schema_version", -1) != 1) {
      throw InputError("fixture: unsupported schema_version");
    }
    if (!j.contains("algebra")) {
      throw InputError("fixture: missing algebra section");
    }
    LieAlgebra algebra = parse_algebra(j.at("algebra"));
    std::optional<Module> module;
    if (j.contains("module") && !j.at("module").is_null()) {
      module = parse_module(j.at("module"), algebra);
    }
    return Fixture{std::move(algebra), std::move(module)};
  } catch (const json::exception& e) {
    throw InputError("fixture: malformed field: " + std::string(e.what()));
  }
}

}  // namespace liederiv
