#pragma once
// Matrix file format: {"dims": [n_1,...,n_k], "rows": [[bits...] x k]}.
// Rows are block-major with row length sum(n_i); dims are always explicit
// and cross-checked, never inferred.  Unknown keys are ignored so that
// tool output with extra fields can be piped back in.

#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "gbott/errors.hpp"
#include "gbott/model.hpp"

namespace gbott {

inline VectorMatrix matrix_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("dims") || !j.contains("rows"))
    throw ParseError("matrix: expected an object with \"dims\" and \"rows\"");
  const auto& jd = j.at("dims");
  const auto& jr = j.at("rows");
  if (!jd.is_array() || jd.empty())
    throw ParseError("matrix: \"dims\" must be a nonempty array");
  std::vector<int> parts;
  for (const auto& v : jd) {
    if (!v.is_number_integer() || v.get<long long>() < 1)
      throw ParseError("matrix: dims entries must be integers >= 1");
    parts.push_back(v.get<int>());
  }
  if (!jr.is_array())
    throw ParseError("matrix: \"rows\" must be an array");
  std::vector<std::vector<int>> rows;
  for (const auto& row : jr) {
    if (!row.is_array())
      throw ParseError("matrix: each row must be an array");
    std::vector<int> bits;
    for (const auto& v : row) {
      if (!v.is_number_integer() ||
          (v.get<long long>() != 0 && v.get<long long>() != 1))
        throw ParseError("matrix: row entries must be 0 or 1");
      bits.push_back(v.get<int>());
    }
    rows.push_back(std::move(bits));
  }
  try {
    return VectorMatrix::from_rows(Dims(std::move(parts)), rows);
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("matrix: ") + e.what());
  }
}

inline nlohmann::json matrix_to_json(const VectorMatrix& A) {
  nlohmann::json j;
  j["dims"] = A.dims().parts();
  j["rows"] = A.row_lists();
  return j;
}

inline VectorMatrix parse_matrix_text(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("matrix: invalid JSON: ") + e.what());
  }
  return matrix_from_json(j);
}

inline VectorMatrix read_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_matrix_text(ss.str());
}

}  // namespace gbott
