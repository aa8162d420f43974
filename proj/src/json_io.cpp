// Copyright 2026 The ratnash Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ratnash/json_io.hpp"

#include <cmath>
#include <string>

#include "ratnash/error.hpp"

namespace ratnash {
namespace {

using nlohmann::json;

json ParseText(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    // Translate the byte offset into a line/column position.
    std::size_t line = 1;
    std::size_t column = 1;
    const std::size_t end = std::min<std::size_t>(e.byte, text.size());
    for (std::size_t i = 0; i + 1 < end; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw Error(ErrorCode::kParse, "line " + std::to_string(line) +
                                       ", column " + std::to_string(column) +
                                       ": malformed JSON");
  }
}

[[noreturn]] void FieldError(const std::string& path, const std::string& what) {
  throw Error(ErrorCode::kParse, path + ": " + what);
}

const json& Field(const json& obj, const char* key, const std::string& path) {
  if (!obj.is_object()) FieldError(path, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) FieldError(path, std::string("missing field \"") + key + "\"");
  return *it;
}

std::vector<double> NumberArray(const json& v, const std::string& path) {
  if (!v.is_array()) FieldError(path, "expected an array of numbers");
  std::vector<double> out;
  out.reserve(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_number()) {
      FieldError(path + "[" + std::to_string(i) + "]", "expected a number");
    }
    out.push_back(v[i].get<double>());
  }
  return out;
}

Matrix SquareMatrix(const json& v, const std::string& path) {
  if (!v.is_array() || v.empty()) FieldError(path, "expected a non-empty array of rows");
  const auto n = static_cast<Eigen::Index>(v.size());
  Matrix m(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const std::string row_path = path + "[" + std::to_string(i) + "]";
    const std::vector<double> row = NumberArray(v[i], row_path);
    if (static_cast<Eigen::Index>(row.size()) != n) {
      throw Error(ErrorCode::kDimensionMismatch,
                  row_path + ": expected " + std::to_string(n) + " entries, got " +
                      std::to_string(row.size()));
    }
    for (Eigen::Index j = 0; j < n; ++j) m(i, j) = row[j];
  }
  return m;
}

json MatrixToJson(const Matrix& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

json VectorToJson(const Vector& v) {
  json out = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v[i]);
  return out;
}

json Margin(double v) {
  if (std::isinf(v)) return nullptr;
  return v;
}

}  // namespace

DataSet ParseDataSet(std::string_view text, const Tolerances& tol) {
  const json doc = ParseText(text);
  const json& n_field = Field(doc, "n", "$");
  if (!n_field.is_number_integer() || n_field.get<long long>() < 1) {
    FieldError("n", "expected a positive integer");
  }
  const int n = n_field.get<int>();
  const json& obs_field = Field(doc, "observations", "$");
  if (!obs_field.is_array()) FieldError("observations", "expected an array");

  std::vector<Observation> observations;
  for (std::size_t k = 0; k < obs_field.size(); ++k) {
    const std::string path = "observations[" + std::to_string(k) + "]";
    const json& entry = obs_field[k];
    Observation obs;
    for (const char* key : {"x", "y"}) {
      const std::string field_path = path + "." + key;
      const std::vector<double> probs =
          NumberArray(Field(entry, key, path), field_path);
      if (static_cast<int>(probs.size()) != n) {
        throw Error(ErrorCode::kDimensionMismatch,
                    field_path + ": expected " + std::to_string(n) +
                        " entries, got " + std::to_string(probs.size()));
      }
      try {
        MixedStrategy s(std::span<const double>(probs), tol);
        (key[0] == 'x' ? obs.row : obs.col) = std::move(s);
      } catch (const Error& e) {
        throw Error(e.code(), field_path + ": " + e.what());
      }
    }
    observations.push_back(std::move(obs));
  }
  return DataSet(n, std::move(observations), tol);
}

Game ParseGame(std::string_view text) {
  const json doc = ParseText(text);
  Matrix a = SquareMatrix(Field(doc, "A", "$"), "A");
  Matrix b = SquareMatrix(Field(doc, "B", "$"), "B");
  if (a.rows() != b.rows()) {
    throw Error(ErrorCode::kDimensionMismatch, "A and B differ in size");
  }
  return Game(std::move(a), std::move(b));
}

json DataSetToJson(const DataSet& data) {
  json obs = json::array();
  for (const Observation& o : data.observations()) {
    obs.push_back({{"x", VectorToJson(o.row.probs())},
                   {"y", VectorToJson(o.col.probs())}});
  }
  return {{"n", data.n()}, {"observations", std::move(obs)}};
}

json GameToJson(const Game& game) {
  return {{"A", MatrixToJson(game.row_payoff())},
          {"B", MatrixToJson(game.col_payoff())}};
}

json SynthesisToJson(const SynthesisResult& result) {
  json out = GameToJson(result.game);
  out["meta"] = {{"method", MethodName(result.method)},
                 {"bound", result.bound},
                 {"rank_A", result.rank_a},
                 {"rank_B", result.rank_b},
                 {"sigma_or_kappa", result.measure},
                 {"bound_A", result.bound_a},
                 {"bound_B", result.bound_b}};
  return out;
}

json ReportToJson(const VerificationReport& report) {
  json obs = json::array();
  for (const ObservationVerdict& v : report.observations) {
    obs.push_back({{"pass", v.pass},
                   {"row_margin", Margin(v.row_margin)},
                   {"col_margin", Margin(v.col_margin)}});
  }
  return {{"all_pass", report.all_pass},
          {"player_rank", report.player_rank},
          {"game_rank", report.game_rank},
          {"rank_A", report.rank_a},
          {"rank_B", report.rank_b},
          {"min_margin", Margin(report.min_margin)},
          {"observations", std::move(obs)}};
}

json RationalizationToJson(const RationalizationResult& result) {
  json out = {{"rationalizable", result.rationalizable},
              {"delta_star", result.delta_star}};
  if (result.game) {
    out["A"] = MatrixToJson(result.game->row_payoff());
    out["B"] = MatrixToJson(result.game->col_payoff());
  }
  return out;
}

}  // namespace ratnash
