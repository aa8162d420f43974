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

// JSON documents:
//
//   data set  {"n": 3, "observations": [{"x": [...], "y": [...]}, ...]}
//   game      {"A": [[...], ...], "B": [[...], ...]}            (row-major)
//   synthesis game fields plus "meta": {method, bound, rank_A, rank_B,
//             sigma_or_kappa, bound_A, bound_B}
//   report    {all_pass, player_rank, game_rank, min_margin,
//             observations: [{pass, row_margin, col_margin}, ...]}
//
// Infinite margins (full supports) are written as null.

#pragma once

#include <string_view>

#include "json.hpp"
#include "ratnash/core.hpp"
#include "ratnash/lp.hpp"
#include "ratnash/synth.hpp"
#include "ratnash/verify.hpp"

namespace ratnash {

// Throw kParse with "line L, column C" for syntax errors and a field path
// such as "observations[2].y[0]" for schema errors. Data set invariants are
// enforced by DataSet itself and reported with the failing observation.
DataSet ParseDataSet(std::string_view text, const Tolerances& tol);
Game ParseGame(std::string_view text);

nlohmann::json DataSetToJson(const DataSet& data);
nlohmann::json GameToJson(const Game& game);
nlohmann::json SynthesisToJson(const SynthesisResult& result);
nlohmann::json ReportToJson(const VerificationReport& report);
nlohmann::json RationalizationToJson(const RationalizationResult& result);

}  // namespace ratnash
