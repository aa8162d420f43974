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

#include "ratnash/verify.hpp"

#include <algorithm>
#include <limits>

#include "ratnash/error.hpp"
#include "ratnash/linalg.hpp"

namespace ratnash {

VerificationReport VerifyDataset(const Game& game, const DataSet& data,
                                 const Tolerances& tol) {
  if (game.n() != data.n()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "game has " + std::to_string(game.n()) +
                    " strategies but the data set has " +
                    std::to_string(data.n()));
  }
  VerificationReport report;
  report.all_pass = true;
  report.min_margin = std::numeric_limits<double>::infinity();
  for (const Observation& obs : data.observations()) {
    const StrictNashCheck check = IsStrictNash(game, obs, tol);
    report.observations.push_back(
        {check.strict, check.row_margin, check.col_margin});
    report.all_pass = report.all_pass && check.strict;
    report.min_margin =
        std::min({report.min_margin, check.row_margin, check.col_margin});
  }
  report.rank_a = NumericalRank(game.row_payoff(), tol);
  report.rank_b = NumericalRank(game.col_payoff(), tol);
  report.player_rank = std::min(report.rank_a, report.rank_b);
  report.game_rank = NumericalRank(game.row_payoff() + game.col_payoff(), tol);
  return report;
}

std::vector<std::pair<int, int>> StrictPureEquilibria(const Game& game,
                                                      const Tolerances& tol) {
  const Matrix& a = game.row_payoff();
  const Matrix& b = game.col_payoff();
  const int n = game.n();
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      bool strict = true;
      for (int k = 0; k < n && strict; ++k) {
        if (k == i) continue;
        strict = a(i, j) > a(k, j) + tol.delta_min;
      }
      for (int k = 0; k < n && strict; ++k) {
        if (k == j) continue;
        strict = b(i, j) > b(i, k) + tol.delta_min;
      }
      if (strict) out.emplace_back(i, j);
    }
  }
  return out;
}

}  // namespace ratnash
