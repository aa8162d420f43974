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

// Independent checks of a (game, data set) pair. Nothing here trusts the
// constructions; margins are reported in the game's own scale.

#pragma once

#include <utility>
#include <vector>

#include "ratnash/core.hpp"

namespace ratnash {

struct ObservationVerdict {
  bool pass = false;
  double row_margin = 0.0;
  double col_margin = 0.0;
};

struct VerificationReport {
  std::vector<ObservationVerdict> observations;
  bool all_pass = false;
  int rank_a = 0;
  int rank_b = 0;
  int player_rank = 0;  // min(rank_a, rank_b)
  int game_rank = 0;    // rank(A + B)
  double min_margin = 0.0;
};

VerificationReport VerifyDataset(const Game& game, const DataSet& data,
                                 const Tolerances& tol);

// Pure profiles (i, j) where A[i][j] beats every other entry of column j and
// B[i][j] every other entry of row i, both by more than delta_min.
std::vector<std::pair<int, int>> StrictPureEquilibria(const Game& game,
                                                      const Tolerances& tol);

}  // namespace ratnash
