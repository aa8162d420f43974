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

// Data sets that force every rationalization to be complex, and checks of
// those claims against a concrete rationalizing game.

#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "ratnash/core.hpp"

namespace ratnash {

enum class LowerBoundKind {
  kUniformNested,  // player rank >= n - 1
  kGameRank,       // rank(A + B) >= n - 2
  kNoPureNe,       // no strict pure equilibrium
};

const char* LowerBoundName(LowerBoundKind kind);
std::optional<LowerBoundKind> ParseLowerBound(std::string_view name);

struct LowerBoundCase {
  DataSet dataset;
  LowerBoundKind kind;
  // n - 1, n - 2, or 0 for kNoPureNe.
  int claimed_bound = 0;
  std::optional<Game> witness;
};

// {(u_k, u_k) : k = 2..n}, u_k uniform on the first k strategies, with the
// identity game as witness. Needs n >= 2.
LowerBoundCase UniformNestedDataset(int n);

// {(e_k, e_k)} + {(v_k, v_k)} + {(u_n, u_n)}, v_k uniform on all but k,
// with the identity game as witness. Needs n >= 3.
LowerBoundCase GameRankDataset(int n);

// Three observations on 3 strategies: the row player is pure, the column
// player mixes uniformly over the two other strategies. No witness.
LowerBoundCase NoPureNeDataset();

// Dispatches on kind; n is ignored for kNoPureNe.
LowerBoundCase MakeLowerBoundCase(LowerBoundKind kind, int n);

struct LowerBoundCheck {
  bool holds = false;
  std::string detail;
};

// Tests the claim of `lb` on a game that is assumed to rationalize it. For
// kGameRank this also checks that every column of A has equal off-diagonal
// entries within off_diagonal_tol.
LowerBoundCheck CheckLowerBound(const LowerBoundCase& lb, const Game& game,
                                const Tolerances& tol,
                                double off_diagonal_tol = 1e-6);

// Largest spread among the off-diagonal entries of any column.
double MaxOffDiagonalSpread(const Matrix& a);

}  // namespace ratnash
