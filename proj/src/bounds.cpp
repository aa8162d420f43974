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

#include "ratnash/bounds.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <sstream>

#include "ratnash/error.hpp"
#include "ratnash/linalg.hpp"
#include "ratnash/verify.hpp"

namespace ratnash {
namespace {

IndexSet FirstK(int k) {
  IndexSet s(k);
  std::iota(s.begin(), s.end(), 0);
  return s;
}

Game Identity(int n) {
  return Game(Matrix::Identity(n, n), Matrix::Identity(n, n));
}

Observation Symmetric(const MixedStrategy& s) { return {s, s}; }

}  // namespace

const char* LowerBoundName(LowerBoundKind kind) {
  switch (kind) {
    case LowerBoundKind::kUniformNested: return "uniform-nested";
    case LowerBoundKind::kGameRank: return "game-rank";
    case LowerBoundKind::kNoPureNe: return "no-pure-ne";
  }
  return "unknown";
}

std::optional<LowerBoundKind> ParseLowerBound(std::string_view name) {
  for (LowerBoundKind k : {LowerBoundKind::kUniformNested,
                           LowerBoundKind::kGameRank,
                           LowerBoundKind::kNoPureNe}) {
    if (name == LowerBoundName(k)) return k;
  }
  return std::nullopt;
}

LowerBoundCase UniformNestedDataset(int n) {
  if (n < 2) {
    throw Error(ErrorCode::kInvalidArgument,
                "uniform-nested needs n >= 2");
  }
  std::vector<Observation> obs;
  for (int k = 2; k <= n; ++k) {
    obs.push_back(Symmetric(MixedStrategy::UniformOver(n, FirstK(k))));
  }
  return {DataSet(n, std::move(obs), Tolerances{}),
          LowerBoundKind::kUniformNested, n - 1, Identity(n)};
}

LowerBoundCase GameRankDataset(int n) {
  if (n < 3) {
    throw Error(ErrorCode::kInvalidArgument, "game-rank needs n >= 3");
  }
  std::vector<Observation> obs;
  for (int k = 0; k < n; ++k) {
    obs.push_back(Symmetric(MixedStrategy::Pure(n, k)));
  }
  for (int k = 0; k < n; ++k) {
    IndexSet others;
    for (int i = 0; i < n; ++i) {
      if (i != k) others.push_back(i);
    }
    obs.push_back(Symmetric(MixedStrategy::UniformOver(n, others)));
  }
  obs.push_back(Symmetric(MixedStrategy::UniformOver(n, FirstK(n))));
  return {DataSet(n, std::move(obs), Tolerances{}), LowerBoundKind::kGameRank,
          n - 2, Identity(n)};
}

LowerBoundCase NoPureNeDataset() {
  const int n = 3;
  std::vector<Observation> obs = {
      {MixedStrategy::Pure(n, 0), MixedStrategy::UniformOver(n, {1, 2})},
      {MixedStrategy::Pure(n, 1), MixedStrategy::UniformOver(n, {0, 2})},
      {MixedStrategy::Pure(n, 2), MixedStrategy::UniformOver(n, {0, 1})},
  };
  return {DataSet(n, std::move(obs), Tolerances{}), LowerBoundKind::kNoPureNe,
          0, std::nullopt};
}

LowerBoundCase MakeLowerBoundCase(LowerBoundKind kind, int n) {
  switch (kind) {
    case LowerBoundKind::kUniformNested: return UniformNestedDataset(n);
    case LowerBoundKind::kGameRank: return GameRankDataset(n);
    case LowerBoundKind::kNoPureNe: return NoPureNeDataset();
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown lower-bound case");
}

double MaxOffDiagonalSpread(const Matrix& a) {
  double spread = 0.0;
  for (Eigen::Index j = 0; j < a.cols(); ++j) {
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
      if (i == j) continue;
      lo = std::min(lo, a(i, j));
      hi = std::max(hi, a(i, j));
    }
    if (hi >= lo) spread = std::max(spread, hi - lo);
  }
  return spread;
}

LowerBoundCheck CheckLowerBound(const LowerBoundCase& lb, const Game& game,
                                const Tolerances& tol,
                                double off_diagonal_tol) {
  std::ostringstream detail;
  LowerBoundCheck out;
  switch (lb.kind) {
    case LowerBoundKind::kUniformNested: {
      const int ra = NumericalRank(game.row_payoff(), tol);
      const int rb = NumericalRank(game.col_payoff(), tol);
      out.holds = ra >= lb.claimed_bound && rb >= lb.claimed_bound;
      detail << "rank_A=" << ra << " rank_B=" << rb
             << " claim>=" << lb.claimed_bound;
      break;
    }
    case LowerBoundKind::kGameRank: {
      const int rs = NumericalRank(game.row_payoff() + game.col_payoff(), tol);
      const double spread = MaxOffDiagonalSpread(game.row_payoff());
      out.holds = rs >= lb.claimed_bound && spread <= off_diagonal_tol;
      detail << "game_rank=" << rs << " claim>=" << lb.claimed_bound
             << " off_diagonal_spread=" << spread;
      break;
    }
    case LowerBoundKind::kNoPureNe: {
      const auto pure = StrictPureEquilibria(game, tol);
      out.holds = pure.empty();
      detail << "strict_pure_equilibria=" << pure.size();
      break;
    }
  }
  out.detail = detail.str();
  return out;
}

}  // namespace ratnash
