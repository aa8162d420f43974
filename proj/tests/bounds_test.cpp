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

#include <gtest/gtest.h>

#include "helpers.hpp"
#include "oracles.hpp"
#include "ratnash/bounds.hpp"
#include "ratnash/linalg.hpp"
#include "ratnash/verify.hpp"

namespace ratnash {
namespace {

using helpers::CodeOf;

TEST(LowerBounds, NamesRoundTrip) {
  for (LowerBoundKind k : {LowerBoundKind::kUniformNested, LowerBoundKind::kGameRank,
                           LowerBoundKind::kNoPureNe}) {
    EXPECT_EQ(ParseLowerBound(LowerBoundName(k)), k);
  }
  EXPECT_FALSE(ParseLowerBound("nested").has_value());
}

TEST(UniformNested, ShapeAndWitness) {
  const LowerBoundCase lb = UniformNestedDataset(5);
  EXPECT_EQ(lb.dataset.size(), 4);
  EXPECT_EQ(lb.claimed_bound, 4);
  ASSERT_TRUE(lb.witness.has_value());
  EXPECT_TRUE(helpers::OracleVerifies(*lb.witness, lb.dataset));
  EXPECT_TRUE(CheckLowerBound(lb, *lb.witness, Tolerances{}).holds);
  EXPECT_EQ(CodeOf([] { UniformNestedDataset(1); }), ErrorCode::kInvalidArgument);
}

// A = a b^T with a = (1,1,0), b = (1,1,-2): rank 1, yet both observations
// {u_2, u_3} are strict, so the claimed n - 1 = 2 does not hold at n = 3.
TEST(UniformNested, RankOneGameRationalizesThreeStrategies) {
  Tolerances tol;
  const LowerBoundCase lb = UniformNestedDataset(3);
  Matrix a(3, 3);
  a << 1, 1, -2,
       1, 1, -2,
       0, 0, 0;
  const Game g(a, a.transpose());
  EXPECT_TRUE(helpers::OracleVerifies(g, lb.dataset));
  EXPECT_TRUE(VerifyDataset(g, lb.dataset, tol).all_pass);
  EXPECT_EQ(oracle::Rank(a), 1);
  const LowerBoundCheck check = CheckLowerBound(lb, g, tol);
  EXPECT_FALSE(check.holds);
  EXPECT_NE(check.detail.find("rank_A=1"), std::string::npos);
}

// Differences between the first row and rows 3..n of any rationalizing A
// are independent, so n - 2 holds for every game the toolkit produces.
TEST(UniformNested, ToolkitGamesReachNMinusTwo) {
  Tolerances tol;
  for (int n = 3; n <= 10; ++n) {
    const LowerBoundCase lb = UniformNestedDataset(n);
    for (const auto& r : helpers::ToolkitRationalizations(lb.dataset, tol)) {
      EXPECT_TRUE(helpers::OracleVerifies(r.game, lb.dataset)) << r.source;
      EXPECT_GE(oracle::Rank(r.game.row_payoff()), n - 2) << r.source << " n=" << n;
      EXPECT_GE(oracle::Rank(r.game.col_payoff()), n - 2) << r.source << " n=" << n;
    }
  }
}

TEST(GameRank, ShapeAndWitness) {
  const LowerBoundCase lb = GameRankDataset(5);
  EXPECT_EQ(lb.dataset.size(), 11);
  EXPECT_EQ(lb.claimed_bound, 3);
  ASSERT_TRUE(lb.witness.has_value());
  EXPECT_TRUE(helpers::OracleVerifies(*lb.witness, lb.dataset));
  EXPECT_TRUE(CheckLowerBound(lb, *lb.witness, Tolerances{}).holds);
  EXPECT_EQ(CodeOf([] { GameRankDataset(2); }), ErrorCode::kInvalidArgument);
}

TEST(GameRank, SpreadCheckCatchesUnequalColumns) {
  Matrix a = Matrix::Identity(4, 4);
  EXPECT_EQ(MaxOffDiagonalSpread(a), 0.0);
  a(2, 0) = 0.25;
  EXPECT_DOUBLE_EQ(MaxOffDiagonalSpread(a), 0.25);
  const LowerBoundCase lb = GameRankDataset(4);
  EXPECT_FALSE(CheckLowerBound(lb, Game(a, Matrix::Identity(4, 4)), Tolerances{}).holds);
}

TEST(NoPureNe, RationalizableWithoutStrictPureEquilibria) {
  Tolerances tol;
  const LowerBoundCase lb = NoPureNeDataset();
  EXPECT_FALSE(lb.witness.has_value());
  const RationalizationResult r = Rationalize(lb.dataset, tol);
  ASSERT_TRUE(r.rationalizable);
  EXPECT_TRUE(CheckLowerBound(lb, *r.game, tol).holds);
  EXPECT_EQ(oracle::CountStrictPure(oracle::ToRows(r.game->row_payoff()),
                                    oracle::ToRows(r.game->col_payoff()),
                                    tol.delta_min),
            0);
  for (const auto& g : helpers::ToolkitRationalizations(lb.dataset, tol)) {
    EXPECT_TRUE(StrictPureEquilibria(g.game, tol).empty()) << g.source;
  }
}

TEST(LowerBounds, DispatchIgnoresNForNoPureNe) {
  EXPECT_EQ(MakeLowerBoundCase(LowerBoundKind::kNoPureNe, 99).dataset.n(), 3);
  EXPECT_EQ(MakeLowerBoundCase(LowerBoundKind::kGameRank, 6).dataset.n(), 6);
}

}  // namespace
}  // namespace ratnash
