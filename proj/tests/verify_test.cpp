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

#include <cmath>
#include <random>

#include "generators.hpp"
#include "helpers.hpp"
#include "oracles.hpp"
#include "ratnash/verify.hpp"

namespace ratnash {
namespace {

using helpers::CodeOf;

TEST(VerifyDataset, IdentityOnDiagonalData) {
  Tolerances tol;
  const DataSet d(3,
                  {{MixedStrategy::Pure(3, 0), MixedStrategy::Pure(3, 0)},
                   {MixedStrategy::UniformOver(3, {1, 2}),
                    MixedStrategy::UniformOver(3, {1, 2})}},
                  tol);
  const VerificationReport r =
      VerifyDataset(Game(Matrix::Identity(3, 3), Matrix::Identity(3, 3)), d, tol);
  EXPECT_TRUE(r.all_pass);
  EXPECT_EQ(r.rank_a, 3);
  EXPECT_EQ(r.player_rank, 3);
  EXPECT_EQ(r.game_rank, 3);
  ASSERT_EQ(r.observations.size(), 2u);
  EXPECT_DOUBLE_EQ(r.observations[0].row_margin, 1.0);
  EXPECT_DOUBLE_EQ(r.observations[1].col_margin, 0.5);
  EXPECT_DOUBLE_EQ(r.min_margin, 0.5);
}

TEST(VerifyDataset, ReportsFailingObservation) {
  Tolerances tol;
  const DataSet d(2,
                  {{MixedStrategy::Pure(2, 0), MixedStrategy::Pure(2, 0)},
                   {MixedStrategy::Pure(2, 1), MixedStrategy::Pure(2, 1)}},
                  tol);
  Matrix a(2, 2);
  a << 1, 1, 0, 0;
  const VerificationReport r = VerifyDataset(Game(a, Matrix::Identity(2, 2)), d, tol);
  EXPECT_FALSE(r.all_pass);
  EXPECT_TRUE(r.observations[0].pass);
  EXPECT_FALSE(r.observations[1].pass);
  EXPECT_LT(r.min_margin, 0.0);
  EXPECT_EQ(r.player_rank, 1);
}

TEST(VerifyDataset, FullSupportMarginIsInfinite) {
  Tolerances tol;
  const MixedStrategy u = MixedStrategy::UniformOver(2, {0, 1});
  const DataSet d(2, {{u, u}}, tol);
  const VerificationReport r = VerifyDataset(Game(Matrix::Zero(2, 2), Matrix::Zero(2, 2)), d, tol);
  EXPECT_TRUE(r.all_pass);
  EXPECT_TRUE(std::isinf(r.min_margin));
  EXPECT_EQ(r.player_rank, 0);
}

TEST(VerifyDataset, DimensionMismatch) {
  Tolerances tol;
  const DataSet d(2, {{MixedStrategy::Pure(2, 0), MixedStrategy::Pure(2, 0)}}, tol);
  EXPECT_EQ(CodeOf([&] {
              VerifyDataset(Game(Matrix::Identity(3, 3), Matrix::Identity(3, 3)), d, tol);
            }),
            ErrorCode::kDimensionMismatch);
}

TEST(StrictPureEquilibria, MatchesExhaustiveOracle) {
  gen::Rng rng(81);
  std::uniform_int_distribution<int> payoff(-2, 2);
  Tolerances tol;
  int found = 0;
  for (int rep = 0; rep < 300; ++rep) {
    const int n = gen::Uniform(rng, 1, 5);
    Matrix a(n, n), b(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) a(i, j) = payoff(rng), b(i, j) = payoff(rng);
    const auto ours = StrictPureEquilibria(Game(a, b), tol);
    EXPECT_EQ(static_cast<int>(ours.size()),
              oracle::CountStrictPure(oracle::ToRows(a), oracle::ToRows(b), tol.delta_min));
    found += static_cast<int>(ours.size());
  }
  EXPECT_GT(found, 0);
}

TEST(StrictPureEquilibria, CoordinationGame) {
  const auto eq = StrictPureEquilibria(
      Game(Matrix::Identity(3, 3), Matrix::Identity(3, 3)), Tolerances{});
  ASSERT_EQ(eq.size(), 3u);
  EXPECT_EQ(eq[1], std::make_pair(1, 1));
}

}  // namespace
}  // namespace ratnash
