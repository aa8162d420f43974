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

#include "generators.hpp"
#include "helpers.hpp"
#include "oracles.hpp"
#include "ratnash/synth.hpp"

namespace ratnash {
namespace {

TEST(CompositePartition, DisjointSingletonsUseColouring) {
  Tolerances tol;
  const DataSet d(3,
                  {{MixedStrategy::Pure(3, 0), MixedStrategy::Pure(3, 0)},
                   {MixedStrategy::Pure(3, 1), MixedStrategy::Pure(3, 1)}},
                  tol);
  const CompositePartition p = FindCompositePartition(d, Side::kRow, tol);
  EXPECT_EQ(p.sigma, 1);
}

TEST(CompositePartition, SharedOpponentStrategyUsesDimension) {
  Tolerances tol;
  const MixedStrategy y = MixedStrategy::UniformOver(4, {0, 1, 2, 3});
  const DataSet d(4,
                  {{MixedStrategy::UniformOver(4, {0, 1}), y},
                   {MixedStrategy::UniformOver(4, {1, 2}), y},
                   {MixedStrategy::UniformOver(4, {0, 2}), y}},
                  tol);
  const CompositePartition p =
      FindCompositePartition(d, Side::kRow, tol, PartitionSearch::kExhaustive);
  EXPECT_EQ(p.sigma, 1);
  EXPECT_EQ(p.parts[0].size(), 3u);
}

TEST(CompositePartition, EmptyPartsCostNothing) {
  Tolerances tol;
  const DataSet d(2, {{MixedStrategy::Pure(2, 0), MixedStrategy::Pure(2, 1)}}, tol);
  const CompositePartition p = FindCompositePartition(d, Side::kRow, tol);
  EXPECT_EQ(p.sigma, 1);
  int nonempty = 0;
  for (const auto& part : p.parts) nonempty += !part.empty();
  EXPECT_EQ(nonempty, 1);
}

TEST(CompositePartition, ExhaustiveNeverWorseThanGreedy) {
  gen::Rng rng(71);
  Tolerances tol;
  for (int rep = 0; rep < 30; ++rep) {
    const int n = gen::Uniform(rng, 3, 9);
    const DataSet d = gen::RandomGeneric(rng, n, gen::Uniform(rng, 1, std::min(n, 8)),
                                         gen::Uniform(rng, 1, n));
    const CompositePartition ex =
        FindCompositePartition(d, Side::kRow, tol, PartitionSearch::kExhaustive);
    const CompositePartition gr =
        FindCompositePartition(d, Side::kRow, tol, PartitionSearch::kGreedy);
    EXPECT_LE(ex.sigma, gr.sigma);
    EXPECT_EQ(ex.sigma, ex.dimension + ex.max_support + ex.colors);
    std::size_t total = 0;
    for (const auto& part : ex.parts) total += part.size();
    EXPECT_EQ(total, static_cast<std::size_t>(d.size()));
  }
}

TEST(RationalizeCompositeSide, DegeneratePartitions) {
  gen::Rng rng(72);
  Tolerances tol;
  const DataSet d = gen::RandomGeneric(rng, 6, 4, 2);
  for (int only = 0; only < 3; ++only) {
    CompositePartition p;
    for (int k = 0; k < d.size(); ++k) p.parts[only].push_back(k);
    const Matrix a = RationalizeCompositeSide(d, Side::kRow, p, tol);
    EXPECT_TRUE(helpers::OracleRowSide(a, d)) << "part " << only;
  }
}

TEST(RationalizeComposite, RankWithinBound) {
  gen::Rng rng(73);
  Tolerances tol;
  for (int rep = 0; rep < 12; ++rep) {
    const int s = gen::Uniform(rng, 1, 3);
    const int t = gen::Uniform(rng, 1, 3);
    const DataSet d = gen::CoreWithExtras(rng, 10, s, t, gen::Uniform(rng, t + 1, 10));
    const CompositePartition p = FindCompositePartition(d, Side::kRow, tol);
    const Matrix a = RationalizeCompositeSide(d, Side::kRow, p, tol);
    EXPECT_LE(oracle::Rank(a), 2 * p.sigma + 1);
    EXPECT_TRUE(helpers::OracleRowSide(a, d));
  }
}

}  // namespace
}  // namespace ratnash
