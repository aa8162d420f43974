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

// Batch runs over random generic data sets, reported as CSV.

#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "ratnash/core.hpp"
#include "ratnash/synth.hpp"

namespace ratnash {

// Random data set with m <= n observations, each strategy supported on
// 1..max_support entries with positive random weights, resampled until both
// sides are generic and observations are distinct.
DataSet RandomGenericDataSet(int n, int m, int max_support, std::mt19937_64& rng,
                             const Tolerances& tol);

struct SweepConfig {
  int n_min = 3;
  int n_max = 8;
  int cases_per_n = 5;
  int max_support = 3;
  std::vector<Method> methods = {Method::kLp, Method::kLowDim, Method::kSupport,
                                 Method::kChromatic, Method::kComposite};
  std::uint64_t seed = 1;
  // When false, wall_ms is written as 0 so output is byte-identical.
  bool timing = true;
  Tolerances tol;
};

inline constexpr const char* kSweepHeader =
    "n,m,method,bound,rank_A,rank_B,game_rank,pass,wall_ms";

// One row per (case, method) in deterministic order. A method that fails on
// a case is written with empty bound and ranks and pass=0.
std::string RunSweep(const SweepConfig& config);

}  // namespace ratnash
