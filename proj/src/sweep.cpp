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

#include "ratnash/sweep.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <numeric>
#include <sstream>

#include "ratnash/error.hpp"
#include "ratnash/linalg.hpp"
#include "ratnash/verify.hpp"

namespace ratnash {
namespace {

constexpr int kMaxAttempts = 1000;

MixedStrategy RandomStrategy(int n, int max_support, std::mt19937_64& rng,
                             const Tolerances& tol) {
  std::uniform_int_distribution<int> size_dist(1, std::min(n, max_support));
  std::uniform_real_distribution<double> weight(0.1, 1.0);
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  const int s = size_dist(rng);
  Vector p = Vector::Zero(n);
  for (int i = 0; i < s; ++i) p[order[i]] = weight(rng);
  p /= p.sum();
  return MixedStrategy(p, tol);
}

}  // namespace

DataSet RandomGenericDataSet(int n, int m, int max_support, std::mt19937_64& rng,
                             const Tolerances& tol) {
  if (n < 1 || m < 1 || m > n || max_support < 1) {
    throw Error(ErrorCode::kInvalidArgument,
                "need 1 <= m <= n and max_support >= 1");
  }
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    std::vector<Observation> obs;
    for (int k = 0; k < m; ++k) {
      MixedStrategy x = RandomStrategy(n, max_support, rng, tol);
      MixedStrategy y = RandomStrategy(n, max_support, rng, tol);
      obs.push_back({std::move(x), std::move(y)});
    }
    try {
      DataSet data(n, std::move(obs), tol);
      if (IsGeneric(data.ColumnStrategies(), tol) &&
          IsGeneric(data.RowStrategies(), tol)) {
        return data;
      }
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kDuplicateObservation) throw;
    }
  }
  throw Error(ErrorCode::kInvalidArgument,
              "could not draw a generic data set; increase max_support");
}

std::string RunSweep(const SweepConfig& config) {
  config.tol.Validate();
  if (config.n_min < 1 || config.n_max < config.n_min ||
      config.cases_per_n < 0) {
    throw Error(ErrorCode::kInvalidArgument, "bad sweep range");
  }
  std::ostringstream out;
  out << kSweepHeader << '\n';
  for (int n = config.n_min; n <= config.n_max; ++n) {
    for (int c = 0; c < config.cases_per_n; ++c) {
      std::seed_seq seq{static_cast<std::uint64_t>(config.seed),
                        static_cast<std::uint64_t>(n),
                        static_cast<std::uint64_t>(c)};
      std::mt19937_64 rng(seq);
      const int m = std::uniform_int_distribution<int>(1, n)(rng);
      const DataSet data =
          RandomGenericDataSet(n, m, config.max_support, rng, config.tol);
      for (Method method : config.methods) {
        const auto start = std::chrono::steady_clock::now();
        out << n << ',' << m << ',' << MethodName(method) << ',';
        try {
          const SynthesisResult r = Synthesize(data, method, config.tol);
          const VerificationReport rep = VerifyDataset(r.game, data, config.tol);
          out << r.bound << ',' << r.rank_a << ',' << r.rank_b << ','
              << rep.game_rank << ',' << (rep.all_pass ? 1 : 0) << ',';
        } catch (const Error&) {
          out << ",,,,0,";
        }
        const double ms = std::chrono::duration<double, std::milli>(
                              std::chrono::steady_clock::now() - start)
                              .count();
        char buf[32];
        std::snprintf(buf, sizeof(buf), "%.3f", config.timing ? ms : 0.0);
        out << buf << '\n';
      }
    }
  }
  return out.str();
}

}  // namespace ratnash
