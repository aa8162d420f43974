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

// Random data-set families for tests.

#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "oracles.hpp"
#include "ratnash/core.hpp"
#include "ratnash/error.hpp"

namespace gen {

using Rng = std::mt19937_64;
using ratnash::DataSet;
using ratnash::MixedStrategy;
using ratnash::Observation;
using ratnash::Tolerances;
using ratnash::Vector;

inline int Uniform(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

inline std::vector<int> RandomSubset(Rng& rng, int n, int size) {
  std::vector<int> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::shuffle(idx.begin(), idx.end(), rng);
  idx.resize(size);
  std::sort(idx.begin(), idx.end());
  return idx;
}

// Positive random weights on `support`, normalized.
inline Vector OnSupport(Rng& rng, int n, const std::vector<int>& support) {
  std::uniform_real_distribution<double> w(0.2, 1.0);
  Vector p = Vector::Zero(n);
  for (int i : support) p[i] = w(rng);
  return p / p.sum();
}

inline MixedStrategy Strategy(const Vector& p) {
  return MixedStrategy(p, Tolerances{});
}

inline MixedStrategy RandomSupported(Rng& rng, int n, int max_support) {
  const int s = Uniform(rng, 1, std::min(n, max_support));
  return Strategy(OnSupport(rng, n, RandomSubset(rng, n, s)));
}

inline bool FullColumnRank(const Eigen::MatrixXd& y) {
  return y.cols() <= y.rows() && oracle::Rank(y) == y.cols();
}

// Builds observations with the callbacks until both sides are generic (or
// only the requested side) and no two observations coincide.
template <typename MakeObs>
DataSet Draw(int n, int m, MakeObs make, bool need_row_generic,
             bool need_col_generic) {
  for (int attempt = 0; attempt < 10000; ++attempt) {
    std::vector<Observation> obs;
    for (int k = 0; k < m; ++k) obs.push_back(make(k));
    try {
      DataSet d(n, std::move(obs), Tolerances{});
      if (need_row_generic && !FullColumnRank(d.RowStrategies())) continue;
      if (need_col_generic && !FullColumnRank(d.ColumnStrategies())) continue;
      return d;
    } catch (const ratnash::Error&) {
    }
  }
  throw std::runtime_error("generator gave up");
}

// Support of size 1..max_support containing `anchor`.
inline MixedStrategy AnchoredSupported(Rng& rng, int n, int max_support,
                                       int anchor) {
  const int s = Uniform(rng, 1, std::min(n, max_support));
  std::vector<int> support = RandomSubset(rng, n, s);
  if (std::find(support.begin(), support.end(), anchor) == support.end()) {
    support[Uniform(rng, 0, s - 1)] = anchor;
    std::sort(support.begin(), support.end());
  }
  return Strategy(OnSupport(rng, n, support));
}

// Generic on both sides, supports of size up to max_support. Each strategy
// contains a distinct anchor index so independence holds for almost every
// draw of the weights.
inline DataSet RandomGeneric(Rng& rng, int n, int m, int max_support) {
  std::vector<int> row_anchor = RandomSubset(rng, n, n);
  std::vector<int> col_anchor = RandomSubset(rng, n, n);
  std::shuffle(row_anchor.begin(), row_anchor.end(), rng);
  std::shuffle(col_anchor.begin(), col_anchor.end(), rng);
  return Draw(
      n, m,
      [&](int k) {
        return Observation{AnchoredSupported(rng, n, max_support, row_anchor[k]),
                           AnchoredSupported(rng, n, max_support, col_anchor[k])};
      },
      true, true);
}

// Two observations sharing y but with different row supports, so no game
// can make both strict.
inline DataSet Contradiction(Rng& rng, int n) {
  const Vector y = OnSupport(rng, n, RandomSubset(rng, n, Uniform(rng, 1, n)));
  std::vector<int> s1, s2;
  do {
    s1 = RandomSubset(rng, n, Uniform(rng, 1, n));
    s2 = RandomSubset(rng, n, Uniform(rng, 1, n));
  } while (s1 == s2);
  return DataSet(n,
                 {{Strategy(OnSupport(rng, n, s1)), Strategy(y)},
                  {Strategy(OnSupport(rng, n, s2)), Strategy(y)}},
                 Tolerances{});
}

// Distinct pure row strategies against column strategies drawn from the
// convex hull of d random distributions, so dim(O_c) = d.
inline DataSet LowDimension(Rng& rng, int n, int d, int m) {
  std::vector<Vector> basis;
  for (int j = 0; j < d; ++j) {
    basis.push_back(OnSupport(rng, n, RandomSubset(rng, n, n)));
  }
  const std::vector<int> rows = RandomSubset(rng, n, m);
  return Draw(
      n, m,
      [&](int k) {
        Vector c(d);
        std::uniform_real_distribution<double> w(0.05, 1.0);
        for (int j = 0; j < d; ++j) c[j] = w(rng);
        c /= c.sum();
        Vector y = Vector::Zero(n);
        for (int j = 0; j < d; ++j) y += c[j] * basis[j];
        return Observation{MixedStrategy::Pure(n, rows[k]), Strategy(y)};
      },
      false, false);
}

// Row supports of size <= s, column strategies generic.
inline DataSet SmallRowSupport(Rng& rng, int n, int s, int m) {
  return Draw(
      n, m,
      [&](int) {
        return Observation{RandomSupported(rng, n, s),
                           RandomSupported(rng, n, n)};
      },
      false, true);
}

// Pairwise disjoint row supports, generic column strategies.
inline DataSet DisjointRowSupport(Rng& rng, int n, int m) {
  return Draw(
      n, m,
      [&, blocks = std::vector<std::vector<int>>()](int k) mutable {
        if (k == 0) {
          std::vector<int> perm = RandomSubset(rng, n, n);
          std::shuffle(perm.begin(), perm.end(), rng);
          blocks.assign(m, {});
          for (int j = 0; j < m; ++j) blocks[j].push_back(perm[j]);
          for (int j = m; j < n; ++j) {
            if (Uniform(rng, 0, 1)) blocks[Uniform(rng, 0, m - 1)].push_back(perm[j]);
          }
          for (auto& b : blocks) std::sort(b.begin(), b.end());
        }
        return Observation{Strategy(OnSupport(rng, n, blocks[k])),
                           RandomSupported(rng, n, n)};
      },
      false, true);
}

// m - t observations with row support <= s plus t with arbitrary support.
// Generic on both sides.
inline DataSet CoreWithExtras(Rng& rng, int n, int s, int t, int m) {
  return Draw(
      n, m,
      [&](int k) {
        const bool extra = k >= m - t;
        return Observation{RandomSupported(rng, n, extra ? n : s),
                           RandomSupported(rng, n, n)};
      },
      true, true);
}

}  // namespace gen
