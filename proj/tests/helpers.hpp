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

#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "oracles.hpp"
#include "ratnash/core.hpp"
#include "ratnash/error.hpp"
#include "ratnash/lp.hpp"
#include "ratnash/synth.hpp"

namespace helpers {

using ratnash::DataSet;
using ratnash::Game;
using ratnash::Tolerances;

// Every observation strict under the oracle predicate.
inline bool OracleVerifies(const Game& g, const DataSet& d,
                           const Tolerances& tol = {}) {
  const oracle::Rows a = oracle::ToRows(g.row_payoff());
  const oracle::Rows b = oracle::ToRows(g.col_payoff());
  for (const auto& obs : d.observations()) {
    if (!oracle::StrictNash(a, b, oracle::ToVec(obs.row.probs()),
                            oracle::ToVec(obs.col.probs()), tol.tol_supp,
                            tol.delta_min)) {
      return false;
    }
  }
  return true;
}

// Row side only: best responses to y_k are exactly Supp(x_k).
inline bool OracleRowSide(const ratnash::Matrix& a, const DataSet& d,
                          const Tolerances& tol = {}) {
  const oracle::Rows rows = oracle::ToRows(a);
  for (const auto& obs : d.observations()) {
    if (oracle::ArgmaxSet(rows, oracle::ToVec(obs.col.probs()),
                          tol.delta_min) !=
        oracle::SupportOf(oracle::ToVec(obs.row.probs()), tol.tol_supp)) {
      return false;
    }
  }
  return true;
}

struct Rationalization {
  std::string source;
  Game game;
};

// The LP witness plus the output of every synthesis method that accepts the
// data set. Precondition failures are skipped; anything else propagates.
inline std::vector<Rationalization> ToolkitRationalizations(
    const DataSet& d, const Tolerances& tol = {}) {
  std::vector<Rationalization> out;
  const ratnash::RationalizationResult lp = ratnash::Rationalize(d, tol);
  if (lp.game) out.push_back({"lp-witness", *lp.game});
  for (ratnash::Method m :
       {ratnash::Method::kLp, ratnash::Method::kLowDim,
        ratnash::Method::kSupport, ratnash::Method::kChromatic,
        ratnash::Method::kComposite, ratnash::Method::kAuto}) {
    try {
      out.push_back({ratnash::MethodName(m),
                     ratnash::Synthesize(d, m, tol).game});
    } catch (const ratnash::Error& e) {
      if (e.code() != ratnash::ErrorCode::kNonGenericData &&
          e.code() != ratnash::ErrorCode::kNotRationalizable) {
        throw;
      }
    }
  }
  return out;
}

// Code of the ratnash::Error thrown by f, or nullopt when nothing is thrown.
template <typename F>
std::optional<ratnash::ErrorCode> CodeOf(F&& f) {
  try {
    f();
  } catch (const ratnash::Error& e) {
    return e.code();
  }
  return std::nullopt;
}

}  // namespace helpers
