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

#include "ratnash/core.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "ratnash/error.hpp"

namespace ratnash {

const char* ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kParse: return "ParseError";
    case ErrorCode::kIo: return "IoError";
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kEmptySupport: return "EmptySupport";
    case ErrorCode::kDuplicateObservation: return "DuplicateObservation";
    case ErrorCode::kNonGenericData: return "NonGenericData";
    case ErrorCode::kDependentColumns: return "DependentColumns";
    case ErrorCode::kSupportTooLarge: return "SupportTooLarge";
    case ErrorCode::kOverlappingSupports: return "OverlappingSupports";
    case ErrorCode::kNotRationalizable: return "NotRationalizable";
    case ErrorCode::kNumericalFailure: return "NumericalFailure";
  }
  return "Unknown";
}

void Tolerances::Validate() const {
  if (!(tol_supp > 0) || !(tol_norm > 0) || !(tol_rank > 0) ||
      !(delta_min > 0)) {
    throw Error(ErrorCode::kInvalidArgument,
                "tolerances must be strictly positive");
  }
  if (!(delta_min > tol_supp)) {
    throw Error(ErrorCode::kInvalidArgument,
                "delta_min must exceed tol_supp");
  }
}

MixedStrategy::MixedStrategy(std::span<const double> probs,
                             const Tolerances& tol)
    : MixedStrategy(Eigen::Map<const Vector>(probs.data(),
                                             static_cast<Eigen::Index>(probs.size())),
                    tol) {}

MixedStrategy::MixedStrategy(const Vector& probs, const Tolerances& tol) {
  if (probs.size() == 0) {
    throw Error(ErrorCode::kInvalidArgument, "strategy has no entries");
  }
  double sum = 0.0;
  for (Eigen::Index i = 0; i < probs.size(); ++i) {
    const double p = probs[i];
    if (!std::isfinite(p)) {
      throw Error(ErrorCode::kInvalidArgument,
                  "entry " + std::to_string(i) + " is not finite");
    }
    if (p < -tol.tol_supp) {
      throw Error(ErrorCode::kInvalidArgument,
                  "entry " + std::to_string(i) + " is negative");
    }
    sum += p;
  }
  if (std::abs(sum - 1.0) > tol.tol_norm) {
    throw Error(ErrorCode::kInvalidArgument,
                "entries sum to " + std::to_string(sum) + ", not 1");
  }
  probs_ = probs.cwiseMax(0.0);
  probs_ /= probs_.sum();
}

MixedStrategy MixedStrategy::Pure(int n, int i) {
  MixedStrategy s;
  s.probs_ = Vector::Zero(n);
  s.probs_[i] = 1.0;
  return s;
}

MixedStrategy MixedStrategy::UniformOver(int n, const IndexSet& support) {
  if (support.empty()) {
    throw Error(ErrorCode::kEmptySupport, "uniform strategy needs a support");
  }
  MixedStrategy s;
  s.probs_ = Vector::Zero(n);
  for (int i : support) s.probs_[i] = 1.0;
  s.probs_ /= static_cast<double>(support.size());
  return s;
}

IndexSet Support(const MixedStrategy& s, const Tolerances& tol) {
  IndexSet out;
  for (int i = 0; i < s.size(); ++i) {
    if (s[i] > tol.tol_supp) out.push_back(i);
  }
  if (out.empty()) {
    throw Error(ErrorCode::kEmptySupport, "strategy has empty support");
  }
  return out;
}

DataSet::DataSet(int n, std::vector<Observation> observations,
                 const Tolerances& tol)
    : n_(n), observations_(std::move(observations)) {
  if (n_ < 1) {
    throw Error(ErrorCode::kInvalidArgument, "n must be at least 1");
  }
  if (observations_.empty()) {
    throw Error(ErrorCode::kInvalidArgument,
                "a data set needs at least one observation");
  }
  for (int k = 0; k < size(); ++k) {
    const Observation& obs = observations_[k];
    if (obs.row.size() != n_ || obs.col.size() != n_) {
      throw Error(ErrorCode::kDimensionMismatch,
                  "observation " + std::to_string(k) + " has length " +
                      std::to_string(obs.row.size()) + "/" +
                      std::to_string(obs.col.size()) + ", expected " +
                      std::to_string(n_));
    }
    try {
      Support(obs.row, tol);
      Support(obs.col, tol);
    } catch (const Error&) {
      throw Error(ErrorCode::kEmptySupport,
                  "observation " + std::to_string(k) + " has an empty support");
    }
  }
  for (int k = 0; k < size(); ++k) {
    for (int j = 0; j < k; ++j) {
      const double dx = (observations_[k].row.probs() -
                         observations_[j].row.probs()).cwiseAbs().maxCoeff();
      const double dy = (observations_[k].col.probs() -
                         observations_[j].col.probs()).cwiseAbs().maxCoeff();
      if (dx <= tol.tol_norm && dy <= tol.tol_norm) {
        throw Error(ErrorCode::kDuplicateObservation,
                    "observations " + std::to_string(j) + " and " +
                        std::to_string(k) + " are identical");
      }
    }
  }
}

Matrix DataSet::ColumnStrategies() const {
  Matrix y(n_, size());
  for (int k = 0; k < size(); ++k) y.col(k) = observations_[k].col.probs();
  return y;
}

Matrix DataSet::RowStrategies() const {
  Matrix x(n_, size());
  for (int k = 0; k < size(); ++k) x.col(k) = observations_[k].row.probs();
  return x;
}

DataSet DataSet::Transposed() const {
  std::vector<Observation> swapped;
  swapped.reserve(observations_.size());
  for (const Observation& obs : observations_) {
    swapped.push_back({obs.col, obs.row});
  }
  return DataSet(n_, std::move(swapped));
}

DataSet DataSet::Subset(const std::vector<int>& indices) const {
  if (indices.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "empty observation subset");
  }
  std::vector<Observation> picked;
  picked.reserve(indices.size());
  for (int k : indices) {
    if (k < 0 || k >= size()) {
      throw Error(ErrorCode::kInvalidArgument, "subset index out of range");
    }
    picked.push_back(observations_[k]);
  }
  return DataSet(n_, std::move(picked));
}

Game::Game(Matrix row_payoff, Matrix col_payoff)
    : row_payoff_(std::move(row_payoff)), col_payoff_(std::move(col_payoff)) {
  const auto n = row_payoff_.rows();
  if (n < 1 || row_payoff_.cols() != n || col_payoff_.rows() != n ||
      col_payoff_.cols() != n) {
    throw Error(ErrorCode::kDimensionMismatch,
                "payoff matrices must both be n x n with n >= 1");
  }
  if (!row_payoff_.allFinite() || !col_payoff_.allFinite()) {
    throw Error(ErrorCode::kInvalidArgument, "payoff entries must be finite");
  }
}

Game Game::Transposed() const {
  return Game(col_payoff_.transpose(), row_payoff_.transpose());
}

IndexSet BestResponseRows(const Matrix& payoff, const Vector& y,
                          const Tolerances& tol) {
  if (payoff.cols() != y.size() || payoff.rows() == 0) {
    throw Error(ErrorCode::kDimensionMismatch,
                "payoff matrix and strategy dimensions disagree");
  }
  const Vector values = payoff * y;
  const double best = values.maxCoeff();
  IndexSet out;
  for (Eigen::Index i = 0; i < values.size(); ++i) {
    if (values[i] >= best - tol.delta_min) out.push_back(static_cast<int>(i));
  }
  return out;
}

double SupportMargin(const Vector& payoffs, const IndexSet& support) {
  double on_min = std::numeric_limits<double>::infinity();
  double off_max = -std::numeric_limits<double>::infinity();
  std::size_t next = 0;
  for (Eigen::Index i = 0; i < payoffs.size(); ++i) {
    if (next < support.size() && support[next] == i) {
      on_min = std::min(on_min, payoffs[i]);
      ++next;
    } else {
      off_max = std::max(off_max, payoffs[i]);
    }
  }
  if (off_max == -std::numeric_limits<double>::infinity()) {
    return std::numeric_limits<double>::infinity();
  }
  return on_min - off_max;
}

StrictNashCheck IsStrictNash(const Game& game, const Observation& obs,
                             const Tolerances& tol) {
  const int n = game.n();
  if (obs.row.size() != n || obs.col.size() != n) {
    throw Error(ErrorCode::kDimensionMismatch,
                "observation and game dimensions disagree");
  }
  const IndexSet row_support = Support(obs.row, tol);
  const IndexSet col_support = Support(obs.col, tol);
  const Matrix col_payoff_t = game.col_payoff().transpose();

  StrictNashCheck out;
  out.row_margin =
      SupportMargin(game.row_payoff() * obs.col.probs(), row_support);
  out.col_margin = SupportMargin(col_payoff_t * obs.row.probs(), col_support);
  out.strict =
      BestResponseRows(game.row_payoff(), obs.col.probs(), tol) == row_support &&
      BestResponseRows(col_payoff_t, obs.row.probs(), tol) == col_support;
  return out;
}

}  // namespace ratnash
