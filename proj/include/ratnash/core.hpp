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

// Domain types for two-player games and observed mixed-strategy data, plus
// the strict-Nash predicate everything else is judged by.
//
// All indices are 0-based. Index sets are sorted ascending vectors.

#pragma once

#include <span>
#include <vector>

#include <Eigen/Dense>

namespace ratnash {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using IndexSet = std::vector<int>;

struct Tolerances {
  // Entries at or below this are outside the support.
  double tol_supp = 1e-9;
  // Allowed deviation of a strategy's sum from 1 before renormalization.
  double tol_norm = 1e-9;
  // Relative singular-value cutoff for numerical rank.
  double tol_rank = 1e-9;
  // A pure strategy is a best response iff its payoff is within delta_min of
  // the maximum; strictness means being worse by at least delta_min.
  double delta_min = 1e-7;

  // Throws kInvalidArgument unless all are positive and delta_min > tol_supp.
  void Validate() const;
};

// A probability vector. Construction validates and renormalizes so the
// stored entries are non-negative and sum to 1 in machine precision.
class MixedStrategy {
 public:
  MixedStrategy() = default;
  MixedStrategy(std::span<const double> probs, const Tolerances& tol);
  MixedStrategy(const Vector& probs, const Tolerances& tol);

  static MixedStrategy Pure(int n, int i);
  static MixedStrategy UniformOver(int n, const IndexSet& support);

  const Vector& probs() const { return probs_; }
  int size() const { return static_cast<int>(probs_.size()); }
  double operator[](int i) const { return probs_[i]; }

 private:
  Vector probs_;
};

IndexSet Support(const MixedStrategy& s, const Tolerances& tol);

struct Observation {
  MixedStrategy row;  // x_k
  MixedStrategy col;  // y_k
};

// An ordered, non-empty list of observations over n pure strategies.
class DataSet {
 public:
  DataSet(int n, std::vector<Observation> observations, const Tolerances& tol);

  int n() const { return n_; }
  int size() const { return static_cast<int>(observations_.size()); }
  const Observation& operator[](int k) const { return observations_[k]; }
  const std::vector<Observation>& observations() const { return observations_; }

  // n x m; column k is y_k.
  Matrix ColumnStrategies() const;
  // n x m; column k is x_k (the transpose of the stacked-rows matrix X).
  Matrix RowStrategies() const;

  // Swaps the roles of the players: observation k becomes (y_k, x_k).
  DataSet Transposed() const;
  // Observations at the given positions, in the given order.
  DataSet Subset(const std::vector<int>& indices) const;

 private:
  DataSet(int n, std::vector<Observation> observations)
      : n_(n), observations_(std::move(observations)) {}

  int n_ = 0;
  std::vector<Observation> observations_;
};

class Game {
 public:
  Game(Matrix row_payoff, Matrix col_payoff);

  const Matrix& row_payoff() const { return row_payoff_; }
  const Matrix& col_payoff() const { return col_payoff_; }
  int n() const { return static_cast<int>(row_payoff_.rows()); }

  // The same game seen with the players swapped: (B^T, A^T).
  Game Transposed() const;

 private:
  Matrix row_payoff_;
  Matrix col_payoff_;
};

// Rows whose payoff against y is within delta_min of the best.
IndexSet BestResponseRows(const Matrix& payoff, const Vector& y,
                          const Tolerances& tol);

struct StrictNashCheck {
  bool strict = false;
  // Smallest on-support payoff minus the best off-support payoff; +inf when
  // the support is everything.
  double row_margin = 0.0;
  double col_margin = 0.0;
};

// Row side compares Supp(x) with the best responses to y under A; column
// side compares Supp(y) with the best responses to x under B^T.
StrictNashCheck IsStrictNash(const Game& game, const Observation& obs,
                             const Tolerances& tol);

// Margin of one side: min over `support` of payoffs minus max over the rest.
double SupportMargin(const Vector& payoffs, const IndexSet& support);

}  // namespace ratnash
