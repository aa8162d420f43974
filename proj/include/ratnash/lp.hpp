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

// Linear programs, a dense bounded-variable simplex solver, and the
// rationalizability program for observed strategy data.

#pragma once

#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "ratnash/core.hpp"

namespace ratnash {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

enum class Relation { kEqual, kLessEqual };

struct LinearConstraint {
  Vector coefficients;
  Relation relation = Relation::kLessEqual;
  double rhs = 0.0;
};

struct VariableBounds {
  double lo = 0.0;
  double hi = kInfinity;
};

// maximize objective . x  subject to constraints and per-variable bounds.
struct LinearProgram {
  Vector objective;
  std::vector<VariableBounds> bounds;
  std::vector<std::string> names;
  std::vector<LinearConstraint> constraints;

  int num_variables() const { return static_cast<int>(objective.size()); }

  // Appends a variable and returns its index; existing constraints are
  // padded with a zero coefficient.
  int AddVariable(std::string name, double lo, double hi,
                  double objective_coefficient = 0.0);
  void AddConstraint(Vector coefficients, Relation relation, double rhs);

  // Throws kInvalidArgument on ragged rows or non-finite coefficients.
  void Validate() const;

  // Plain-text listing, one constraint per line.
  std::string ToText() const;
};

enum class LpStatus { kOptimal, kInfeasible, kUnbounded };

const char* LpStatusName(LpStatus status);

struct LpSolution {
  LpStatus status = LpStatus::kInfeasible;
  Vector values;
  double objective_value = 0.0;
  int iterations = 0;
};

enum class PricingRule {
  // Largest reduced cost, dropping to Bland's rule during degenerate runs.
  kDantzigBlandFallback,
  // Bland's smallest-index rule throughout.
  kBland,
};

struct SimplexOptions {
  PricingRule pricing = PricingRule::kDantzigBlandFallback;
  // Consecutive degenerate pivots before switching to Bland's rule.
  int degenerate_switch = 50;
  int max_iterations = 0;  // 0 picks a size-based limit
  double residual_tol = 1e-8;
};

// Dense-tableau simplex with implicit variable bounds. When every objective
// coefficient points at a finite bound it runs a dual simplex on slightly
// perturbed costs followed by a primal pass on the true costs; otherwise a
// two-phase primal simplex. Throws kNumericalFailure when the refined
// optimum violates the program by more than residual_tol or the iteration
// limit is hit.
LpSolution SolveLp(const LinearProgram& program,
                   const SimplexOptions& options = {});

// Variable layout of the rationalization program for n strategies and m
// observations: A row-major, B row-major, pi, pi', delta.
struct RationalizationLayout {
  int n = 0;
  int m = 0;

  int a(int i, int j) const { return i * n + j; }
  int b(int i, int j) const { return n * n + i * n + j; }
  int pi(int k) const { return 2 * n * n + k; }
  int pi_col(int k) const { return 2 * n * n + m + k; }
  int delta() const { return 2 * n * n + 2 * m; }
  int num_variables() const { return 2 * n * n + 2 * m + 1; }
};

struct RationalizationLp {
  LinearProgram program;
  RationalizationLayout layout;
};

// maximize delta subject to: on-support rows of A y_k equal pi_k, off-support
// rows at most pi_k - delta, the same for x_k^T B with pi'_k, entries of A
// and B in [0, 1], delta >= 0.
RationalizationLp BuildRationalizationLp(const DataSet& data,
                                         const Tolerances& tol);

struct RationalizationResult {
  bool rationalizable = false;
  double delta_star = 0.0;
  // Present iff rationalizable.
  std::optional<Game> game;
};

// Solves the rationalization program and accepts iff delta* > delta_min. A
// returned game is re-checked with IsStrictNash on every observation and a
// failure there is reported as kNumericalFailure.
RationalizationResult Rationalize(const DataSet& data, const Tolerances& tol,
                                  const SimplexOptions& options = {});

}  // namespace ratnash
