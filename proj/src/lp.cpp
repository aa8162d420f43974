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

#include "ratnash/lp.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <vector>

#include "ratnash/error.hpp"

namespace ratnash {
namespace {

std::string FormatNumber(double v) {
  if (std::isinf(v)) return v > 0 ? "+inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string FormatTerms(const Vector& coefficients,
                        const std::vector<std::string>& names) {
  std::ostringstream out;
  bool any = false;
  for (Eigen::Index j = 0; j < coefficients.size(); ++j) {
    const double c = coefficients[j];
    if (c == 0.0) continue;
    out << (any ? " " : "") << (c < 0 ? "- " : (any ? "+ " : ""))
        << FormatNumber(std::abs(c)) << " " << names[j];
    any = true;
  }
  if (!any) out << "0";
  return out.str();
}

}  // namespace

int LinearProgram::AddVariable(std::string name, double lo, double hi,
                               double objective_coefficient) {
  const int index = num_variables();
  objective.conservativeResize(index + 1);
  objective[index] = objective_coefficient;
  bounds.push_back({lo, hi});
  names.push_back(std::move(name));
  for (LinearConstraint& c : constraints) {
    c.coefficients.conservativeResize(index + 1);
    c.coefficients[index] = 0.0;
  }
  return index;
}

void LinearProgram::AddConstraint(Vector coefficients, Relation relation,
                                  double rhs) {
  constraints.push_back({std::move(coefficients), relation, rhs});
}

void LinearProgram::Validate() const {
  const auto n = objective.size();
  if (static_cast<Eigen::Index>(bounds.size()) != n ||
      static_cast<Eigen::Index>(names.size()) != n) {
    throw Error(ErrorCode::kInvalidArgument,
                "objective, bounds and names must have equal length");
  }
  if (!objective.allFinite()) {
    throw Error(ErrorCode::kInvalidArgument, "objective is not finite");
  }
  for (std::size_t i = 0; i < constraints.size(); ++i) {
    const LinearConstraint& c = constraints[i];
    if (c.coefficients.size() != n) {
      throw Error(ErrorCode::kInvalidArgument,
                  "constraint " + std::to_string(i) + " has wrong length");
    }
    if (!c.coefficients.allFinite() || !std::isfinite(c.rhs)) {
      throw Error(ErrorCode::kInvalidArgument,
                  "constraint " + std::to_string(i) + " is not finite");
    }
  }
  for (const VariableBounds& b : bounds) {
    if (std::isnan(b.lo) || std::isnan(b.hi)) {
      throw Error(ErrorCode::kInvalidArgument, "bound is NaN");
    }
  }
}

std::string LinearProgram::ToText() const {
  std::ostringstream out;
  out << "maximize: " << FormatTerms(objective, names) << "\n";
  for (std::size_t i = 0; i < constraints.size(); ++i) {
    const LinearConstraint& c = constraints[i];
    out << "c" << i << ": " << FormatTerms(c.coefficients, names)
        << (c.relation == Relation::kEqual ? " = " : " <= ")
        << FormatNumber(c.rhs) << "\n";
  }
  for (int j = 0; j < num_variables(); ++j) {
    out << "bound: " << FormatNumber(bounds[j].lo) << " <= " << names[j]
        << " <= " << FormatNumber(bounds[j].hi) << "\n";
  }
  return out.str();
}

const char* LpStatusName(LpStatus status) {
  switch (status) {
    case LpStatus::kOptimal: return "optimal";
    case LpStatus::kInfeasible: return "infeasible";
    case LpStatus::kUnbounded: return "unbounded";
  }
  return "unknown";
}

RationalizationLp BuildRationalizationLp(const DataSet& data,
                                         const Tolerances& tol) {
  const int n = data.n();
  const int m = data.size();
  RationalizationLp out;
  out.layout = {n, m};
  const RationalizationLayout& at = out.layout;
  LinearProgram& lp = out.program;

  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      lp.AddVariable("A[" + std::to_string(i) + "," + std::to_string(j) + "]",
                     0.0, 1.0);
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      lp.AddVariable("B[" + std::to_string(i) + "," + std::to_string(j) + "]",
                     0.0, 1.0);
    }
  }
  for (int k = 0; k < m; ++k) {
    lp.AddVariable("pi[" + std::to_string(k) + "]", -kInfinity, kInfinity);
  }
  for (int k = 0; k < m; ++k) {
    lp.AddVariable("pic[" + std::to_string(k) + "]", -kInfinity, kInfinity);
  }
  // delta <= 1 already holds when any best-response inequality exists; the
  // cap only matters for data sets in which every support is full.
  lp.AddVariable("delta", 0.0, 1.0, 1.0);

  const int num_vars = at.num_variables();
  for (int k = 0; k < m; ++k) {
    const Observation& obs = data[k];
    const IndexSet row_support = Support(obs.row, tol);
    const IndexSet col_support = Support(obs.col, tol);

    // (A y_k)_i against pi_k.
    std::size_t next = 0;
    for (int i = 0; i < n; ++i) {
      Vector row = Vector::Zero(num_vars);
      for (int j = 0; j < n; ++j) row[at.a(i, j)] = obs.col[j];
      row[at.pi(k)] = -1.0;
      if (next < row_support.size() && row_support[next] == i) {
        ++next;
        lp.AddConstraint(std::move(row), Relation::kEqual, 0.0);
      } else {
        row[at.delta()] = 1.0;
        lp.AddConstraint(std::move(row), Relation::kLessEqual, 0.0);
      }
    }

    // (x_k^T B)_j against pi'_k.
    next = 0;
    for (int j = 0; j < n; ++j) {
      Vector row = Vector::Zero(num_vars);
      for (int i = 0; i < n; ++i) row[at.b(i, j)] = obs.row[i];
      row[at.pi_col(k)] = -1.0;
      if (next < col_support.size() && col_support[next] == j) {
        ++next;
        lp.AddConstraint(std::move(row), Relation::kEqual, 0.0);
      } else {
        row[at.delta()] = 1.0;
        lp.AddConstraint(std::move(row), Relation::kLessEqual, 0.0);
      }
    }
  }
  return out;
}

namespace {

// One player's half of the rationalization program: a payoff matrix M with
// (M s_k)_i = pi_k on the player's support and at most pi_k - delta off it,
// where s_k is the opponent's strategy. Variables: M row-major, pi, delta.
struct HalfSolution {
  double delta = 0.0;
  Matrix payoff;
};

HalfSolution SolveHalf(int n, const std::vector<const MixedStrategy*>& own,
                       const std::vector<const MixedStrategy*>& opponent,
                       const Tolerances& tol, const SimplexOptions& options) {
  const int m = static_cast<int>(own.size());
  LinearProgram lp;
  for (int v = 0; v < n * n; ++v) lp.AddVariable("M" + std::to_string(v), 0.0, 1.0);
  for (int k = 0; k < m; ++k) {
    lp.AddVariable("pi" + std::to_string(k), -kInfinity, kInfinity);
  }
  const int delta = n * n + m;
  lp.AddVariable("delta", 0.0, 1.0, 1.0);
  const int num_vars = delta + 1;
  for (int k = 0; k < m; ++k) {
    const IndexSet support = Support(*own[k], tol);
    std::size_t next = 0;
    for (int i = 0; i < n; ++i) {
      Vector row = Vector::Zero(num_vars);
      for (int j = 0; j < n; ++j) row[i * n + j] = (*opponent[k])[j];
      row[n * n + k] = -1.0;
      if (next < support.size() && support[next] == i) {
        ++next;
        lp.AddConstraint(std::move(row), Relation::kEqual, 0.0);
      } else {
        row[delta] = 1.0;
        lp.AddConstraint(std::move(row), Relation::kLessEqual, 0.0);
      }
    }
  }
  const LpSolution sol = SolveLp(lp, options);
  if (sol.status != LpStatus::kOptimal) {
    // The all-zero point is feasible and delta <= 1, so this is a solver bug.
    throw Error(ErrorCode::kNumericalFailure,
                std::string("rationalization program reported ") +
                    LpStatusName(sol.status));
  }
  HalfSolution out;
  out.delta = sol.values[delta];
  out.payoff.resize(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) out.payoff(i, j) = sol.values[i * n + j];
  }
  return out;
}

}  // namespace

RationalizationResult Rationalize(const DataSet& data, const Tolerances& tol,
                                  const SimplexOptions& options) {
  tol.Validate();
  // With delta fixed the program separates into the two players' halves,
  // so delta* is the smaller of the two half optima.
  std::vector<const MixedStrategy*> rows, cols;
  for (const Observation& obs : data.observations()) {
    rows.push_back(&obs.row);
    cols.push_back(&obs.col);
  }
  const HalfSolution row_half = SolveHalf(data.n(), rows, cols, tol, options);
  const HalfSolution col_half = SolveHalf(data.n(), cols, rows, tol, options);
  RationalizationResult out;
  out.delta_star = std::min(row_half.delta, col_half.delta);
  if (!(out.delta_star > tol.delta_min)) return out;

  Game game(row_half.payoff, col_half.payoff.transpose());
  for (int k = 0; k < data.size(); ++k) {
    if (!IsStrictNash(game, data[k], tol).strict) {
      throw Error(ErrorCode::kNumericalFailure,
                  "program optimum does not make observation " +
                      std::to_string(k) + " a strict equilibrium");
    }
  }
  out.rationalizable = true;
  out.game = std::move(game);
  return out;
}

}  // namespace ratnash
