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

// Dense simplex on a full tableau with general bounds.
//
// When every objective coefficient points at a finite bound, the all-slack
// basis is dual feasible: a dual simplex on slightly perturbed costs
// reaches a primal feasible basis, and the primal simplex on the true costs
// finishes from there. Otherwise a two-phase primal simplex with one
// artificial per row runs instead. Nonbasic columns sit at a finite bound,
// or at zero when free. Both ratio tests are Harris two-pass tests that
// prefer large pivots among near-ties. The tableau is rebuilt from the
// original rows every kRefactorInterval pivots and before a phase ends.

#include <algorithm>
#include <cmath>
#include <random>
#include <string>
#include <vector>

#include <Eigen/LU>

#include "ratnash/error.hpp"
#include "ratnash/lp.hpp"

namespace ratnash {
namespace {

using RowMatrix =
    Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

constexpr double kPivotTol = 1e-7;
constexpr double kCostTol = 1e-9;
constexpr double kFeasTol = 1e-9;
constexpr int kRefactorInterval = 500;

enum class NonbasicAt : char { kLower, kUpper, kZero };

class Simplex {
 public:
  enum class Outcome { kOptimal, kUnbounded, kInfeasible };

  // `core` holds the original rows over all columns. Nonbasic columns start
  // at `status`, or at their default position when it is empty.
  Simplex(RowMatrix core, Vector rhs, std::vector<double> lower,
          std::vector<double> upper, std::vector<int> basis,
          std::vector<NonbasicAt> status, const SimplexOptions& options,
          int max_iterations)
      : core_(std::move(core)),
        rhs_(std::move(rhs)),
        lower_(std::move(lower)),
        upper_(std::move(upper)),
        basis_(std::move(basis)),
        status_(std::move(status)),
        options_(options),
        max_iterations_(max_iterations) {
    if (status_.empty()) {
      status_.resize(core_.cols());
      for (int j = 0; j < cols(); ++j) status_[j] = DefaultStatus(j);
    }
    Refactor();
  }

  void SetObjective(Vector c) {
    cost_ = std::move(c);
    RecomputeReducedCosts();
  }

  Outcome Run() {
    bool bland = options_.pricing == PricingRule::kBland;
    int degenerate_run = 0;
    int since_refactor = 0;
    for (;;) {
      int q = ChooseEntering(bland);
      if (q < 0) {
        // Confirm with a fresh tableau before declaring optimality.
        if (since_refactor > 0) {
          Refactor();
          since_refactor = 0;
          q = ChooseEntering(bland);
        }
        if (q < 0) return Outcome::kOptimal;
      }
      if (++iterations_ > max_iterations_) {
        throw Error(ErrorCode::kNumericalFailure,
                    "simplex iteration limit reached");
      }
      const double dir = EnteringDirection(q);

      // Pass 1: largest step with every basic variable allowed kFeasTol of
      // bound violation.
      double relaxed = kInfinity;
      for (int i = 0; i < rows(); ++i) {
        const double alpha = dir * t_(i, q);
        relaxed = std::min(relaxed, Limit(i, alpha, kFeasTol));
      }
      const double range = upper_[q] - lower_[q];
      if (std::isinf(relaxed) && std::isinf(range)) return Outcome::kUnbounded;

      double theta;
      if (range <= relaxed) {
        theta = range;
        Step(q, dir, theta);
        status_[q] = status_[q] == NonbasicAt::kLower ? NonbasicAt::kUpper
                                                      : NonbasicAt::kLower;
      } else {
        // Pass 2: among rows blocking within the relaxed step, the largest
        // pivot; Bland mode takes the smallest basic index instead.
        int r = -1;
        double best = 0.0;
        for (int i = 0; i < rows(); ++i) {
          const double alpha = dir * t_(i, q);
          if (std::abs(alpha) <= kPivotTol) continue;
          if (Limit(i, alpha, 0.0) > relaxed) continue;
          const bool better = r < 0 || (bland ? basis_[i] < basis_[r]
                                              : std::abs(alpha) > best);
          if (better) {
            r = i;
            best = std::abs(alpha);
          }
        }
        const double alpha = dir * t_(r, q);
        theta = std::max(Limit(r, alpha, 0.0), 0.0);
        const double entering_value = NonbasicValue(q) + dir * theta;
        Step(q, dir, theta);
        const int leaving = basis_[r];
        Pivot(r, q);
        x_b_[r] = entering_value;
        status_[leaving] = alpha > 0.0 ? NonbasicAt::kLower : NonbasicAt::kUpper;
        if (std::isinf(BoundFor(leaving, status_[leaving]))) {
          status_[leaving] = NonbasicAt::kZero;
        }
        if (++since_refactor >= kRefactorInterval) {
          Refactor();
          since_refactor = 0;
        }
      }
      degenerate_run = theta <= kFeasTol ? degenerate_run + 1 : 0;
      if (options_.pricing == PricingRule::kDantzigBlandFallback) {
        bland = degenerate_run >= options_.degenerate_switch;
      }
    }
  }

  // Dual simplex from a dual feasible basis. Returns kOptimal once the basis
  // is primal feasible, kInfeasible when a row cannot be repaired.
  Outcome RunDual() {
    const bool bland = options_.pricing == PricingRule::kBland;
    int since_refactor = 0;
    for (;;) {
      int r = ChooseLeaving(bland);
      if (r < 0) {
        if (since_refactor > 0) {
          Refactor();
          since_refactor = 0;
          r = ChooseLeaving(bland);
        }
        if (r < 0) return Outcome::kOptimal;
      }
      if (++iterations_ > max_iterations_) {
        throw Error(ErrorCode::kNumericalFailure,
                    "simplex iteration limit reached");
      }
      const int leaving = basis_[r];
      const bool rising = x_b_[r] < lower_[leaving];
      const double target = rising ? lower_[leaving] : upper_[leaving];
      // The basic value changes by -t_rq * (change of x_q); sign > 0 keeps
      // the columns whose feasible move pushes it toward `target`.
      const double want = rising ? 1.0 : -1.0;
      auto eligible = [&](int j) {
        if (row_of_[j] >= 0 || lower_[j] == upper_[j]) return 0.0;
        const double alpha = t_(r, j);
        if (std::abs(alpha) <= kPivotTol) return 0.0;
        switch (status_[j]) {
          case NonbasicAt::kLower: return -alpha * want > 0.0 ? alpha : 0.0;
          case NonbasicAt::kUpper: return alpha * want > 0.0 ? alpha : 0.0;
          case NonbasicAt::kZero: return alpha;
        }
        return 0.0;
      };
      double relaxed = kInfinity;
      for (int j = 0; j < cols(); ++j) {
        const double alpha = eligible(j);
        if (alpha == 0.0) continue;
        relaxed = std::min(relaxed, (std::abs(d_[j]) + kCostTol) / std::abs(alpha));
      }
      if (std::isinf(relaxed)) return Outcome::kInfeasible;
      int q = -1;
      double best = 0.0;
      for (int j = 0; j < cols(); ++j) {
        const double alpha = eligible(j);
        if (alpha == 0.0 || std::abs(d_[j]) / std::abs(alpha) > relaxed) continue;
        const bool better =
            q < 0 || (bland ? j < q : std::abs(alpha) > best);
        if (better) {
          q = j;
          best = std::abs(alpha);
        }
      }
      const double change = (x_b_[r] - target) / t_(r, q);
      const double entering_value = NonbasicValue(q) + change;
      Step(q, 1.0, change);
      Pivot(r, q);
      x_b_[r] = entering_value;
      status_[leaving] = rising ? NonbasicAt::kLower : NonbasicAt::kUpper;
      if (++since_refactor >= kRefactorInterval) {
        Refactor();
        since_refactor = 0;
      }
    }
  }

  // Pivots basic columns at or beyond first_artificial out of the basis
  // where a real column can replace them; returns rows where none can.
  std::vector<int> DriveOut(int first_artificial) {
    std::vector<int> redundant;
    for (int r = 0; r < rows(); ++r) {
      if (basis_[r] < first_artificial) continue;
      int best = -1;
      double best_abs = 1e-7;
      for (int j = 0; j < first_artificial; ++j) {
        if (row_of_[j] >= 0) continue;
        if (std::abs(t_(r, j)) > best_abs) {
          best = j;
          best_abs = std::abs(t_(r, j));
        }
      }
      if (best < 0) {
        redundant.push_back(r);
        continue;
      }
      const double value = NonbasicValue(best);
      const int leaving = basis_[r];
      Pivot(r, best);
      x_b_[r] = value;
      status_[leaving] = NonbasicAt::kLower;
    }
    return redundant;
  }

  // Keeps the rows not listed in drop_rows and the first keep_cols columns.
  void Shrink(const std::vector<int>& drop_rows, int keep_cols) {
    std::vector<int> keep;
    for (int i = 0; i < rows(); ++i) {
      if (std::find(drop_rows.begin(), drop_rows.end(), i) == drop_rows.end()) {
        keep.push_back(i);
      }
    }
    RowMatrix core(static_cast<Eigen::Index>(keep.size()), keep_cols);
    Vector rhs(static_cast<Eigen::Index>(keep.size()));
    std::vector<int> basis;
    for (std::size_t k = 0; k < keep.size(); ++k) {
      const auto kk = static_cast<Eigen::Index>(k);
      core.row(kk) = core_.row(keep[k]).head(keep_cols);
      rhs[kk] = rhs_[keep[k]];
      basis.push_back(basis_[keep[k]]);
    }
    core_ = std::move(core);
    rhs_ = std::move(rhs);
    basis_ = std::move(basis);
    lower_.resize(keep_cols);
    upper_.resize(keep_cols);
    status_.resize(keep_cols);
    cost_.resize(0);
    Refactor();
  }

  // Rebuilds the tableau, basic values and reduced costs from core_.
  void Refactor() {
    const int r = rows();
    row_of_.assign(cols(), -1);
    for (int i = 0; i < r; ++i) row_of_[basis_[i]] = i;
    if (r == 0) {
      t_.resize(0, cols());
      x_b_.resize(0);
      RecomputeReducedCosts();
      return;
    }
    Matrix b(r, r);
    for (int i = 0; i < r; ++i) b.col(i) = core_.col(basis_[i]);
    const Eigen::PartialPivLU<Matrix> lu(b);
    t_ = lu.solve(Matrix(core_));
    Vector residual = rhs_;
    for (int j = 0; j < cols(); ++j) {
      if (row_of_[j] < 0) {
        const double v = NonbasicValue(j);
        if (v != 0.0) residual -= v * core_.col(j);
      }
    }
    x_b_ = lu.solve(residual);
    if (!t_.allFinite() || !x_b_.allFinite()) {
      throw Error(ErrorCode::kNumericalFailure, "singular simplex basis");
    }
    for (int i = 0; i < r; ++i) {
      t_.col(basis_[i]).setZero();
      t_(i, basis_[i]) = 1.0;
    }
    RecomputeReducedCosts();
  }

  // Values of all columns at the current basic solution.
  Vector Values() const {
    Vector x(cols());
    for (int j = 0; j < cols(); ++j) x[j] = NonbasicValue(j);
    for (int i = 0; i < rows(); ++i) x[basis_[i]] = x_b_[i];
    return x;
  }

  int rows() const { return static_cast<int>(core_.rows()); }
  int cols() const { return static_cast<int>(core_.cols()); }
  int iterations() const { return iterations_; }

 private:
  NonbasicAt DefaultStatus(int j) const {
    if (std::isfinite(lower_[j])) return NonbasicAt::kLower;
    if (std::isfinite(upper_[j])) return NonbasicAt::kUpper;
    return NonbasicAt::kZero;
  }

  double BoundFor(int j, NonbasicAt at) const {
    switch (at) {
      case NonbasicAt::kLower: return lower_[j];
      case NonbasicAt::kUpper: return upper_[j];
      case NonbasicAt::kZero: return 0.0;
    }
    return 0.0;
  }

  double NonbasicValue(int j) const { return BoundFor(j, status_[j]); }

  void RecomputeReducedCosts() {
    if (cost_.size() != cols()) {
      d_.resize(0);
      return;
    }
    Vector c_basic(rows());
    for (int i = 0; i < rows(); ++i) c_basic[i] = cost_[basis_[i]];
    d_ = cost_ - t_.transpose() * c_basic;
    for (int i = 0; i < rows(); ++i) d_[basis_[i]] = 0.0;
  }

  // +1 when the entering column increases, -1 when it decreases.
  double EnteringDirection(int q) const {
    switch (status_[q]) {
      case NonbasicAt::kLower: return 1.0;
      case NonbasicAt::kUpper: return -1.0;
      case NonbasicAt::kZero: return d_[q] > 0.0 ? 1.0 : -1.0;
    }
    return 1.0;
  }

  // Step at which basic row i reaches a bound (relaxed by slack) when the
  // entering column moves so that the basic value changes by -alpha * step.
  double Limit(int i, double alpha, double slack) const {
    const int j = basis_[i];
    if (alpha > kPivotTol) {
      if (std::isinf(lower_[j])) return kInfinity;
      return std::max(x_b_[i] - lower_[j] + slack, 0.0) / alpha;
    }
    if (alpha < -kPivotTol) {
      if (std::isinf(upper_[j])) return kInfinity;
      return std::max(upper_[j] - x_b_[i] + slack, 0.0) / -alpha;
    }
    return kInfinity;
  }

  void Step(int q, double dir, double theta) {
    if (theta == 0.0) return;
    x_b_.noalias() -= (theta * dir) * t_.col(q);
  }

  void Pivot(int r, int q) {
    const double pivot = t_(r, q);
    t_.row(r) /= pivot;
    for (int i = 0; i < rows(); ++i) {
      if (i == r) continue;
      const double c = t_(i, q);
      if (c != 0.0) {
        t_.row(i) -= c * t_.row(r);
        t_(i, q) = 0.0;
      }
    }
    if (d_.size() == cols()) {
      const double c = d_[q];
      if (c != 0.0) d_ -= c * t_.row(r).transpose();
      d_[q] = 0.0;
    }
    row_of_[basis_[r]] = -1;
    basis_[r] = q;
    row_of_[q] = r;
  }

  // Basic row with the largest bound violation, or the smallest basic
  // index among violated rows in Bland mode.
  int ChooseLeaving(bool bland) const {
    int best = -1;
    double best_violation = 0.0;
    for (int i = 0; i < rows(); ++i) {
      const int j = basis_[i];
      const double v = std::max(lower_[j] - x_b_[i], x_b_[i] - upper_[j]);
      const double bound =
          v == lower_[j] - x_b_[i] ? lower_[j] : upper_[j];
      if (v <= kFeasTol * std::max(1.0, std::abs(bound))) continue;
      const bool better =
          best < 0 || (bland ? j < basis_[best] : v > best_violation);
      if (better) {
        best = i;
        best_violation = v;
      }
    }
    return best;
  }

  int ChooseEntering(bool bland) const {
    int best = -1;
    double best_score = 0.0;
    for (int j = 0; j < cols(); ++j) {
      if (row_of_[j] >= 0 || lower_[j] == upper_[j]) continue;
      const double dj = d_[j];
      bool improving = false;
      switch (status_[j]) {
        case NonbasicAt::kLower: improving = dj > kCostTol; break;
        case NonbasicAt::kUpper: improving = dj < -kCostTol; break;
        case NonbasicAt::kZero: improving = std::abs(dj) > kCostTol; break;
      }
      if (!improving) continue;
      if (bland) return j;
      if (std::abs(dj) > best_score) {
        best = j;
        best_score = std::abs(dj);
      }
    }
    return best;
  }

  RowMatrix core_;
  Vector rhs_;
  std::vector<double> lower_;
  std::vector<double> upper_;
  std::vector<int> basis_;
  std::vector<NonbasicAt> status_;
  std::vector<int> row_of_;
  RowMatrix t_;
  Vector x_b_;
  Vector cost_;
  Vector d_;
  SimplexOptions options_;
  int max_iterations_;
  int iterations_ = 0;
};

}  // namespace

namespace {

// Every nonzero objective coefficient has a finite bound to sit at.
bool DualFeasibleStart(const LinearProgram& program) {
  for (int v = 0; v < program.num_variables(); ++v) {
    const double c = program.objective[v];
    const VariableBounds& bd = program.bounds[v];
    if (c > 0.0 && std::isinf(bd.hi)) return false;
    if (c < 0.0 && std::isinf(bd.lo)) return false;
  }
  return true;
}

int MaxIterations(const SimplexOptions& options, int rows, int cols) {
  return options.max_iterations > 0 ? options.max_iterations
                                    : 50000 + 20 * (rows + cols);
}

// Dual simplex with perturbed costs, then primal cleanup on the true costs.
// Every row gets a slack, fixed at zero for equalities.
LpSolution SolveDual(const LinearProgram& program, const SimplexOptions& options) {
  const int num_vars = program.num_variables();
  const int num_rows = static_cast<int>(program.constraints.size());
  const int total_cols = num_vars + num_rows;

  std::vector<double> lower, upper;
  std::vector<NonbasicAt> status(total_cols, NonbasicAt::kLower);
  for (int v = 0; v < num_vars; ++v) {
    const VariableBounds& bd = program.bounds[v];
    lower.push_back(bd.lo);
    upper.push_back(bd.hi);
    const double c = program.objective[v];
    if (c > 0.0 || (c == 0.0 && std::isinf(bd.lo))) {
      status[v] = std::isfinite(bd.hi) ? NonbasicAt::kUpper : NonbasicAt::kZero;
    }
  }
  RowMatrix core = RowMatrix::Zero(num_rows, total_cols);
  Vector rhs(num_rows);
  std::vector<int> basis(num_rows);
  for (int i = 0; i < num_rows; ++i) {
    const LinearConstraint& c = program.constraints[i];
    core.row(i).head(num_vars) = c.coefficients.transpose();
    core(i, num_vars + i) = 1.0;
    rhs[i] = c.rhs;
    basis[i] = num_vars + i;
    lower.push_back(0.0);
    upper.push_back(c.relation == Relation::kEqual ? 0.0 : kInfinity);
  }

  // Deterministic perturbation toward strict dual feasibility.
  std::mt19937_64 rng(0x5eed);
  std::uniform_real_distribution<double> unit(1.0, 2.0);
  Vector cost = Vector::Zero(total_cols);
  cost.head(num_vars) = program.objective;
  Vector perturbed = cost;
  for (int j = 0; j < total_cols; ++j) {
    const double eps = 1e-7 * unit(rng) * std::max(1.0, std::abs(cost[j]));
    if (lower[j] == upper[j]) continue;
    if (j < num_vars && status[j] == NonbasicAt::kUpper) {
      perturbed[j] += eps;
    } else if (j >= num_vars || status[j] == NonbasicAt::kLower) {
      perturbed[j] -= eps;
    }
  }

  Simplex simplex(std::move(core), rhs, std::move(lower), std::move(upper),
                  std::move(basis), std::move(status), options,
                  MaxIterations(options, num_rows, total_cols));
  simplex.SetObjective(perturbed);
  if (simplex.RunDual() == Simplex::Outcome::kInfeasible) {
    return {LpStatus::kInfeasible, {}, 0.0, simplex.iterations()};
  }
  simplex.SetObjective(cost);
  if (simplex.Run() == Simplex::Outcome::kUnbounded) {
    return {LpStatus::kUnbounded, {}, kInfinity, simplex.iterations()};
  }
  simplex.Refactor();
  LpSolution out;
  out.status = LpStatus::kOptimal;
  out.iterations = simplex.iterations();
  out.values = simplex.Values().head(num_vars);
  return out;
}

// Two-phase primal simplex with artificials.
LpSolution SolvePrimal(const LinearProgram& program,
                       const SimplexOptions& options) {
  const int num_vars = program.num_variables();
  const int num_rows = static_cast<int>(program.constraints.size());

  int num_slack = 0;
  for (const LinearConstraint& c : program.constraints) {
    if (c.relation == Relation::kLessEqual) ++num_slack;
  }
  const int first_artificial = num_vars + num_slack;

  std::vector<double> lower, upper;
  for (const VariableBounds& bd : program.bounds) {
    lower.push_back(bd.lo);
    upper.push_back(bd.hi);
  }
  for (int s = 0; s < num_slack; ++s) {
    lower.push_back(0.0);
    upper.push_back(kInfinity);
  }

  // Residual of each row with every structural column at its start value.
  Vector start(num_vars);
  for (int v = 0; v < num_vars; ++v) {
    const VariableBounds& bd = program.bounds[v];
    start[v] = std::isfinite(bd.lo) ? bd.lo : std::isfinite(bd.hi) ? bd.hi : 0.0;
  }
  Vector rhs(num_rows);
  std::vector<int> slack_of_row(num_rows, -1);
  std::vector<double> artificial_sign(num_rows, 0.0);
  int num_artificial = 0;
  {
    int slack = num_vars;
    for (int i = 0; i < num_rows; ++i) {
      const LinearConstraint& c = program.constraints[i];
      rhs[i] = c.rhs;
      const double residual = c.rhs - c.coefficients.dot(start);
      if (c.relation == Relation::kLessEqual) slack_of_row[i] = slack++;
      if (slack_of_row[i] < 0 || residual < 0.0) {
        artificial_sign[i] = residual < 0.0 ? -1.0 : 1.0;
        ++num_artificial;
      }
    }
  }
  const int total_cols = first_artificial + num_artificial;

  RowMatrix core = RowMatrix::Zero(num_rows, total_cols);
  std::vector<int> basis(num_rows);
  {
    int art = first_artificial;
    for (int i = 0; i < num_rows; ++i) {
      core.row(i).head(num_vars) = program.constraints[i].coefficients.transpose();
      if (slack_of_row[i] >= 0) core(i, slack_of_row[i]) = 1.0;
      if (artificial_sign[i] != 0.0) {
        core(i, art) = artificial_sign[i];
        basis[i] = art++;
      } else {
        basis[i] = slack_of_row[i];
      }
    }
  }
  for (int a = 0; a < num_artificial; ++a) {
    lower.push_back(0.0);
    upper.push_back(kInfinity);
  }

  Simplex simplex(core, rhs, lower, upper, basis, {}, options,
                  MaxIterations(options, num_rows, total_cols));

  if (num_artificial > 0) {
    Vector phase1 = Vector::Zero(total_cols);
    phase1.tail(num_artificial).setConstant(-1.0);
    simplex.SetObjective(phase1);
    simplex.Run();
    const double infeasibility = -phase1.dot(simplex.Values());
    const double scale =
        std::max(1.0, rhs.size() > 0 ? rhs.cwiseAbs().maxCoeff() : 0.0);
    if (infeasibility > kFeasTol * scale) {
      return {LpStatus::kInfeasible, {}, 0.0, simplex.iterations()};
    }
    const std::vector<int> dropped = simplex.DriveOut(first_artificial);
    simplex.Shrink(dropped, first_artificial);
  }

  Vector cost = Vector::Zero(first_artificial);
  cost.head(num_vars) = program.objective;
  simplex.SetObjective(cost);
  if (simplex.Run() == Simplex::Outcome::kUnbounded) {
    return {LpStatus::kUnbounded, {}, kInfinity, simplex.iterations()};
  }
  simplex.Refactor();
  LpSolution out;
  out.status = LpStatus::kOptimal;
  out.iterations = simplex.iterations();
  out.values = simplex.Values().head(num_vars);
  return out;
}

}  // namespace

LpSolution SolveLp(const LinearProgram& program, const SimplexOptions& options) {
  program.Validate();
  for (const VariableBounds& bd : program.bounds) {
    if (bd.lo > bd.hi) return {LpStatus::kInfeasible, {}, 0.0, 0};
  }
  LpSolution out = DualFeasibleStart(program) ? SolveDual(program, options)
                                              : SolvePrimal(program, options);
  if (out.status != LpStatus::kOptimal) return out;
  out.objective_value = program.objective.dot(out.values);

  const double tol = options.residual_tol;
  for (std::size_t i = 0; i < program.constraints.size(); ++i) {
    const LinearConstraint& c = program.constraints[i];
    const double lhs = c.coefficients.dot(out.values);
    const double slack_tol = tol * std::max(1.0, std::abs(c.rhs));
    const bool ok = c.relation == Relation::kEqual
                        ? std::abs(lhs - c.rhs) <= slack_tol
                        : lhs - c.rhs <= slack_tol;
    if (!ok) {
      throw Error(ErrorCode::kNumericalFailure,
                  "constraint " + std::to_string(i) +
                      " violated at the simplex optimum");
    }
  }
  for (int v = 0; v < program.num_variables(); ++v) {
    const VariableBounds& bd = program.bounds[v];
    if (out.values[v] < bd.lo - tol || out.values[v] > bd.hi + tol) {
      throw Error(ErrorCode::kNumericalFailure,
                  "bound of variable " + std::to_string(v) +
                      " violated at the simplex optimum");
    }
  }
  return out;
}

}  // namespace ratnash
