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

#include "ratnash/synth.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "ratnash/error.hpp"
#include "ratnash/linalg.hpp"
#include "synth_internal.hpp"

namespace ratnash {

const char* MethodName(Method method) {
  switch (method) {
    case Method::kLp: return "lp";
    case Method::kLowDim: return "lowdim";
    case Method::kSupport: return "support";
    case Method::kChromatic: return "chromatic";
    case Method::kComposite: return "composite";
    case Method::kAuto: return "auto";
  }
  return "unknown";
}

std::optional<Method> ParseMethod(std::string_view name) {
  for (Method m : {Method::kLp, Method::kLowDim, Method::kSupport,
                   Method::kChromatic, Method::kComposite, Method::kAuto}) {
    if (name == MethodName(m)) return m;
  }
  return std::nullopt;
}

namespace internal {

DataSet Oriented(const DataSet& data, Side side) {
  return side == Side::kRow ? data : data.Transposed();
}

Matrix Unorient(Matrix m, Side side) {
  if (side == Side::kRow) return m;
  return m.transpose();
}

void RequireGenericBothSides(const DataSet& data, const Tolerances& tol) {
  if (!IsGeneric(data.ColumnStrategies(), tol) ||
      !IsGeneric(data.RowStrategies(), tol)) {
    throw Error(ErrorCode::kNonGenericData,
                "observed strategies of both players must be linearly "
                "independent");
  }
}

SynthesisResult Finalize(Game game, const DataSet& data, Method method,
                         int bound_a, int bound_b, int measure,
                         const Tolerances& tol) {
  for (int k = 0; k < data.size(); ++k) {
    if (!IsStrictNash(game, data[k], tol).strict) {
      throw Error(ErrorCode::kNumericalFailure,
                  std::string(MethodName(method)) +
                      " construction failed to make observation " +
                      std::to_string(k) + " a strict equilibrium");
    }
  }
  SynthesisResult out{std::move(game), method};
  out.rank_a = NumericalRank(out.game.row_payoff(), tol);
  out.rank_b = NumericalRank(out.game.col_payoff(), tol);
  out.bound_a = bound_a;
  out.bound_b = bound_b;
  out.bound = std::min(bound_a, bound_b);
  out.measure = measure;
  if (out.rank_a > bound_a || out.rank_b > bound_b) {
    throw Error(ErrorCode::kNumericalFailure,
                std::string(MethodName(method)) +
                    " construction exceeded its certified rank bound");
  }
  return out;
}

}  // namespace internal

using internal::Oriented;
using internal::Unorient;

// --- dimension -------------------------------------------------------------

Matrix ReduceRank(const Matrix& a_hat, const Matrix& y, const Tolerances& tol) {
  if (a_hat.cols() != y.rows()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "payoff matrix and observation matrix disagree");
  }
  const std::vector<int> cols = IndependentColumns(y, tol);
  Matrix y_hat(y.rows(), static_cast<Eigen::Index>(cols.size()));
  for (std::size_t j = 0; j < cols.size(); ++j) {
    y_hat.col(static_cast<Eigen::Index>(j)) = y.col(cols[j]);
  }
  if (y_hat.cols() == 0) return Matrix::Zero(a_hat.rows(), a_hat.cols());
  const Matrix gamma = DualBasis(y_hat, tol);
  return (a_hat * y_hat) * gamma.transpose();
}

SynthesisResult RationalizeLowDim(const DataSet& data, const Tolerances& tol) {
  const RationalizationResult witness = Rationalize(data, tol);
  if (!witness.rationalizable) {
    throw Error(ErrorCode::kNotRationalizable,
                "data set is not rationalizable (delta* = " +
                    std::to_string(witness.delta_star) + ")");
  }
  const Matrix y = data.ColumnStrategies();
  const Matrix x = data.RowStrategies();
  Matrix a = ReduceRank(witness.game->row_payoff(), y, tol);
  Matrix b = ReduceRank(witness.game->col_payoff().transpose(), x, tol)
                 .transpose();
  const int dim_c = NumericalRank(y, tol);
  const int dim_r = NumericalRank(x, tol);
  return internal::Finalize(Game(std::move(a), std::move(b)), data,
                            Method::kLowDim, dim_c, dim_r,
                            std::min(dim_c, dim_r), tol);
}

// --- support size ----------------------------------------------------------

Vector SupportPolyColumn(const IndexSet& supp, int n) {
  Vector column(n);
  for (int i = 0; i < n; ++i) {
    double p = 1.0;
    for (int s : supp) {
      const double d = static_cast<double>(i - s);
      p *= d * d;
    }
    column[i] = -p;
  }
  const double scale = column.cwiseAbs().maxCoeff();
  if (scale > 0.0) column /= scale;
  return column;
}

int MaxSupportSize(const DataSet& data, Side side, const Tolerances& tol) {
  int s = 0;
  for (const Observation& obs : data.observations()) {
    const MixedStrategy& own = side == Side::kRow ? obs.row : obs.col;
    s = std::max(s, static_cast<int>(Support(own, tol).size()));
  }
  return s;
}

namespace internal {

// Positive row and column scalings leave zeros, signs and rank alone. They
// are chosen to centre the nonzero magnitudes of each row and column around
// one in the log domain, which keeps off-support entries of wide supports
// far from zero once the largest entry is scaled back to one.
void BalanceScales(Matrix& p) {
  auto centre = [](const auto& line) {
    double lo = kInfinity;
    double hi = 0.0;
    for (Eigen::Index i = 0; i < line.size(); ++i) {
      const double v = std::abs(line[i]);
      if (v == 0.0) continue;
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
    return hi > 0.0 ? 1.0 / std::sqrt(lo * hi) : 1.0;
  };
  for (int round = 0; round < 20; ++round) {
    for (Eigen::Index i = 0; i < p.rows(); ++i) p.row(i) *= centre(p.row(i));
    for (Eigen::Index k = 0; k < p.cols(); ++k) p.col(k) *= centre(p.col(k));
  }
  const double scale = p.size() > 0 ? p.cwiseAbs().maxCoeff() : 0.0;
  if (scale > 0.0) p /= scale;
}

Matrix SupportRowSide(const DataSet& data, const Tolerances& tol) {
  const int n = data.n();
  Matrix p(n, data.size());
  for (int k = 0; k < data.size(); ++k) {
    p.col(k) = SupportPolyColumn(Support(data[k].row, tol), n);
  }
  BalanceScales(p);
  return p * CoordinateMap(data.ColumnStrategies(), tol);
}

}  // namespace internal

Matrix RationalizeSupport(const DataSet& data, Side side, const Tolerances& tol,
                          std::optional<int> max_support) {
  if (max_support && MaxSupportSize(data, side, tol) > *max_support) {
    throw Error(ErrorCode::kSupportTooLarge,
                "an observed support exceeds the declared size " +
                    std::to_string(*max_support));
  }
  return Unorient(internal::SupportRowSide(Oriented(data, side), tol), side);
}

SynthesisResult RationalizeSupportGame(const DataSet& data,
                                       const Tolerances& tol) {
  internal::RequireGenericBothSides(data, tol);
  Matrix a = RationalizeSupport(data, Side::kRow, tol);
  Matrix b = RationalizeSupport(data, Side::kCol, tol);
  const int s_r = MaxSupportSize(data, Side::kRow, tol);
  const int s_c = MaxSupportSize(data, Side::kCol, tol);
  return internal::Finalize(Game(std::move(a), std::move(b)), data,
                            Method::kSupport, 2 * s_r + 1, 2 * s_c + 1,
                            std::min(s_r, s_c), tol);
}

// --- chromatic number ------------------------------------------------------

Matrix Rank2Disjoint(const DataSet& part, const Tolerances& tol) {
  const int n = part.n();
  const int m = part.size();
  std::vector<int> sigma(n, m + 1);
  for (int k = 0; k < m; ++k) {
    for (int i : Support(part[k].row, tol)) {
      if (sigma[i] != m + 1) {
        throw Error(ErrorCode::kOverlappingSupports,
                    "row supports of observations " +
                        std::to_string(sigma[i] - 1) + " and " +
                        std::to_string(k) + " intersect");
      }
      sigma[i] = k + 1;
    }
  }
  Vector u(n);
  Vector w(n);
  for (int i = 0; i < n; ++i) {
    u[i] = -static_cast<double>(sigma[i]) * sigma[i];
    w[i] = sigma[i];
  }
  const Vector targets = Vector::LinSpaced(m, 1.0, static_cast<double>(m));
  const Vector f = LeastNormSolve(part.ColumnStrategies(), targets, tol);
  return u * Vector::Ones(n).transpose() + 2.0 * w * f.transpose();
}

namespace internal {

Matrix ChromaticRowSide(const DataSet& data, const Tolerances& tol) {
  const Matrix y_all = data.ColumnStrategies();
  if (!IsGeneric(y_all, tol)) {
    throw Error(ErrorCode::kNonGenericData,
                "opponent strategies are not linearly independent");
  }
  const Coloring coloring =
      GreedyColoring(BuildIntersectionGraph(data, Side::kRow, tol));
  Matrix a = Matrix::Zero(data.n(), data.n());
  for (const std::vector<int>& cls : coloring.Classes()) {
    const Matrix block = Rank2Disjoint(data.Subset(cls), tol);
    a.noalias() += block * SelectorMatrix(y_all, cls, tol);
  }
  return a;
}

}  // namespace internal

Matrix RationalizeChromatic(const DataSet& data, Side side,
                            const Tolerances& tol) {
  return Unorient(internal::ChromaticRowSide(Oriented(data, side), tol), side);
}

SynthesisResult RationalizeChromaticGame(const DataSet& data,
                                         const Tolerances& tol) {
  internal::RequireGenericBothSides(data, tol);
  Matrix a = RationalizeChromatic(data, Side::kRow, tol);
  Matrix b = RationalizeChromatic(data, Side::kCol, tol);
  const int k_r =
      GreedyColoring(BuildIntersectionGraph(data, Side::kRow, tol)).color_count;
  const int k_c =
      GreedyColoring(BuildIntersectionGraph(data, Side::kCol, tol)).color_count;
  return internal::Finalize(Game(std::move(a), std::move(b)), data,
                            Method::kChromatic, 2 * k_r, 2 * k_c,
                            std::min(k_r, k_c), tol);
}

// --- dispatch --------------------------------------------------------------

SynthesisResult RationalizeLpGame(const DataSet& data, const Tolerances& tol) {
  RationalizationResult r = Rationalize(data, tol);
  if (!r.rationalizable) {
    throw Error(ErrorCode::kNotRationalizable,
                "data set is not rationalizable (delta* = " +
                    std::to_string(r.delta_star) + ")");
  }
  return internal::Finalize(std::move(*r.game), data, Method::kLp, data.n(),
                            data.n(), data.n(), tol);
}

SynthesisResult Synthesize(const DataSet& data, Method method,
                           const Tolerances& tol) {
  tol.Validate();
  switch (method) {
    case Method::kLp: return RationalizeLpGame(data, tol);
    case Method::kLowDim: return RationalizeLowDim(data, tol);
    case Method::kSupport: return RationalizeSupportGame(data, tol);
    case Method::kChromatic: return RationalizeChromaticGame(data, tol);
    case Method::kComposite: return RationalizeComposite(data, tol);
    case Method::kAuto: break;
  }

  const int dim = std::min(NumericalRank(data.ColumnStrategies(), tol),
                           NumericalRank(data.RowStrategies(), tol));
  const bool generic = IsGeneric(data.ColumnStrategies(), tol) &&
                       IsGeneric(data.RowStrategies(), tol);
  if (!generic) return Synthesize(data, Method::kLowDim, tol);

  const int kappa = std::min(
      GreedyColoring(BuildIntersectionGraph(data, Side::kRow, tol)).color_count,
      GreedyColoring(BuildIntersectionGraph(data, Side::kCol, tol)).color_count);
  const int s = std::min(MaxSupportSize(data, Side::kRow, tol),
                         MaxSupportSize(data, Side::kCol, tol));
  const int sigma =
      std::min(FindCompositePartition(data, Side::kRow, tol).sigma,
               FindCompositePartition(data, Side::kCol, tol).sigma);
  // Candidates in tie-break order. The stable sort keeps that order among
  // equal bounds; a construction that fails numerically hands over to the
  // next one.
  std::vector<std::pair<Method, int>> candidates = {
      {Method::kChromatic, 2 * kappa},
      {Method::kSupport, 2 * s + 1},
      {Method::kLowDim, dim},
      {Method::kComposite, 2 * sigma + 1},
  };
  std::stable_sort(candidates.begin(), candidates.end(),
                   [](const auto& a, const auto& b) { return a.second < b.second; });
  for (std::size_t c = 0;; ++c) {
    try {
      return Synthesize(data, candidates[c].first, tol);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kNumericalFailure || c + 1 == candidates.size()) {
        throw;
      }
    }
  }
}

}  // namespace ratnash
