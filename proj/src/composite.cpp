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

#include <algorithm>
#include <string>

#include "ratnash/error.hpp"
#include "ratnash/linalg.hpp"
#include "ratnash/synth.hpp"
#include "synth_internal.hpp"

namespace ratnash {
namespace {

// Per-part costs on row-oriented data.
class PartCosts {
 public:
  PartCosts(const DataSet& data, const Tolerances& tol)
      : y_(data.ColumnStrategies()),
        graph_(BuildIntersectionGraph(data, Side::kRow, tol)),
        tol_(tol) {
    for (const Observation& obs : data.observations()) {
      support_size_.push_back(static_cast<int>(Support(obs.row, tol).size()));
    }
  }

  int Dimension(const std::vector<int>& idx) const {
    if (idx.empty()) return 0;
    Matrix sub(y_.rows(), static_cast<Eigen::Index>(idx.size()));
    for (std::size_t j = 0; j < idx.size(); ++j) {
      sub.col(static_cast<Eigen::Index>(j)) = y_.col(idx[j]);
    }
    return NumericalRank(sub, tol_);
  }

  int MaxSupport(const std::vector<int>& idx) const {
    int s = 0;
    for (int k : idx) s = std::max(s, support_size_[k]);
    return s;
  }

  int Colors(const std::vector<int>& idx) const {
    if (idx.empty()) return 0;
    return GreedyColoring(graph_.Induced(idx)).color_count;
  }

  CompositePartition Evaluate(std::array<std::vector<int>, 3> parts) const {
    CompositePartition out;
    for (auto& p : parts) std::sort(p.begin(), p.end());
    out.dimension = Dimension(parts[0]);
    out.max_support = MaxSupport(parts[1]);
    out.colors = Colors(parts[2]);
    out.sigma = out.dimension + out.max_support + out.colors;
    out.parts = std::move(parts);
    return out;
  }

 private:
  Matrix y_;
  IntersectionGraph graph_;
  std::vector<int> support_size_;
  Tolerances tol_;
};

std::vector<int> MaskMembers(unsigned mask, int m) {
  std::vector<int> out;
  for (int k = 0; k < m; ++k) {
    if (mask & (1u << k)) out.push_back(k);
  }
  return out;
}

CompositePartition Exhaustive(const PartCosts& costs, int m) {
  const unsigned subsets = 1u << m;
  std::vector<int> dim(subsets), sup(subsets), col(subsets);
  for (unsigned mask = 0; mask < subsets; ++mask) {
    const std::vector<int> members = MaskMembers(mask, m);
    dim[mask] = costs.Dimension(members);
    sup[mask] = costs.MaxSupport(members);
    col[mask] = costs.Colors(members);
  }
  long total = 1;
  for (int k = 0; k < m; ++k) total *= 3;

  // Digit k of the base-3 code is the part of observation k.
  long best_code = 0;
  int best = -1;
  for (long code = 0; code < total; ++code) {
    unsigned masks[3] = {0, 0, 0};
    long c = code;
    for (int k = 0; k < m; ++k) {
      masks[c % 3] |= 1u << k;
      c /= 3;
    }
    const int value = dim[masks[0]] + sup[masks[1]] + col[masks[2]];
    if (best < 0 || value < best) {
      best = value;
      best_code = code;
    }
  }
  std::array<std::vector<int>, 3> parts;
  long c = best_code;
  for (int k = 0; k < m; ++k) {
    parts[c % 3].push_back(k);
    c /= 3;
  }
  return costs.Evaluate(std::move(parts));
}

CompositePartition Greedy(const PartCosts& costs, int m) {
  std::array<std::vector<int>, 3> parts;
  CompositePartition current = costs.Evaluate(parts);
  for (int k = 0; k < m; ++k) {
    int best_part = 0;
    CompositePartition best_trial;
    for (int p = 0; p < 3; ++p) {
      auto trial_parts = parts;
      trial_parts[p].push_back(k);
      CompositePartition trial = costs.Evaluate(std::move(trial_parts));
      if (p == 0 || trial.sigma < best_trial.sigma) {
        best_part = p;
        best_trial = std::move(trial);
      }
    }
    parts[best_part].push_back(k);
    current = std::move(best_trial);
  }
  return current;
}

}  // namespace

CompositePartition FindCompositePartition(const DataSet& data, Side side,
                                          const Tolerances& tol,
                                          PartitionSearch search) {
  const DataSet oriented = internal::Oriented(data, side);
  const PartCosts costs(oriented, tol);
  const int m = oriented.size();
  if (search == PartitionSearch::kAuto) {
    search = m <= kExhaustivePartitionLimit ? PartitionSearch::kExhaustive
                                            : PartitionSearch::kGreedy;
  }
  if (search == PartitionSearch::kExhaustive) {
    if (m > 20) {
      throw Error(ErrorCode::kInvalidArgument,
                  "exhaustive partition search is limited to 20 observations");
    }
    return Exhaustive(costs, m);
  }
  return Greedy(costs, m);
}

Matrix RationalizeCompositeSide(const DataSet& data, Side side,
                                const CompositePartition& partition,
                                const Tolerances& tol) {
  const DataSet oriented = internal::Oriented(data, side);
  const Matrix y_all = oriented.ColumnStrategies();
  if (!IsGeneric(y_all, tol)) {
    throw Error(ErrorCode::kNonGenericData,
                "opponent strategies are not linearly independent");
  }
  Matrix total = Matrix::Zero(oriented.n(), oriented.n());
  for (int p = 0; p < 3; ++p) {
    const std::vector<int>& idx = partition.parts[p];
    if (idx.empty()) continue;
    const DataSet sub = oriented.Subset(idx);
    Matrix block;
    if (p == 0) {
      const RationalizationResult witness = Rationalize(sub, tol);
      if (!witness.rationalizable) {
        throw Error(ErrorCode::kNotRationalizable,
                    "dimension part of the partition is not rationalizable");
      }
      block = ReduceRank(witness.game->row_payoff(), sub.ColumnStrategies(),
                         tol);
    } else if (p == 1) {
      block = internal::SupportRowSide(sub, tol);
    } else {
      block = internal::ChromaticRowSide(sub, tol);
    }
    total.noalias() += block * SelectorMatrix(y_all, idx, tol);
  }
  return internal::Unorient(std::move(total), side);
}

SynthesisResult RationalizeComposite(const DataSet& data,
                                     const Tolerances& tol) {
  internal::RequireGenericBothSides(data, tol);
  const CompositePartition row = FindCompositePartition(data, Side::kRow, tol);
  const CompositePartition col = FindCompositePartition(data, Side::kCol, tol);
  Matrix a = RationalizeCompositeSide(data, Side::kRow, row, tol);
  Matrix b = RationalizeCompositeSide(data, Side::kCol, col, tol);
  return internal::Finalize(Game(std::move(a), std::move(b)), data,
                            Method::kComposite, 2 * row.sigma + 1,
                            2 * col.sigma + 1, std::min(row.sigma, col.sigma),
                            tol);
}

}  // namespace ratnash
