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

// Low player-rank rationalizations.
//
// Every construction is written once for the row player: it produces a
// matrix M whose best responses to y_k are exactly Supp(x_k). The column
// player's matrix is the transpose of the same construction run on the
// player-swapped data set.

#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ratnash/core.hpp"
#include "ratnash/lp.hpp"

namespace ratnash {

enum class Side { kRow, kCol };

enum class Method { kLp, kLowDim, kSupport, kChromatic, kComposite, kAuto };

const char* MethodName(Method method);
std::optional<Method> ParseMethod(std::string_view name);

struct SynthesisResult {
  Game game;
  Method method = Method::kLp;
  int rank_a = 0;
  int rank_b = 0;
  // Certified rank bounds for A and B, and the player-rank bound
  // min(bound_a, bound_b).
  int bound_a = 0;
  int bound_b = 0;
  int bound = 0;
  // The structural measure behind the bound: dimension, support size,
  // colour count or composite number (the smaller of the two sides).
  int measure = 0;
};

// --- dimension -------------------------------------------------------------

// A = sum_j a_hat y_j gamma_j^T over a maximal independent set of columns of
// y, so that A y = a_hat y for every column and rank(A) <= rank(y).
Matrix ReduceRank(const Matrix& a_hat, const Matrix& y, const Tolerances& tol);

// LP witness reduced on both sides. Throws kNotRationalizable.
SynthesisResult RationalizeLowDim(const DataSet& data, const Tolerances& tol);

// --- support size ----------------------------------------------------------

// Values of -prod_{s in supp} (x - s)^2 at x = 0..n-1, scaled so the largest
// magnitude is 1. Zero exactly on supp, negative elsewhere.
Vector SupportPolyColumn(const IndexSet& supp, int n);

// P V with P built from support polynomials and V the coordinate map of the
// opponent's observed strategies. For Side::kCol the result is B (so that
// B^T x_k peaks on Supp(y_k)). Throws kNonGenericData, and kSupportTooLarge
// when a support exceeds max_support.
Matrix RationalizeSupport(const DataSet& data, Side side, const Tolerances& tol,
                          std::optional<int> max_support = std::nullopt);

// Both sides via RationalizeSupport; needs generic strategies on both sides.
SynthesisResult RationalizeSupportGame(const DataSet& data,
                                       const Tolerances& tol);

// Largest support size on one side.
int MaxSupportSize(const DataSet& data, Side side, const Tolerances& tol);

// --- chromatic number ------------------------------------------------------

// One vertex per observation, edges between observations whose supports on
// the chosen side intersect.
struct IntersectionGraph {
  std::vector<std::vector<int>> neighbors;

  int size() const { return static_cast<int>(neighbors.size()); }
  bool HasEdge(int a, int b) const;
  int MaxDegree() const;
  // Subgraph induced by `vertices`, relabelled 0..k-1 in the given order.
  IntersectionGraph Induced(const std::vector<int>& vertices) const;
};

IntersectionGraph BuildIntersectionGraph(const DataSet& data, Side side,
                                         const Tolerances& tol);

struct Coloring {
  std::vector<int> color;
  int color_count = 0;

  // Vertices of each colour, ascending.
  std::vector<std::vector<int>> Classes() const;
};

// Welsh-Powell: vertices by descending degree (ties by index), each given
// the smallest colour unused by its neighbours.
Coloring GreedyColoring(const IntersectionGraph& graph);

// u 1^T + 2 w f^T with sigma(i) = k for i in Supp(x_k) (1-based within the
// part), m + 1 elsewhere, u_i = -sigma(i)^2, w_i = sigma(i) and f^T y_k = k.
// Throws kOverlappingSupports and kNonGenericData.
Matrix Rank2Disjoint(const DataSet& part, const Tolerances& tol);

// sum_c A_c V_c over greedy colour classes c. Needs generic opponent
// strategies; result oriented as in RationalizeSupport.
Matrix RationalizeChromatic(const DataSet& data, Side side,
                            const Tolerances& tol);

SynthesisResult RationalizeChromaticGame(const DataSet& data,
                                         const Tolerances& tol);

// --- composite number ------------------------------------------------------

enum class PartitionSearch { kAuto, kExhaustive, kGreedy };

// Exhaustive search is used by kAuto when m <= this.
inline constexpr int kExhaustivePartitionLimit = 10;

struct CompositePartition {
  // Observation indices in the dimension, support and colouring parts.
  std::array<std::vector<int>, 3> parts;
  int dimension = 0;
  int max_support = 0;
  int colors = 0;
  int sigma = 0;
};

// Minimizes dim(O_opp(D1)) + max support in D2 + greedy colours of D3 over
// 3-partitions: exhaustively, or greedily in input order (each observation
// joins the part with the smallest increase, ties to the lower part).
CompositePartition FindCompositePartition(
    const DataSet& data, Side side, const Tolerances& tol,
    PartitionSearch search = PartitionSearch::kAuto);

// sum_i M_i V_i over the three parts of `partition`, with M_1 from the LP
// witness of D1 reduced in rank, M_2 from support polynomials and M_3 from
// colouring. Oriented as in RationalizeSupport.
Matrix RationalizeCompositeSide(const DataSet& data, Side side,
                                const CompositePartition& partition,
                                const Tolerances& tol);

SynthesisResult RationalizeComposite(const DataSet& data,
                                     const Tolerances& tol);

// --- dispatch --------------------------------------------------------------

// The LP optimum packaged as a SynthesisResult with the trivial bound n.
SynthesisResult RationalizeLpGame(const DataSet& data, const Tolerances& tol);

// Runs one construction; kAuto takes the smallest certified bound among
// the applicable constructions, ties broken chromatic, support, lowdim,
// composite.
SynthesisResult Synthesize(const DataSet& data, Method method,
                           const Tolerances& tol);

}  // namespace ratnash
