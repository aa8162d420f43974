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

// Dense kernels behind the low-rank constructions. An "observation matrix"
// here is any n x m matrix whose columns are observed strategies.

#pragma once

#include <vector>

#include "ratnash/core.hpp"

namespace ratnash {

// Number of singular values above tol_rank * sigma_max * max(rows, cols).
int NumericalRank(const Matrix& m, const Tolerances& tol);

// Greedy left-to-right maximal independent subset of columns.
std::vector<int> IndependentColumns(const Matrix& y, const Tolerances& tol);

// Gamma (n x t) with Gamma^T * y_hat = I_t, the minimum-norm choice
// y_hat (y_hat^T y_hat)^-1, computed through a thin QR factorization.
// Throws kDependentColumns when y_hat is column-rank deficient.
Matrix DualBasis(const Matrix& y_hat, const Tolerances& tol);

// m <= n and full column rank.
bool IsGeneric(const Matrix& y, const Tolerances& tol);

// V (m x n) with V y_k = e_k. Throws kNonGenericData.
Matrix CoordinateMap(const Matrix& y, const Tolerances& tol);

// V (n x n) with V y_k = y_k for k in `subset` and V y_k = 0 for the other
// observed columns. Throws kNonGenericData.
Matrix SelectorMatrix(const Matrix& y_all, const std::vector<int>& subset,
                      const Tolerances& tol);

// Minimum-norm f with f^T y_k = targets_k. Throws kNonGenericData.
Vector LeastNormSolve(const Matrix& y, const Vector& targets,
                      const Tolerances& tol);

}  // namespace ratnash
