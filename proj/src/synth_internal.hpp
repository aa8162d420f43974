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

#include "ratnash/synth.hpp"

namespace ratnash::internal {

// The data set as seen by the player on `side` (swapped for Side::kCol).
DataSet Oriented(const DataSet& data, Side side);
// Undoes the orientation of a matrix built on Oriented(data, side).
Matrix Unorient(Matrix m, Side side);

void RequireGenericBothSides(const DataSet& data, const Tolerances& tol);

// Row-side constructions on already oriented data.
// Rescales rows and columns of a support-polynomial matrix in place.
void BalanceScales(Matrix& p);
Matrix SupportRowSide(const DataSet& data, const Tolerances& tol);
Matrix ChromaticRowSide(const DataSet& data, const Tolerances& tol);

// Checks strictness on every observation and rank against the bounds, then
// packages the result. Any failure is kNumericalFailure.
SynthesisResult Finalize(Game game, const DataSet& data, Method method,
                         int bound_a, int bound_b, int measure,
                         const Tolerances& tol);

}  // namespace ratnash::internal
