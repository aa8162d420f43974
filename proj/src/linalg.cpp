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

#include "ratnash/linalg.hpp"

#include <algorithm>

#include <Eigen/QR>
#include <Eigen/SVD>

#include "ratnash/error.hpp"

namespace ratnash {
namespace {

void RequireGeneric(const Matrix& y, const Tolerances& tol) {
  if (!IsGeneric(y, tol)) {
    throw Error(ErrorCode::kNonGenericData,
                "observed strategies are not linearly independent");
  }
}

}  // namespace

int NumericalRank(const Matrix& m, const Tolerances& tol) {
  if (m.size() == 0) return 0;
  const Vector sv = Eigen::BDCSVD<Matrix>(m).singularValues();
  const double sigma_max = sv.size() > 0 ? sv[0] : 0.0;
  if (sigma_max == 0.0) return 0;
  const double cutoff = tol.tol_rank * sigma_max *
                        static_cast<double>(std::max(m.rows(), m.cols()));
  int rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i) {
    if (sv[i] > cutoff) ++rank;
  }
  return rank;
}

std::vector<int> IndependentColumns(const Matrix& y, const Tolerances& tol) {
  const int target = NumericalRank(y, tol);
  std::vector<int> picked;
  Matrix basis(y.rows(), 0);
  for (Eigen::Index j = 0; j < y.cols() && static_cast<int>(picked.size()) < target;
       ++j) {
    Matrix trial(y.rows(), basis.cols() + 1);
    trial << basis, y.col(j);
    if (NumericalRank(trial, tol) == trial.cols()) {
      basis = std::move(trial);
      picked.push_back(static_cast<int>(j));
    }
  }
  return picked;
}

Matrix DualBasis(const Matrix& y_hat, const Tolerances& tol) {
  const Eigen::Index t = y_hat.cols();
  if (t == 0) return Matrix(y_hat.rows(), 0);
  if (t > y_hat.rows() || NumericalRank(y_hat, tol) < t) {
    throw Error(ErrorCode::kDependentColumns,
                "dual basis requires linearly independent columns");
  }
  // y_hat = Q R  =>  pinv(y_hat)^T = Q R^-T.
  Eigen::HouseholderQR<Matrix> qr(y_hat);
  const Matrix q = qr.householderQ() * Matrix::Identity(y_hat.rows(), t);
  const Matrix r = qr.matrixQR().topLeftCorner(t, t).triangularView<Eigen::Upper>();
  Matrix r_inv_t = Matrix::Identity(t, t);
  r.transpose().triangularView<Eigen::Lower>().solveInPlace(r_inv_t);
  // r_inv_t now holds R^-T.
  return q * r_inv_t;
}

bool IsGeneric(const Matrix& y, const Tolerances& tol) {
  return y.cols() <= y.rows() && NumericalRank(y, tol) == y.cols();
}

Matrix CoordinateMap(const Matrix& y, const Tolerances& tol) {
  RequireGeneric(y, tol);
  return DualBasis(y, tol).transpose();
}

Matrix SelectorMatrix(const Matrix& y_all, const std::vector<int>& subset,
                      const Tolerances& tol) {
  RequireGeneric(y_all, tol);
  const Matrix gamma = DualBasis(y_all, tol);
  Matrix v = Matrix::Zero(y_all.rows(), y_all.rows());
  for (int k : subset) {
    if (k < 0 || k >= y_all.cols()) {
      throw Error(ErrorCode::kInvalidArgument, "selector index out of range");
    }
    v.noalias() += y_all.col(k) * gamma.col(k).transpose();
  }
  return v;
}

Vector LeastNormSolve(const Matrix& y, const Vector& targets,
                      const Tolerances& tol) {
  if (targets.size() != y.cols()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "one target per observed column is required");
  }
  RequireGeneric(y, tol);
  return DualBasis(y, tol) * targets;
}

}  // namespace ratnash
