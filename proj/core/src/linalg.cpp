// Copyright 2026 The jetflow Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "jetflow/linalg.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include <Eigen/SVD>
#include <unsupported/Eigen/MatrixFunctions>

#include "jetflow/errors.hpp"

namespace jetflow {

TruncatedSolve truncated_solve(const ComplexMatrix& A, const ComplexMatrix& B, double rcond) {
  if (A.rows() != B.rows()) {
    throw DimensionError("truncated_solve: A and B have different row counts");
  }
  Eigen::BDCSVD<ComplexMatrix> svd(A, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const RealVector& s = svd.singularValues();

  TruncatedSolve out;
  out.singular_values.assign(s.data(), s.data() + s.size());
  out.cutoff = s.size() > 0 ? rcond * s(0) : 0.0;
  while (out.rank < s.size() && s(out.rank) > out.cutoff) ++out.rank;

  const Eigen::Index k = out.rank;
  ComplexMatrix coeffs = svd.matrixU().leftCols(k).adjoint() * B;
  for (Eigen::Index i = 0; i < k; ++i) coeffs.row(i) /= s(i);
  out.X = svd.matrixV().leftCols(k) * coeffs;
  return out;
}

ComplexMatrix pseudo_inverse(const ComplexMatrix& A, double rcond) {
  return truncated_solve(A, ComplexMatrix::Identity(A.rows(), A.rows()), rcond).X;
}

double operator_norm(const ComplexMatrix& A) {
  if (A.size() == 0) return 0.0;
  Eigen::JacobiSVD<ComplexMatrix> svd(A);
  return svd.singularValues()(0);
}

double smallest_singular_value(const ComplexMatrix& A) {
  if (A.size() == 0) return 0.0;
  Eigen::JacobiSVD<ComplexMatrix> svd(A);
  const RealVector& s = svd.singularValues();
  return s(s.size() - 1);
}

ComplexMatrix matrix_exp(const ComplexMatrix& A) {
  if (A.rows() != A.cols()) throw DimensionError("matrix_exp: matrix is not square");
  return A.exp();
}

QuadratureRule gauss_legendre_unit(int n) {
  if (n < 1) throw std::invalid_argument("gauss_legendre_unit: n must be positive");
  QuadratureRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  const int half = (n + 1) / 2;
  for (int i = 0; i < half; ++i) {
    // Newton on P_n from the Chebyshev-like initial guess.
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double step = p1 / dp;
      x -= step;
      if (std::abs(step) < 1e-16) break;
    }
    // Recompute the derivative at the converged node.
    {
      double p0 = 1.0;
      double p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
    }
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    // x is the i-th largest root; mirror it to fill both ends on [0, 1].
    rule.nodes[n - 1 - i] = 0.5 * (1.0 + x);
    rule.nodes[i] = 0.5 * (1.0 - x);
    rule.weights[n - 1 - i] = 0.5 * w;
    rule.weights[i] = 0.5 * w;
  }
  return rule;
}

}  // namespace jetflow
