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

#ifndef JETFLOW_LINALG_HPP_
#define JETFLOW_LINALG_HPP_

#include <vector>

#include "jetflow/types.hpp"

namespace jetflow {

// Minimum-norm least-squares solution X of A X = B through a thin SVD of A.
// Singular values below rcond * sigma_max are treated as zero.
struct TruncatedSolve {
  ComplexMatrix X;
  std::vector<double> singular_values;  // full spectrum, descending
  int rank = 0;
  double cutoff = 0.0;                  // absolute threshold actually applied
};

TruncatedSolve truncated_solve(const ComplexMatrix& A, const ComplexMatrix& B, double rcond);

ComplexMatrix pseudo_inverse(const ComplexMatrix& A, double rcond);

double operator_norm(const ComplexMatrix& A);
double smallest_singular_value(const ComplexMatrix& A);

// exp(A) by scaling and squaring.
ComplexMatrix matrix_exp(const ComplexMatrix& A);

struct QuadratureRule {
  std::vector<double> nodes;    // on [0, 1]
  std::vector<double> weights;  // sum to 1
};

// n-point Gauss-Legendre rule mapped to [0, 1].
QuadratureRule gauss_legendre_unit(int n);

}  // namespace jetflow

#endif  // JETFLOW_LINALG_HPP_
