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

#ifndef JETFLOW_TYPES_HPP_
#define JETFLOW_TYPES_HPP_

#include <complex>

#include <Eigen/Core>

namespace jetflow {

using cplx = std::complex<double>;

using RealVector = Eigen::VectorXd;
using ComplexVector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexRow = Eigen::RowVectorXcd;

// Integer power by repeated squaring; ipow(0, 0) == 1.
template <typename T>
T ipow(T base, int k) {
  T out(1);
  while (k > 0) {
    if (k & 1) out *= base;
    k >>= 1;
    if (k > 0) base *= base;
  }
  return out;
}

// Point clouds are stored one point per row.
using RealPoints = Eigen::MatrixXd;
using ComplexPoints = Eigen::MatrixXcd;

}  // namespace jetflow

#endif  // JETFLOW_TYPES_HPP_
