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

#include "jetflow/reconstruct.hpp"

#include <algorithm>
#include <cmath>

#include "jetflow/errors.hpp"
#include "jetflow/fock.hpp"
#include "jetflow/linalg.hpp"
#include "jetflow/multiindex.hpp"

namespace jetflow {

ComplexVector reconstruct_eval(const ComplexMatrix& C, const RealVector& p, const ComplexVector& q, int m,
                               const ComplexVector& z) {
  const int d = static_cast<int>(p.size());
  const int r = static_cast<int>(q.size());
  if (z.size() != d) throw DimensionError("reconstruct_eval: z has the wrong dimension");
  const MultiIndexTable in_table(d, m);
  if (C.cols() != static_cast<Eigen::Index>(in_table.size()) ||
      C.rows() != static_cast<Eigen::Index>(jet_dimension(r, m))) {
    throw DimensionError("reconstruct_eval: matrix does not match (p, q, m)");
  }
  const ComplexRow u = basis_row(p.cast<cplx>(), in_table, z);
  const ComplexRow uC = u * C.adjoint();
  ComplexVector out(r);
  for (int i = 0; i < r; ++i) {
    out[i] = (uC * basis_gradient_at_zero(q, m, i).conjugate()).value();
  }
  return out;
}

ComplexVector reconstruct_eval(const PushforwardEstimate& estimate, const RealVector& p, const ComplexVector& q,
                               int m, const ComplexVector& z) {
  if (estimate.m != m) throw DimensionError("reconstruct_eval: estimate was built for a different m");
  return reconstruct_eval(estimate.C_hat, p, q, m, z);
}

ComplexMatrix monomial_design(const RealPoints& X, int n) {
  const int d = static_cast<int>(X.cols());
  const MultiIndexTable table(d, n);
  ComplexMatrix A(X.rows(), static_cast<Eigen::Index>(table.size()));
  for (Eigen::Index row = 0; row < X.rows(); ++row) {
    for (std::size_t i = 0; i < table.size(); ++i) {
      double v = 1.0;
      for (int k = 0; k < d; ++k) v *= ipow(X(row, k), table[i][k]);
      A(row, static_cast<Eigen::Index>(i)) = v;
    }
  }
  return A;
}

ComplexVector truncated_lsq(const RealPoints& X, const ComplexVector& Y, int m, int n) {
  if (m < 0 || n < m) throw std::invalid_argument("truncated_lsq: need 0 <= m <= n");
  if (X.rows() != Y.size()) throw DimensionError("truncated_lsq: X and Y differ in length");
  const int d = static_cast<int>(X.cols());
  const auto r_n = static_cast<Eigen::Index>(jet_dimension(d, n));
  const double rcond = 1e-12 * static_cast<double>(std::max<Eigen::Index>(X.rows(), r_n));
  const TruncatedSolve solve = truncated_solve(monomial_design(X, n), Y, rcond);
  if (solve.rank < r_n) {
    throw IllPosedError("truncated_lsq: monomial design matrix is rank deficient", solve.singular_values);
  }
  return solve.X.col(0).head(static_cast<Eigen::Index>(jet_dimension(d, m)));
}

double lsq_equivalence_check(const MapExpr& g, const RealPoints& X, int m, int n) {
  if (g.output_dim() != 1) throw DimensionError("lsq_equivalence_check: g must be scalar");
  const int d = g.input_dim();
  if (X.cols() != d) throw DimensionError("lsq_equivalence_check: point dimension mismatch");

  const cplx g0 = g.eval(RealVector(RealVector::Zero(d)))[0];
  if (g0.imag() != 0.0) throw DomainError("lsq_equivalence_check: g(0) must be real");
  auto shift = std::make_shared<ExprNode>(ExprNode{ExprNode::Kind::kConstant, g0.real(), 0, nullptr, nullptr});
  auto shifted = std::make_shared<ExprNode>(ExprNode{ExprNode::Kind::kSub, 0.0, 0, g.components()[0], shift});
  const MapExpr f(d, {shifted});

  SampleSet samples;
  samples.Z = X.cast<cplx>();
  samples.W.resize(X.rows(), 1);
  ComplexVector Y(X.rows());
  for (Eigen::Index i = 0; i < X.rows(); ++i) {
    const RealVector x = X.row(i).transpose();
    Y[i] = g.eval(x)[0];
    samples.W(i, 0) = f.eval(x)[0];
  }

  const RealVector p = RealVector::Zero(d);
  const ComplexVector q = ComplexVector::Zero(1);
  const PushforwardEstimate est = estimate_pushforward(p, q, m, n, samples);

  // At p = q = 0 the reconstruction is sum_alpha conj(C(e_1, alpha)) z^alpha / sqrt(alpha!).
  const MultiIndexTable table(d, m);
  const ComplexVector grad = basis_gradient_at_zero(q, m, 0);
  const ComplexVector u_coeffs = est.C_hat.adjoint() * grad.conjugate();
  ComplexVector pipeline(static_cast<Eigen::Index>(table.size()));
  for (std::size_t i = 0; i < table.size(); ++i) {
    pipeline[static_cast<Eigen::Index>(i)] = u_coeffs[static_cast<Eigen::Index>(i)] / std::sqrt(factorial(table[i]));
  }
  pipeline[0] += g0;

  const ComplexVector lsq = truncated_lsq(X, Y, m, n);
  return (pipeline - lsq).cwiseAbs().maxCoeff();
}

}  // namespace jetflow
