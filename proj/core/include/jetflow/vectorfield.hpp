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

#ifndef JETFLOW_VECTORFIELD_HPP_
#define JETFLOW_VECTORFIELD_HPP_

#include "jetflow/fock.hpp"
#include "jetflow/map_expr.hpp"
#include "jetflow/pushforward.hpp"
#include "jetflow/types.hpp"

namespace jetflow {

// Time-T flow of dz/dt = V(z) from z0, adaptive Dormand-Prince 5(4) with
// absolute and relative tolerance `tol`. Throws FlowBlowUp on divergence or
// step-size collapse.
RealVector flow_map(const MapExpr& V, double T, const RealVector& z0, double tol = 1e-10);

// Throws DomainError unless |V(p)| < 1e-12.
void check_equilibrium(const MapExpr& V, const RealVector& p);

// Z = p + offsets, W = flow_map(V, T, Z) row by row. Rows are integrated in
// parallel and stored by index.
SampleSet flow_samples(const MapExpr& V, const RealVector& p, const RealPoints& offsets, double T,
                       double tol = 1e-10);

struct MatrixLogResult {
  ComplexMatrix L;
  int nodes = 0;            // Gauss-Legendre nodes in the accepted rule
  double last_change = 0.0; // Frobenius change at the last doubling
};

// log C = (C - I) int_0^1 (I + t(C - I))^(-1) dt by Gauss-Legendre with node
// doubling from 8 until the Frobenius change drops below
// quad_tol * max(1, ||log C||_F).
// Throws SpectrumError if C has an eigenvalue on (-inf, 0] and QuadratureError
// when the node cap is reached.
MatrixLogResult matrix_log_detailed(const ComplexMatrix& C, double quad_tol = 1e-12);
ComplexMatrix matrix_log(const ComplexMatrix& C, double quad_tol = 1e-12);

struct GeneratorEstimate {
  ComplexMatrix A_hat;
  double T = 0.0;
  double log_residual = 0.0;  // ||exp(T A_hat) - C_hat||_F
  int quadrature_nodes = 0;
};

GeneratorEstimate estimate_generator(const ComplexMatrix& C_hat, double T, double quad_tol = 1e-12);
GeneratorEstimate estimate_generator(const PushforwardEstimate& estimate, double T, double quad_tol = 1e-12);

// Component i = u_{p,m}(z) A^* conj(grad_i u_{p,m}(0)).
ComplexVector reconstruct_field(const GeneratorEstimate& gen, const RealVector& p, int m, const ComplexVector& z);

// max over t = k / grid, k = 0..grid, of ||(I + t(C - I))^(-1)||_op; +inf if
// the pencil is singular at a grid point.
double bound_B(const ComplexMatrix& C, int grid = 200);

}  // namespace jetflow

#endif  // JETFLOW_VECTORFIELD_HPP_
