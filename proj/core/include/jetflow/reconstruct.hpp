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

#ifndef JETFLOW_RECONSTRUCT_HPP_
#define JETFLOW_RECONSTRUCT_HPP_

#include "jetflow/map_expr.hpp"
#include "jetflow/pushforward.hpp"
#include "jetflow/types.hpp"

namespace jetflow {

// Component i = u_{p,m}(z) C^* conj(grad_i v_{q,m}(0)).
ComplexVector reconstruct_eval(const ComplexMatrix& C, const RealVector& p, const ComplexVector& q, int m,
                               const ComplexVector& z);
ComplexVector reconstruct_eval(const PushforwardEstimate& estimate, const RealVector& p, const ComplexVector& q,
                               int m, const ComplexVector& z);

// N x r_n matrix of graded monomials x^alpha.
ComplexMatrix monomial_design(const RealPoints& X, int n);

// Least-squares polynomial of degree n through (X, Y), truncated to its
// graded monomial coefficients of degree <= m.
ComplexVector truncated_lsq(const RealPoints& X, const ComplexVector& Y, int m, int n);

// Max coefficient gap between the Fock pipeline (base point 0) and
// truncated_lsq for a scalar map g.
double lsq_equivalence_check(const MapExpr& g, const RealPoints& X, int m, int n);

}  // namespace jetflow

#endif  // JETFLOW_RECONSTRUCT_HPP_
