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

#ifndef JETFLOW_PUSHFORWARD_HPP_
#define JETFLOW_PUSHFORWARD_HPP_

#include <optional>
#include <string>
#include <vector>

#include "jetflow/fock.hpp"
#include "jetflow/map_expr.hpp"
#include "jetflow/types.hpp"

namespace jetflow {

struct EstimatorOptions {
  // Relative singular-value cutoff; default 1e-12 * max(N, r_n).
  std::optional<double> rcond;
  // When true (default) the input feature matrix must keep all r_n singular
  // values. When false only r_m are required.
  bool require_full_rank = true;
};

struct PushforwardEstimate {
  ComplexMatrix C_hat;  // r_m(image side) x r_m(input side)
  int m = 0;
  int n = 0;
  double pinv_rcond = 0.0;        // relative cutoff
  double smallest_kept_sv = 0.0;
  double largest_sv = 0.0;
  int rank = 0;
  std::vector<double> singular_values;
  std::vector<std::string> warnings;
};

// Leftmost block of V^* (U^*)^+, with U = feature_matrix(p, n, Z) and
// V = feature_matrix(q, m, W). Computed as (U^+ V)^* through a truncated SVD.
PushforwardEstimate estimate_pushforward(const RealVector& p, const ComplexVector& q, int m, int n,
                                         const SampleSet& samples, const EstimatorOptions& options = {});

struct OraclePushforward {
  ComplexMatrix C;         // r_m(image side) x r_m(input side)
  ComplexMatrix jacobian;  // r x d
  ComplexVector q;         // f(p)
};

// Exact representation matrix of the push-forward on m-jets at p, from the
// Taylor jets of f.
OraclePushforward oracle_pushforward(const MapExpr& f, const RealVector& p, int m);

// ||I - D^(-1/2) D_hat D^(-1/2)||_op. Throws DomainError unless D is positive
// definite.
double gamma_check(const RealMatrix& D_mu, const RealMatrix& D_hat);

// sqrt(m! / gamma) * R^n / sqrt(Lambda).
double theorem_rate(int m, int n, double R_mu, double Lambda_n, double gamma);

}  // namespace jetflow

#endif  // JETFLOW_PUSHFORWARD_HPP_
