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

// Reference computations used only by tests. Each routine takes a different
// route from the library code it is compared against.

#ifndef JETFLOW_TESTS_ORACLES_HPP_
#define JETFLOW_TESTS_ORACLES_HPP_

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "jetflow/map_expr.hpp"
#include "jetflow/types.hpp"

namespace jetflow::testing {

// Seeded value generator for property tests.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  double normal() { return std::normal_distribution<double>(0.0, 1.0)(rng_); }
  cplx complex_in_disk(double radius);
  RealVector real_vector(int n, double lo, double hi);
  RealPoints points(Eigen::Index N, int d, double radius);
  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

// Nodes and weights for int f(x) exp(-x^2) dx over R (Golub-Welsch).
struct GaussHermiteRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};
GaussHermiteRule gauss_hermite(int n);

// sum over n < |alpha| <= n + extra of |u_{p,alpha}(w)|^2, term by term.
double brute_force_tail_sq(const ComplexVector& p, int n, const ComplexVector& w, int extra);

// Representation matrix through Taylor coefficients of (v_beta o f)(z) exp(-<z, p>)
// at p, scaled by exp(|p|^2 / 2) sqrt(alpha!).
ComplexMatrix taylor_route_oracle(const MapExpr& f, const RealVector& p, int m);

// Polynomial map text with `r` components in z1..zd, total degree <= degree,
// coefficients in [-scale, scale].
std::string random_polynomial_text(Gen& gen, int d, int r, int degree, double scale);

// Q diag(lambda) Q^(-1) with Re(lambda) in [0.2, 3] and a well-conditioned Q.
ComplexMatrix random_admissible_matrix(Gen& gen, int r);

// Dense symmetric eigensolve in double, the cross-check for bisection.
double dense_smallest_eigenvalue(const RealMatrix& D);

}  // namespace jetflow::testing

#endif  // JETFLOW_TESTS_ORACLES_HPP_
