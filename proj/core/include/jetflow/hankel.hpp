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

#ifndef JETFLOW_HANKEL_HPP_
#define JETFLOW_HANKEL_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "jetflow/bigfloat.hpp"
#include "jetflow/measure.hpp"
#include "jetflow/types.hpp"

namespace jetflow {

// Dense square matrix of exact rationals, row-major.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  explicit RationalMatrix(std::size_t n) : n_(n), data_(n * n) {}

  std::size_t rows() const { return n_; }
  mpq_class& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
  const mpq_class& operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

  RealMatrix to_double() const;
  // One row per line, entries "num/den" separated by single spaces.
  std::string to_text() const;

 private:
  std::size_t n_ = 0;
  std::vector<mpq_class> data_;
};

// Entry (i, j) = integral of x^(alpha_i + alpha_j) d(mu) over the graded
// monomials of degree <= n.
RealMatrix moment_matrix(const MeasureSpec& measure, int n);
// Same matrix in exact arithmetic. Doubles in the measure description are
// taken at their exact binary value. Unnormalized balls need d = 1.
RationalMatrix moment_matrix_exact(const MeasureSpec& measure, int n);

struct HankelSpectrum {
  std::optional<int> order;  // n, when the matrix came from a moment sweep
  BigFloat lambda;           // midpoint of the final bracket
  BigFloat lower;
  BigFloat upper;
  int precision_bits = 0;
  bool certified = false;
  int iterations = 0;

  double value() const { return lambda.to_double(); }
};

// Smallest eigenvalue by bisection on the inertia of D - tI, where the
// number of negative LDL^T pivots equals the number of eigenvalues below t.
// Stops at relative bracket width 2^(-bits/4). Throws PrecisionExhausted when
// the factorization breaks down or the bracket stops shrinking.
HankelSpectrum smallest_eigenvalue(const RationalMatrix& D, int precision_bits);
HankelSpectrum smallest_eigenvalue(const RealMatrix& D, int precision_bits);

// Number of eigenvalues of D strictly below t, evaluated at the given width.
int eigenvalues_below(const RationalMatrix& D, const BigFloat& t);

// Lambda_n of a measure: exact moments then smallest_eigenvalue.
HankelSpectrum moment_spectrum(const MeasureSpec& measure, int n, int precision_bits);

// Rate constant for the Lebesgue weight on [a - r, a + r].
double sigma(double a, double r);

struct DecayRow {
  int n = 0;
  double lambda = 0.0;
  double rate = 0.0;          // -log(lambda) / (2n + 2)
  double log_sigma = 0.0;
  int precision_bits = 0;     // width actually used (after retries)
  bool certified = false;
};

// Lambda_n of the (n+1) x (n+1) Hankel matrix of the Lebesgue weight on
// [a - r, a + r] for n = 0..n_max, with the normalized log-rate.
std::vector<DecayRow> decay_rate_check(double a, double r, int n_max, int precision_bits);

// Product over coordinates of the 1D Lebesgue Hankel eigenvalues
// lambda_n(p_i, r_i).
double rectangle_lower_bound(const RealVector& p, const RealVector& radii, int n,
                             int precision_bits);

// Smallest N with N >= L^(4n) r_n^2 / Lambda^2 * 4 log(2 / delta).
std::uint64_t sample_complexity(int n, int d, double Lambda_n, double L_mu, double delta);

}  // namespace jetflow

#endif  // JETFLOW_HANKEL_HPP_
