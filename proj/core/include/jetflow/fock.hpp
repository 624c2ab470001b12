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

#ifndef JETFLOW_FOCK_HPP_
#define JETFLOW_FOCK_HPP_

#include <cstdint>
#include <memory>

#include "jetflow/measure.hpp"
#include "jetflow/multiindex.hpp"
#include "jetflow/types.hpp"

namespace jetflow {

// Absolutely convex compact neighbourhood K0 of the origin (box or ball)
// together with the base point p; the working domain is K = p + K0.
struct DomainSpec {
  enum class Kind { kBox, kBall };

  Kind kind = Kind::kBox;
  RealVector center;  // base point p
  RealVector radii;   // per coordinate (box) or one entry (ball)

  int dim() const { return static_cast<int>(center.size()); }

  static DomainSpec box(RealVector center, RealVector radii);
  static DomainSpec ball(RealVector center, double radius);
};

// Samples z^i (inputs) and their images w^i = f(z^i), one point per row.
struct SampleSet {
  enum class Provenance { kIid, kGrid, kHalton, kExternal };

  ComplexPoints Z;
  ComplexPoints W;
  Provenance provenance = Provenance::kExternal;
  std::uint64_t seed = 0;

  Eigen::Index size() const { return Z.rows(); }
};

// Jet basis of the Fock space centred at p:
//   u_{p,alpha}(z) = exp(-|p|^2/2) (z - p)^alpha exp(<z, p>) / sqrt(alpha!).
// The same formula with (q, beta) gives the image-side basis v_{q,beta}.
cplx basis_u(const ComplexVector& p, const MultiIndex& alpha, const ComplexVector& z);

// Row (u_{p,1}(z), ..., u_{p,r_n}(z)) in graded numbering.
ComplexRow basis_row(const ComplexVector& p, const MultiIndexTable& table, const ComplexVector& z);

// N x r_n matrix whose i-th row is basis_row(p, ., points.row(i)). Used for
// both U_{p,n,Z} and V_{q,m,W}.
ComplexMatrix feature_matrix(const ComplexVector& p, int order, const ComplexPoints& points);

// sum_{|alpha| > n} |u_{p,alpha}(w)|^2, the squared Fock-norm distance between
// the kernel section e_w and its projection onto jets of order n.
double projection_tail_sq(const ComplexVector& p, int order, const ComplexVector& w);

// Holomorphic partial derivative d/dz_i of every v_{q,beta}, |beta| <= m, at 0.
// `coordinate` is 0-based.
ComplexVector basis_gradient_at_zero(const ComplexVector& q, int order, int coordinate);

// Gauge |z|_{K0} of the domain's K0.
double minkowski(const DomainSpec& domain, const ComplexVector& z);

struct MeasureRadii {
  double R_mu;  // sup of the gauge over supp(mu)
  double L_mu;  // max(1, sup of |x_i| over supp(mu))
};

// Throws DomainError when supp(mu) is not contained in K0.
MeasureRadii measure_radii(const MeasureSpec& measure, const DomainSpec& domain);

}  // namespace jetflow

#endif  // JETFLOW_FOCK_HPP_
