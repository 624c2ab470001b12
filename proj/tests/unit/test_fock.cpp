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

#include <cmath>
#include <numbers>

#include "doctest.h"
#include "jetflow/errors.hpp"
#include "jetflow/fock.hpp"
#include "oracles.hpp"

using namespace jetflow;

namespace {

ComplexVector c1(cplx x) { return ComplexVector::Constant(1, x); }

}  // namespace

TEST_CASE("basis_u reference values") {
  CHECK(std::abs(basis_u(c1(0.0), {2}, c1(1.0)) - 1.0 / std::sqrt(2.0)) < 1e-15);
  CHECK(std::abs(basis_u(c1(0.0), {0}, c1(cplx(3.0, -2.0))) - 1.0) < 1e-15);
  CHECK(std::abs(basis_u(c1(1.0), {1}, c1(0.0)) + std::exp(-0.5)) < 1e-15);
}

TEST_CASE("feature matrix rows") {
  ComplexPoints Z(1, 1);
  Z(0, 0) = 0.0;
  ComplexMatrix U = feature_matrix(c1(0.0), 1, Z);
  CHECK(U.rows() == 1);
  CHECK(U.cols() == 2);
  CHECK(std::abs(U(0, 0) - 1.0) < 1e-15);
  CHECK(std::abs(U(0, 1)) == 0.0);

  Z(0, 0) = 1.0;
  U = feature_matrix(c1(0.0), 2, Z);
  CHECK(std::abs(U(0, 0) - 1.0) < 1e-15);
  CHECK(std::abs(U(0, 1) - 1.0) < 1e-15);
  CHECK(std::abs(U(0, 2) - 1.0 / std::sqrt(2.0)) < 1e-15);

  Z(0, 0) = cplx(0.0, 1.0);
  U = feature_matrix(c1(0.0), 1, Z);
  CHECK(std::abs(U(0, 1) - cplx(0.0, 1.0)) < 1e-15);

  // Rows agree with basis_u entry by entry.
  testing::Gen gen(31);
  ComplexPoints many(7, 2);
  for (Eigen::Index i = 0; i < many.rows(); ++i) {
    many(i, 0) = gen.complex_in_disk(1.0);
    many(i, 1) = gen.complex_in_disk(1.0);
  }
  ComplexVector p(2);
  p << 0.4, -0.3;
  const ComplexMatrix F = feature_matrix(p, 3, many);
  const MultiIndexTable t(2, 3);
  for (Eigen::Index i = 0; i < many.rows(); ++i) {
    for (std::size_t j = 0; j < t.size(); ++j) {
      CHECK(std::abs(F(i, static_cast<Eigen::Index>(j)) - basis_u(p, t[j], many.row(i).transpose())) < 1e-13);
    }
  }
}

TEST_CASE("projection tail reference values") {
  CHECK(std::abs(projection_tail_sq(c1(0.0), 1, c1(0.5)) - (std::exp(0.25) - 1.25)) < 1e-15);
  CHECK(projection_tail_sq(c1(0.0), 0, c1(0.0)) == 0.0);
  double tail = 0.0;
  double term = 1.0;
  for (int j = 1; j <= 40; ++j) {
    term *= 0.25 / j;
    if (j >= 6) tail += term;
  }
  CHECK(std::abs(projection_tail_sq(c1(0.0), 5, c1(0.5)) - tail) < 1e-12);
  CHECK(tail == doctest::Approx(3.39e-7).epsilon(0.01));
}

TEST_CASE("projection tail equals the brute-force sum") {
  testing::Gen gen(32);
  for (double pv : {0.0, 0.7}) {
    for (int d = 1; d <= 2; ++d) {
      for (int n = 0; n <= 6; ++n) {
        for (int k = 0; k < 4; ++k) {
          ComplexVector w(d);
          for (int i = 0; i < d; ++i) w[i] = gen.complex_in_disk(1.0);
          const ComplexVector p = ComplexVector::Constant(d, pv);
          CAPTURE(pv);
          CAPTURE(n);
          CHECK(std::abs(projection_tail_sq(p, n, w) - testing::brute_force_tail_sq(p, n, w, 30)) < 1e-10);
        }
      }
    }
  }
}

TEST_CASE("basis is orthonormal under the Gaussian weight") {
  const testing::GaussHermiteRule gh = testing::gauss_hermite(80);
  const MultiIndexTable t(1, 5);
  for (double p : {0.0, 0.7}) {
    ComplexMatrix gram = ComplexMatrix::Zero(6, 6);
    for (std::size_t a = 0; a < gh.nodes.size(); ++a) {
      for (std::size_t b = 0; b < gh.nodes.size(); ++b) {
        const cplx z(gh.nodes[a], gh.nodes[b]);
        const ComplexRow row = basis_row(c1(p), t, c1(z));
        gram += gh.weights[a] * gh.weights[b] / std::numbers::pi * (row.transpose() * row.conjugate());
      }
    }
    CAPTURE(p);
    CHECK((gram - ComplexMatrix::Identity(6, 6)).cwiseAbs().maxCoeff() < 1e-6);
  }
}

TEST_CASE("gradient at zero reference values") {
  ComplexVector g = basis_gradient_at_zero(c1(0.0), 2, 0);
  CHECK((g - ComplexVector::Unit(3, 1)).norm() < 1e-15);

  g = basis_gradient_at_zero(ComplexVector::Zero(2), 1, 1);
  CHECK((g - ComplexVector::Unit(3, 2)).norm() < 1e-15);

  g = basis_gradient_at_zero(c1(1.0), 1, 0);
  CHECK(std::abs(g[0] - std::exp(-0.5)) < 1e-15);
  CHECK(std::abs(g[1]) < 1e-15);
  CHECK_THROWS_AS(basis_gradient_at_zero(c1(1.0), 1, 1), DimensionError);
}

TEST_CASE("gradient at zero matches central differences") {
  const double h = 1e-5;
  for (int d = 1; d <= 2; ++d) {
    ComplexVector q(d);
    q[0] = 0.7;
    if (d == 2) q[1] = -0.4;
    const MultiIndexTable t(d, 3);
    for (int i = 0; i < d; ++i) {
      const ComplexVector g = basis_gradient_at_zero(q, 3, i);
      ComplexVector step = ComplexVector::Zero(d);
      step[i] = h;
      for (std::size_t j = 0; j < t.size(); ++j) {
        const cplx fd = (basis_u(q, t[j], step) - basis_u(q, t[j], -step)) / (2.0 * h);
        CHECK(std::abs(g[static_cast<Eigen::Index>(j)] - fd) < 1e-6);
      }
    }
  }
}

TEST_CASE("minkowski gauges") {
  ComplexVector z(2);
  z << 0.5, -0.5;
  CHECK(minkowski(DomainSpec::box(RealVector::Zero(2), RealVector::Ones(2)), z) == doctest::Approx(0.5));
  z << 0.6, 0.8;
  CHECK(minkowski(DomainSpec::ball(RealVector::Zero(2), 2.0), z) == doctest::Approx(0.5));
  z << 0.5, 3.0;
  RealVector radii(2);
  radii << 1.0, 2.0;
  CHECK(minkowski(DomainSpec::box(RealVector::Zero(2), radii), z) == doctest::Approx(1.5));

  // homogeneous of degree one
  z << cplx(0.2, 0.1), cplx(-0.3, 0.4);
  const DomainSpec box = DomainSpec::box(RealVector::Zero(2), radii);
  CHECK(minkowski(box, 3.0 * z) == doctest::Approx(3.0 * minkowski(box, z)));
  CHECK(minkowski(box, ComplexVector::Zero(2)) == 0.0);
}

TEST_CASE("measure radii") {
  MeasureRadii mr = measure_radii(MeasureSpec::uniform_box(1, 0.5), DomainSpec::box(RealVector::Zero(1), RealVector::Ones(1)));
  CHECK(mr.R_mu == doctest::Approx(0.5));
  CHECK(mr.L_mu == 1.0);

  mr = measure_radii(MeasureSpec::uniform_ball(RealVector::Zero(2), 0.8), DomainSpec::ball(RealVector::Zero(2), 1.0));
  CHECK(mr.R_mu == doctest::Approx(0.8));
  CHECK(mr.L_mu == 1.0);

  RealVector supp(2);
  supp << 0.5, 2.0;
  RealVector k0(2);
  k0 << 1.0, 4.0;
  mr = measure_radii(MeasureSpec::uniform_box(RealVector::Zero(2), supp), DomainSpec::box(RealVector::Zero(2), k0));
  CHECK(mr.R_mu == doctest::Approx(0.5));
  CHECK(mr.L_mu == doctest::Approx(2.0));

  CHECK_THROWS_AS(measure_radii(MeasureSpec::uniform_box(1, 1.5), DomainSpec::box(RealVector::Zero(1), RealVector::Ones(1))),
                  DomainError);
}
