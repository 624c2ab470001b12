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
#include <limits>

#include <Eigen/Eigenvalues>

#include "doctest.h"
#include "jetflow/errors.hpp"
#include "jetflow/linalg.hpp"
#include "jetflow/sampling.hpp"
#include "jetflow/vectorfield.hpp"
#include "oracles.hpp"

using namespace jetflow;

namespace {

RealVector r1(double x) { return RealVector::Constant(1, x); }
ComplexVector c1(cplx x) { return ComplexVector::Constant(1, x); }

ComplexMatrix diag(std::initializer_list<cplx> values) {
  ComplexVector v(static_cast<Eigen::Index>(values.size()));
  Eigen::Index i = 0;
  for (cplx x : values) v[i++] = x;
  return v.asDiagonal();
}

GeneratorEstimate linear_pipeline() {
  const MapExpr V = parse_map("-z1", 1, 1);
  const RealVector p = r1(0.0);
  const RealPoints X = draw_samples(MeasureSpec::uniform_box(1, 0.4), 2000, SamplingScheme::kIid, 21);
  const SampleSet S = flow_samples(V, p, X, 0.1);
  return estimate_generator(estimate_pushforward(p, p.cast<cplx>(), 3, 3, S), 0.1);
}

}  // namespace

TEST_CASE("flow map examples") {
  CHECK(std::abs(flow_map(parse_map("-z1", 1, 1), 1.0, r1(1.0))[0] - std::exp(-1.0)) < 1e-9);
  RealVector z0(2);
  z0 << 0.7, -1.3;
  CHECK((flow_map(parse_map("0; 0", 2, 2), 2.0, z0) - z0).norm() == 0.0);

  // z' = -z + 0.2 z^2, so 1/z = 0.2 + (1/z0 - 0.2) e^t.
  const double exact = 1.0 / (0.2 + (1.0 / 0.4 - 0.2) * std::exp(0.1));
  CHECK(std::abs(flow_map(parse_map("-z1 + 0.2*z1^2", 1, 1), 0.1, r1(0.4))[0] - exact) < 1e-8);
}

TEST_CASE("flow map detects blow-up") {
  CHECK_THROWS_AS(flow_map(parse_map("z1^2", 1, 1), 2.0, r1(1.0)), FlowBlowUp);
}

TEST_CASE("flow map is deterministic and samples are ordered") {
  const MapExpr V = parse_map("-z1 + 0.2*z1^2", 1, 1);
  const RealPoints X = draw_samples(MeasureSpec::uniform_box(1, 0.4), 600, SamplingScheme::kIid, 4);
  const SampleSet a = flow_samples(V, r1(0.0), X, 0.1);
  const SampleSet b = flow_samples(V, r1(0.0), X, 0.1);
  CHECK(a.W == b.W);
  for (Eigen::Index i = 0; i < X.rows(); i += 97)
    CHECK(a.W(i, 0).real() == flow_map(V, 0.1, X.row(i).transpose())[0]);
}

TEST_CASE("equilibrium check") {
  CHECK_NOTHROW(check_equilibrium(parse_map("-z1 + 0.2*z1^2", 1, 1), r1(0.0)));
  CHECK_THROWS_AS(check_equilibrium(parse_map("1 - z1", 1, 1), r1(0.0)), DomainError);
}

TEST_CASE("matrix log examples") {
  const ComplexMatrix L = matrix_log(diag({2.0, 3.0}));
  CHECK((L - diag({std::log(2.0), std::log(3.0)})).norm() < 1e-12);
  CHECK(matrix_log(ComplexMatrix::Identity(4, 4)).norm() < 1e-14);

  ComplexMatrix J(2, 2);
  J << 1.0, 1.0, 0.0, 1.0;
  ComplexMatrix N(2, 2);
  N << 0.0, 1.0, 0.0, 0.0;
  CHECK((matrix_log(J) - N).norm() < 1e-10);
}

TEST_CASE("matrix log rejects inadmissible spectra") {
  CHECK_THROWS_AS(matrix_log(diag({1.0, -0.5})), SpectrumError);
  CHECK_THROWS_AS(matrix_log(diag({1.0, 0.0})), SpectrumError);
  CHECK_NOTHROW(matrix_log(diag({1.0, cplx(-0.5, 0.3)})));
}

TEST_CASE("exp of log returns the input") {
  testing::Gen gen(71);
  for (int trial = 0; trial < 50; ++trial) {
    const ComplexMatrix C = testing::random_admissible_matrix(gen, gen.integer(2, 8));
    const ComplexMatrix back = matrix_exp(matrix_log(C));
    CHECK((back - C).norm() <= 1e-8 * C.norm());
  }
}

TEST_CASE("quadrature log agrees with the eigendecomposition log") {
  testing::Gen gen(72);
  for (int trial = 0; trial < 20; ++trial) {
    const int r = gen.integer(2, 6);
    RealMatrix Q(r, r);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j) Q(i, j) = gen.normal();
    Q += 2.0 * RealMatrix::Identity(r, r);
    RealVector lambda(r), loglambda(r);
    for (int i = 0; i < r; ++i) {
      lambda[i] = gen.uniform(0.2, 3.0);
      loglambda[i] = std::log(lambda[i]);
    }
    const RealMatrix Qinv = Q.inverse();
    const ComplexMatrix C = (Q * lambda.asDiagonal() * Qinv).cast<cplx>();
    const ComplexMatrix spectral = (Q * loglambda.asDiagonal() * Qinv).cast<cplx>();
    CHECK((matrix_log(C) - spectral).norm() <= 1e-9 * std::max(1.0, spectral.norm()));
  }
}

TEST_CASE("generator examples") {
  const double T = 0.5;
  const ComplexMatrix A = diag({0.0, -0.4, 1.1, -2.0});
  const GeneratorEstimate g = estimate_generator(matrix_exp(T * A), T);
  CHECK((g.A_hat - A).norm() < 1e-9);
  CHECK(g.log_residual < 1e-8);
  CHECK(estimate_generator(ComplexMatrix::Identity(3, 3), 0.2).A_hat.norm() < 1e-14);
}

TEST_CASE("generator from a linear flow") {
  const GeneratorEstimate g = linear_pipeline();
  CHECK(g.log_residual < 1e-8);
  CHECK((g.A_hat - diag({0.0, -1.0, -2.0, -3.0})).cwiseAbs().maxCoeff() < 2e-3);

  const ComplexVector v = reconstruct_field(g, r1(0.0), 3, c1(0.3));
  CHECK(std::abs(v[0] + 0.3) < 5e-3);
}

TEST_CASE("field reconstruction") {
  GeneratorEstimate zero;
  zero.A_hat = ComplexMatrix::Zero(4, 4);
  zero.T = 1.0;
  CHECK(std::abs(reconstruct_field(zero, r1(0.0), 3, c1(0.2))[0]) == 0.0);

  const MapExpr V = parse_map("-z1 + 0.2*z1^2", 1, 1);
  const RealVector p = r1(0.0);
  const RealPoints X = draw_samples(MeasureSpec::uniform_box(1, 0.4), 4000, SamplingScheme::kIid, 22);
  const GeneratorEstimate g =
      estimate_generator(estimate_pushforward(p, p.cast<cplx>(), 5, 8, flow_samples(V, p, X, 0.1)), 0.1);
  double sup = 0.0;
  for (int i = 0; i <= 60; ++i) {
    const double x = -0.3 + 0.6 * i / 60.0;
    sup = std::max(sup, std::abs(reconstruct_field(g, p, 5, c1(x))[0] - V.eval(c1(x))[0]));
  }
  MESSAGE("field sup error " << sup);
  CHECK(sup < 5e-3);
}

TEST_CASE("stability constant") {
  CHECK(bound_B(ComplexMatrix::Identity(3, 3)) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(bound_B(diag({2.0})) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(bound_B(diag({0.5})) == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(std::isinf(bound_B(diag({1.0, -1.0}))));
}

TEST_CASE("flow matrices form a semigroup") {
  const RealVector p = r1(0.0);
  auto flow_matrix = [&](double t) {
    return oracle_pushforward(parse_map("exp(-" + std::to_string(t) + ")*z1", 1, 1), p, 5).C;
  };
  const ComplexMatrix lhs = flow_matrix(0.1) * flow_matrix(0.2);
  CHECK((lhs - flow_matrix(0.3)).norm() < 1e-9);
  ComplexVector expected(6);
  for (int j = 0; j < 6; ++j) expected[j] = std::exp(-0.3 * j);
  CHECK((flow_matrix(0.3) - ComplexMatrix(expected.asDiagonal())).norm() < 1e-12);
}

TEST_CASE("perturbation guard for the logarithm") {
  testing::Gen gen(73);
  const double gamma2 = 0.5;
  for (int trial = 0; trial < 30; ++trial) {
    const int r = gen.integer(2, 6);
    ComplexVector c(r);
    for (int i = 0; i < r; ++i) c[i] = gen.uniform(0.3, 2.0);
    const ComplexMatrix C = c.asDiagonal();
    const double B = bound_B(C);
    ComplexMatrix E(r, r);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j) E(i, j) = cplx(gen.normal(), gen.normal());
    E *= gen.uniform(0.05, 0.95) * (1.0 - gamma2) / B / operator_norm(E);
    const ComplexMatrix C_hat = C + E;
    GeneratorEstimate g;
    REQUIRE_NOTHROW(g = estimate_generator(C_hat, 1.0));
    const double lhs = operator_norm(g.A_hat - matrix_log(C));
    CHECK(lhs <= B * B / gamma2 * E.norm());
  }
}
