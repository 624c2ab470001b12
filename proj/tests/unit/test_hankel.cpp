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

#include "doctest.h"
#include "jetflow/errors.hpp"
#include "jetflow/hankel.hpp"
#include "jetflow/pushforward.hpp"
#include "jetflow/sampling.hpp"
#include "oracles.hpp"

using namespace jetflow;

namespace {

MeasureSpec lebesgue_interval(double a, double r) {
  return MeasureSpec::uniform_box(RealVector::Constant(1, a), RealVector::Constant(1, r), false);
}

}  // namespace

TEST_CASE("moment matrices of the reference measures") {
  const RationalMatrix D1 = moment_matrix_exact(MeasureSpec::uniform_box(1, 1.0), 1);
  CHECK(D1(0, 0) == 1);
  CHECK(D1(0, 1) == 0);
  CHECK(D1(1, 1) == mpq_class(1, 3));

  RealPoints origin = RealPoints::Zero(1, 1);
  const RealMatrix E = moment_matrix(MeasureSpec::empirical(origin), 1);
  CHECK(E(0, 0) == 1.0);
  CHECK(E(0, 1) == 0.0);
  CHECK(E(1, 1) == 0.0);

  const RationalMatrix D2 = moment_matrix_exact(MeasureSpec::uniform_box(1, 1.0), 2);
  CHECK(D2.to_text() == "1/1 0/1 1/3\n0/1 1/3 0/1\n1/3 0/1 1/5\n");
  const RealMatrix D2d = moment_matrix(MeasureSpec::uniform_box(1, 1.0), 2);
  CHECK(D2d(2, 2) == doctest::Approx(0.2));
}

TEST_CASE("exact ball and shifted-box moments") {
  // Unit disk: E[x^2] = 1/4, E[x^4] = 1/8, E[x^2 y^2] = 1/24.
  const RationalMatrix D = moment_matrix_exact(MeasureSpec::uniform_ball(RealVector::Zero(2), 1.0), 2);
  CHECK(D(1, 1) == mpq_class(1, 4));
  CHECK(D(3, 3) == mpq_class(1, 8));
  CHECK(D(3, 5) == mpq_class(1, 24));
  CHECK(D(4, 4) == mpq_class(1, 24));

  // Lebesgue on [0, 2]: moments 2^(k+1)/(k+1).
  const RationalMatrix B = moment_matrix_exact(lebesgue_interval(1.0, 1.0), 1);
  CHECK(B(0, 0) == 2);
  CHECK(B(0, 1) == 2);
  CHECK(B(1, 1) == mpq_class(8, 3));
}

TEST_CASE("exact moments agree with quasi-Monte Carlo") {
  RealVector c(2);
  c << 0.25, -0.5;
  RealVector r(2);
  r << 0.5, 1.0;
  const MeasureSpec measures[] = {MeasureSpec::uniform_box(c, r), MeasureSpec::uniform_ball(c, 0.75),
                                  MeasureSpec::uniform_box(2, 1.0)};
  for (const MeasureSpec& mu : measures) {
    const RealPoints X = draw_samples(mu, 1000000, SamplingScheme::kHalton, 0);
    const RealMatrix qmc = moment_matrix(MeasureSpec::empirical(X), 2);
    const RealMatrix exact = moment_matrix_exact(mu, 2).to_double();
    CHECK((qmc - exact).cwiseAbs().maxCoeff() < 1e-4);
  }
}

TEST_CASE("smallest eigenvalue of small matrices") {
  RealMatrix D = RealMatrix::Zero(2, 2);
  D.diagonal() << 1.0, 1.0 / 3.0;
  const HankelSpectrum s = smallest_eigenvalue(D, 256);
  CHECK(s.certified);
  CHECK(s.value() == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
  CHECK(s.lower <= s.lambda);
  CHECK(s.lambda <= s.upper);

  const RationalMatrix H = moment_matrix_exact(MeasureSpec::uniform_box(1, 1.0), 2);
  const double dense = testing::dense_smallest_eigenvalue(H.to_double());
  CHECK(smallest_eigenvalue(H, 256).value() == doctest::Approx(dense).epsilon(1e-12));
  CHECK(dense == doctest::Approx(0.07931668827).epsilon(1e-9));
}

TEST_CASE("inertia count") {
  RationalMatrix D(3);
  D(0, 0) = 1;
  D(1, 1) = 2;
  D(2, 2) = 3;
  CHECK(eigenvalues_below(D, BigFloat(2.5, 64)) == 2);
  CHECK(eigenvalues_below(D, BigFloat(0.5, 64)) == 0);
  CHECK(eigenvalues_below(D, BigFloat(9.0, 64)) == 3);
  RationalMatrix swap(2);
  swap(0, 1) = 1;
  swap(1, 0) = 1;
  CHECK_THROWS_AS(eigenvalues_below(swap, BigFloat(0.0, 64)), PrecisionExhausted);
  CHECK(eigenvalues_below(swap, BigFloat(0.5, 64)) == 1);
}

TEST_CASE("high-precision eigenvalue is stable across precisions") {
  const RationalMatrix D = moment_matrix_exact(MeasureSpec::uniform_box(1, 1.0), 12);
  const HankelSpectrum s256 = smallest_eigenvalue(D, 256);
  const HankelSpectrum s512 = smallest_eigenvalue(D, 512);
  CHECK(s256.certified);
  CHECK(s256.value() > 0.0);
  CHECK(s256.value() < 1e-8);
  CHECK(std::abs(s256.value() - s512.value()) <= 1e-10 * s512.value());
}

TEST_CASE("bisection agrees with a dense eigensolver") {
  RealVector c(2);
  c << 0.1, -0.2;
  const MeasureSpec measures[] = {MeasureSpec::uniform_box(1, 1.0), MeasureSpec::uniform_box(c, RealVector::Ones(2)),
                                  MeasureSpec::uniform_ball(c, 0.9), lebesgue_interval(2.0, 1.0)};
  testing::Gen gen(51);
  for (const MeasureSpec& mu : measures) {
    for (int n = 0; n <= 6; ++n) {
      const RealMatrix D = moment_matrix(mu, n);
      const double dense = testing::dense_smallest_eigenvalue(D);
      if (dense <= 1e-6) continue;
      CAPTURE(n);
      CHECK(std::abs(moment_spectrum(mu, n, 256).value() - dense) < 1e-10);
    }
  }
  const RealPoints X = gen.points(40, 2, 1.0);
  const RealMatrix D = moment_matrix(MeasureSpec::empirical(X), 2);
  CHECK(std::abs(smallest_eigenvalue(D, 256).value() - testing::dense_smallest_eigenvalue(D)) < 1e-10);
}

TEST_CASE("smallest eigenvalues interlace") {
  const MeasureSpec measures[] = {MeasureSpec::uniform_box(1, 1.0), MeasureSpec::uniform_box(2, 0.5),
                                  MeasureSpec::uniform_ball(RealVector::Zero(2), 1.0)};
  for (const MeasureSpec& mu : measures) {
    BigFloat previous(0.0, 192);
    for (int n = 0; n <= 5; ++n) {
      const HankelSpectrum s = moment_spectrum(mu, n, 192);
      CHECK(s.order == n);
      CHECK(s.lambda.sign() > 0);
      if (n > 0) CHECK(s.lambda <= previous);
      previous = s.lambda;
    }
  }
}

TEST_CASE("sigma reference values") {
  CHECK(sigma(0.0, 1.0) == doctest::Approx(1.0 + std::sqrt(2.0)).epsilon(1e-15));
  CHECK(sigma(2.0, 1.0) == doctest::Approx(3.0 + 2.0 * std::sqrt(2.0)).epsilon(1e-15));
  CHECK(sigma(-2.0, 1.0) == sigma(2.0, 1.0));
  for (double a : {0.5, 1.0, 3.0}) {
    const double r = std::sqrt(std::abs(a) + a * a);
    CHECK(std::abs(sigma(a, r * (1.0 - 1e-14)) - sigma(a, r * (1.0 + 1e-14))) < 1e-12);
  }
  CHECK_THROWS_AS(sigma(0.0, 0.0), DomainError);
}

TEST_CASE("decay-rate sweep on [-1, 1]") {
  const std::vector<DecayRow> rows = decay_rate_check(0.0, 1.0, 20, 256);
  REQUIRE(rows.size() == 21);
  CHECK(rows[0].lambda == doctest::Approx(2.0));
  for (std::size_t n = 1; n < rows.size(); ++n) CHECK(rows[n].lambda < rows[n - 1].lambda);
  const double target = std::log(1.0 + std::sqrt(2.0));
  CHECK(rows[20].log_sigma == doctest::Approx(target).epsilon(1e-15));
  CHECK(std::abs(rows[20].rate - target) < std::abs(rows[5].rate - target));
  CHECK(rows[20].lambda == doctest::Approx(8.227971e-15).epsilon(1e-6));
  CHECK(rows[20].rate == doctest::Approx(0.772171).epsilon(1e-5));
  for (const DecayRow& row : rows) CHECK(row.certified);
}

TEST_CASE("rectangle lower bound") {
  const RealVector p1 = RealVector::Zero(1);
  const RealVector r1 = RealVector::Ones(1);
  CHECK(rectangle_lower_bound(p1, r1, 3, 192) ==
        doctest::Approx(moment_spectrum(lebesgue_interval(0.0, 1.0), 3, 192).value()).epsilon(1e-14));

  const RealVector p2 = RealVector::Zero(2);
  const RealVector r2 = RealVector::Ones(2);
  const MeasureSpec rect = MeasureSpec::uniform_box(p2, r2, false);
  CHECK(rectangle_lower_bound(p2, r2, 2, 192) <= moment_spectrum(rect, 2, 192).value());

  RealVector radii(3);
  radii << 0.5, 1.0, 2.0;
  CHECK(rectangle_lower_bound(RealVector::Zero(3), radii, 0, 128) == doctest::Approx(8.0));
  CHECK(moment_spectrum(MeasureSpec::uniform_box(RealVector::Zero(3), radii, false), 0, 128).value() ==
        doctest::Approx(8.0));
}

TEST_CASE("sample complexity") {
  CHECK(sample_complexity(1, 1, 1.0 / 3.0, 1.0, 0.1) == 432);
  std::uint64_t previous = sample_complexity(2, 2, 0.01, 1.0, 0.01);
  for (double delta : {0.05, 0.2, 0.5, 0.9, 0.999}) {
    const std::uint64_t N = sample_complexity(2, 2, 0.01, 1.0, delta);
    CHECK(N < previous);
    previous = N;
  }
  const double raw = 36.0 * 4.0 * std::log(20.0);
  const auto doubled = static_cast<double>(sample_complexity(1, 1, 1.0 / 3.0, 2.0, 0.1));
  CHECK(std::abs(doubled - 16.0 * raw) <= 1.0);
  CHECK_THROWS_AS(sample_complexity(1, 1, 0.0, 1.0, 0.1), DomainError);
  CHECK_THROWS_AS(sample_complexity(1, 1, 0.5, 1.0, 1.0), DomainError);
}

TEST_CASE("empirical moments are close to the true ones with high probability") {
  const MeasureSpec mu = MeasureSpec::uniform_box(1, 1.0);
  std::vector<RealMatrix> exact;
  for (int n = 0; n <= 4; ++n) exact.push_back(moment_matrix(mu, n));
  int good = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const RealPoints X = draw_samples(mu, 20000, SamplingScheme::kIid, 1000 + seed);
    const MeasureSpec emp = MeasureSpec::empirical(X);
    bool ok = true;
    for (int n = 0; n <= 4 && ok; ++n) ok = gamma_check(exact[n], moment_matrix(emp, n)) <= 0.5;
    good += ok ? 1 : 0;
  }
  CHECK(good >= 90);
}
