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

#include <complex>
#include <vector>

#include "doctest.h"
#include "jetflow/errors.hpp"
#include "jetflow/jet.hpp"
#include "oracles.hpp"

using namespace jetflow;

namespace {

Jet make(const Jet::TablePtr& t, std::vector<cplx> c) {
  c.resize(t->size());
  return Jet(t, c);
}

Jet random_jet(testing::Gen& gen, const Jet::TablePtr& t) {
  Jet out(t);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = gen.complex_in_disk(1.0);
  return out;
}

double max_diff(const Jet& a, const Jet& b) {
  double out = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) out = std::max(out, std::abs(a[i] - b[i]));
  return out;
}

}  // namespace

TEST_CASE("jet_add") {
  const auto t1 = MultiIndexTable::make(1, 2);
  CHECK(max_diff(jet_add(make(t1, {1, 1}), make(t1, {1, -1})), make(t1, {2})) == 0.0);
  const Jet a = make(t1, {0.5, -2.0, 3.0});
  CHECK(max_diff(jet_add(Jet(t1), a), a) == 0.0);
  CHECK(max_diff(jet_add(make(t1, {0, 0, 1}), make(t1, {0, 1, 0})), make(t1, {0, 1, 1})) == 0.0);
}

TEST_CASE("jet_mul") {
  const auto t1 = MultiIndexTable::make(1, 2);
  CHECK(max_diff(jet_mul(make(t1, {1, 1}), make(t1, {1, 1})), make(t1, {1, 2, 1})) == 0.0);
  const Jet a = make(t1, {0.5, -2.0, 3.0});
  CHECK(max_diff(jet_mul(a, Jet::constant(t1, 1.0)), a) == 0.0);

  // (1 + x + y)(1 - x) over {1, x, y, x^2, xy, y^2}
  const auto t2 = MultiIndexTable::make(2, 2);
  const Jet prod = jet_mul(make(t2, {1, 1, 1}), make(t2, {1, -1, 0}));
  CHECK(max_diff(prod, make(t2, {1, 0, 1, -1, -1, 0})) == 0.0);
}

TEST_CASE("jet_exp") {
  const auto t3 = MultiIndexTable::make(1, 3);
  CHECK(max_diff(jet_exp(Jet(t3)), Jet::constant(t3, 1.0)) == 0.0);
  CHECK(max_diff(jet_exp(make(t3, {0, 1})), make(t3, {1, 1, 0.5, 1.0 / 6.0})) < 1e-15);
  const auto t2 = MultiIndexTable::make(1, 2);
  CHECK(max_diff(jet_exp(make(t2, {0, 1, 1})), make(t2, {1, 1, 1.5})) < 1e-15);
  // nonzero constant term
  CHECK(max_diff(jet_exp(make(t3, {1, 1})), make(t3, {1, 1, 0.5, 1.0 / 6.0}) * std::exp(1.0)) < 1e-14);
}

TEST_CASE("jet_int_pow") {
  const auto t3 = MultiIndexTable::make(1, 3);
  CHECK(max_diff(jet_int_pow(make(t3, {0, 1}), 3), make(t3, {0, 0, 0, 1})) == 0.0);
  const Jet a = make(t3, {0.3, -1.0, 2.0, 0.25});
  CHECK(max_diff(jet_int_pow(a, 0), Jet::constant(t3, 1.0)) == 0.0);
  const auto t2 = MultiIndexTable::make(1, 2);
  CHECK(max_diff(jet_int_pow(make(t2, {1, 1}), 4), make(t2, {1, 4, 6})) == 0.0);
}

TEST_CASE("mismatched tables are rejected") {
  const auto a = MultiIndexTable::make(1, 2);
  const auto b = MultiIndexTable::make(1, 3);
  const auto c = MultiIndexTable::make(2, 2);
  CHECK_THROWS_AS(jet_add(Jet(a), Jet(b)), DimensionError);
  CHECK_THROWS_AS(jet_mul(Jet(a), Jet(c)), DimensionError);
}

TEST_CASE("ring axioms hold at truncation order") {
  testing::Gen gen(11);
  for (int trial = 0; trial < 40; ++trial) {
    const auto t = MultiIndexTable::make(gen.integer(1, 3), gen.integer(0, 5));
    const Jet a = random_jet(gen, t);
    const Jet b = random_jet(gen, t);
    const Jet c = random_jet(gen, t);
    CHECK(max_diff(a * b, b * a) < 1e-13);
    CHECK(max_diff((a * b) * c, a * (b * c)) < 1e-13);
    CHECK(max_diff(a * (b + c), a * b + a * c) < 1e-13);
    CHECK(max_diff(a + b, b + a) == 0.0);
  }
}

TEST_CASE("exp turns sums into products") {
  testing::Gen gen(12);
  for (int trial = 0; trial < 40; ++trial) {
    const auto t = MultiIndexTable::make(gen.integer(1, 3), gen.integer(0, 5));
    const Jet a = random_jet(gen, t);
    const Jet b = random_jet(gen, t);
    CHECK(max_diff(jet_exp(a + b), jet_exp(a) * jet_exp(b)) < 1e-12);
  }
}

TEST_CASE("integer power equals repeated multiplication") {
  testing::Gen gen(13);
  for (int trial = 0; trial < 30; ++trial) {
    const auto t = MultiIndexTable::make(gen.integer(1, 3), gen.integer(0, 5));
    const Jet a = random_jet(gen, t);
    const unsigned k = static_cast<unsigned>(gen.integer(0, 7));
    Jet repeated = Jet::constant(t, 1.0);
    for (unsigned i = 0; i < k; ++i) repeated = repeated * a;
    CHECK(max_diff(jet_int_pow(a, k), repeated) < 1e-12);
  }
}

TEST_CASE("high-degree coefficients never leak into lower ones") {
  testing::Gen gen(14);
  const auto t = MultiIndexTable::make(2, 4);
  const Jet a = random_jet(gen, t);
  const Jet b = random_jet(gen, t);
  Jet a2 = a;
  for (std::size_t i = 0; i < a2.size(); ++i) {
    if (t->degree(i) == 4) a2[i] += 10.0;
  }
  const Jet p1 = a * b;
  const Jet p2 = a2 * b;
  const Jet e1 = jet_exp(a);
  const Jet e2 = jet_exp(a2);
  for (std::size_t i = 0; i < t->count_up_to(3); ++i) {
    CHECK(p1[i] == p2[i]);
    CHECK(e1[i] == e2[i]);
  }
}

TEST_CASE("trigonometric and reciprocal jets") {
  testing::Gen gen(15);
  const auto t = MultiIndexTable::make(2, 5);
  const Jet a = random_jet(gen, t);
  const Jet s = jet_sin(a);
  const Jet c = jet_cos(a);
  CHECK(max_diff(s * s + c * c, Jet::constant(t, 1.0)) < 1e-12);
  Jet shifted = a;
  shifted[0] += 2.0;
  CHECK(max_diff(shifted * jet_reciprocal(shifted), Jet::constant(t, 1.0)) < 1e-12);
  Jet nil = a;
  nil[0] = 0.0;
  CHECK_THROWS_AS(jet_reciprocal(nil), DomainError);

  const auto t1 = MultiIndexTable::make(1, 5);
  const Jet x = Jet::variable(t1, 0, 0.0);
  const Jet sx = jet_sin(x);
  const double expected[] = {0, 1, 0, -1.0 / 6.0, 0, 1.0 / 120.0};
  for (int k = 0; k <= 5; ++k) CHECK(std::abs(sx[k] - expected[k]) < 1e-15);
}

TEST_CASE("evaluate and derivative agree with the polynomial") {
  const auto t = MultiIndexTable::make(2, 3);
  // 1 + 2x - y + x*y + 0.5 y^3
  Jet a(t);
  a[0] = 1.0;
  a[1] = 2.0;
  a[2] = -1.0;
  a[*t->index_of({1, 1})] = 1.0;
  a[*t->index_of({0, 3})] = 0.5;
  ComplexVector dz(2);
  dz << cplx(0.2, 0.1), cplx(-0.3, 0.05);
  const cplx x = dz[0];
  const cplx y = dz[1];
  CHECK(std::abs(a.evaluate(dz) - (1.0 + 2.0 * x - y + x * y + 0.5 * y * y * y)) < 1e-15);
  const Jet dy = a.derivative(1);
  CHECK(std::abs(dy.evaluate(dz) - (-1.0 + x + 1.5 * y * y)) < 1e-15);
}
