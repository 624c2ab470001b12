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

#include "jetflow/jet.hpp"

#include <stdexcept>

#include "jetflow/errors.hpp"

namespace jetflow {

namespace {

void require_same_table(const Jet& a, const Jet& b) {
  if (a.table_ptr() != b.table_ptr() && !a.table().same_shape(b.table())) {
    throw DimensionError("jet operands live on different multi-index tables");
  }
}

// Nilpotent part h = a - a_0.
Jet nilpotent_part(const Jet& a) {
  Jet h = a;
  h[0] = 0.0;
  return h;
}

// sum_{k=0}^{order} coeff(k) h^k for nilpotent h, by Horner's scheme.
template <typename CoeffFn>
Jet nilpotent_series(const Jet& h, CoeffFn coeff) {
  const int order = h.order();
  Jet acc = Jet::constant(h.table_ptr(), coeff(order));
  for (int k = order - 1; k >= 0; --k) {
    acc = jet_mul(acc, h);
    acc[0] += coeff(k);
  }
  return acc;
}

}  // namespace

Jet::Jet(TablePtr table) : table_(std::move(table)), coeffs_(table_->size()) {}

Jet::Jet(TablePtr table, std::vector<cplx> coeffs)
    : table_(std::move(table)), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != table_->size()) {
    throw DimensionError("jet coefficient count does not match its table");
  }
}

Jet Jet::constant(TablePtr table, cplx value) {
  Jet out(std::move(table));
  out.coeffs_[0] = value;
  return out;
}

Jet Jet::variable(TablePtr table, int coordinate, cplx center) {
  if (coordinate < 0 || coordinate >= table->dim()) {
    throw DimensionError("jet variable index out of range");
  }
  Jet out(std::move(table));
  out.coeffs_[0] = center;
  if (out.order() >= 1) out.coeffs_[1 + coordinate] = 1.0;
  return out;
}

cplx Jet::coefficient(const MultiIndex& alpha) const {
  auto index = table_->index_of(alpha);
  return index ? coeffs_[*index] : cplx{0.0};
}

cplx Jet::evaluate(const ComplexVector& dz) const {
  if (dz.size() != dim()) throw DimensionError("jet evaluation point has wrong dimension");
  cplx total = 0.0;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == cplx{0.0}) continue;
    cplx term = coeffs_[i];
    const MultiIndex& alpha = (*table_)[i];
    for (int c = 0; c < dim(); ++c) {
      for (int e = 0; e < alpha[c]; ++e) term *= dz[c];
    }
    total += term;
  }
  return total;
}

Jet Jet::derivative(int coordinate) const {
  Jet out(table_);
  MultiIndex lowered;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const MultiIndex& alpha = (*table_)[i];
    if (alpha[coordinate] == 0) continue;
    lowered = alpha;
    --lowered[coordinate];
    out.coeffs_[*table_->index_of(lowered)] += static_cast<double>(alpha[coordinate]) * coeffs_[i];
  }
  return out;
}

Jet& Jet::operator+=(const Jet& rhs) {
  require_same_table(*this, rhs);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  return *this;
}

Jet& Jet::operator-=(const Jet& rhs) {
  require_same_table(*this, rhs);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  return *this;
}

Jet& Jet::operator*=(cplx s) {
  for (auto& c : coeffs_) c *= s;
  return *this;
}

Jet operator+(Jet a, const Jet& b) { return a += b; }
Jet operator-(Jet a, const Jet& b) { return a -= b; }
Jet operator-(Jet a) { return a *= -1.0; }
Jet operator*(Jet a, cplx s) { return a *= s; }
Jet operator*(cplx s, Jet a) { return a *= s; }
Jet operator*(const Jet& a, const Jet& b) { return jet_mul(a, b); }

Jet jet_add(const Jet& a, const Jet& b) { return a + b; }

Jet jet_mul(const Jet& a, const Jet& b) {
  require_same_table(a, b);
  std::vector<cplx> out(a.size());
  const auto& ca = a.coeffs();
  const auto& cb = b.coeffs();
  for (const auto& prod : a.table().products()) {
    out[prod.out] += ca[prod.lhs] * cb[prod.rhs];
  }
  return Jet(a.table_ptr(), std::move(out));
}

Jet jet_int_pow(const Jet& a, unsigned k) {
  Jet result = Jet::constant(a.table_ptr(), 1.0);
  Jet base = a;
  while (k > 0) {
    if (k & 1u) result = jet_mul(result, base);
    k >>= 1u;
    if (k > 0) base = jet_mul(base, base);
  }
  return result;
}

Jet jet_exp(const Jet& a) {
  const Jet h = nilpotent_part(a);
  std::vector<double> inv_fact(a.order() + 1, 1.0);
  for (int k = 1; k <= a.order(); ++k) inv_fact[k] = inv_fact[k - 1] / k;
  Jet series = nilpotent_series(h, [&](int k) { return cplx{inv_fact[k]}; });
  return series * std::exp(a.constant_term());
}

namespace {

struct TrigSeries {
  Jet cos_h;
  Jet sin_h;
};

// cos(h) and sin(h) for the nilpotent part h of a.
TrigSeries trig_of_nilpotent(const Jet& a) {
  const Jet h = nilpotent_part(a);
  std::vector<double> inv_fact(a.order() + 1, 1.0);
  for (int k = 1; k <= a.order(); ++k) inv_fact[k] = inv_fact[k - 1] / k;
  auto cos_coeff = [&](int k) {
    if (k % 2) return cplx{0.0};
    return cplx{(k / 2) % 2 ? -inv_fact[k] : inv_fact[k]};
  };
  auto sin_coeff = [&](int k) {
    if (k % 2 == 0) return cplx{0.0};
    return cplx{((k - 1) / 2) % 2 ? -inv_fact[k] : inv_fact[k]};
  };
  return {nilpotent_series(h, cos_coeff), nilpotent_series(h, sin_coeff)};
}

}  // namespace

Jet jet_sin(const Jet& a) {
  const auto [c, s] = trig_of_nilpotent(a);
  const cplx a0 = a.constant_term();
  return std::sin(a0) * c + std::cos(a0) * s;
}

Jet jet_cos(const Jet& a) {
  const auto [c, s] = trig_of_nilpotent(a);
  const cplx a0 = a.constant_term();
  return std::cos(a0) * c - std::sin(a0) * s;
}

Jet jet_reciprocal(const Jet& a) {
  const cplx a0 = a.constant_term();
  if (a0 == cplx{0.0}) {
    throw DomainError("division by a series that vanishes at the expansion point");
  }
  // 1/(a0 + h) = (1/a0) sum_k (-h/a0)^k.
  const Jet h = nilpotent_part(a) * (-1.0 / a0);
  return nilpotent_series(h, [](int) { return cplx{1.0}; }) * (1.0 / a0);
}

}  // namespace jetflow
