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

#ifndef JETFLOW_JET_HPP_
#define JETFLOW_JET_HPP_

#include <memory>
#include <vector>

#include "jetflow/multiindex.hpp"
#include "jetflow/types.hpp"

namespace jetflow {

// Truncated multivariate power series sum_alpha c_alpha (z - p)^alpha with
// complex coefficients, indexed by a shared MultiIndexTable. The expansion
// point p is not stored; it is implied by whoever built the jet.
class Jet {
 public:
  using TablePtr = std::shared_ptr<const MultiIndexTable>;

  explicit Jet(TablePtr table);
  Jet(TablePtr table, std::vector<cplx> coeffs);

  static Jet constant(TablePtr table, cplx value);
  // The series of z_i about p_i: p_i + (z_i - p_i).
  static Jet variable(TablePtr table, int coordinate, cplx center);

  const MultiIndexTable& table() const { return *table_; }
  const TablePtr& table_ptr() const { return table_; }
  int dim() const { return table_->dim(); }
  int order() const { return table_->max_degree(); }
  std::size_t size() const { return coeffs_.size(); }

  const std::vector<cplx>& coeffs() const { return coeffs_; }
  cplx operator[](std::size_t i) const { return coeffs_[i]; }
  cplx& operator[](std::size_t i) { return coeffs_[i]; }
  cplx coefficient(const MultiIndex& alpha) const;
  cplx constant_term() const { return coeffs_[0]; }

  // Value of the truncated polynomial at offset dz = z - p.
  cplx evaluate(const ComplexVector& dz) const;

  // d/dz_i. The top-degree block of the result is zero (not known from the
  // data), so only degrees < order() are meaningful.
  Jet derivative(int coordinate) const;

  Jet& operator+=(const Jet& rhs);
  Jet& operator-=(const Jet& rhs);
  Jet& operator*=(cplx s);

 private:
  TablePtr table_;
  std::vector<cplx> coeffs_;
};

Jet operator+(Jet a, const Jet& b);
Jet operator-(Jet a, const Jet& b);
Jet operator-(Jet a);
Jet operator*(Jet a, cplx s);
Jet operator*(cplx s, Jet a);
Jet operator*(const Jet& a, const Jet& b);

Jet jet_add(const Jet& a, const Jet& b);
// Cauchy product truncated at the table order.
Jet jet_mul(const Jet& a, const Jet& b);
// a^k by repeated squaring; a^0 = 1.
Jet jet_int_pow(const Jet& a, unsigned k);
Jet jet_exp(const Jet& a);
Jet jet_sin(const Jet& a);
Jet jet_cos(const Jet& a);
// 1/a. Throws DomainError when the constant term vanishes.
Jet jet_reciprocal(const Jet& a);

}  // namespace jetflow

#endif  // JETFLOW_JET_HPP_
