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

#ifndef JETFLOW_MAP_EXPR_HPP_
#define JETFLOW_MAP_EXPR_HPP_

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "jetflow/jet.hpp"
#include "jetflow/types.hpp"

namespace jetflow {

// Expression tree node. Nodes are immutable and shared between trees.
struct ExprNode {
  enum class Kind { kConstant, kVariable, kAdd, kSub, kMul, kDiv, kNeg, kPow, kExp, kSin, kCos };

  Kind kind;
  double value = 0.0;  // kConstant
  int index = 0;       // kVariable: 0-based coordinate; kPow: exponent
  std::shared_ptr<const ExprNode> lhs;
  std::shared_ptr<const ExprNode> rhs;
};

using ExprPtr = std::shared_ptr<const ExprNode>;

// Analytic map C^d -> C^r given as r expression trees over z1..zd.
//
// Grammar (whitespace insignificant):
//   map    := expr (';' expr)*
//   expr   := term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := ('-'|'+')? atom ('^' INT)?
//   atom   := NUMBER | 'z' INT | '(' expr ')' | ('exp'|'sin'|'cos') '(' expr ')'
class MapExpr {
 public:
  MapExpr(int input_dim, std::vector<ExprPtr> components);

  static MapExpr parse(std::string_view text, int input_dim, int output_dim);

  int input_dim() const { return input_dim_; }
  int output_dim() const { return static_cast<int>(components_.size()); }
  const std::vector<ExprPtr>& components() const { return components_; }

  ComplexVector eval(const ComplexVector& z) const;
  ComplexVector eval(const RealVector& x) const { return eval(ComplexVector(x.cast<cplx>())); }

  // Taylor jets of every component about p, truncated at `order`.
  std::vector<Jet> jets(const ComplexVector& p, int order) const;
  std::vector<Jet> jets(const std::vector<Jet>& inputs) const;

  std::string to_string() const;

 private:
  int input_dim_;
  std::vector<ExprPtr> components_;
};

MapExpr parse_map(std::string_view text, int d, int r);
ComplexVector eval_map(const MapExpr& expr, const ComplexVector& z);
std::vector<Jet> jet_of_map(const MapExpr& expr, const RealVector& p, int order);

// outer o inner. Requires inner.output_dim() == outer.input_dim().
MapExpr compose(const MapExpr& outer, const MapExpr& inner);

}  // namespace jetflow

#endif  // JETFLOW_MAP_EXPR_HPP_
