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

#include "jetflow/map_expr.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <sstream>

#include "jetflow/errors.hpp"

namespace jetflow {

namespace {

using Kind = ExprNode::Kind;

ExprPtr make_node(Kind kind, ExprPtr lhs = nullptr, ExprPtr rhs = nullptr) {
  auto node = std::make_shared<ExprNode>();
  node->kind = kind;
  node->lhs = std::move(lhs);
  node->rhs = std::move(rhs);
  return node;
}

ExprPtr make_constant(double v) {
  auto node = std::make_shared<ExprNode>();
  node->kind = Kind::kConstant;
  node->value = v;
  return node;
}

ExprPtr make_variable(int index) {
  auto node = std::make_shared<ExprNode>();
  node->kind = Kind::kVariable;
  node->index = index;
  return node;
}

ExprPtr make_pow(ExprPtr base, int exponent) {
  auto node = std::make_shared<ExprNode>();
  node->kind = Kind::kPow;
  node->index = exponent;
  node->lhs = std::move(base);
  return node;
}

class Parser {
 public:
  Parser(std::string_view text, int input_dim) : text_(text), input_dim_(input_dim) {}

  std::vector<ExprPtr> parse_map() {
    std::vector<ExprPtr> out;
    out.push_back(parse_expr());
    skip_ws();
    while (peek() == ';') {
      ++pos_;
      out.push_back(parse_expr());
      skip_ws();
    }
    if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return out;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  ExprPtr parse_expr() {
    ExprPtr lhs = parse_term();
    for (char c = peek(); c == '+' || c == '-'; c = peek()) {
      ++pos_;
      ExprPtr rhs = parse_term();
      lhs = make_node(c == '+' ? Kind::kAdd : Kind::kSub, lhs, rhs);
    }
    return lhs;
  }

  ExprPtr parse_term() {
    ExprPtr lhs = parse_factor();
    for (char c = peek(); c == '*' || c == '/'; c = peek()) {
      ++pos_;
      ExprPtr rhs = parse_factor();
      lhs = make_node(c == '*' ? Kind::kMul : Kind::kDiv, lhs, rhs);
    }
    return lhs;
  }

  ExprPtr parse_factor() {
    const char sign = peek();
    if (sign == '-' || sign == '+') ++pos_;
    ExprPtr base = parse_atom();
    if (peek() == '^') {
      ++pos_;
      skip_ws();
      base = make_pow(base, parse_int("exponent"));
    }
    return sign == '-' ? make_node(Kind::kNeg, base) : base;
  }

  int parse_int(const char* what) {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) {
      pos_ = start;
      fail(std::string("expected integer ") + what);
    }
    int value = 0;
    auto [ptr, ec] = std::from_chars(text_.data() + start, text_.data() + pos_, value);
    if (ec != std::errc()) {
      pos_ = start;
      fail(std::string("integer ") + what + " out of range");
    }
    return value;
  }

  ExprPtr parse_number() {
    const std::size_t start = pos_;
    auto digits = [&] {
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    };
    digits();
    if (pos_ < text_.size() && text_[pos_] == '.') {
      ++pos_;
      digits();
    }
    if (pos_ < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
      std::size_t save = pos_++;
      if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) ++pos_;
      const std::size_t exp_start = pos_;
      digits();
      if (exp_start == pos_) pos_ = save;
    }
    const std::string token(text_.substr(start, pos_ - start));
    if (token == ".") {
      pos_ = start;
      fail("malformed number");
    }
    return make_constant(std::strtod(token.c_str(), nullptr));
  }

  ExprPtr parse_atom() {
    const char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return parse_number();
    if (c == '(') {
      ++pos_;
      ExprPtr inner = parse_expr();
      expect(')');
      return inner;
    }
    if (c == 'z') {
      const std::size_t at = pos_;
      ++pos_;
      const int index = parse_int("variable index");
      if (index < 1 || index > input_dim_) {
        pos_ = at;
        fail("variable z" + std::to_string(index) + " out of range for dimension " +
             std::to_string(input_dim_));
      }
      return make_variable(index - 1);
    }
    for (const auto& [name, kind] : {std::pair{"exp", Kind::kExp}, std::pair{"sin", Kind::kSin},
                                     std::pair{"cos", Kind::kCos}}) {
      if (text_.substr(pos_, 3) == name) {
        pos_ += 3;
        expect('(');
        ExprPtr inner = parse_expr();
        expect(')');
        return make_node(kind, inner);
      }
    }
    if (c == '\0') fail("unexpected end of input");
    fail(std::string("unexpected character '") + c + "'");
  }

  std::string_view text_;
  int input_dim_;
  std::size_t pos_ = 0;
};

cplx eval_node(const ExprNode& node, const ComplexVector& z) {
  switch (node.kind) {
    case Kind::kConstant:
      return node.value;
    case Kind::kVariable:
      return z[node.index];
    case Kind::kAdd:
      return eval_node(*node.lhs, z) + eval_node(*node.rhs, z);
    case Kind::kSub:
      return eval_node(*node.lhs, z) - eval_node(*node.rhs, z);
    case Kind::kMul:
      return eval_node(*node.lhs, z) * eval_node(*node.rhs, z);
    case Kind::kDiv: {
      const cplx den = eval_node(*node.rhs, z);
      if (den == cplx{0.0}) throw DomainError("division by zero while evaluating map");
      return eval_node(*node.lhs, z) / den;
    }
    case Kind::kNeg:
      return -eval_node(*node.lhs, z);
    case Kind::kPow:
      return ipow(eval_node(*node.lhs, z), node.index);
    case Kind::kExp:
      return std::exp(eval_node(*node.lhs, z));
    case Kind::kSin:
      return std::sin(eval_node(*node.lhs, z));
    case Kind::kCos:
      return std::cos(eval_node(*node.lhs, z));
  }
  return 0.0;
}

Jet jet_node(const ExprNode& node, const std::vector<Jet>& inputs) {
  const auto& table = inputs.front().table_ptr();
  switch (node.kind) {
    case Kind::kConstant:
      return Jet::constant(table, node.value);
    case Kind::kVariable:
      return inputs[node.index];
    case Kind::kAdd:
      return jet_node(*node.lhs, inputs) + jet_node(*node.rhs, inputs);
    case Kind::kSub:
      return jet_node(*node.lhs, inputs) - jet_node(*node.rhs, inputs);
    case Kind::kMul:
      return jet_mul(jet_node(*node.lhs, inputs), jet_node(*node.rhs, inputs));
    case Kind::kDiv:
      return jet_mul(jet_node(*node.lhs, inputs), jet_reciprocal(jet_node(*node.rhs, inputs)));
    case Kind::kNeg:
      return -jet_node(*node.lhs, inputs);
    case Kind::kPow:
      return jet_int_pow(jet_node(*node.lhs, inputs), static_cast<unsigned>(node.index));
    case Kind::kExp:
      return jet_exp(jet_node(*node.lhs, inputs));
    case Kind::kSin:
      return jet_sin(jet_node(*node.lhs, inputs));
    case Kind::kCos:
      return jet_cos(jet_node(*node.lhs, inputs));
  }
  return Jet(table);
}

ExprPtr substitute(const ExprPtr& node, const std::vector<ExprPtr>& replacement) {
  switch (node->kind) {
    case Kind::kConstant:
      return node;
    case Kind::kVariable:
      return replacement[node->index];
    case Kind::kPow:
      return make_pow(substitute(node->lhs, replacement), node->index);
    default: {
      ExprPtr lhs = node->lhs ? substitute(node->lhs, replacement) : nullptr;
      ExprPtr rhs = node->rhs ? substitute(node->rhs, replacement) : nullptr;
      return make_node(node->kind, lhs, rhs);
    }
  }
}

void print_node(const ExprNode& node, std::ostringstream& os) {
  auto binary = [&](const char* op) {
    os << '(';
    print_node(*node.lhs, os);
    os << op;
    print_node(*node.rhs, os);
    os << ')';
  };
  auto unary = [&](const char* fn) {
    os << fn << '(';
    print_node(*node.lhs, os);
    os << ')';
  };
  switch (node.kind) {
    case Kind::kConstant:
      if (node.value < 0) {
        os << "(0-" << -node.value << ')';
      } else {
        os << node.value;
      }
      break;
    case Kind::kVariable:
      os << 'z' << node.index + 1;
      break;
    case Kind::kAdd: binary("+"); break;
    case Kind::kSub: binary("-"); break;
    case Kind::kMul: binary("*"); break;
    case Kind::kDiv: binary("/"); break;
    case Kind::kNeg: unary("-"); break;
    case Kind::kPow:
      os << '(';
      print_node(*node.lhs, os);
      os << ")^" << node.index;
      break;
    case Kind::kExp: unary("exp"); break;
    case Kind::kSin: unary("sin"); break;
    case Kind::kCos: unary("cos"); break;
  }
}

void check_variables(const ExprNode& node, int input_dim) {
  if (node.kind == Kind::kVariable && (node.index < 0 || node.index >= input_dim)) {
    throw DimensionError("expression references a variable beyond the input dimension");
  }
  if (node.lhs) check_variables(*node.lhs, input_dim);
  if (node.rhs) check_variables(*node.rhs, input_dim);
}

}  // namespace

MapExpr::MapExpr(int input_dim, std::vector<ExprPtr> components)
    : input_dim_(input_dim), components_(std::move(components)) {
  if (input_dim_ < 1) throw DimensionError("map input dimension must be positive");
  if (components_.empty()) throw DimensionError("map needs at least one component");
  for (const auto& c : components_) check_variables(*c, input_dim_);
}

MapExpr MapExpr::parse(std::string_view text, int input_dim, int output_dim) {
  if (input_dim < 1 || output_dim < 1) throw DimensionError("map dimensions must be positive");
  auto components = Parser(text, input_dim).parse_map();
  if (static_cast<int>(components.size()) != output_dim) {
    throw ParseError("expected " + std::to_string(output_dim) + " component(s), found " +
                         std::to_string(components.size()),
                     text.size());
  }
  return MapExpr(input_dim, std::move(components));
}

ComplexVector MapExpr::eval(const ComplexVector& z) const {
  if (z.size() != input_dim_) throw DimensionError("evaluation point has wrong dimension");
  ComplexVector out(output_dim());
  for (int k = 0; k < output_dim(); ++k) out[k] = eval_node(*components_[k], z);
  return out;
}

std::vector<Jet> MapExpr::jets(const ComplexVector& p, int order) const {
  if (p.size() != input_dim_) throw DimensionError("expansion point has wrong dimension");
  auto table = MultiIndexTable::make(input_dim_, order);
  std::vector<Jet> inputs;
  inputs.reserve(input_dim_);
  for (int i = 0; i < input_dim_; ++i) inputs.push_back(Jet::variable(table, i, p[i]));
  return jets(inputs);
}

std::vector<Jet> MapExpr::jets(const std::vector<Jet>& inputs) const {
  if (static_cast<int>(inputs.size()) != input_dim_) {
    throw DimensionError("jet input count does not match map input dimension");
  }
  std::vector<Jet> out;
  out.reserve(components_.size());
  for (const auto& c : components_) out.push_back(jet_node(*c, inputs));
  return out;
}

std::string MapExpr::to_string() const {
  std::ostringstream os;
  os.precision(17);
  for (std::size_t k = 0; k < components_.size(); ++k) {
    if (k) os << "; ";
    print_node(*components_[k], os);
  }
  return os.str();
}

MapExpr parse_map(std::string_view text, int d, int r) { return MapExpr::parse(text, d, r); }

ComplexVector eval_map(const MapExpr& expr, const ComplexVector& z) { return expr.eval(z); }

std::vector<Jet> jet_of_map(const MapExpr& expr, const RealVector& p, int order) {
  return expr.jets(p.cast<cplx>(), order);
}

MapExpr compose(const MapExpr& outer, const MapExpr& inner) {
  if (inner.output_dim() != outer.input_dim()) {
    throw DimensionError("cannot compose: inner output dimension differs from outer input");
  }
  std::vector<ExprPtr> out;
  out.reserve(outer.components().size());
  for (const auto& c : outer.components()) out.push_back(substitute(c, inner.components()));
  return MapExpr(inner.input_dim(), std::move(out));
}

}  // namespace jetflow
