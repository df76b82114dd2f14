//  Copyright 2026 The neutro Authors
//
//  Licensed under the Apache License, Version 2.0 (the "License");
//  you may not use this file except in compliance with the License.
//  You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
//  Unless required by applicable law or agreed to in writing, software
//  distributed under the License is distributed on an "AS IS" BASIS,
//  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//  See the License for the specific language governing permissions and
//  limitations under the License.

// Formula language over neutrosophic triples.
//
//   formula := impl
//   impl    := disj ( "->" impl )?            right associative
//   disj    := conj ( "|" conj )*
//   conj    := unary ( "&" unary )*
//   unary   := "!" unary | atom
//   atom    := triple | ident | "(" formula ")"
//   triple  := "<" comp "," comp "," comp ">"
//   comp    := nsnum | "[" nsnum "," nsnum "]" | "{" member ( "," member )* "}"
//   member  := nsnum | "[" nsnum "," nsnum "]"
//   nsnum   := number | "L(" number ")" | "R(" number ")" | "B(" number ")"
//
// Whitespace is insignificant. The Unicode operators U+2227, U+2228, U+2192
// and U+00AC are accepted as aliases of &, |, -> and !; output always uses
// the ASCII forms. Plain numbers give single-valued, interval-valued or
// hesitant components; any L/R/B decoration makes the whole triple
// nonstandard.

#ifndef NEUTRO_FORMULA_HPP
#define NEUTRO_FORMULA_HPP

#include <map>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "neutro/connectives.hpp"
#include "neutro/values.hpp"

namespace neutro {

class Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

enum class BinaryOp { And, Or, Implies };

/// Immutable syntax tree node.
class Formula {
 public:
  struct Literal {
    NeutroTriple value;
  };
  struct Variable {
    std::string name;
  };
  struct Negation {
    FormulaPtr operand;
  };
  struct Binary {
    BinaryOp op;
    FormulaPtr lhs;
    FormulaPtr rhs;
  };
  using Node = std::variant<Literal, Variable, Negation, Binary>;

  explicit Formula(Node node) : node_(std::move(node)) {}

  static FormulaPtr literal(NeutroTriple value);
  static FormulaPtr variable(std::string name);
  static FormulaPtr negation(FormulaPtr operand);
  static FormulaPtr binary(BinaryOp op, FormulaPtr lhs, FormulaPtr rhs);

  const Node& node() const noexcept { return node_; }

 private:
  Node node_;
};

/// Structural equality of two trees.
bool same_structure(const Formula& a, const Formula& b);

/// Identifiers appearing in the formula.
std::set<std::string> free_identifiers(const Formula& f);

/// Throws SyntaxError or ArityError; component invariant violations (e.g.
/// "[0.6,0.3]") throw InvalidArgument, mixed shapes ShapeMismatch.
FormulaPtr parse(std::string_view text);

/// Parses a single triple literal such as "<0.6,0.2,0.5>".
NeutroTriple parse_triple(std::string_view text);

/// Parses a single component such as "0.4", "[0.1,0.2]" or "R(1)".
NeutroComponent parse_component(std::string_view text);

/// ASCII rendering with the minimum parentheses needed to re-parse into
/// the same tree.
std::string to_string(const Formula& f);

/// Thrown when an input value falls outside the active offset bounds.
class OutOfBounds : public Error {
 public:
  using Error::Error;
};

struct EvalRequest {
  std::string formula;
  OperatorConfig config;
  Scale scale = Scale::Unit;
  OffsetBounds bounds = OffsetBounds::unit();
  std::map<std::string, NeutroTriple> bindings;
};

struct EvalResult {
  NeutroTriple value;
  OperatorConfig config;
  Scale scale;
  OffsetBounds bounds;
  std::vector<std::string> warnings;
};

/// Parses and evaluates bottom-up. Literal and bound values are read in the
/// request's scale (percent values are divided by 100), checked against the
/// offset bounds, combined, and reported back in the same scale.
///
/// Throws the parse errors, UnboundIdentifier, OutOfBounds, ShapeMismatch and
/// UnsupportedNonstandardConfig.
EvalResult evaluate(const EvalRequest& req);

/// Evaluates an already parsed tree on unit-scale values.
NeutroTriple evaluate(const Formula& f, const std::map<std::string, NeutroTriple>& bindings,
                      const OperatorConfig& cfg, Diagnostics* diag = nullptr);

std::string_view scale_name(Scale scale);
Scale parse_scale(std::string_view text);

/// Multiplies every value of the triple by a positive factor.
NeutroTriple scale_triple(const NeutroTriple& x, const Real& factor);

}  // namespace neutro

#endif  // NEUTRO_FORMULA_HPP
