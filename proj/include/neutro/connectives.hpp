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

#ifndef NEUTRO_CONNECTIVES_HPP
#define NEUTRO_CONNECTIVES_HPP

#include <string>
#include <string_view>
#include <vector>

#include "neutro/values.hpp"

namespace neutro {

/// Fuzzy kernel pair (t-norm, dual t-conorm):
///   MinMax       min(a, b)           max(a, b)
///   Product      a b                 a + b - a b
///   Lukasiewicz  max(0, a + b - 1)   min(1, a + b)
enum class TNormFamily { MinMax, Product, Lukasiewicz };

/// How the indeterminacy component is combined:
///   TAligned     I follows T (meet under conjunction)
///   FAligned     I follows F (join under conjunction)
///   Plithogenic  I is 0.5 (meet) + 0.5 (join), from the contradiction
///                degrees c(T,F) = 1 and c(T,I) = c(F,I) = 0.5
enum class OperatorFamily { TAligned, FAligned, Plithogenic };

struct OperatorConfig {
  OperatorFamily family = OperatorFamily::FAligned;
  TNormFamily tnorm = TNormFamily::MinMax;

  friend bool operator==(const OperatorConfig&, const OperatorConfig&) = default;
};

/// CLI spellings: "ti", "if", "plith" and "minmax", "product", "luk".
std::string_view family_name(OperatorFamily family);
std::string_view tnorm_name(TNormFamily tnorm);
OperatorFamily parse_family(std::string_view text);
TNormFamily parse_tnorm(std::string_view text);

/// Weight of the meet and of the join in the plithogenic indeterminacy blend.
inline const Real kPlithogenicWeight{Real(1) / 2};

/// Inputs outside [0, 1] are clamped first.
Real tnorm(const Real& a, const Real& b, TNormFamily k);
Real tconorm(const Real& a, const Real& b, TNormFamily k);

/// Non-fatal notes produced while combining values, e.g. offset inputs
/// that were clamped into [0, 1] before a kernel saw them.
struct Diagnostics {
  std::vector<std::string> warnings;

  void warn(std::string message);
};

/// (T, I, F) -> (F, I, T) for every shape.
NeutroTriple neg(const NeutroTriple& x);

/// Neutrosophic conjunction:
///   TAligned     (T1 ^ T2, I1 ^ I2, F1 v F2)
///   FAligned     (T1 ^ T2, I1 v I2, F1 v F2)
///   Plithogenic  (T1 ^ T2, blend(I1, I2), F1 v F2)
///
/// Interval components combine endpointwise, hesitant components over the
/// Cartesian product of their values. Nonstandard operands need the MinMax
/// kernel and no Bimonad anywhere; min_ns/max_ns stand in for min/max.
/// A Nonstandard operand lifts a standard-shaped partner.
///
/// Throws ShapeMismatch when the operand shapes differ, and
/// UnsupportedNonstandardConfig for the nonstandard restrictions above.
NeutroTriple conj(const NeutroTriple& x, const NeutroTriple& y, const OperatorConfig& cfg,
                  Diagnostics* diag = nullptr);

/// Mirror of conj: T joins, F meets, I in the family's opposite direction.
NeutroTriple disj(const NeutroTriple& x, const NeutroTriple& y, const OperatorConfig& cfg,
                  Diagnostics* diag = nullptr);

/// disj(neg(x), y) in the same family.
NeutroTriple impl(const NeutroTriple& x, const NeutroTriple& y, const OperatorConfig& cfg,
                  Diagnostics* diag = nullptr);

}  // namespace neutro

#endif  // NEUTRO_CONNECTIVES_HPP
