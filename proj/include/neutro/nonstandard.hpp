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

#ifndef NEUTRO_NONSTANDARD_HPP
#define NEUTRO_NONSTANDARD_HPP

#include <array>
#include <ostream>
#include <string>
#include <string_view>

#include "neutro/real.hpp"

namespace neutro {

/// Decoration of a standard point a:
///   Std     - a itself
///   Left    - left monad, a minus any positive infinitesimal
///   Right   - right monad, a plus any positive infinitesimal
///   Bimonad - union of the left and right monads, a excluded
enum class MonadKind { Std, Left, Right, Bimonad };

inline constexpr std::array<MonadKind, 4> kAllKinds = {MonadKind::Std, MonadKind::Left,
                                                      MonadKind::Right, MonadKind::Bimonad};

/// Lower-case name: "std", "left", "right", "bimonad".
std::string_view kind_name(MonadKind kind);

/// Accepts the lower-case names and the single-letter tags S, L, R, B.
MonadKind parse_kind(std::string_view text);

/// A finite standard magnitude carrying a monad decoration. No infinite
/// numbers are representable. Two NsNumbers are identical iff value and kind
/// both match; that is operator==, and it coincides with equal_ns.
class NsNumber {
 public:
  NsNumber() = default;
  NsNumber(Real value, MonadKind kind = MonadKind::Std) : value_(std::move(value)), kind_(kind) {}

  static NsNumber std_(Real v) { return {std::move(v), MonadKind::Std}; }
  static NsNumber left(Real v) { return {std::move(v), MonadKind::Left}; }
  static NsNumber right(Real v) { return {std::move(v), MonadKind::Right}; }
  static NsNumber bimonad(Real v) { return {std::move(v), MonadKind::Bimonad}; }

  const Real& value() const noexcept { return value_; }
  MonadKind kind() const noexcept { return kind_; }
  bool is_standard() const noexcept { return kind_ == MonadKind::Std; }

  friend bool operator==(const NsNumber&, const NsNumber&) = default;

 private:
  Real value_{0};
  MonadKind kind_ = MonadKind::Std;
};

/// Formula notation: "0.8", "L(0.8)", "R(1)", "B(0.5)".
std::string to_string(const NsNumber& x);
std::ostream& operator<<(std::ostream& os, const NsNumber& x);

/// Parses the formula notation produced by to_string.
NsNumber parse_ns_number(std::string_view text);

/// Outcome of a neutrosophic comparison. LeN/GeN are the non-strict-only
/// relations (neither strict order nor equality is asserted).
enum class OrderRelation { LtN, LeN, EqN, GeN, GtN, Incomparable };

/// "<N", "≤N", "=N", "≥N", ">N", "incomparable".
std::string_view relation_symbol(OrderRelation r);

/// Stable ASCII identifier: "lt", "le", "eq", "ge", "gt", "incomparable".
std::string_view relation_name(OrderRelation r);

OrderRelation mirror(OrderRelation r);

/// True for LtN, LeN, EqN.
bool is_at_most(OrderRelation r);
/// True for GtN, GeN, EqN.
bool is_at_least(OrderRelation r);

/// Total neutrosophic comparison.
///
/// Different values decide by value alone, for all 16 kind pairs. At equal
/// values:
///   same kind                       -> EqN
///   Left < Std < Right              -> LtN (strict chain)
///   Left <= Bimonad <= Right        -> LeN (non-strict only)
///   Std vs Bimonad                  -> Incomparable
/// Swapped operands give the mirrored relation.
OrderRelation compare_ns(const NsNumber& x, const NsNumber& y);

/// Neutrosophic equality: same value and same kind.
bool equal_ns(const NsNumber& x, const NsNumber& y);

/// Imamura's infinitely-close relation: equal standard parts, any kinds.
bool infinitely_close(const NsNumber& x, const NsNumber& y);

/// Imamura's rough order: x.value < y.value, or infinitely close.
bool roughly_leq(const NsNumber& x, const NsNumber& y);

/// The <=_N-smaller operand. For a LeN pair this is the left-hand side of
/// the non-strict relation; for EqN it is x.
/// Throws IncomparableOperands for Std vs Bimonad at equal value.
NsNumber min_ns(const NsNumber& x, const NsNumber& y);

/// Dual of min_ns. For EqN returns x.
NsNumber max_ns(const NsNumber& x, const NsNumber& y);

/// Sum of values; kinds combine as Std identity, L+L=L, R+R=R, L+R=B and
/// Bimonad absorbing every non-Std kind.
NsNumber add_ns(const NsNumber& x, const NsNumber& y);

/// Multiplies the value by a positive standard factor, keeping the kind.
/// Throws InvalidArgument when factor <= 0.
NsNumber scale_ns(const NsNumber& x, const Real& factor);

}  // namespace neutro

#endif  // NEUTRO_NONSTANDARD_HPP
