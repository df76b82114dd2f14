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

#include "neutro/nonstandard.hpp"

namespace neutro {

namespace {

// Relation between two kinds sitting on the same standard point.
OrderRelation compare_kinds(MonadKind x, MonadKind y) {
  using K = MonadKind;
  if (x == y) return OrderRelation::EqN;

  if (x == K::Bimonad || y == K::Bimonad) {
    const MonadKind other = x == K::Bimonad ? y : x;
    OrderRelation bimonad_vs_other;
    switch (other) {
      case K::Left:
        bimonad_vs_other = OrderRelation::GeN;
        break;
      case K::Right:
        bimonad_vs_other = OrderRelation::LeN;
        break;
      default:
        return OrderRelation::Incomparable;
    }
    return x == K::Bimonad ? bimonad_vs_other : mirror(bimonad_vs_other);
  }

  // Strict chain Left < Std < Right.
  auto rank = [](MonadKind k) {
    switch (k) {
      case MonadKind::Left: return 0;
      case MonadKind::Std: return 1;
      default: return 2;
    }
  };
  return rank(x) < rank(y) ? OrderRelation::LtN : OrderRelation::GtN;
}

}  // namespace

std::string_view kind_name(MonadKind kind) {
  switch (kind) {
    case MonadKind::Std: return "std";
    case MonadKind::Left: return "left";
    case MonadKind::Right: return "right";
    case MonadKind::Bimonad: return "bimonad";
  }
  return "std";
}

MonadKind parse_kind(std::string_view text) {
  if (text == "std" || text == "S" || text == "s") return MonadKind::Std;
  if (text == "left" || text == "L" || text == "l") return MonadKind::Left;
  if (text == "right" || text == "R" || text == "r") return MonadKind::Right;
  if (text == "bimonad" || text == "B" || text == "b") return MonadKind::Bimonad;
  throw InvalidArgument("unknown monad kind '" + std::string(text) + "'");
}

std::string to_string(const NsNumber& x) {
  const std::string v = to_decimal_string(x.value());
  switch (x.kind()) {
    case MonadKind::Left: return "L(" + v + ")";
    case MonadKind::Right: return "R(" + v + ")";
    case MonadKind::Bimonad: return "B(" + v + ")";
    default: return v;
  }
}

std::ostream& operator<<(std::ostream& os, const NsNumber& x) { return os << to_string(x); }

NsNumber parse_ns_number(std::string_view text) {
  if (text.size() >= 3 && text[1] == '(' && text.back() == ')') {
    const MonadKind kind = parse_kind(text.substr(0, 1));
    return {parse_decimal(text.substr(2, text.size() - 3)), kind};
  }
  return NsNumber::std_(parse_decimal(text));
}

std::string_view relation_symbol(OrderRelation r) {
  switch (r) {
    case OrderRelation::LtN: return "<N";
    case OrderRelation::LeN: return "≤N";
    case OrderRelation::EqN: return "=N";
    case OrderRelation::GeN: return "≥N";
    case OrderRelation::GtN: return ">N";
    case OrderRelation::Incomparable: return "incomparable";
  }
  return "incomparable";
}

std::string_view relation_name(OrderRelation r) {
  switch (r) {
    case OrderRelation::LtN: return "lt";
    case OrderRelation::LeN: return "le";
    case OrderRelation::EqN: return "eq";
    case OrderRelation::GeN: return "ge";
    case OrderRelation::GtN: return "gt";
    case OrderRelation::Incomparable: return "incomparable";
  }
  return "incomparable";
}

OrderRelation mirror(OrderRelation r) {
  switch (r) {
    case OrderRelation::LtN: return OrderRelation::GtN;
    case OrderRelation::LeN: return OrderRelation::GeN;
    case OrderRelation::GeN: return OrderRelation::LeN;
    case OrderRelation::GtN: return OrderRelation::LtN;
    default: return r;
  }
}

bool is_at_most(OrderRelation r) {
  return r == OrderRelation::LtN || r == OrderRelation::LeN || r == OrderRelation::EqN;
}

bool is_at_least(OrderRelation r) {
  return r == OrderRelation::GtN || r == OrderRelation::GeN || r == OrderRelation::EqN;
}

OrderRelation compare_ns(const NsNumber& x, const NsNumber& y) {
  if (x.value() < y.value()) return OrderRelation::LtN;
  if (x.value() > y.value()) return OrderRelation::GtN;
  return compare_kinds(x.kind(), y.kind());
}

bool equal_ns(const NsNumber& x, const NsNumber& y) { return x == y; }

bool infinitely_close(const NsNumber& x, const NsNumber& y) { return x.value() == y.value(); }

bool roughly_leq(const NsNumber& x, const NsNumber& y) {
  return x.value() < y.value() || infinitely_close(x, y);
}

NsNumber min_ns(const NsNumber& x, const NsNumber& y) {
  const OrderRelation r = compare_ns(x, y);
  if (r == OrderRelation::Incomparable) {
    throw IncomparableOperands("min_ns: " + to_string(x) + " and " + to_string(y) +
                               " have no neutrosophic order");
  }
  return is_at_most(r) ? x : y;
}

NsNumber max_ns(const NsNumber& x, const NsNumber& y) {
  const OrderRelation r = compare_ns(x, y);
  if (r == OrderRelation::Incomparable) {
    throw IncomparableOperands("max_ns: " + to_string(x) + " and " + to_string(y) +
                               " have no neutrosophic order");
  }
  return is_at_least(r) ? x : y;
}

NsNumber add_ns(const NsNumber& x, const NsNumber& y) {
  Real sum = x.value() + y.value();
  if (x.is_standard()) return {std::move(sum), y.kind()};
  if (y.is_standard()) return {std::move(sum), x.kind()};
  if (x.kind() == y.kind()) return {std::move(sum), x.kind()};
  return NsNumber::bimonad(std::move(sum));
}

NsNumber scale_ns(const NsNumber& x, const Real& factor) {
  if (factor <= 0) {
    throw InvalidArgument("scale_ns: factor must be positive");
  }
  return {x.value() * factor, x.kind()};
}

}  // namespace neutro
