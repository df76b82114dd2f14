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

#include "neutro/intervals.hpp"

#include <algorithm>

namespace neutro {

namespace {

enum class Bound { Lower, Upper };

// A bound of the set must sit at the extreme standard value: anything
// strictly past it is on the wrong side of that element. At the extreme
// value we pick, among the four kinds that bound every element, the one
// that dominates the others. Left (for Lower) always bounds, so the
// candidate list is never empty.
NsNumber extreme_bound(std::span<const NsNumber> elements, Bound which) {
  if (elements.empty()) {
    throw EmptySet(which == Bound::Lower ? "inf_ns_set of an empty set"
                                         : "sup_ns_set of an empty set");
  }
  auto by_value = [](const NsNumber& x, const NsNumber& y) { return x.value() < y.value(); };
  const Real& extreme = which == Bound::Lower
                            ? std::min_element(elements.begin(), elements.end(), by_value)->value()
                            : std::max_element(elements.begin(), elements.end(), by_value)->value();

  auto bounds_all = [&](const NsNumber& c) {
    return std::all_of(elements.begin(), elements.end(), [&](const NsNumber& e) {
      const OrderRelation r = compare_ns(c, e);
      return which == Bound::Lower ? is_at_most(r) : is_at_least(r);
    });
  };

  std::vector<NsNumber> candidates;
  for (MonadKind kind : kAllKinds) {
    NsNumber c{extreme, kind};
    if (bounds_all(c)) candidates.push_back(std::move(c));
  }

  for (const NsNumber& c : candidates) {
    const bool dominates = std::all_of(candidates.begin(), candidates.end(), [&](const NsNumber& o) {
      const OrderRelation r = compare_ns(c, o);
      return which == Bound::Lower ? is_at_least(r) : is_at_most(r);
    });
    if (dominates) return c;
  }
  // Unreachable for the four-kind order; keep the always-valid bound.
  return {extreme, which == Bound::Lower ? MonadKind::Left : MonadKind::Right};
}

}  // namespace

NsInterval::NsInterval(NsNumber lo, NsNumber hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
  if (!is_at_most(compare_ns(lo_, hi_))) {
    throw InvalidArgument("interval lower endpoint " + to_string(lo_) +
                          " is not <=N upper endpoint " + to_string(hi_));
  }
}

const NsInterval& unit_interval_ns() {
  static const NsInterval unit{NsNumber::left(0), NsNumber::right(1)};
  return unit;
}

std::string to_string(const NsInterval& iv) {
  return "[" + to_string(iv.lo()) + "," + to_string(iv.hi()) + "]";
}

bool contains(const NsInterval& iv, const NsNumber& x) {
  if (iv.lo().value() < x.value() && x.value() < iv.hi().value()) return true;
  return is_at_most(compare_ns(iv.lo(), x)) && is_at_most(compare_ns(x, iv.hi()));
}

NsNumber inf_ns(const NsInterval& iv) { return iv.lo(); }

NsNumber sup_ns(const NsInterval& iv) { return iv.hi(); }

NsNumber inf_ns_set(std::span<const NsNumber> elements) {
  return extreme_bound(elements, Bound::Lower);
}

NsNumber sup_ns_set(std::span<const NsNumber> elements) {
  return extreme_bound(elements, Bound::Upper);
}

bool rough_contains(const NsNumber& lo, const NsNumber& hi, const NsNumber& x) {
  return roughly_leq(lo, x) && roughly_leq(x, hi);
}

bool rough_contains(const Real& a, const Real& b, const NsNumber& x) {
  if (a > b) {
    throw InvalidArgument("rough interval requires a <= b");
  }
  return rough_contains(NsNumber::std_(a), NsNumber::right(b), x);
}

AnomalyReport anomaly_check(const Real& a, const Real& b, std::span<const NsNumber> probes) {
  if (!(a < b)) {
    throw InvalidArgument("anomaly check requires a < b");
  }
  const NsNumber wide_lo = NsNumber::std_(a);
  const NsNumber wide_hi = NsNumber::right(b);
  const NsNumber narrow_lo = NsNumber::right(a);
  const NsNumber narrow_hi = NsNumber::left(b);
  const NsInterval wide_neutro{NsNumber::left(a), NsNumber::right(b)};
  const NsInterval narrow_neutro{NsNumber::right(a), NsNumber::left(b)};

  AnomalyReport report{a, b, {}, 0, 0, true, true};
  report.probes.reserve(probes.size());
  for (const NsNumber& x : probes) {
    AnomalyProbe p{x, rough_contains(wide_lo, wide_hi, x), rough_contains(narrow_lo, narrow_hi, x),
                   contains(wide_neutro, x), contains(narrow_neutro, x)};
    if (p.in_wide_rough != p.in_narrow_rough) ++report.rough_discrepancies;
    if (p.in_wide_neutro != p.in_narrow_neutro) ++report.neutro_discrepancies;
    if (p.in_wide_rough && !p.in_narrow_rough) report.wide_within_narrow_rough = false;
    if (p.in_wide_neutro && !p.in_narrow_neutro) report.wide_within_narrow_neutro = false;
    report.probes.push_back(std::move(p));
  }
  return report;
}

}  // namespace neutro
