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

#ifndef NEUTRO_INTERVALS_HPP
#define NEUTRO_INTERVALS_HPP

#include <span>
#include <string>
#include <vector>

#include "neutro/nonstandard.hpp"

namespace neutro {

/// Nonstandard interval ]lo, hi[ whose endpoints carry any decoration.
/// Membership is decided with <=_N against the endpoints, so a decorated
/// endpoint is its own member. lo must not lie above hi; lo == hi is a
/// single point.
class NsInterval {
 public:
  /// Throws InvalidArgument unless compare_ns(lo, hi) is LtN, LeN or EqN.
  NsInterval(NsNumber lo, NsNumber hi);

  const NsNumber& lo() const noexcept { return lo_; }
  const NsNumber& hi() const noexcept { return hi_; }

  bool is_point() const { return lo_ == hi_; }

  friend bool operator==(const NsInterval&, const NsInterval&) = default;

 private:
  NsNumber lo_;
  NsNumber hi_;
};

/// The nonstandard unit interval ]L(0), R(1)[.
const NsInterval& unit_interval_ns();

/// "[L(0.1), R(0.4)]" - the bracket form accepted by the formula parser.
std::string to_string(const NsInterval& iv);

bool contains(const NsInterval& iv, const NsNumber& x);

/// Neutrosophic infimum of the interval: its lower endpoint.
NsNumber inf_ns(const NsInterval& iv);
/// Neutrosophic supremum of the interval: its upper endpoint.
NsNumber sup_ns(const NsInterval& iv);

/// Greatest NsNumber that is <=_N every element. When the minimal elements
/// are a Std and a Bimonad at the same value this is the Left monad there.
/// Throws EmptySet on empty input.
NsNumber inf_ns_set(std::span<const NsNumber> elements);
/// Least NsNumber that is >=_N every element. Throws EmptySet on empty input.
NsNumber sup_ns_set(std::span<const NsNumber> elements);

/// Membership in Imamura's rough interval {x | lo <~ x <~ hi}. The endpoint
/// decorations are irrelevant under the rough order.
bool rough_contains(const NsNumber& lo, const NsNumber& hi, const NsNumber& x);

/// Membership in ]a, b+[_K, i.e. a <~ x <~ b. Requires a <= b.
bool rough_contains(const Real& a, const Real& b, const NsNumber& x);

struct AnomalyProbe {
  NsNumber probe;
  bool in_wide_rough;       // ]a, b+[_K
  bool in_narrow_rough;     // ]a+, -b[_K
  bool in_wide_neutro;      // ]L(a), R(b)[ under <=_N
  bool in_narrow_neutro;    // ]R(a), L(b)[ under <=_N
};

/// Evaluation of the two rough intervals ]a, b+[_K and ]a+, -b[_K against
/// a probe set, alongside ]L(a), R(b)[ and ]R(a), L(b)[ under the
/// neutrosophic order. Under the rough order the memberships always coincide, so the
/// wider interval is contained in the narrower one.
struct AnomalyReport {
  Real a;
  Real b;
  std::vector<AnomalyProbe> probes;
  std::size_t rough_discrepancies = 0;     // probes where the rough memberships differ
  std::size_t neutro_discrepancies = 0;    // probes where the <=_N memberships differ
  bool wide_within_narrow_rough = true;    // every rough member of ]a,b+[ is in ]a+,-b[
  bool wide_within_narrow_neutro = true;
};

/// Throws InvalidArgument unless a < b.
AnomalyReport anomaly_check(const Real& a, const Real& b, std::span<const NsNumber> probes);

}  // namespace neutro

#endif  // NEUTRO_INTERVALS_HPP
