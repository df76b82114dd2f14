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

#ifndef NEUTRO_VALUES_HPP
#define NEUTRO_VALUES_HPP

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "neutro/intervals.hpp"
#include "neutro/nonstandard.hpp"

namespace neutro {

enum class ComponentShape { SingleValued, IntervalValued, Hesitant, Nonstandard };

/// "single", "interval", "hesitant", "nonstandard".
std::string_view shape_name(ComponentShape shape);

struct IntervalValue {
  Real lo;
  Real hi;

  friend bool operator==(const IntervalValue&, const IntervalValue&) = default;
};

/// One element of a nonstandard component: a decorated point or a
/// nonstandard interval.
using NsMember = std::variant<NsNumber, NsInterval>;

/// One of T, I or F. Immutable once built; the factories enforce the shape
/// invariants (lo <= hi, nonempty and deduplicated sets).
class NeutroComponent {
 public:
  static NeutroComponent single(Real value);
  /// Throws InvalidArgument when lo > hi.
  static NeutroComponent interval(Real lo, Real hi);
  /// Sorted and deduplicated. Throws EmptyComponent on an empty set.
  static NeutroComponent hesitant(std::vector<Real> values);
  /// Deduplicated, order of first appearance kept. Throws EmptyComponent.
  static NeutroComponent nonstandard(std::vector<NsMember> members);
  static NeutroComponent nonstandard(NsNumber point);

  ComponentShape shape() const;

  /// Accessors; each throws ShapeMismatch when called on another shape.
  const Real& single_value() const;
  const IntervalValue& interval_value() const;
  const std::vector<Real>& hesitant_values() const;
  const std::vector<NsMember>& nonstandard_members() const;

  /// The same set read as a nonstandard component (standard points become
  /// Std points, standard intervals become Std-endpoint intervals).
  NeutroComponent as_nonstandard() const;

  friend bool operator==(const NeutroComponent&, const NeutroComponent&) = default;

 private:
  using Rep = std::variant<Real, IntervalValue, std::vector<Real>, std::vector<NsMember>>;
  explicit NeutroComponent(Rep rep) : rep_(std::move(rep)) {}

  Rep rep_;
};

/// Formula notation: "0.5", "[0.1,0.2]", "{0.2,0.5}", "R(1)", "[L(0),R(1)]",
/// "{L(0.1),[0.3,R(0.4)]}".
std::string to_string(const NeutroComponent& c);

/// Truth, indeterminacy and falsehood of one proposition. All three share a
/// shape; construction throws ShapeMismatch otherwise. Bounds are not
/// enforced here: validate() reports them.
class NeutroTriple {
 public:
  NeutroTriple(NeutroComponent t, NeutroComponent i, NeutroComponent f);

  /// Builds from mixed shapes by lifting every component to Nonstandard when
  /// at least one of them is Nonstandard. Other mixes throw ShapeMismatch.
  static NeutroTriple lifted(NeutroComponent t, NeutroComponent i, NeutroComponent f);

  static NeutroTriple single(Real t, Real i, Real f);

  const NeutroComponent& t() const noexcept { return t_; }
  const NeutroComponent& i() const noexcept { return i_; }
  const NeutroComponent& f() const noexcept { return f_; }
  ComponentShape shape() const { return t_.shape(); }

  NeutroTriple as_nonstandard() const;

  friend bool operator==(const NeutroTriple&, const NeutroTriple&) = default;

 private:
  NeutroComponent t_;
  NeutroComponent i_;
  NeutroComponent f_;
};

/// "<t,i,f>" in formula notation.
std::string to_string(const NeutroTriple& x);

/// Admissible component range [psi, omega] with psi <= 0 < 1 <= omega.
/// Values outside [0, 1] are over/under/offset values.
class OffsetBounds {
 public:
  /// Throws InvalidArgument unless psi <= 0 < 1 <= omega.
  OffsetBounds(Real psi, Real omega);

  static OffsetBounds unit() { return {Real(0), Real(1)}; }

  const Real& psi() const noexcept { return psi_; }
  const Real& omega() const noexcept { return omega_; }
  bool is_unit() const { return psi_ == 0 && omega_ == 1; }

 private:
  Real psi_;
  Real omega_;
};

struct ComponentBounds {
  NsNumber inf;
  NsNumber sup;
};

/// Neutrosophic infimum and supremum of a component. Standard shapes give
/// their classical min and max as Std numbers.
ComponentBounds component_bounds(const NeutroComponent& c);

struct TripleSums {
  NsNumber n_inf;
  NsNumber n_sup;
};

/// n_inf = t_inf + i_inf + f_inf and n_sup likewise, summed with add_ns.
TripleSums triple_sums(const NeutroTriple& x);

enum class Role { T, I, F };

std::string_view role_name(Role role);

struct Violation {
  enum class Kind { BelowPsi, AboveOmega, SumBelow, SumAbove };

  Kind kind;
  /// The offending component, or empty for a sum violation.
  std::string component;
  Real value;
  Real limit;

  std::string message() const;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const noexcept { return violations.empty(); }
};

/// Every component within [psi, omega] and n_inf, n_sup within
/// [3 psi, 3 omega]. Nonstandard components are checked through the values
/// of their neutrosophic bounds, so L(0) and R(1) pass unit bounds.
ValidationReport validate(const NeutroTriple& x, const OffsetBounds& bounds);

enum class Scale { Unit, Percent };

enum class LogicLabel {
  Dialetheism,
  Boolean,
  Fuzzy,
  Intuitionistic,
  Paraconsistent,
  Overtrue,
  MultiValued,
};

/// "dialetheism", "boolean", "fuzzy", "intuitionistic", "paraconsistent",
/// "overtrue", "multi-valued".
std::string_view label_name(LogicLabel label);

inline constexpr double kClassifyTolerance = 1e-9;

/// Which classical logics a single-valued (t, i, f) falls under, with
/// n = t + i + f:
///   intuitionistic   0 < n < 1, all components in [0, 1]
///   fuzzy            n = 1, i = 0, all components in [0, 1]
///   boolean          fuzzy with t, f in {0, 1}
///   multi-valued     all components in [0, 1]
///   paraconsistent   n > 1, t < 1, f < 1
///   dialetheism      t = f = 1, i = 0
///   overtrue         t > 1
/// Percent inputs are divided by 100 first. Result is ordered as LogicLabel.
std::vector<LogicLabel> classify_logic(double t, double i, double f, Scale scale = Scale::Unit);

enum class TruthGrade { Ordinary, RelativeTruth, AbsoluteTruth, RelativeNegative, AbsoluteNegative };

/// "ordinary", "relative-truth", "absolute-truth", "relative-negative",
/// "absolute-negative".
std::string_view grade_name(TruthGrade grade);

/// T role: R(1) is absolute truth, 1 relative truth. I and F roles: L(0) is
/// absolute (all worlds), 0 relative. Everything else is ordinary.
TruthGrade truth_grade(const NsNumber& x, Role role);

}  // namespace neutro

#endif  // NEUTRO_VALUES_HPP
