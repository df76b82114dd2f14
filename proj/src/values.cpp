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

#include "neutro/values.hpp"

#include <algorithm>
#include <cmath>

namespace neutro {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

std::string member_string(const NsMember& m) {
  return std::visit([](const auto& v) { return to_string(v); }, m);
}

}  // namespace

std::string_view shape_name(ComponentShape shape) {
  switch (shape) {
    case ComponentShape::SingleValued: return "single";
    case ComponentShape::IntervalValued: return "interval";
    case ComponentShape::Hesitant: return "hesitant";
    case ComponentShape::Nonstandard: return "nonstandard";
  }
  return "single";
}

NeutroComponent NeutroComponent::single(Real value) { return NeutroComponent(Rep(std::move(value))); }

NeutroComponent NeutroComponent::interval(Real lo, Real hi) {
  if (lo > hi) {
    throw InvalidArgument("interval component [" + to_decimal_string(lo) + "," +
                          to_decimal_string(hi) + "] has lo > hi");
  }
  return NeutroComponent(Rep(IntervalValue{std::move(lo), std::move(hi)}));
}

NeutroComponent NeutroComponent::hesitant(std::vector<Real> values) {
  if (values.empty()) {
    throw EmptyComponent("hesitant component must have at least one value");
  }
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  return NeutroComponent(Rep(std::move(values)));
}

NeutroComponent NeutroComponent::nonstandard(std::vector<NsMember> members) {
  if (members.empty()) {
    throw EmptyComponent("nonstandard component must have at least one member");
  }
  std::vector<NsMember> unique;
  for (auto& m : members) {
    if (std::find(unique.begin(), unique.end(), m) == unique.end()) unique.push_back(std::move(m));
  }
  return NeutroComponent(Rep(std::move(unique)));
}

NeutroComponent NeutroComponent::nonstandard(NsNumber point) {
  return nonstandard(std::vector<NsMember>{std::move(point)});
}

ComponentShape NeutroComponent::shape() const {
  return static_cast<ComponentShape>(rep_.index());
}

const Real& NeutroComponent::single_value() const {
  if (const auto* v = std::get_if<Real>(&rep_)) return *v;
  throw ShapeMismatch("component is " + std::string(shape_name(shape())) + ", not single");
}

const IntervalValue& NeutroComponent::interval_value() const {
  if (const auto* v = std::get_if<IntervalValue>(&rep_)) return *v;
  throw ShapeMismatch("component is " + std::string(shape_name(shape())) + ", not interval");
}

const std::vector<Real>& NeutroComponent::hesitant_values() const {
  if (const auto* v = std::get_if<std::vector<Real>>(&rep_)) return *v;
  throw ShapeMismatch("component is " + std::string(shape_name(shape())) + ", not hesitant");
}

const std::vector<NsMember>& NeutroComponent::nonstandard_members() const {
  if (const auto* v = std::get_if<std::vector<NsMember>>(&rep_)) return *v;
  throw ShapeMismatch("component is " + std::string(shape_name(shape())) + ", not nonstandard");
}

NeutroComponent NeutroComponent::as_nonstandard() const {
  return std::visit(
      overloaded{
          [](const Real& v) { return nonstandard(NsNumber::std_(v)); },
          [](const IntervalValue& v) {
            NsMember m = NsInterval(NsNumber::std_(v.lo), NsNumber::std_(v.hi));
            return nonstandard(std::vector<NsMember>{std::move(m)});
          },
          [](const std::vector<Real>& vs) {
            std::vector<NsMember> members;
            for (const Real& v : vs) members.emplace_back(NsNumber::std_(v));
            return nonstandard(std::move(members));
          },
          [this](const std::vector<NsMember>&) { return *this; },
      },
      rep_);
}

std::string to_string(const NeutroComponent& c) {
  switch (c.shape()) {
    case ComponentShape::SingleValued:
      return to_decimal_string(c.single_value());
    case ComponentShape::IntervalValued:
      return "[" + to_decimal_string(c.interval_value().lo) + "," +
             to_decimal_string(c.interval_value().hi) + "]";
    case ComponentShape::Hesitant: {
      std::string out = "{";
      for (std::size_t k = 0; k < c.hesitant_values().size(); ++k) {
        if (k > 0) out += ",";
        out += to_decimal_string(c.hesitant_values()[k]);
      }
      return out + "}";
    }
    case ComponentShape::Nonstandard: {
      const auto& members = c.nonstandard_members();
      if (members.size() == 1) return member_string(members.front());
      std::string out = "{";
      for (std::size_t k = 0; k < members.size(); ++k) {
        if (k > 0) out += ",";
        out += member_string(members[k]);
      }
      return out + "}";
    }
  }
  return {};
}

NeutroTriple::NeutroTriple(NeutroComponent t, NeutroComponent i, NeutroComponent f)
    : t_(std::move(t)), i_(std::move(i)), f_(std::move(f)) {
  if (t_.shape() != i_.shape() || t_.shape() != f_.shape()) {
    throw ShapeMismatch("triple mixes component shapes " + std::string(shape_name(t_.shape())) +
                        ", " + std::string(shape_name(i_.shape())) + ", " +
                        std::string(shape_name(f_.shape())));
  }
}

NeutroTriple NeutroTriple::lifted(NeutroComponent t, NeutroComponent i, NeutroComponent f) {
  const bool any_nonstandard = t.shape() == ComponentShape::Nonstandard ||
                               i.shape() == ComponentShape::Nonstandard ||
                               f.shape() == ComponentShape::Nonstandard;
  if (any_nonstandard) {
    return {t.as_nonstandard(), i.as_nonstandard(), f.as_nonstandard()};
  }
  return {std::move(t), std::move(i), std::move(f)};
}

NeutroTriple NeutroTriple::single(Real t, Real i, Real f) {
  return {NeutroComponent::single(std::move(t)), NeutroComponent::single(std::move(i)),
          NeutroComponent::single(std::move(f))};
}

NeutroTriple NeutroTriple::as_nonstandard() const {
  return {t_.as_nonstandard(), i_.as_nonstandard(), f_.as_nonstandard()};
}

std::string to_string(const NeutroTriple& x) {
  return "<" + to_string(x.t()) + "," + to_string(x.i()) + "," + to_string(x.f()) + ">";
}

OffsetBounds::OffsetBounds(Real psi, Real omega) : psi_(std::move(psi)), omega_(std::move(omega)) {
  if (!(psi_ <= 0 && omega_ >= 1)) {
    throw InvalidArgument("offset bounds need psi <= 0 < 1 <= omega, got psi=" +
                          to_decimal_string(psi_) + " omega=" + to_decimal_string(omega_));
  }
}

ComponentBounds component_bounds(const NeutroComponent& c) {
  switch (c.shape()) {
    case ComponentShape::SingleValued:
      return {NsNumber::std_(c.single_value()), NsNumber::std_(c.single_value())};
    case ComponentShape::IntervalValued:
      return {NsNumber::std_(c.interval_value().lo), NsNumber::std_(c.interval_value().hi)};
    case ComponentShape::Hesitant: {
      const auto& vs = c.hesitant_values();
      if (vs.empty()) throw EmptyComponent("hesitant component is empty");
      // kept sorted by the factory
      return {NsNumber::std_(vs.front()), NsNumber::std_(vs.back())};
    }
    case ComponentShape::Nonstandard: {
      std::vector<NsNumber> lows;
      std::vector<NsNumber> highs;
      for (const NsMember& m : c.nonstandard_members()) {
        std::visit(overloaded{
                       [&](const NsNumber& x) {
                         lows.push_back(x);
                         highs.push_back(x);
                       },
                       [&](const NsInterval& iv) {
                         lows.push_back(inf_ns(iv));
                         highs.push_back(sup_ns(iv));
                       },
                   },
                   m);
      }
      if (lows.empty()) throw EmptyComponent("nonstandard component is empty");
      return {inf_ns_set(lows), sup_ns_set(highs)};
    }
  }
  throw EmptyComponent("unknown component shape");
}

TripleSums triple_sums(const NeutroTriple& x) {
  const ComponentBounds t = component_bounds(x.t());
  const ComponentBounds i = component_bounds(x.i());
  const ComponentBounds f = component_bounds(x.f());
  return {add_ns(t.inf, add_ns(i.inf, f.inf)), add_ns(t.sup, add_ns(i.sup, f.sup))};
}

std::string_view role_name(Role role) {
  switch (role) {
    case Role::T: return "T";
    case Role::I: return "I";
    case Role::F: return "F";
  }
  return "T";
}

std::string Violation::message() const {
  const std::string v = to_decimal_string(value);
  const std::string l = to_decimal_string(limit);
  switch (kind) {
    case Kind::BelowPsi: return component + " value " + v + " is below psi=" + l;
    case Kind::AboveOmega: return component + " value " + v + " is above omega=" + l;
    case Kind::SumBelow: return "sum n_inf=" + v + " is below 3*psi=" + l;
    case Kind::SumAbove: return "sum n_sup=" + v + " is above 3*omega=" + l;
  }
  return {};
}

ValidationReport validate(const NeutroTriple& x, const OffsetBounds& bounds) {
  ValidationReport report;
  const std::pair<Role, const NeutroComponent*> parts[] = {
      {Role::T, &x.t()}, {Role::I, &x.i()}, {Role::F, &x.f()}};
  for (const auto& [role, component] : parts) {
    const ComponentBounds b = component_bounds(*component);
    const std::string name(role_name(role));
    if (b.inf.value() < bounds.psi()) {
      report.violations.push_back({Violation::Kind::BelowPsi, name, b.inf.value(), bounds.psi()});
    }
    if (b.sup.value() > bounds.omega()) {
      report.violations.push_back({Violation::Kind::AboveOmega, name, b.sup.value(), bounds.omega()});
    }
  }
  const TripleSums sums = triple_sums(x);
  const Real low = 3 * bounds.psi();
  const Real high = 3 * bounds.omega();
  if (sums.n_inf.value() < low) {
    report.violations.push_back({Violation::Kind::SumBelow, "", sums.n_inf.value(), low});
  }
  if (sums.n_sup.value() > high) {
    report.violations.push_back({Violation::Kind::SumAbove, "", sums.n_sup.value(), high});
  }
  return report;
}

std::string_view label_name(LogicLabel label) {
  switch (label) {
    case LogicLabel::Dialetheism: return "dialetheism";
    case LogicLabel::Boolean: return "boolean";
    case LogicLabel::Fuzzy: return "fuzzy";
    case LogicLabel::Intuitionistic: return "intuitionistic";
    case LogicLabel::Paraconsistent: return "paraconsistent";
    case LogicLabel::Overtrue: return "overtrue";
    case LogicLabel::MultiValued: return "multi-valued";
  }
  return "";
}

std::vector<LogicLabel> classify_logic(double t, double i, double f, Scale scale) {
  if (!std::isfinite(t) || !std::isfinite(i) || !std::isfinite(f)) {
    throw InvalidArgument("classify_logic needs finite inputs");
  }
  if (scale == Scale::Percent) {
    t /= 100.0;
    i /= 100.0;
    f /= 100.0;
  }
  constexpr double tol = kClassifyTolerance;
  auto eq = [](double a, double b) { return std::abs(a - b) <= tol; };
  auto lt = [](double a, double b) { return a < b - tol; };
  auto in_unit = [&](double a) { return a >= -tol && a <= 1 + tol; };
  auto is_bit = [&](double a) { return eq(a, 0) || eq(a, 1); };

  const double n = t + i + f;
  const bool components_in_unit = in_unit(t) && in_unit(i) && in_unit(f);
  const bool fuzzy = eq(n, 1) && eq(i, 0) && components_in_unit;

  std::vector<LogicLabel> labels;
  if (eq(t, 1) && eq(f, 1) && eq(i, 0)) labels.push_back(LogicLabel::Dialetheism);
  if (fuzzy && is_bit(t) && is_bit(f)) labels.push_back(LogicLabel::Boolean);
  if (fuzzy) labels.push_back(LogicLabel::Fuzzy);
  if (lt(0, n) && lt(n, 1) && components_in_unit) labels.push_back(LogicLabel::Intuitionistic);
  if (lt(1, n) && lt(t, 1) && lt(f, 1)) labels.push_back(LogicLabel::Paraconsistent);
  if (lt(1, t)) labels.push_back(LogicLabel::Overtrue);
  if (components_in_unit) labels.push_back(LogicLabel::MultiValued);
  return labels;
}

std::string_view grade_name(TruthGrade grade) {
  switch (grade) {
    case TruthGrade::Ordinary: return "ordinary";
    case TruthGrade::RelativeTruth: return "relative-truth";
    case TruthGrade::AbsoluteTruth: return "absolute-truth";
    case TruthGrade::RelativeNegative: return "relative-negative";
    case TruthGrade::AbsoluteNegative: return "absolute-negative";
  }
  return "ordinary";
}

TruthGrade truth_grade(const NsNumber& x, Role role) {
  if (role == Role::T) {
    if (x.value() != 1) return TruthGrade::Ordinary;
    if (x.kind() == MonadKind::Right) return TruthGrade::AbsoluteTruth;
    if (x.kind() == MonadKind::Std) return TruthGrade::RelativeTruth;
    return TruthGrade::Ordinary;
  }
  if (x.value() != 0) return TruthGrade::Ordinary;
  if (x.kind() == MonadKind::Left) return TruthGrade::AbsoluteNegative;
  if (x.kind() == MonadKind::Std) return TruthGrade::RelativeNegative;
  return TruthGrade::Ordinary;
}

}  // namespace neutro
