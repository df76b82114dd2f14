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

#include "neutro/connectives.hpp"

#include <algorithm>

namespace neutro {

namespace {

enum class Combine { Meet, Join, Blend };

// Sign and numerator/denominator tests avoid a rational cross-multiplication.
bool below_zero(const Real& v) { return v.sign() < 0; }
bool above_one(const Real& v) {
  return boost::multiprecision::numerator(v) > boost::multiprecision::denominator(v);
}
bool in_unit(const Real& v) { return !below_zero(v) && !above_one(v); }

Real clamp_unit(const Real& v) {
  if (below_zero(v)) return Real(0);
  if (above_one(v)) return Real(1);
  return v;
}

Real raw_tnorm(const Real& x, const Real& y, TNormFamily k) {
  switch (k) {
    case TNormFamily::MinMax: return x < y ? x : y;
    case TNormFamily::Product: return x * y;
    case TNormFamily::Lukasiewicz: {
      Real s = x + y - 1;
      return below_zero(s) ? Real(0) : s;
    }
  }
  return Real(0);
}

Real raw_tconorm(const Real& x, const Real& y, TNormFamily k) {
  switch (k) {
    case TNormFamily::MinMax: return x < y ? y : x;
    case TNormFamily::Product: return x + y - x * y;
    case TNormFamily::Lukasiewicz: {
      Real s = x + y;
      return above_one(s) ? Real(1) : s;
    }
  }
  return Real(0);
}

// Inputs already lie in [0, 1].
Real kernel(Combine op, const Real& a, const Real& b, TNormFamily k) {
  switch (op) {
    case Combine::Meet: return raw_tnorm(a, b, k);
    case Combine::Join: return raw_tconorm(a, b, k);
    case Combine::Blend:
      // Both weights are equal, so one multiplication covers the blend.
      return kPlithogenicWeight * (raw_tnorm(a, b, k) + raw_tconorm(a, b, k));
  }
  return Real(0);
}

NsNumber ns_kernel(Combine op, const NsNumber& a, const NsNumber& b) {
  switch (op) {
    case Combine::Meet: return min_ns(a, b);
    case Combine::Join: return max_ns(a, b);
    case Combine::Blend:
      return add_ns(scale_ns(min_ns(a, b), kPlithogenicWeight), scale_ns(max_ns(a, b), kPlithogenicWeight));
  }
  return a;
}

// Applies one kernel to a pair of same-shaped components.
class ComponentCombiner {
 public:
  ComponentCombiner(const OperatorConfig& cfg, Diagnostics* diag) : cfg_(cfg), diag_(diag) {}

  NeutroComponent operator()(Combine op, std::string_view role, const NeutroComponent& a,
                             const NeutroComponent& b) const {
    switch (a.shape()) {
      case ComponentShape::SingleValued:
        return NeutroComponent::single(apply(op, role, a.single_value(), b.single_value()));
      case ComponentShape::IntervalValued: {
        const auto& p = a.interval_value();
        const auto& q = b.interval_value();
        return NeutroComponent::interval(apply(op, role, p.lo, q.lo), apply(op, role, p.hi, q.hi));
      }
      case ComponentShape::Hesitant: {
        std::vector<Real> out;
        for (const Real& p : a.hesitant_values()) {
          for (const Real& q : b.hesitant_values()) out.push_back(apply(op, role, p, q));
        }
        return NeutroComponent::hesitant(std::move(out));
      }
      case ComponentShape::Nonstandard: {
        std::vector<NsMember> out;
        for (const NsMember& p : a.nonstandard_members()) {
          for (const NsMember& q : b.nonstandard_members()) out.push_back(apply_ns(op, p, q));
        }
        return NeutroComponent::nonstandard(std::move(out));
      }
    }
    throw ShapeMismatch("unknown component shape");
  }

 private:
  Real apply(Combine op, std::string_view role, const Real& a, const Real& b) const {
    if (in_unit(a) && in_unit(b)) return kernel(op, a, b, cfg_.tnorm);
    return kernel(op, checked(role, a), checked(role, b), cfg_.tnorm);
  }

  Real checked(std::string_view role, const Real& v) const {
    Real c = clamp_unit(v);
    if (c != v && diag_ != nullptr) {
      diag_->warn("clamped " + std::string(role) + " input " + to_decimal_string(v) + " to " +
                  to_decimal_string(c) + " before applying the " +
                  std::string(tnorm_name(cfg_.tnorm)) + " kernel");
    }
    return c;
  }

  NsMember apply_ns(Combine op, const NsMember& p, const NsMember& q) const {
    const auto* pp = std::get_if<NsNumber>(&p);
    const auto* qp = std::get_if<NsNumber>(&q);
    if (pp != nullptr && qp != nullptr) return ns_kernel(op, *pp, *qp);

    auto lo = [](const NsMember& m) {
      const auto* x = std::get_if<NsNumber>(&m);
      return x != nullptr ? *x : std::get<NsInterval>(m).lo();
    };
    auto hi = [](const NsMember& m) {
      const auto* x = std::get_if<NsNumber>(&m);
      return x != nullptr ? *x : std::get<NsInterval>(m).hi();
    };
    return NsInterval(ns_kernel(op, lo(p), lo(q)), ns_kernel(op, hi(p), hi(q)));
  }

  const OperatorConfig& cfg_;
  Diagnostics* diag_;
};

bool has_bimonad(const NeutroComponent& c) {
  auto bad = [](const NsNumber& x) { return x.kind() == MonadKind::Bimonad; };
  for (const NsMember& m : c.nonstandard_members()) {
    if (const auto* x = std::get_if<NsNumber>(&m)) {
      if (bad(*x)) return true;
    } else {
      const auto& iv = std::get<NsInterval>(m);
      if (bad(iv.lo()) || bad(iv.hi())) return true;
    }
  }
  return false;
}

void check_nonstandard(const NeutroTriple& t, const OperatorConfig& cfg) {
  if (cfg.tnorm != TNormFamily::MinMax) {
    throw UnsupportedNonstandardConfig("nonstandard operands need the minmax kernel, got " +
                                       std::string(tnorm_name(cfg.tnorm)));
  }
  if (has_bimonad(t.t()) || has_bimonad(t.i()) || has_bimonad(t.f())) {
    throw UnsupportedNonstandardConfig("bimonad component in nonstandard operand " + to_string(t));
  }
}

NeutroTriple combine_same_shape(const NeutroTriple& a, const NeutroTriple& b, const OperatorConfig& cfg,
                                Diagnostics* diag, bool conjunction) {
  const Combine truth = conjunction ? Combine::Meet : Combine::Join;
  const Combine falsity = conjunction ? Combine::Join : Combine::Meet;
  Combine indeterminacy = Combine::Blend;
  if (cfg.family == OperatorFamily::TAligned) indeterminacy = truth;
  if (cfg.family == OperatorFamily::FAligned) indeterminacy = falsity;

  const ComponentCombiner c(cfg, diag);
  return {c(truth, "T", a.t(), b.t()), c(indeterminacy, "I", a.i(), b.i()), c(falsity, "F", a.f(), b.f())};
}

// Shapes must agree; a Nonstandard side lifts a standard partner.
NeutroTriple combine(const NeutroTriple& x, const NeutroTriple& y, const OperatorConfig& cfg,
                     Diagnostics* diag, bool conjunction) {
  const bool x_ns = x.shape() == ComponentShape::Nonstandard;
  const bool y_ns = y.shape() == ComponentShape::Nonstandard;
  if (!x_ns && !y_ns) {
    if (x.shape() != y.shape()) {
      throw ShapeMismatch("cannot combine " + std::string(shape_name(x.shape())) + " and " +
                          std::string(shape_name(y.shape())) + " triples");
    }
    return combine_same_shape(x, y, cfg, diag, conjunction);
  }
  const NeutroTriple a = x_ns ? x : x.as_nonstandard();
  const NeutroTriple b = y_ns ? y : y.as_nonstandard();
  check_nonstandard(a, cfg);
  check_nonstandard(b, cfg);
  return combine_same_shape(a, b, cfg, diag, conjunction);
}

}  // namespace

std::string_view family_name(OperatorFamily family) {
  switch (family) {
    case OperatorFamily::TAligned: return "ti";
    case OperatorFamily::FAligned: return "if";
    case OperatorFamily::Plithogenic: return "plith";
  }
  return "if";
}

std::string_view tnorm_name(TNormFamily tnorm) {
  switch (tnorm) {
    case TNormFamily::MinMax: return "minmax";
    case TNormFamily::Product: return "product";
    case TNormFamily::Lukasiewicz: return "luk";
  }
  return "minmax";
}

OperatorFamily parse_family(std::string_view text) {
  if (text == "ti") return OperatorFamily::TAligned;
  if (text == "if") return OperatorFamily::FAligned;
  if (text == "plith") return OperatorFamily::Plithogenic;
  throw InvalidArgument("unknown operator family '" + std::string(text) + "' (expected ti, if or plith)");
}

TNormFamily parse_tnorm(std::string_view text) {
  if (text == "minmax") return TNormFamily::MinMax;
  if (text == "product") return TNormFamily::Product;
  if (text == "luk") return TNormFamily::Lukasiewicz;
  throw InvalidArgument("unknown t-norm '" + std::string(text) + "' (expected minmax, product or luk)");
}

Real tnorm(const Real& a, const Real& b, TNormFamily k) {
  if (in_unit(a) && in_unit(b)) return raw_tnorm(a, b, k);
  return raw_tnorm(clamp_unit(a), clamp_unit(b), k);
}

Real tconorm(const Real& a, const Real& b, TNormFamily k) {
  if (in_unit(a) && in_unit(b)) return raw_tconorm(a, b, k);
  return raw_tconorm(clamp_unit(a), clamp_unit(b), k);
}

void Diagnostics::warn(std::string message) {
  if (std::find(warnings.begin(), warnings.end(), message) == warnings.end()) {
    warnings.push_back(std::move(message));
  }
}

NeutroTriple neg(const NeutroTriple& x) { return {x.f(), x.i(), x.t()}; }

NeutroTriple conj(const NeutroTriple& x, const NeutroTriple& y, const OperatorConfig& cfg,
                  Diagnostics* diag) {
  return combine(x, y, cfg, diag, true);
}

NeutroTriple disj(const NeutroTriple& x, const NeutroTriple& y, const OperatorConfig& cfg,
                  Diagnostics* diag) {
  return combine(x, y, cfg, diag, false);
}

NeutroTriple impl(const NeutroTriple& x, const NeutroTriple& y, const OperatorConfig& cfg,
                  Diagnostics* diag) {
  return disj(neg(x), y, cfg, diag);
}

}  // namespace neutro
