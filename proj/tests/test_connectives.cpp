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

#include <doctest.h>

#include <algorithm>
#include <array>
#include <cmath>

#include "neutro/connectives.hpp"
#include "support/generators.hpp"

using namespace neutro;
using K = MonadKind;

namespace {

Real d(const char* v) { return parse_decimal(v); }
NsNumber ns(const char* v, K k = K::Std) { return {d(v), k}; }

NeutroTriple single(const char* t, const char* i, const char* f) {
  return NeutroTriple::single(d(t), d(i), d(f));
}

constexpr std::array<TNormFamily, 3> kKernels = {TNormFamily::MinMax, TNormFamily::Product,
                                                 TNormFamily::Lukasiewicz};
constexpr std::array<OperatorFamily, 3> kFamilies = {OperatorFamily::TAligned, OperatorFamily::FAligned,
                                                     OperatorFamily::Plithogenic};

// Straight transcription of the connective tables over doubles.
namespace reference {

double t_norm(double a, double b, TNormFamily k) {
  switch (k) {
    case TNormFamily::MinMax: return std::min(a, b);
    case TNormFamily::Product: return a * b;
    default: return std::max(0.0, a + b - 1.0);
  }
}

double t_conorm(double a, double b, TNormFamily k) {
  switch (k) {
    case TNormFamily::MinMax: return std::max(a, b);
    case TNormFamily::Product: return a + b - a * b;
    default: return std::min(1.0, a + b);
  }
}

std::array<double, 3> conj(std::array<double, 3> x, std::array<double, 3> y, OperatorConfig c) {
  const double meet_i = t_norm(x[1], y[1], c.tnorm);
  const double join_i = t_conorm(x[1], y[1], c.tnorm);
  const double i = c.family == OperatorFamily::TAligned   ? meet_i
                   : c.family == OperatorFamily::FAligned ? join_i
                                                          : 0.5 * meet_i + 0.5 * join_i;
  return {t_norm(x[0], y[0], c.tnorm), i, t_conorm(x[2], y[2], c.tnorm)};
}

std::array<double, 3> disj(std::array<double, 3> x, std::array<double, 3> y, OperatorConfig c) {
  const double meet_i = t_norm(x[1], y[1], c.tnorm);
  const double join_i = t_conorm(x[1], y[1], c.tnorm);
  const double i = c.family == OperatorFamily::TAligned   ? join_i
                   : c.family == OperatorFamily::FAligned ? meet_i
                                                          : 0.5 * join_i + 0.5 * meet_i;
  return {t_conorm(x[0], y[0], c.tnorm), i, t_norm(x[2], y[2], c.tnorm)};
}

}  // namespace reference

std::array<double, 3> as_doubles(const NeutroTriple& x) {
  return {to_double(x.t().single_value()), to_double(x.i().single_value()), to_double(x.f().single_value())};
}

}  // namespace

TEST_CASE("kernel examples") {
  CHECK(tnorm(d("0.3"), d("0.7"), TNormFamily::MinMax) == d("0.3"));
  CHECK(tconorm(d("0.5"), d("0.5"), TNormFamily::Product) == d("0.75"));
  CHECK(tnorm(d("0.7"), d("0.5"), TNormFamily::Lukasiewicz) == d("0.2"));
  CHECK(tconorm(d("0.7"), d("0.5"), TNormFamily::Lukasiewicz) == d("1"));
  CHECK(tnorm(d("1.4"), d("0.5"), TNormFamily::MinMax) == d("0.5"));
}

TEST_CASE("kernel laws") {
  testgen::Gen gen(31);
  for (int n = 0; n < 2000; ++n) {
    const Real a = gen.unit();
    const Real b = gen.unit();
    const Real c = gen.unit();
    const Real b2 = std::max(b, gen.unit());
    for (TNormFamily k : kKernels) {
      CHECK(tnorm(a, b, k) == tnorm(b, a, k));
      CHECK(tconorm(a, b, k) == tconorm(b, a, k));
      CHECK(tnorm(a, tnorm(b, c, k), k) == tnorm(tnorm(a, b, k), c, k));
      CHECK(tconorm(a, tconorm(b, c, k), k) == tconorm(tconorm(a, b, k), c, k));
      CHECK(tnorm(a, b, k) <= tnorm(a, b2, k));
      CHECK(tconorm(a, b, k) <= tconorm(a, b2, k));
      CHECK(tnorm(a, Real(1), k) == a);
      CHECK(tconorm(a, Real(0), k) == a);
      CHECK(tnorm(a, b, k) >= 0);
      CHECK(tconorm(a, b, k) <= 1);
    }
  }
}

TEST_CASE("family and kernel names") {
  CHECK(parse_family("plith") == OperatorFamily::Plithogenic);
  CHECK(parse_tnorm("luk") == TNormFamily::Lukasiewicz);
  CHECK(family_name(OperatorFamily::TAligned) == "ti");
  CHECK_THROWS_AS(parse_family("x"), InvalidArgument);
  CHECK_THROWS_AS(parse_tnorm("min"), InvalidArgument);
}

TEST_CASE("negation swaps T and F") {
  CHECK(neg(single("1", "0", "0")) == single("0", "0", "1"));
  CHECK(neg(single("0.6", "0.2", "0.5")) == single("0.5", "0.2", "0.6"));
  testgen::Gen gen(37);
  for (int n = 0; n < 200; ++n) {
    const auto x = NeutroTriple::single(gen.unit(), gen.unit(), gen.unit());
    CHECK(neg(neg(x)) == x);
  }
}

TEST_CASE("connective examples") {
  const OperatorConfig f_minmax{OperatorFamily::FAligned, TNormFamily::MinMax};
  CHECK(conj(single("1", "0", "0"), single("0", "0", "1"), f_minmax) == single("0", "0", "1"));
  CHECK(conj(single("0.8", "0.4", "0.3"), single("0.6", "0.2", "0.5"),
             {OperatorFamily::TAligned, TNormFamily::MinMax}) == single("0.6", "0.2", "0.5"));
  CHECK(conj(single("0.8", "0.4", "0.3"), single("0.6", "0.2", "0.5"),
             {OperatorFamily::Plithogenic, TNormFamily::MinMax}) == single("0.6", "0.3", "0.5"));
  CHECK(conj(single("0.5", "0.5", "0.5"), single("0.5", "0.5", "0.5"),
             {OperatorFamily::FAligned, TNormFamily::Product}) == single("0.25", "0.75", "0.75"));
  CHECK(impl(single("1", "0", "0"), single("0", "0", "1"), f_minmax) == single("0", "0", "1"));

  const auto x = NeutroTriple::lifted(NeutroComponent::nonstandard(ns("1", K::Right)),
                                      NeutroComponent::single(d("0")), NeutroComponent::single(d("0")));
  const auto y = NeutroTriple::lifted(NeutroComponent::single(d("0")), NeutroComponent::single(d("0")),
                                      NeutroComponent::nonstandard(ns("1", K::Right)));
  const auto expected = NeutroTriple::lifted(NeutroComponent::single(d("0")),
                                             NeutroComponent::single(d("0")),
                                             NeutroComponent::nonstandard(ns("1", K::Right)));
  CHECK(conj(x, y, f_minmax) == expected);
}

TEST_CASE("disjunction and implication tables") {
  const auto x = single("0.8", "0.4", "0.3");
  const auto y = single("0.6", "0.2", "0.5");
  CHECK(disj(x, y, {OperatorFamily::TAligned, TNormFamily::MinMax}) == single("0.8", "0.4", "0.3"));
  CHECK(disj(x, y, {OperatorFamily::FAligned, TNormFamily::MinMax}) == single("0.8", "0.2", "0.3"));
  CHECK(disj(x, y, {OperatorFamily::Plithogenic, TNormFamily::MinMax}) == single("0.8", "0.3", "0.3"));
  // (F1 v T2, I1 v I2, T1 ^ F2) and (F1 v T2, I1 ^ I2, T1 ^ F2)
  CHECK(impl(x, y, {OperatorFamily::TAligned, TNormFamily::MinMax}) == single("0.6", "0.4", "0.5"));
  CHECK(impl(x, y, {OperatorFamily::FAligned, TNormFamily::MinMax}) == single("0.6", "0.2", "0.5"));
  CHECK(impl(x, y, {OperatorFamily::Plithogenic, TNormFamily::MinMax}) == single("0.6", "0.3", "0.5"));
}

TEST_CASE("connectives match the reference tables") {
  testgen::Gen gen(41);
  for (int n = 0; n < 1000; ++n) {
    const auto x = NeutroTriple::single(gen.unit(), gen.unit(), gen.unit());
    const auto y = NeutroTriple::single(gen.unit(), gen.unit(), gen.unit());
    for (auto fam : kFamilies) {
      for (auto k : kKernels) {
        const OperatorConfig cfg{fam, k};
        const auto c = as_doubles(conj(x, y, cfg));
        const auto r = reference::conj(as_doubles(x), as_doubles(y), cfg);
        const auto dj = as_doubles(disj(x, y, cfg));
        const auto rd = reference::disj(as_doubles(x), as_doubles(y), cfg);
        for (int j = 0; j < 3; ++j) {
          CHECK(std::abs(c[j] - r[j]) <= 1e-12);
          CHECK(std::abs(dj[j] - rd[j]) <= 1e-12);
        }
      }
    }
  }
}

TEST_CASE("connective laws") {
  testgen::Gen gen(43);
  for (int n = 0; n < 300; ++n) {
    const auto x = NeutroTriple::single(gen.unit(), gen.unit(), gen.unit());
    const auto y = NeutroTriple::single(gen.unit(), gen.unit(), gen.unit());
    const auto z = NeutroTriple::single(gen.unit(), gen.unit(), gen.unit());
    for (auto fam : kFamilies) {
      for (auto k : kKernels) {
        const OperatorConfig cfg{fam, k};
        CHECK(conj(x, y, cfg) == conj(y, x, cfg));
        CHECK(disj(x, y, cfg) == disj(y, x, cfg));
        CHECK(impl(x, y, cfg) == disj(neg(x), y, cfg));
        if (fam != OperatorFamily::Plithogenic) {
          CHECK(conj(x, conj(y, z, cfg), cfg) == conj(conj(x, y, cfg), z, cfg));
          CHECK(disj(x, disj(y, z, cfg), cfg) == disj(disj(x, y, cfg), z, cfg));
          const auto lhs = neg(conj(x, y, cfg));
          const auto rhs = disj(neg(x), neg(y), cfg);
          CHECK(lhs.t() == rhs.t());
          CHECK(lhs.f() == rhs.f());
        }
        if (k == TNormFamily::MinMax && fam != OperatorFamily::Plithogenic) {
          CHECK(conj(x, x, cfg) == x);
          CHECK(disj(x, x, cfg) == x);
        }
        if (k == TNormFamily::MinMax && fam == OperatorFamily::Plithogenic) {
          const Real half_sum = (x.i().single_value() + y.i().single_value()) / 2;
          CHECK(conj(x, y, cfg).i().single_value() == half_sum);
          CHECK(disj(x, y, cfg).i().single_value() == half_sum);
        }
      }
    }
  }
}

TEST_CASE("plithogenic conjunction is not associative in general") {
  const OperatorConfig cfg{OperatorFamily::Plithogenic, TNormFamily::MinMax};
  const auto x = single("0", "0", "0");
  const auto y = single("0", "1", "0");
  const auto z = single("0", "0.4", "0");
  // I: (0 + (1 + 0.4)/2)/2 = 0.35 against ((0 + 1)/2 + 0.4)/2 = 0.45
  CHECK(conj(x, conj(y, z, cfg), cfg).i() == NeutroComponent::single(d("0.35")));
  CHECK(conj(conj(x, y, cfg), z, cfg).i() == NeutroComponent::single(d("0.45")));
}

TEST_CASE("interval results enclose pointwise results") {
  testgen::Gen gen(47);
  auto interval = [&] {
    Real a = gen.unit();
    Real b = gen.unit();
    if (a > b) std::swap(a, b);
    return NeutroComponent::interval(a, b);
  };
  auto pick = [&](const NeutroComponent& c) {
    const auto& iv = c.interval_value();
    const Real t = gen.unit();
    return iv.lo + t * (iv.hi - iv.lo);
  };
  auto within = [](const Real& v, const NeutroComponent& c) {
    return c.interval_value().lo <= v && v <= c.interval_value().hi;
  };
  for (int n = 0; n < 300; ++n) {
    const NeutroTriple x(interval(), interval(), interval());
    const NeutroTriple y(interval(), interval(), interval());
    const auto px = NeutroTriple::single(pick(x.t()), pick(x.i()), pick(x.f()));
    const auto py = NeutroTriple::single(pick(y.t()), pick(y.i()), pick(y.f()));
    for (auto fam : kFamilies) {
      for (auto k : kKernels) {
        const OperatorConfig cfg{fam, k};
        for (int op = 0; op < 3; ++op) {
          const auto whole = op == 0 ? conj(x, y, cfg) : op == 1 ? disj(x, y, cfg) : impl(x, y, cfg);
          const auto point = op == 0 ? conj(px, py, cfg) : op == 1 ? disj(px, py, cfg) : impl(px, py, cfg);
          CHECK(within(point.t().single_value(), whole.t()));
          CHECK(within(point.i().single_value(), whole.i()));
          CHECK(within(point.f().single_value(), whole.f()));
        }
      }
    }
  }
}

TEST_CASE("hesitant components combine over the Cartesian product") {
  const NeutroTriple x(NeutroComponent::hesitant({d("0.2"), d("0.6")}), NeutroComponent::hesitant({d("0.1")}),
                       NeutroComponent::hesitant({d("0.3")}));
  const NeutroTriple y(NeutroComponent::hesitant({d("0.4")}), NeutroComponent::hesitant({d("0.5")}),
                       NeutroComponent::hesitant({d("0.2"), d("0.9")}));
  const auto r = conj(x, y, {OperatorFamily::FAligned, TNormFamily::MinMax});
  CHECK(r.t().hesitant_values() == std::vector<Real>{d("0.2"), d("0.4")});
  CHECK(r.i().hesitant_values() == std::vector<Real>{d("0.5")});
  CHECK(r.f().hesitant_values() == std::vector<Real>{d("0.3"), d("0.9")});
}

TEST_CASE("shape and nonstandard restrictions") {
  const OperatorConfig cfg{};
  const NeutroTriple iv(NeutroComponent::interval(d("0"), d("1")), NeutroComponent::interval(d("0"), d("1")),
                        NeutroComponent::interval(d("0"), d("1")));
  CHECK_THROWS_AS(conj(single("1", "0", "0"), iv, cfg), ShapeMismatch);

  const auto nsx = NeutroTriple::lifted(NeutroComponent::nonstandard(ns("1", K::Right)),
                                        NeutroComponent::single(d("0")), NeutroComponent::single(d("0")));
  CHECK_THROWS_AS(conj(nsx, nsx, {OperatorFamily::FAligned, TNormFamily::Product}), UnsupportedNonstandardConfig);

  const auto bim = NeutroTriple::lifted(NeutroComponent::nonstandard(ns("0.5", K::Bimonad)),
                                        NeutroComponent::single(d("0")), NeutroComponent::single(d("0")));
  CHECK_THROWS_AS(conj(bim, nsx, cfg), UnsupportedNonstandardConfig);

  // A nonstandard operand lifts a standard one.
  CHECK(disj(nsx, single("0.5", "0", "0"), cfg).t() == NeutroComponent::nonstandard(ns("1", K::Right)));
}

TEST_CASE("nonstandard connectives on intervals and plithogenic blend") {
  const OperatorConfig cfg{OperatorFamily::Plithogenic, TNormFamily::MinMax};
  const NeutroTriple x(NeutroComponent::nonstandard(std::vector<NsMember>{NsInterval(ns("0", K::Left), ns("0.5"))}),
                       NeutroComponent::nonstandard(ns("0.2", K::Left)),
                       NeutroComponent::nonstandard(ns("0")));
  const NeutroTriple y(NeutroComponent::nonstandard(ns("0.3")), NeutroComponent::nonstandard(ns("0.4", K::Right)),
                       NeutroComponent::nonstandard(ns("1", K::Right)));
  const auto r = conj(x, y, cfg);
  CHECK(r.t() == NeutroComponent::nonstandard(std::vector<NsMember>{NsInterval(ns("0", K::Left), ns("0.3"))}));
  CHECK(r.i() == NeutroComponent::nonstandard(ns("0.3", K::Bimonad)));
  CHECK(r.f() == NeutroComponent::nonstandard(ns("1", K::Right)));
}

TEST_CASE("offset inputs are clamped with a warning") {
  Diagnostics diag;
  const auto r = conj(single("1.2", "0", "-0.1"), single("0.5", "0", "0.3"),
                      {OperatorFamily::FAligned, TNormFamily::MinMax}, &diag);
  CHECK(r == single("0.5", "0", "0.3"));
  REQUIRE(diag.warnings.size() == 2);
  CHECK(diag.warnings[0] == "clamped T input 1.2 to 1 before applying the minmax kernel");
  CHECK(diag.warnings[1] == "clamped F input -0.1 to 0 before applying the minmax kernel");

  Diagnostics quiet;
  conj(single("1", "0", "0"), single("0", "0", "1"), {}, &quiet);
  CHECK(quiet.warnings.empty());
}
