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

#include <vector>

#include "neutro/nonstandard.hpp"
#include "support/delta_oracle.hpp"
#include "support/generators.hpp"

using namespace neutro;
using K = MonadKind;
using R = OrderRelation;

namespace {

NsNumber ns(const char* v, K k = K::Std) { return {parse_decimal(v), k}; }

}  // namespace

TEST_CASE("decimal parsing and printing is exact") {
  CHECK(parse_decimal("0.1") + parse_decimal("0.2") == parse_decimal("0.3"));
  CHECK(to_decimal_string(parse_decimal("0.6") + parse_decimal("0.2") + parse_decimal("0.5")) == "1.3");
  CHECK(to_decimal_string(parse_decimal("-0.05")) == "-0.05");
  CHECK(to_decimal_string(parse_decimal("1.50")) == "1.5");
  CHECK(to_decimal_string(parse_decimal("2.5e-3")) == "0.0025");
  CHECK(to_decimal_string(parse_decimal("12e1")) == "120");
  CHECK(to_decimal_string(real(1, 3)) == "1/3");
  CHECK(to_double(parse_decimal("0.1")) == 0.1);
  CHECK_THROWS_AS(parse_decimal(""), InvalidArgument);
  CHECK_THROWS_AS(parse_decimal("."), InvalidArgument);
  CHECK_THROWS_AS(parse_decimal("1.2.3"), InvalidArgument);
  CHECK_THROWS_AS(parse_decimal("1e"), InvalidArgument);
}

TEST_CASE("ns number notation") {
  CHECK(to_string(ns("0.8", K::Left)) == "L(0.8)");
  CHECK(to_string(ns("1", K::Right)) == "R(1)");
  CHECK(to_string(ns("0.5", K::Bimonad)) == "B(0.5)");
  CHECK(to_string(ns("0.3")) == "0.3");
  CHECK(parse_ns_number("L(0.3)") == ns("0.3", K::Left));
  CHECK(parse_ns_number("0.3") == ns("0.3"));
  CHECK_THROWS_AS(parse_ns_number("Q(0.3)"), InvalidArgument);
  CHECK(parse_kind("bimonad") == K::Bimonad);
  CHECK(parse_kind("R") == K::Right);
}

TEST_CASE("compare_ns examples") {
  CHECK(compare_ns(ns("0.8", K::Left), ns("0.8")) == R::LtN);
  CHECK(compare_ns(ns("0.7"), ns("0.2", K::Bimonad)) == R::GtN);
  CHECK(compare_ns(ns("0.5"), ns("0.5", K::Bimonad)) == R::Incomparable);
  CHECK(compare_ns(ns("0.3", K::Left), ns("0.3", K::Bimonad)) == R::LeN);
  CHECK(compare_ns(ns("0.4"), ns("0.4")) == R::EqN);
}

TEST_CASE("full kind table at a shared value") {
  const Real a = parse_decimal("0.25");
  // rows: x kind, columns: y kind, in kAllKinds order (Std, Left, Right, Bimonad)
  const R expected[4][4] = {
      {R::EqN, R::GtN, R::LtN, R::Incomparable},
      {R::LtN, R::EqN, R::LtN, R::LeN},
      {R::GtN, R::GtN, R::EqN, R::GeN},
      {R::Incomparable, R::GeN, R::LeN, R::EqN},
  };
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) {
      CAPTURE(i);
      CAPTURE(j);
      CHECK(compare_ns({a, kAllKinds[i]}, {a, kAllKinds[j]}) == expected[i][j]);
    }
  }
}

TEST_CASE("equal_ns and infinitely_close examples") {
  CHECK(equal_ns(ns("0.8", K::Left), ns("0.8", K::Left)));
  CHECK_FALSE(equal_ns(ns("0.8", K::Left), ns("0.8", K::Right)));
  CHECK(equal_ns(ns("0.3"), ns("0.3")));

  CHECK(infinitely_close(ns("0.8", K::Left), ns("0.8", K::Right)));
  CHECK_FALSE(infinitely_close(ns("0"), ns("1")));
  CHECK(infinitely_close(ns("0.2", K::Bimonad), ns("0.2")));
}

TEST_CASE("infinitely close pairs stay within a vanishing numeric gap") {
  // Shrinking delta drives the largest representative gap to zero at equal
  // values and leaves it bounded away from zero at distinct values.
  for (double delta : {1e-3, 1e-6, 1e-9}) {
    const auto x = testgen::model(ns("0.2", K::Bimonad), delta);
    const auto y = testgen::model(ns("0.2"), delta);
    CHECK(oracle::max_gap(x, y) <= 2 * delta);
    const auto far = testgen::model(ns("1"), delta);
    CHECK(oracle::max_gap(oracle::model(0.0, oracle::Kind::Std, delta), far) >= 1.0);
  }
}

TEST_CASE("roughly_leq examples") {
  CHECK(roughly_leq(ns("0.5", K::Right), ns("0.5", K::Left)));
  CHECK(roughly_leq(ns("0.2"), ns("0.7")));
  CHECK_FALSE(roughly_leq(ns("0.7"), ns("0.2")));
}

TEST_CASE("min_ns and max_ns") {
  CHECK(min_ns(ns("0.8", K::Left), ns("0.8")) == ns("0.8", K::Left));
  CHECK(min_ns(ns("0.3"), ns("0.9", K::Right)) == ns("0.3"));
  CHECK_THROWS_AS(min_ns(ns("0.5"), ns("0.5", K::Bimonad)), IncomparableOperands);
  CHECK_THROWS_AS(max_ns(ns("0.5", K::Bimonad), ns("0.5")), IncomparableOperands);

  // LeN pairs: the Left-monad side is the minimum, whichever operand order.
  CHECK(min_ns(ns("0.3", K::Bimonad), ns("0.3", K::Left)) == ns("0.3", K::Left));
  CHECK(max_ns(ns("0.3", K::Bimonad), ns("0.3", K::Left)) == ns("0.3", K::Bimonad));
  CHECK(max_ns(ns("0.3", K::Bimonad), ns("0.3", K::Right)) == ns("0.3", K::Right));
  CHECK(max_ns(ns("0.1", K::Left), ns("0.1")) == ns("0.1"));
}

TEST_CASE("add_ns kind table") {
  CHECK(add_ns(ns("1", K::Right), ns("0")) == ns("1", K::Right));
  CHECK(add_ns(ns("0.2", K::Left), ns("0.3", K::Left)) == ns("0.5", K::Left));
  CHECK(add_ns(ns("0.2", K::Left), ns("0.3", K::Right)) == ns("0.5", K::Bimonad));
  CHECK(add_ns(ns("0.2", K::Bimonad), ns("0.3", K::Right)) == ns("0.5", K::Bimonad));
  CHECK(add_ns(ns("0.2", K::Left), ns("0.3", K::Bimonad)) == ns("0.5", K::Bimonad));
  CHECK(add_ns(ns("0.2"), ns("0.3")) == ns("0.5"));
}

TEST_CASE("add_ns agrees with the numeric set sum for every kind pair") {
  testgen::Gen gen(11);
  const double delta = 1e-6;
  for (int n = 0; n < 500; ++n) {
    const NsNumber x = gen.number();
    const NsNumber y = gen.number();
    const NsNumber s = add_ns(x, y);
    const auto numeric = oracle::sum(testgen::model(x, delta), testgen::model(y, delta));
    CAPTURE(to_string(x));
    CAPTURE(to_string(y));
    CHECK(testgen::from_oracle(oracle::shape_around(numeric, to_double(s.value()), delta * 1e-3)) == s.kind());
  }
}

TEST_CASE("scale_ns keeps the kind") {
  CHECK(scale_ns(ns("0.4", K::Right), parse_decimal("0.5")) == ns("0.2", K::Right));
  CHECK_THROWS_AS(scale_ns(ns("0.4"), Real(0)), InvalidArgument);
}

TEST_CASE("order properties") {
  testgen::Gen gen(7);
  for (int n = 0; n < 2000; ++n) {
    // Small grid so equal values are frequent.
    const NsNumber x{gen.grid(0, 4), gen.kind()};
    const NsNumber y{gen.grid(0, 4), gen.kind()};
    const NsNumber z{gen.grid(0, 4), gen.kind()};
    const R xy = compare_ns(x, y);

    CHECK(compare_ns(y, x) == mirror(xy));
    if (x.value() < y.value()) CHECK(xy == R::LtN);
    if (equal_ns(x, y)) CHECK(xy == R::EqN);
    CHECK(equal_ns(x, y) == (xy == R::EqN));

    if (xy == R::LtN && compare_ns(y, z) == R::LtN) CHECK(compare_ns(x, z) == R::LtN);

    // Imamura's relations collapse every kind distinction.
    CHECK(infinitely_close(x, y) == infinitely_close(y, x));
    CHECK((roughly_leq(x, y) && roughly_leq(y, x)) == infinitely_close(x, y));
    CHECK((roughly_leq(x, y) || roughly_leq(y, x)));
    if (roughly_leq(x, y) && roughly_leq(y, z)) CHECK(roughly_leq(x, z));
    if (infinitely_close(x, y) && infinitely_close(y, z)) CHECK(infinitely_close(x, z));
  }
}

TEST_CASE("compare_ns agrees with the delta oracle") {
  testgen::Gen gen(3);
  const double delta = 1e-6;
  int agree = 0;
  const int cases = 5000;
  for (int n = 0; n < cases; ++n) {
    const NsNumber x{gen.grid(0, 20), gen.kind()};
    const NsNumber y{gen.grid(0, 20), gen.kind()};
    const auto expected =
        testgen::to_library(oracle::classify(testgen::model(x, delta), testgen::model(y, delta)));
    if (expected == compare_ns(x, y)) ++agree;
  }
  CHECK(agree == cases);
}
