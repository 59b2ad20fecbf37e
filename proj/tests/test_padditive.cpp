// Copyright 2026 The coopgame Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <random>
#include <stdexcept>

#include "coopgame/padditive.hpp"
#include "coopgame/verify.hpp"
#include "doctest.h"
#include "test_support.hpp"

using namespace coopgame;
using namespace coopgame::testing;

TEST_SUITE("padditive") {

TEST_CASE("implied values from individual values") {
  const PAdditiveGame g = harmonic_padditive();
  CHECK(close(g.value(Coalition::of({0, 1})), 1.0 / 3, 1e-12));
  CHECK(close(g.value(Coalition::of({0, 2})), 1.0 / 4, 1e-12));
  CHECK(close(g.value(Coalition::full(3)), 1.0 / 6, 1e-12));
  CHECK(g.value(Coalition::empty()) == 0.0);

  const PAdditiveGame h = harmonic_padditive_with_null();
  CHECK(close(h.value(Coalition::of({0, 1})), 1.0, 1e-12));  // null player idles
  CHECK(close(h.value(Coalition::full(3)), 1.0 / 3, 1e-12));

  const PAdditiveGame single(2.0, {7.0});
  CHECK(single.value(Coalition::single(0)) == 7.0);

  const PAdditiveGame sqrt_class(0.5, {1.0, 4.0});
  CHECK(close(sqrt_class.value(Coalition::full(2)), 9.0, 1e-12));

  CHECK_THROWS_AS(PAdditiveGame(0.0, {1.0}), std::invalid_argument);
  CHECK_THROWS_AS(PAdditiveGame(1.0, {-0.5}), std::invalid_argument);
}

TEST_CASE("the zero game is normalized to exponent 2") {
  const PAdditiveGame zero(-1.0, {0.0, 0.0});
  CHECK(zero.is_zero());
  CHECK(zero.exponent() == 2.0);
  CHECK(zero.exponent_normalized());
  CHECK(zero.value(Coalition::full(2)) == 0.0);

  CHECK(!PAdditiveGame(2.0, {0.0, 0.0}).exponent_normalized());
}

TEST_CASE("support sets") {
  const PAdditiveGame h = harmonic_padditive_with_null();
  CHECK(h.positive_support() == Coalition::of({0, 2}));
  CHECK(h.support(Coalition::of({1})) == Coalition::empty());
  CHECK(harmonic_padditive().support(Coalition::of({1, 2})) ==
        Coalition::of({1, 2}));
  CHECK(PAdditiveGame(2.0, {0.0}).positive_support() == Coalition::empty());
}

TEST_CASE("value only sees the support") {
  std::mt19937_64 rng(41);
  for (double p : {-2.0, -0.5, 0.7, 2.0}) {
    const PAdditiveGame g = random_padditive(rng, p, 6, 4);
    for (std::uint32_t m = 0; m < (1u << 6); ++m)
      CHECK(g.value(Coalition(m)) == g.value(g.support(Coalition(m))));
  }
}

TEST_CASE("membership of the worked examples") {
  CHECK(validate_membership(harmonic_game(), -1.0).member);
  CHECK(validate_membership(harmonic_game_with_null(), -1.0).member);

  const MembershipResult wrong_p = validate_membership(harmonic_game(), 1.0);
  CHECK(!wrong_p.member);
  CHECK(*wrong_p.violator == Coalition::of({0, 1}));

  for (double p : {-1.0, 0.5, 2.0}) {
    const MembershipResult u = validate_membership(
        unanimity_game(3, Coalition::of({0, 1})), p);
    CHECK(!u.member);
    CHECK(*u.violator == Coalition::of({0, 1}));
  }
  // one-player unanimity games do belong, at every exponent
  for (double p : {-1.0, 0.5, 2.0})
    CHECK(validate_membership(unanimity_game(3, Coalition::single(1)), p).member);

  CHECK_THROWS_AS(validate_membership(harmonic_game(), 0.0),
                  std::invalid_argument);
}

TEST_CASE("expansions validate and stay closed under subgames") {
  std::mt19937_64 rng(43);
  for (double p : {-2.0, -1.0, -0.5, 0.5, 1.0, 1.5, 2.0}) {
    for (int trial = 0; trial < 12; ++trial) {
      const int n = 3 + static_cast<int>(rng() % 4);
      const int positive = 1 + static_cast<int>(rng() % n);
      const PAdditiveGame g = random_padditive(rng, p, n, positive);
      const TuGame expanded = g.expand();
      CHECK(validate_membership(expanded, g.exponent()).member);
      const std::uint32_t full = Coalition::full(n).bits();
      const Coalition sub(1u + static_cast<std::uint32_t>(rng()) % full);
      CHECK(validate_membership(expanded.subgame(sub), g.exponent()).member);
    }
  }
}

TEST_CASE("monotonicity by the sign of the exponent") {
  std::mt19937_64 rng(47);
  // p > 0: set inclusion never decreases the worth
  for (double p : {0.4, 1.0, 2.5}) {
    const PAdditiveGame g = random_padditive(rng, p, 8, 5);
    const TuGame e = g.expand();
    CHECK(is_monotone(e, MonotoneDirection::increasing, false).verdict);
  }
  // p < 0 with every singleton positive: strictly decreasing
  for (double p : {-2.0, -0.5}) {
    const PAdditiveGame g = random_padditive(rng, p, 7, 7);
    CHECK(is_monotone(g.expand(), MonotoneDirection::decreasing, true).verdict);
  }
  // p < 0 generally: support worth shrinks along inclusion, wherever the
  // smaller coalition still has supported members
  for (int trial = 0; trial < 8; ++trial) {
    const PAdditiveGame g = random_padditive(rng, -1.0, 6, 4);
    for (std::uint32_t t = 1; t < (1u << 6); ++t)
      for (std::uint32_t s = t; ; s = (s - 1) & t) {
        if (s != 0 && !g.support(Coalition(s)).is_empty()) {
          const double ws = g.value(g.support(Coalition(s)));
          const double wt = g.value(g.support(Coalition(t)));
          CHECK(wt <= ws + 1e-12);
        }
        if (s == 0) break;
      }
  }
}

TEST_CASE("classify reports the class table") {
  const ClassProfile cost2 = classify(2.0);
  CHECK(cost2.concave);
  CHECK(!cost2.convex);
  CHECK(cost2.monotone_increasing);
  CHECK(cost2.subadditive);
  CHECK(cost2.totally_balanced);
  CHECK(cost2.interpretation == Orientation::cost);

  const ClassProfile half = classify(0.5);
  CHECK(half.convex);
  CHECK(!half.concave);
  CHECK(half.superadditive);
  CHECK(half.interpretation == Orientation::benefit);

  const ClassProfile neg = classify(-1.0);
  CHECK(neg.subadditive);
  CHECK(neg.totally_balanced);
  CHECK(!neg.concave);  // conditional for p < 0, not a class flag
  CHECK(neg.monotone_strictly_decreasing_iff_positive);
  CHECK(neg.interpretation == Orientation::cost);

  const ClassProfile one = classify(1.0);
  CHECK(one.convex);
  CHECK(one.concave);
  CHECK(one.subadditive);
  CHECK(one.superadditive);

  CHECK_THROWS_AS(classify(0.0), std::invalid_argument);

  CHECK(inferred_orientation(2.0) == Orientation::cost);
  CHECK(inferred_orientation(-0.5) == Orientation::cost);
  CHECK(inferred_orientation(0.5) == Orientation::benefit);
  CHECK(inferred_orientation(1.0) == Orientation::cost);
}

TEST_CASE("class flags agree with the brute-force oracles") {
  std::mt19937_64 rng(53);
  for (double p : {-2.0, -1.0, -0.5, 0.5, 1.0, 1.5, 2.0}) {
    for (int trial = 0; trial < 15; ++trial) {
      const int n = 3 + static_cast<int>(rng() % 3);
      if (p > 0) {
        const TuGame e = random_padditive(rng, p, n).expand();
        CHECK(is_monotone(e, MonotoneDirection::increasing, false).verdict);
        CHECK(is_convex(e).verdict == (p <= 1.0));
        CHECK(is_concave(e).verdict == (p >= 1.0));
        CHECK(is_subadditive(e).verdict == (p >= 1.0));
        CHECK(is_superadditive(e).verdict == (p <= 1.0));
      } else {
        const int positive = 1 + static_cast<int>(rng() % n);
        const PAdditiveGame g = random_padditive(rng, p, n, positive);
        const TuGame e = g.expand();
        CHECK(is_subadditive(e).verdict);
        CHECK(is_totally_balanced(e, Orientation::cost).verdict);
        CHECK(is_concave(e).verdict == (g.positive_support().size() <= 2));
      }
    }
  }
}

TEST_CASE("unanimity decomposition") {
  CHECK(decompose_unanimity(harmonic_padditive()) ==
        std::vector<double>{1.0, 0.5, 1.0 / 3});

  const PAdditiveGame zero(-1.0, {0.0, 0.0, 0.0});
  CHECK(decompose_unanimity(zero) == std::vector<double>{0.0, 0.0, 0.0});

  const PAdditiveGame pyth(2.0, {3.0, 4.0});
  const std::vector<double> alphas = decompose_unanimity(pyth);
  CHECK(alphas == std::vector<double>{3.0, 4.0});
  CHECK(close(pyth.value(Coalition::full(2)), 5.0, 1e-12));
}

TEST_CASE("padditive p_sum stays in the class") {
  std::mt19937_64 rng(59);
  for (double p : {-1.0, 0.5, 2.0}) {
    const PAdditiveGame a = random_padditive(rng, p, 4, 3);
    const PAdditiveGame b = random_padditive(rng, p, 4, 4);
    const PAdditiveGame c = p_sum(a, b);
    CHECK(c.exponent() == p);
    CHECK(validate_membership(c.expand(), p).member);
    // matches the coalition-wise p-sum of the expansions
    const TuGame direct = p_sum(a.expand(), b.expand(), p);
    for (std::uint32_t m = 0; m < c.expand().coalition_count(); ++m)
      CHECK(close(c.value(Coalition(m)), direct.value(Coalition(m)), 1e-9));

    const PAdditiveGame zero(p == -1.0 ? 2.0 : p, std::vector<double>(4, 0.0));
    CHECK(p_sum(a, zero).singletons() == a.singletons());
  }
  CHECK_THROWS_AS(p_sum(PAdditiveGame(2.0, {1.0}), PAdditiveGame(3.0, {1.0})),
                  std::invalid_argument);
}

}  // TEST_SUITE
