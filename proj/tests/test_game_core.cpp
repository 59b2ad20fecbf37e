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

#include "coopgame/tu_game.hpp"
#include "doctest.h"
#include "test_support.hpp"

using namespace coopgame;
using namespace coopgame::testing;

TEST_SUITE("game_core") {

TEST_CASE("make_game validates its inputs") {
  const TuGame g = harmonic_game();
  CHECK(g.player_count() == 3);
  CHECK(g.value(Coalition::of({0, 1})) == doctest::Approx(1.0 / 3));
  CHECK(g.value(Coalition::empty()) == 0.0);

  CHECK(make_game(1, {0.0, 5.0}).value(Coalition::single(0)) == 5.0);

  CHECK_THROWS_AS(make_game(2, {0.1, 1, 1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(make_game(0, {0.0}), std::invalid_argument);
  CHECK_THROWS_AS(make_game(21, {}), std::invalid_argument);
  CHECK_THROWS_AS(make_game(2, {0.0, 1.0, 1.0}), std::invalid_argument);
  const double nan = std::nan("");
  CHECK_THROWS_AS(make_game(1, {0.0, nan}), std::invalid_argument);
}

TEST_CASE("subgame re-indexes players keeping their order") {
  const TuGame g = harmonic_game();

  const TuGame pair = g.subgame(Coalition::of({0, 1}));
  CHECK(pair.player_count() == 2);
  CHECK(pair.values() == std::vector<double>{0.0, 1.0, 0.5, 1.0 / 3});

  CHECK(g.subgame(g.grand_coalition()).values() == g.values());

  const TuGame tail = harmonic_game_with_null().subgame(Coalition::of({1, 2}));
  CHECK(tail.values() == std::vector<double>{0.0, 0.0, 0.5, 0.5});

  CHECK_THROWS_AS(g.subgame(Coalition::empty()), std::invalid_argument);
  CHECK_THROWS_AS(g.subgame(Coalition::of({0, 4})), std::invalid_argument);
}

TEST_CASE("nested subgames agree with direct restriction") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> value(-2.0, 4.0);
  std::vector<double> values(1u << 6, 0.0);
  for (std::size_t i = 1; i < values.size(); ++i) values[i] = value(rng);
  const TuGame g = make_game(6, values);

  const Coalition T = Coalition::of({0, 2, 3, 5});
  const Coalition S = Coalition::of({2, 5});
  // S's position inside T's re-indexing: members 2,5 are T's slots 1,3
  const Coalition S_in_T = Coalition::of({1, 3});
  CHECK(g.subgame(T).subgame(S_in_T).values() == g.subgame(S).values());
}

TEST_CASE("unanimity games hit exactly the supersets") {
  const TuGame u1 = unanimity_game(2, Coalition::single(0));
  CHECK(u1.values() == std::vector<double>{0, 1, 0, 1});

  const TuGame u12 = unanimity_game(3, Coalition::of({0, 1}));
  for (std::uint32_t m = 0; m < 8; ++m) {
    const bool hit = Coalition::of({0, 1}).subset_of(Coalition(m));
    CHECK(u12.value(Coalition(m)) == (hit ? 1.0 : 0.0));
  }

  CHECK_THROWS_AS(unanimity_game(3, Coalition::empty()), std::invalid_argument);
  CHECK_THROWS_AS(unanimity_game(2, Coalition::of({0, 2})), std::invalid_argument);
}

TEST_CASE("p_sum at p = 1 is the plain sum") {
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> value(0.0, 5.0);
  std::vector<double> a(1u << 4, 0.0), b(1u << 4, 0.0);
  for (std::size_t i = 1; i < a.size(); ++i) {
    a[i] = value(rng);
    b[i] = value(rng);
  }
  const TuGame sum = p_sum(make_game(4, a), make_game(4, b), 1.0);
  for (std::uint32_t m = 0; m < 16; ++m)
    CHECK(close(sum.value(Coalition(m)), a[m] + b[m], 1e-12));
}

TEST_CASE("p_sum basics and errors") {
  const TuGame g = make_game(1, {0.0, 3.0});
  const TuGame h = make_game(1, {0.0, 4.0});
  CHECK(p_sum(g, h, 2.0).value(Coalition::single(0)) == doctest::Approx(5.0));

  // the zero game is a bitwise neutral element
  const TuGame pos = harmonic_game();
  CHECK(p_sum(pos, zero_game(3), -1.0).values() == pos.values());
  CHECK(p_sum(zero_game(3), pos, 0.5).values() == pos.values());

  CHECK_THROWS_AS(p_sum(g, zero_game(2), 1.0), std::invalid_argument);
  CHECK_THROWS_AS(p_sum(make_game(1, {0.0, -1.0}), h, 1.0),
                  std::invalid_argument);
  CHECK_THROWS_AS(p_sum(g, h, 0.0), std::invalid_argument);
}

TEST_CASE("p_sum is commutative and associative") {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> value(0.0, 3.0);
  for (double p : {-1.0, 0.5, 2.0}) {
    std::vector<double> raw[3];
    for (auto& values : raw) {
      values.assign(1u << 3, 0.0);
      for (std::size_t i = 1; i < values.size(); ++i) values[i] = value(rng);
    }
    const TuGame a = make_game(3, raw[0]);
    const TuGame b = make_game(3, raw[1]);
    const TuGame c = make_game(3, raw[2]);
    const TuGame ab = p_sum(a, b, p);
    const TuGame ba = p_sum(b, a, p);
    const TuGame ab_c = p_sum(ab, c, p);
    const TuGame a_bc = p_sum(a, p_sum(b, c, p), p);
    for (std::uint32_t m = 0; m < 8; ++m) {
      CHECK(close(ab.value(Coalition(m)), ba.value(Coalition(m)), 1e-12));
      CHECK(close(ab_c.value(Coalition(m)), a_bc.value(Coalition(m)), 1e-12));
    }
  }
}

TEST_CASE("allocation_sum") {
  const Allocation sigma{{1.0 / 36, 2.0 / 36, 3.0 / 36}};
  CHECK(close(allocation_sum(sigma, Coalition::full(3)), 1.0 / 6, 1e-15));
  CHECK(allocation_sum(sigma, Coalition::empty()) == 0.0);

  const Allocation mixed{{1.0, -2.0, 0.5}};
  CHECK(allocation_sum(mixed, Coalition::of({0, 2})) == doctest::Approx(1.5));
}

TEST_CASE("coalition helpers") {
  const Coalition s = Coalition::of({0, 2});
  CHECK(s.size() == 2);
  CHECK(s.contains(2));
  CHECK(!s.contains(1));
  CHECK(s.subset_of(Coalition::full(3)));
  CHECK(s.to_string() == "{1,3}");
  CHECK(Coalition::empty().to_string() == "{}");
  CHECK((s | Coalition::single(1)) == Coalition::full(3));
  CHECK((Coalition::full(3) - s) == Coalition::single(1));
  CHECK(s.labels() == std::vector<int>{1, 3});
}

}  // TEST_SUITE
