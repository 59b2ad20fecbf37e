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

#ifndef COOPGAME_TESTS_TEST_SUPPORT_HPP
#define COOPGAME_TESTS_TEST_SUPPORT_HPP

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <utility>
#include <vector>

#include "coopgame/inventory.hpp"
#include "coopgame/padditive.hpp"
#include "coopgame/tu_game.hpp"

namespace coopgame::testing {

inline bool close(double a, double b, double tol) {
  return std::abs(a - b) <= tol * std::max({1.0, std::abs(a), std::abs(b)});
}

inline bool close_abs(double a, double b, double tol) {
  return std::abs(a - b) <= tol;
}

// The two 3-player games of the negative-exponent class used throughout:
// singleton values (1, 1/2, 1/3), resp. (1, 0, 1/2), both with p = -1.

inline TuGame harmonic_game() {
  return make_game(3, {0.0, 1.0, 0.5, 1.0 / 3, 1.0 / 3, 0.25, 0.2, 1.0 / 6});
}

inline TuGame harmonic_game_with_null() {
  return make_game(3, {0.0, 1.0, 0.0, 1.0, 0.5, 1.0 / 3, 0.5, 1.0 / 3});
}

inline PAdditiveGame harmonic_padditive() {
  return PAdditiveGame(-1.0, {1.0, 0.5, 1.0 / 3});
}

inline PAdditiveGame harmonic_padditive_with_null() {
  return PAdditiveGame(-1.0, {1.0, 0.0, 0.5});
}

// ---------------------------------------------------------------------------
// generators

inline std::vector<double> random_singletons(std::mt19937_64& rng, int n,
                                             int positive_count) {
  std::uniform_real_distribution<double> value(0.2, 3.0);
  std::vector<double> out(static_cast<std::size_t>(n), 0.0);
  std::vector<int> idx(static_cast<std::size_t>(n));
  std::iota(idx.begin(), idx.end(), 0);
  std::shuffle(idx.begin(), idx.end(), rng);
  for (int i = 0; i < positive_count; ++i)
    out[static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])] = value(rng);
  return out;
}

inline PAdditiveGame random_padditive(std::mt19937_64& rng, double p, int n,
                                      int positive_count = -1) {
  if (positive_count < 0) positive_count = n;
  return PAdditiveGame(p, random_singletons(rng, n, positive_count));
}

// A pair sharing at least one singleton and differing in at least one; the
// shape that makes weighted-monotonicity checks bite.
inline std::pair<PAdditiveGame, PAdditiveGame> related_pair(
    std::mt19937_64& rng, double p, int n) {
  std::uniform_real_distribution<double> value(0.2, 3.0);
  std::vector<double> a(static_cast<std::size_t>(n));
  for (double& v : a) v = value(rng);
  std::vector<double> b = a;
  const std::size_t keep = rng() % static_cast<std::size_t>(n);
  for (std::size_t i = 0; i < b.size(); ++i)
    if (i != keep) b[i] = value(rng);
  return {PAdditiveGame(p, a), PAdditiveGame(p, b)};
}

inline Firm random_firm(std::mt19937_64& rng, bool allow_zero_demand = false) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  Firm f;
  f.d = allow_zero_demand && u(rng) < 0.2 ? 0.0 : 0.5 + 7.5 * u(rng);
  f.h = 0.5 + 3.5 * u(rng);
  f.s = 0.5 + 3.5 * u(rng);
  f.r = u(rng) < 0.3 ? 1e9 : std::max(f.d, 0.5) * (1.5 + 10.0 * u(rng));
  return f;
}

inline InventorySituation random_situation(std::mt19937_64& rng, int n,
                                           bool equal_holding = false,
                                           bool allow_zero_demand = false) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  InventorySituation sit;
  const double shared_h = 0.5 + 3.5 * u(rng);
  for (int i = 0; i < n; ++i) {
    Firm f = random_firm(rng, allow_zero_demand);
    if (equal_holding) f.h = shared_h;
    sit.firms.push_back(f);
  }
  sit.a = 0.5 + 3.5 * u(rng);
  sit.k = 0.1 + 1.4 * u(rng);
  sit.P = sit.k + 1.0 + 9.0 * u(rng);
  sit.alpha = 0.1 + 0.9 * u(rng);
  sit.lambda_n = 0.1 + 0.9 * u(rng);
  return sit;
}

// ---------------------------------------------------------------------------
// independent oracles (test-side only)

// Shapley by direct permutation average, n <= 6.
inline Allocation shapley_by_permutations(const TuGame& g) {
  const int n = g.player_count();
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  Allocation out;
  out.x.assign(static_cast<std::size_t>(n), 0.0);
  double count = 0;
  do {
    std::uint32_t seen = 0;
    for (int i : order) {
      const double before = g.value(Coalition(seen));
      seen |= 1u << i;
      out.x[static_cast<std::size_t>(i)] += g.value(Coalition(seen)) - before;
    }
    count += 1;
  } while (std::next_permutation(order.begin(), order.end()));
  for (double& v : out.x) v /= count;
  return out;
}

// Joint cycle cost of a coalition with a special order of cycle length t
// (member order sizes t * d_j) and shortages M; and without one, priced at
// the coalition's regular policy. The difference is the quantity the joint
// special order maximizes.
inline double coalition_saving_at(const InventorySituation& sit, Coalition S,
                                  double t, const std::vector<double>& M) {
  const OrderPolicy base = coalition_policy(sit, S);
  double special = sit.a;
  double regular = 0;
  // a Q_i / Qhat_i^* = a t / t^*, with t^* the regular joint cycle
  double t_star = 0;
  for (int i : S.members()) {
    const Firm& f = sit.firms[static_cast<std::size_t>(i)];
    if (f.d > 0) {
      t_star = base.Q[static_cast<std::size_t>(i)] / f.d;
      break;
    }
  }
  regular += sit.a * t / t_star;
  for (int i : S.members()) {
    const Firm& f = sit.firms[static_cast<std::size_t>(i)];
    if (f.d == 0.0) continue;
    const auto idx = static_cast<std::size_t>(i);
    const double beta = 1.0 - f.d / f.r;
    const double Q = t * f.d;
    const double Qs = base.Q[idx];
    const double Ms = base.M[idx];
    special += t * base.hS * (Q * beta - M[idx]) * (Q * beta - M[idx]) /
               (2.0 * Q * beta);
    special += t * f.s * M[idx] * M[idx] / (2.0 * Q * beta);
    special += (sit.P - sit.k) * Q;
    regular += t * base.hS * (Qs * beta - Ms) * (Qs * beta - Ms) /
               (2.0 * Qs * beta);
    regular += t * f.s * Ms * Ms / (2.0 * Qs * beta);
    regular += (sit.P - sit.k) * Qs + sit.P * (Q - Qs);
  }
  return regular - special;
}

}  // namespace coopgame::testing

#endif  // COOPGAME_TESTS_TEST_SUPPORT_HPP
