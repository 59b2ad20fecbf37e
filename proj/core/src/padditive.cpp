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

#include "coopgame/padditive.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "p_arith.hpp"

namespace coopgame {

PAdditiveGame::PAdditiveGame(double p, std::vector<double> singletons)
    : p_(p), singletons_(std::move(singletons)) {
  if (p == 0.0 || !std::isfinite(p))
    throw std::invalid_argument("the class exponent must be a nonzero real");
  const int n = player_count();
  if (n < 1 || n > TuGame::kMaxPlayers)
    throw std::invalid_argument("player count out of range");
  bool all_zero = true;
  for (double v : singletons_) {
    if (!(v >= 0.0) || !std::isfinite(v))
      throw std::invalid_argument("singleton values must be nonnegative reals");
    if (v > 0.0) all_zero = false;
  }
  if (all_zero && p_ != 2.0) {
    p_ = 2.0;
    normalized_ = true;
  }
}

bool PAdditiveGame::is_zero() const {
  return std::all_of(singletons_.begin(), singletons_.end(),
                     [](double v) { return v == 0.0; });
}

double PAdditiveGame::value(Coalition S) const {
  double sum = 0;
  bool any = false;
  for (std::uint32_t b = S.bits(); b != 0; b &= b - 1) {
    const double v = singletons_[static_cast<std::size_t>(std::countr_zero(b))];
    if (v > 0.0) {
      sum += std::pow(v, p_);
      any = true;
    }
  }
  return any ? std::pow(sum, 1.0 / p_) : 0.0;
}

Coalition PAdditiveGame::support(Coalition S) const {
  std::uint32_t out = 0;
  for (std::uint32_t b = S.bits(); b != 0; b &= b - 1) {
    const int i = std::countr_zero(b);
    if (singletons_[static_cast<std::size_t>(i)] > 0.0) out |= 1u << i;
  }
  return Coalition(out);
}

Coalition PAdditiveGame::positive_support() const {
  return support(Coalition::full(player_count()));
}

TuGame PAdditiveGame::expand() const {
  const int n = player_count();
  std::vector<double> powers(singletons_.size(), 0.0);
  for (std::size_t i = 0; i < singletons_.size(); ++i)
    if (singletons_[i] > 0.0) powers[i] = std::pow(singletons_[i], p_);
  std::vector<double> values(std::size_t{1} << n, 0.0);
  for (std::uint32_t m = 1; m < values.size(); ++m) {
    double sum = 0;
    bool any = false;
    for (std::uint32_t b = m; b != 0; b &= b - 1) {
      const int i = std::countr_zero(b);
      if (singletons_[static_cast<std::size_t>(i)] > 0.0) {
        sum += powers[static_cast<std::size_t>(i)];
        any = true;
      }
    }
    values[m] = any ? std::pow(sum, 1.0 / p_) : 0.0;
  }
  return TuGame(n, std::move(values));
}

PAdditiveGame from_individual_values(double p, std::vector<double> singletons) {
  return PAdditiveGame(p, std::move(singletons));
}

PAdditiveGame p_sum(const PAdditiveGame& a, const PAdditiveGame& b) {
  if (a.player_count() != b.player_count())
    throw std::invalid_argument("p-sum operands have different player counts");
  double p;
  if (a.is_zero())
    p = b.exponent();
  else if (b.is_zero())
    p = a.exponent();
  else if (a.exponent() == b.exponent())
    p = a.exponent();
  else
    throw std::invalid_argument("p-sum operands must share their exponent");
  std::vector<double> singles(static_cast<std::size_t>(a.player_count()));
  for (int i = 0; i < a.player_count(); ++i)
    singles[static_cast<std::size_t>(i)] =
        detail::p_combine(a.singleton(i), b.singleton(i), p);
  return PAdditiveGame(p, std::move(singles));
}

ClassProfile classify(double p) {
  if (p == 0.0 || !std::isfinite(p))
    throw std::invalid_argument("classify needs a nonzero real exponent");
  ClassProfile c;
  c.totally_balanced = true;
  if (p < 0) {
    c.monotone_strictly_decreasing_iff_positive = true;
    c.subadditive = true;
    c.interpretation = Orientation::cost;
  } else {
    c.monotone_increasing = true;
    c.convex = p <= 1.0;
    c.concave = p >= 1.0;
    c.subadditive = p >= 1.0;
    c.superadditive = p <= 1.0;
    c.interpretation = p >= 1.0 ? Orientation::cost : Orientation::benefit;
  }
  return c;
}

Orientation inferred_orientation(double p) {
  if (p == 0.0 || !std::isfinite(p))
    throw std::invalid_argument("orientation needs a nonzero real exponent");
  return (p >= 1.0 || p < 0.0) ? Orientation::cost : Orientation::benefit;
}

MembershipResult validate_membership(const TuGame& g, double p, double tol) {
  if (p == 0.0 || !std::isfinite(p))
    throw std::invalid_argument("membership needs a nonzero real exponent");
  const int n = g.player_count();
  double scale = 1.0;
  for (double v : g.values()) scale = std::max(scale, std::abs(v));
  const double thr = tol * scale;

  std::vector<double> powers(static_cast<std::size_t>(n), 0.0);
  std::vector<bool> positive(static_cast<std::size_t>(n), false);
  for (int i = 0; i < n; ++i) {
    const double v = g.value(Coalition::single(i));
    if (v > thr) {
      positive[static_cast<std::size_t>(i)] = true;
      powers[static_cast<std::size_t>(i)] = std::pow(v, p);
    }
  }

  for (std::uint32_t m = 1; m < g.coalition_count(); ++m) {
    const double v = g.value(Coalition(m));
    if (v < -thr) return {false, Coalition(m)};
    double sum = 0;
    bool any = false;
    for (std::uint32_t b = m; b != 0; b &= b - 1) {
      const auto i = static_cast<std::size_t>(std::countr_zero(b));
      if (positive[i]) {
        sum += powers[i];
        any = true;
      }
    }
    if (!any) {
      // every member is (numerically) worthless, so S must be too
      if (v > thr) return {false, Coalition(m)};
      continue;
    }
    if (v <= 0.0) return {false, Coalition(m)};
    const double vp = std::pow(v, p);
    if (!std::isfinite(vp) || std::abs(vp - sum) > tol * std::max(1.0, std::abs(vp)))
      return {false, Coalition(m)};
  }
  return {true, std::nullopt};
}

std::vector<double> decompose_unanimity(const PAdditiveGame& g) {
  const int n = g.player_count();
  const double p = g.exponent();
  std::vector<double> alphas = g.singletons();

  // Rebuild the game as the literal p-sum of the scaled one-player
  // unanimity games and compare against the expansion.
  TuGame rebuilt = zero_game(n);
  for (int i = 0; i < n; ++i) {
    const double alpha = alphas[static_cast<std::size_t>(i)];
    if (alpha == 0.0) continue;
    TuGame scaled = unanimity_game(n, Coalition::single(i));
    std::vector<double> values = scaled.values();
    for (double& v : values) v *= alpha;
    rebuilt = p_sum(rebuilt, TuGame(n, std::move(values)), p);
  }
  const TuGame expanded = g.expand();
  for (std::uint32_t m = 0; m < expanded.coalition_count(); ++m) {
    const double want = expanded.value(Coalition(m));
    const double got = rebuilt.value(Coalition(m));
    if (std::abs(want - got) > 1e-9 * std::max(1.0, std::abs(want)))
      throw std::domain_error(
          "unanimity reconstruction drifted beyond 1e-9 at coalition " +
          Coalition(m).to_string());
  }
  return alphas;
}

}  // namespace coopgame
