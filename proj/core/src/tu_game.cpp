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

#include "coopgame/tu_game.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace coopgame {

const char* to_string(Orientation o) {
  return o == Orientation::cost ? "cost" : "benefit";
}

double allocation_sum(const Allocation& a, Coalition S) {
  double total = 0;
  for (std::uint32_t b = S.bits(); b != 0; b &= b - 1)
    total += a.x[static_cast<std::size_t>(std::countr_zero(b))];
  return total;
}

TuGame::TuGame(int n, std::vector<double> values)
    : n_(n), values_(std::move(values)) {
  if (n < 1 || n > kMaxPlayers)
    throw std::invalid_argument("player count must be in [1, " +
                                std::to_string(kMaxPlayers) + "], got " +
                                std::to_string(n));
  if (values_.size() != (std::size_t{1} << n))
    throw std::invalid_argument("expected 2^n coalition values, got " +
                                std::to_string(values_.size()));
  if (values_[0] != 0.0)
    throw std::invalid_argument("the empty coalition must be worth 0");
  for (double v : values_)
    if (!std::isfinite(v))
      throw std::invalid_argument("coalition values must be finite");
}

TuGame TuGame::subgame(Coalition S) const {
  if (S.is_empty()) throw std::invalid_argument("subgame of the empty coalition");
  if (!S.subset_of(grand_coalition()))
    throw std::invalid_argument("subgame coalition exceeds the player set");
  const std::vector<int> players = S.members();
  const int s = static_cast<int>(players.size());
  std::vector<double> sub(std::size_t{1} << s);
  for (std::uint32_t m = 0; m < sub.size(); ++m) {
    std::uint32_t original = 0;
    for (int j = 0; j < s; ++j)
      if ((m >> j) & 1u) original |= 1u << players[static_cast<std::size_t>(j)];
    sub[m] = values_[original];
  }
  return TuGame(s, std::move(sub));
}

TuGame make_game(int n, std::vector<double> values) {
  return TuGame(n, std::move(values));
}

TuGame zero_game(int n) {
  return TuGame(n, std::vector<double>(std::size_t{1} << n, 0.0));
}

TuGame unanimity_game(int n, Coalition T) {
  if (T.is_empty())
    throw std::invalid_argument("unanimity game needs a nonempty coalition");
  if (!T.subset_of(Coalition::full(n)))
    throw std::invalid_argument("unanimity coalition exceeds the player set");
  std::vector<double> values(std::size_t{1} << n, 0.0);
  for (std::uint32_t m = 0; m < values.size(); ++m)
    if (T.subset_of(Coalition(m))) values[m] = 1.0;
  return TuGame(n, std::move(values));
}

namespace detail {

// (a^p + b^p)^(1/p) where a zero operand contributes nothing; exact
// pass-through keeps the zero game a bitwise neutral element.
double p_combine(double a, double b, double p) {
  if (a == 0.0) return b;
  if (b == 0.0) return a;
  return std::pow(std::pow(a, p) + std::pow(b, p), 1.0 / p);
}

}  // namespace detail

TuGame p_sum(const TuGame& g, const TuGame& h, double p) {
  if (p == 0.0) throw std::invalid_argument("p-sum needs a nonzero exponent");
  if (g.player_count() != h.player_count())
    throw std::invalid_argument("p-sum operands have different player counts");
  std::vector<double> values(g.coalition_count());
  for (std::uint32_t m = 0; m < values.size(); ++m) {
    const double a = g.value(Coalition(m));
    const double b = h.value(Coalition(m));
    if (a < 0.0 || b < 0.0)
      throw std::invalid_argument("p-sum operands must be nonnegative");
    values[m] = detail::p_combine(a, b, p);
  }
  return TuGame(g.player_count(), std::move(values));
}

}  // namespace coopgame
