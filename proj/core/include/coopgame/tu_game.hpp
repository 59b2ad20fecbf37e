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

#ifndef COOPGAME_TU_GAME_HPP
#define COOPGAME_TU_GAME_HPP

#include <vector>

#include "coopgame/coalition.hpp"

namespace coopgame {

/// Whether the characteristic function is read as costs (core constraints
/// bind from above) or benefits (from below).
enum class Orientation { cost, benefit };

const char* to_string(Orientation o);

/// A payoff vector, one entry per player.
struct Allocation {
  std::vector<double> x;

  int player_count() const { return static_cast<int>(x.size()); }
};

/// Sum of allocation entries over the members of S; zero on the empty set.
double allocation_sum(const Allocation& a, Coalition S);

/// A TU game on n players given by its explicit characteristic function,
/// one value per coalition bitmask. Immutable after construction.
class TuGame {
 public:
  static constexpr int kMaxPlayers = 20;

  /// Requires 1 <= n <= 20, exactly 2^n finite values, and value 0 at the
  /// empty coalition.
  TuGame(int n, std::vector<double> values);

  int player_count() const { return n_; }
  Coalition grand_coalition() const { return Coalition::full(n_); }
  std::size_t coalition_count() const { return values_.size(); }

  double value(Coalition S) const { return values_[S.bits()]; }
  const std::vector<double>& values() const { return values_; }

  /// The restriction to the players of S, re-indexed to 0..|S|-1 while
  /// keeping their relative order. S must be nonempty.
  TuGame subgame(Coalition S) const;

 private:
  int n_;
  std::vector<double> values_;
};

TuGame make_game(int n, std::vector<double> values);
TuGame zero_game(int n);

/// The game worth 1 exactly on the coalitions containing T (T nonempty).
TuGame unanimity_game(int n, Coalition T);

/// Coalition-wise (g(S)^p + h(S)^p)^(1/p) for nonzero p, where a zero value
/// contributes nothing to the sum (so the zero game is the neutral element
/// and negative exponents never hit 0^p). Requires matching player counts
/// and nonnegative values in both operands.
TuGame p_sum(const TuGame& g, const TuGame& h, double p);

}  // namespace coopgame

#endif  // COOPGAME_TU_GAME_HPP
