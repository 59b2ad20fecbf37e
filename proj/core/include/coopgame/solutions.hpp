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

#ifndef COOPGAME_SOLUTIONS_HPP
#define COOPGAME_SOLUTIONS_HPP

#include <functional>
#include <string>
#include <vector>

#include "coopgame/padditive.hpp"
#include "coopgame/tu_game.hpp"

namespace coopgame {

/// A deterministic one-point solution on the exponent-p classes.
struct Solution {
  std::string name;
  /// The axiom this rule is documented to break ("EF", "NP", "PT", "PMO");
  /// empty for the modified SOC-rule itself.
  std::string documented_violation;
  std::function<Allocation(const PAdditiveGame&)> apply;
};

/// Splits w(N) proportionally to the singleton values raised to p:
/// sigma_i = w({i})^p * (sum over the positive support of w({j})^p)^(1/p - 1)
/// for supported players, 0 otherwise; the zero game pays nothing.
Allocation modified_soc(const PAdditiveGame& g);

/// Coalition-indexed family of payoff vectors. rows[mask] lists the payoffs
/// of the members of mask in ascending player order; memory grows as 2^n.
struct Pmas {
  int n = 0;
  std::vector<std::vector<double>> rows;

  const std::vector<double>& at(Coalition S) const {
    return rows[S.bits()];
  }
  /// Payoff of a member of S (0 for non-members).
  double payoff(Coalition S, int player) const;
};

/// The scheme y_i^S = w({i})^p (sum over S's positive support of
/// w({j})^p)^(1/p - 1); its row at N is the modified SOC-rule.
Pmas pmas_soc(const PAdditiveGame& g);

/// Exact Shapley value by coalition enumeration; n <= 12.
Allocation shapley(const TuGame& g);

Solution modified_soc_solution();

/// The six one-point rules that separate the axioms: each breaks exactly
/// the axiom recorded in documented_violation and keeps the other two of
/// its characterization triple.
std::vector<Solution> builtin_counterexamples();

/// w(N)^(p-1) with the game's own stored exponent, so the zero game
/// contributes an exact 0 to transfer and monotonicity comparisons.
double transfer_weight(const PAdditiveGame& g);

/// |sum of payoffs - w(N)| <= tol * max(1, |w(N)|).
bool check_efficiency(const Solution& sol, const PAdditiveGame& g,
                      double tol = 1e-9);

/// Every player with w({i}) = 0 receives at most tol in absolute value.
bool check_null_player(const Solution& sol, const PAdditiveGame& g,
                       double tol = 1e-12);

/// Weighted additivity across the p-sum: for every player,
/// (g+h)(N)^(p-1) phi_i(g+h) = g(N)^(p-1) phi_i(g) + h(N)^(p-1) phi_i(h)
/// within tol * scale, scale = max(1, |w(N)|^|p-1|) over the games.
bool check_p_transfer(const Solution& sol, const PAdditiveGame& g,
                      const PAdditiveGame& h, double tol = 1e-9);

/// Weighted monotonicity in the singleton values. For p > 0: whenever
/// g's singleton dominates h's, the weighted payoff must not fall below
/// h's (minus tol * scale). For p < 0 the map x -> x^p reverses order, so
/// only the order-free consequence is checkable: players with equal
/// singletons must get equal weighted payoffs.
bool check_p_monotonicity(const Solution& sol, const PAdditiveGame& g,
                          const PAdditiveGame& h, double tol = 1e-9);

}  // namespace coopgame

#endif  // COOPGAME_SOLUTIONS_HPP
