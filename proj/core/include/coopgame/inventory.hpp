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

#ifndef COOPGAME_INVENTORY_HPP
#define COOPGAME_INVENTORY_HPP

#include <span>
#include <vector>

#include "coopgame/coalition.hpp"
#include "coopgame/padditive.hpp"

namespace coopgame {

/// One firm of an EPQ-with-shortages situation. Replenishment is gradual at
/// rate r, so r > d is required whenever d > 0; additionally 1 - d/r must
/// stay above 1e-12 (instantaneous replenishment is modeled with a large
/// finite r, e.g. 1e9).
struct Firm {
  double d = 0;  // demand rate, units/time, >= 0
  double h = 1;  // holding cost, currency/unit/time, > 0
  double s = 1;  // shortage cost, currency/unit/time, > 0
  double r = 1;  // replacement rate, units/time
};

void validate(const Firm& f);

/// A group of firms sharing one supplier: fixed ordering cost a, one-time
/// unit price discount k on the regular price P, and the discount
/// probability design (alpha, lambda_n) of the non-discriminatory policy.
struct InventorySituation {
  std::vector<Firm> firms;
  double a = 1;         // > 0
  double k = 0;         // 0 <= k <= P
  double P = 1;         // > 0
  double alpha = 1;     // in (0, 1]
  double lambda_n = 1;  // lambda(N), in [0, 1]

  int player_count() const { return static_cast<int>(firms.size()); }
};

void validate(const InventorySituation& sit);

struct EpqPolicy {
  double Q = 0;  // order size
  double M = 0;  // maximum shortage
};

/// Cost-minimizing order size and maximum shortage; (0, 0) when d = 0.
EpqPolicy epq_optimal(const Firm& f, double a);

/// Optimal order frequency d / Q*; zero when d = 0.
double orders_rate(const Firm& f, double a);

/// Cycle cost when a special order (Q, M) is bought at unit price P - k.
/// Zero when d = 0; otherwise requires Q > 0 and 0 <= M <= Q(1 - d/r).
double cost_with_special(const Firm& f, double a, double P, double k, double Q,
                         double M);

/// Cycle cost over the same horizon Q/d when no special order is placed:
/// the first regular order is bought at P - k, the rest at P. Requires
/// d > 0 and Q >= 0.
double cost_without_special(const Firm& f, double a, double P, double k,
                            double Q);

/// The special order maximizing the cost difference; reduces to
/// epq_optimal when k = 0. Requires d > 0.
EpqPolicy special_order(const Firm& f, double a, double k);

/// Optimum saving k^2 d^2 / (4 a m^2); zero when d = 0 or k = 0.
double saving_single(const Firm& f, double a, double k);

/// Joint policy of a coalition: everything is stored in the cheapest
/// warehouse (holding cost hS) and orders are synchronized, so Q[i]/d[i] is
/// the same for every member with demand. Q and M have one entry per player
/// of the situation and are zero outside S.
struct OrderPolicy {
  std::vector<double> Q;
  std::vector<double> M;
  double hS = 0;  // min holding cost over S
  double mS = 0;  // joint order frequency of S, d_j / Q_j
};

OrderPolicy coalition_policy(const InventorySituation& sit, Coalition S);
OrderPolicy coalition_special_order(const InventorySituation& sit,
                                    Coalition S);

/// Maximal joint saving k^2 (sum of demands)^2 / (4 a mS^2); zero when the
/// coalition has no demand.
double coalition_saving(const InventorySituation& sit, Coalition S);

/// Order, waiting and liquidity indices between two coalitions; both need
/// positive total demand.
struct IndexTriple {
  double order = 1;      // m_S / m_T
  double waiting = 1;    // t_S / t_T
  double liquidity = 1;  // l_S / l_T
};

IndexTriple indices(const InventorySituation& sit, Coalition S, Coalition T);

/// lambda(S) of the non-discriminatory design:
/// lambda_n * alpha * mS^2 / mN^2 for proper subsets, lambda_n at N.
/// Throws std::domain_error when the result leaves [0, 1] or the situation
/// has no demand.
double lambda_of(const InventorySituation& sit, Coalition S);

/// The discount benefit game v(S) = K (sum of demands in S)^2 with
/// K = lambda_n * alpha * k^2 / (4 a mN^2); a member of the exponent-1/2
/// class by construction. Throws std::domain_error when mN = 0.
PAdditiveGame build_id_game(const InventorySituation& sit);

/// The joint-ordering cost game c(S) = 2a (sum of m_i^2)^(1/2), a member of
/// the exponent-2 class by construction.
PAdditiveGame build_inventory_cost_game(double a, std::span<const double> m);

}  // namespace coopgame

#endif  // COOPGAME_INVENTORY_HPP
