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

#include "coopgame/inventory.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace coopgame {

namespace {

// Fraction of an order cycle spent accumulating stock.
double beta(const Firm& f) { return 1.0 - f.d / f.r; }

void require(bool ok, const char* message) {
  if (!ok) throw std::invalid_argument(message);
}

double total_demand(const InventorySituation& sit, Coalition S) {
  double sum = 0;
  for (int i : S.members()) sum += sit.firms[static_cast<std::size_t>(i)].d;
  return sum;
}

}  // namespace

void validate(const Firm& f) {
  require(std::isfinite(f.d) && f.d >= 0.0, "demand rate must be >= 0");
  require(std::isfinite(f.h) && f.h > 0.0, "holding cost must be > 0");
  require(std::isfinite(f.s) && f.s > 0.0, "shortage cost must be > 0");
  require(std::isfinite(f.r), "replacement rate must be finite");
  if (f.d > 0.0) {
    require(f.r > f.d, "replacement rate must exceed demand");
    require(beta(f) > 1e-12, "1 - d/r too close to zero");
  }
}

void validate(const InventorySituation& sit) {
  require(!sit.firms.empty(), "a situation needs at least one firm");
  require(sit.firms.size() <= TuGame::kMaxPlayers, "too many firms");
  for (const Firm& f : sit.firms) validate(f);
  require(std::isfinite(sit.a) && sit.a > 0.0, "ordering cost must be > 0");
  require(std::isfinite(sit.P) && sit.P > 0.0, "regular price must be > 0");
  require(std::isfinite(sit.k) && sit.k >= 0.0 && sit.k <= sit.P,
          "discount must satisfy 0 <= k <= P");
  require(std::isfinite(sit.alpha) && sit.alpha > 0.0 && sit.alpha <= 1.0,
          "alpha must lie in (0, 1]");
  require(std::isfinite(sit.lambda_n) && sit.lambda_n >= 0.0 &&
              sit.lambda_n <= 1.0,
          "lambda(N) must lie in [0, 1]");
}

EpqPolicy epq_optimal(const Firm& f, double a) {
  require(a > 0.0, "ordering cost must be > 0");
  if (f.d == 0.0) return {0.0, 0.0};
  const double b = beta(f);
  const double Q = std::sqrt(2.0 * a * f.d / (f.h * b) * (f.h + f.s) / f.s);
  const double M = std::sqrt(2.0 * a * f.d * f.h * b / (f.s * (f.h + f.s)));
  return {Q, M};
}

double orders_rate(const Firm& f, double a) {
  require(a > 0.0, "ordering cost must be > 0");
  if (f.d == 0.0) return 0.0;
  return f.d / epq_optimal(f, a).Q;
}

double cost_with_special(const Firm& f, double a, double P, double k, double Q,
                         double M) {
  require(a > 0.0, "ordering cost must be > 0");
  if (f.d == 0.0) return 0.0;
  const double b = beta(f);
  require(Q > 0.0, "order size must be positive");
  require(M >= 0.0 && M <= Q * b * (1.0 + 1e-12),
          "shortage must satisfy 0 <= M <= Q(1 - d/r)");
  const double hold = f.h * (Q * b - M) * (Q * b - M) / (2.0 * f.d * b);
  const double shortage = f.s * M * M / (2.0 * f.d * b);
  return a + hold + shortage + (P - k) * Q;
}

double cost_without_special(const Firm& f, double a, double P, double k,
                            double Q) {
  require(f.d > 0.0, "demand must be positive");
  require(Q >= 0.0, "order size must be >= 0");
  const double b = beta(f);
  const auto [Qs, Ms] = epq_optimal(f, a);
  const double per_cycle =
      (f.h * (Qs * b - Ms) * (Qs * b - Ms) + f.s * Ms * Ms) / (2.0 * Qs * b);
  return a * Q / Qs + Q / f.d * per_cycle + (P - k) * Qs + P * (Q - Qs);
}

EpqPolicy special_order(const Firm& f, double a, double k) {
  require(f.d > 0.0, "demand must be positive");
  require(k >= 0.0, "discount must be >= 0");
  const double b = beta(f);
  const auto [Qs, Ms] = epq_optimal(f, a);
  const double Q = Qs + k * f.d * (f.h + f.s) / (f.h * b * f.s);
  const double M = Q * f.h * b / (f.h + f.s);
  return {Q, M};
}

double saving_single(const Firm& f, double a, double k) {
  if (f.d == 0.0) return 0.0;
  const double m = orders_rate(f, a);
  return k * k * f.d * f.d / (4.0 * a * m * m);
}

OrderPolicy coalition_policy(const InventorySituation& sit, Coalition S) {
  require(!S.is_empty(), "coalition must be nonempty");
  const auto n = static_cast<std::size_t>(sit.player_count());
  OrderPolicy policy;
  policy.Q.assign(n, 0.0);
  policy.M.assign(n, 0.0);
  policy.hS = std::numeric_limits<double>::infinity();
  for (int i : S.members())
    policy.hS = std::min(policy.hS, sit.firms[static_cast<std::size_t>(i)].h);

  // Weighted demand pool shared by every member's order size.
  double pool = 0;
  for (int i : S.members()) {
    const Firm& f = sit.firms[static_cast<std::size_t>(i)];
    pool += f.d * f.s / (policy.hS + f.s) * beta(f);
  }
  if (pool == 0.0) {
    policy.mS = 0.0;
    return policy;  // no demand anywhere in S
  }
  for (int i : S.members()) {
    const Firm& f = sit.firms[static_cast<std::size_t>(i)];
    if (f.d == 0.0) continue;
    const auto idx = static_cast<std::size_t>(i);
    policy.Q[idx] = std::sqrt(2.0 * sit.a * f.d * f.d / (policy.hS * pool));
    policy.M[idx] = policy.Q[idx] * policy.hS * beta(f) / (policy.hS + f.s);
    if (policy.mS == 0.0) policy.mS = f.d / policy.Q[idx];
  }
  return policy;
}

OrderPolicy coalition_special_order(const InventorySituation& sit,
                                    Coalition S) {
  OrderPolicy policy = coalition_policy(sit, S);
  if (policy.mS == 0.0) return policy;
  const double demand = total_demand(sit, S);
  // hS * pool recovered from the joint frequency: hS * pool = 2a mS^2.
  const double denom = 2.0 * sit.a * policy.mS * policy.mS;
  for (int i : S.members()) {
    const Firm& f = sit.firms[static_cast<std::size_t>(i)];
    if (f.d == 0.0) continue;
    const auto idx = static_cast<std::size_t>(i);
    policy.Q[idx] += sit.k * f.d * demand / denom;
    policy.M[idx] = policy.Q[idx] * policy.hS * beta(f) / (policy.hS + f.s);
  }
  return policy;
}

double coalition_saving(const InventorySituation& sit, Coalition S) {
  const OrderPolicy policy = coalition_policy(sit, S);
  if (policy.mS == 0.0) return 0.0;
  const double demand = total_demand(sit, S);
  return sit.k * sit.k * demand * demand /
         (4.0 * sit.a * policy.mS * policy.mS);
}

namespace {

// Time to the next order after the special one, and the special/regular
// order size ratio, for one coalition.
struct CoalitionTiming {
  double wait;
  double liquidity;
};

CoalitionTiming timing(const InventorySituation& sit, Coalition R) {
  const double m = coalition_policy(sit, R).mS;
  if (m == 0.0)
    throw std::invalid_argument("index needs a coalition with demand");
  const double demand = total_demand(sit, R);
  const double wait = 1.0 / m + sit.k * demand / (2.0 * sit.a * m * m);
  const double liquidity =
      (2.0 * sit.a * m + sit.k * demand) / (2.0 * sit.a * m);
  return {wait, liquidity};
}

}  // namespace

IndexTriple indices(const InventorySituation& sit, Coalition S, Coalition T) {
  require(!S.is_empty() && !T.is_empty(), "indices need nonempty coalitions");
  const double mS = coalition_policy(sit, S).mS;
  const double mT = coalition_policy(sit, T).mS;
  if (mS == 0.0 || mT == 0.0)
    throw std::invalid_argument("index needs coalitions with demand");
  const CoalitionTiming tS = timing(sit, S);
  const CoalitionTiming tT = timing(sit, T);
  return {mS / mT, tS.wait / tT.wait, tS.liquidity / tT.liquidity};
}

double lambda_of(const InventorySituation& sit, Coalition S) {
  require(!S.is_empty(), "lambda needs a nonempty coalition");
  const Coalition N = Coalition::full(sit.player_count());
  if (S == N) return sit.lambda_n;
  const double mN = coalition_policy(sit, N).mS;
  if (mN == 0.0) throw std::domain_error("situation has no demand");
  const double mS = coalition_policy(sit, S).mS;
  const double lambda = sit.lambda_n * sit.alpha * (mS * mS) / (mN * mN);
  if (lambda > 1.0 + 1e-12)
    throw std::domain_error("lambda(" + S.to_string() +
                            ") exceeds 1; situation parameters inconsistent");
  return std::min(lambda, 1.0);
}

PAdditiveGame build_id_game(const InventorySituation& sit) {
  const double mN = coalition_policy(sit, Coalition::full(sit.player_count())).mS;
  if (mN == 0.0) throw std::domain_error("situation has no demand");
  const double K = sit.lambda_n * sit.alpha * sit.k * sit.k /
                   (4.0 * sit.a * mN * mN);
  std::vector<double> singles(sit.firms.size());
  for (std::size_t i = 0; i < sit.firms.size(); ++i)
    singles[i] = K * sit.firms[i].d * sit.firms[i].d;
  return PAdditiveGame(0.5, std::move(singles));
}

PAdditiveGame build_inventory_cost_game(double a, std::span<const double> m) {
  require(a > 0.0, "ordering cost must be > 0");
  std::vector<double> singles(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    require(m[i] >= 0.0, "order frequencies must be >= 0");
    singles[i] = 2.0 * a * m[i];
  }
  return PAdditiveGame(2.0, std::move(singles));
}

}  // namespace coopgame
