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

#include "coopgame/solutions.hpp"

#include <cmath>
#include <stdexcept>

namespace coopgame {

namespace {

double effective_exponent(const PAdditiveGame& g, const PAdditiveGame& h) {
  if (g.player_count() != h.player_count())
    throw std::invalid_argument("games have different player counts");
  if (g.is_zero()) return h.exponent();
  if (h.is_zero()) return g.exponent();
  if (g.exponent() != h.exponent())
    throw std::invalid_argument("games must share their exponent");
  return g.exponent();
}

// max(1, |w(N)|^|p-1|): the (p-1)-th power dominates the conditioning of
// the weighted axioms.
double axiom_scale(const PAdditiveGame& g, double p) {
  const double wN = g.value(Coalition::full(g.player_count()));
  return std::max(1.0, std::pow(std::abs(wN), std::abs(p - 1.0)));
}

}  // namespace

double Pmas::payoff(Coalition S, int player) const {
  if (!S.contains(player)) return 0.0;
  const std::uint32_t below = S.bits() & ((1u << player) - 1u);
  return rows[S.bits()][static_cast<std::size_t>(std::popcount(below))];
}

Allocation modified_soc(const PAdditiveGame& g) {
  const int n = g.player_count();
  Allocation out;
  out.x.assign(static_cast<std::size_t>(n), 0.0);
  if (g.is_zero()) return out;
  const double p = g.exponent();
  double sum = 0;
  for (int i = 0; i < n; ++i)
    if (g.singleton(i) > 0.0) sum += std::pow(g.singleton(i), p);
  const double factor = std::pow(sum, 1.0 / p - 1.0);
  for (int i = 0; i < n; ++i)
    if (g.singleton(i) > 0.0)
      out.x[static_cast<std::size_t>(i)] = std::pow(g.singleton(i), p) * factor;
  return out;
}

Pmas pmas_soc(const PAdditiveGame& g) {
  const int n = g.player_count();
  const double p = g.exponent();
  Pmas scheme;
  scheme.n = n;
  scheme.rows.resize(std::size_t{1} << n);
  for (std::uint32_t m = 1; m < scheme.rows.size(); ++m) {
    const Coalition S(m);
    std::vector<double>& row = scheme.rows[m];
    row.assign(static_cast<std::size_t>(S.size()), 0.0);
    double sum = 0;
    bool any = false;
    for (int i : S.members())
      if (g.singleton(i) > 0.0) {
        sum += std::pow(g.singleton(i), p);
        any = true;
      }
    if (!any) continue;
    const double factor = std::pow(sum, 1.0 / p - 1.0);
    std::size_t pos = 0;
    for (int i : S.members()) {
      if (g.singleton(i) > 0.0)
        row[pos] = std::pow(g.singleton(i), p) * factor;
      ++pos;
    }
  }
  return scheme;
}

Allocation shapley(const TuGame& g) {
  const int n = g.player_count();
  if (n > 12)
    throw std::invalid_argument("exact Shapley enumeration capped at 12 players");
  // weight[s] = s! (n-s-1)! / n!
  std::vector<double> weight(static_cast<std::size_t>(n), 0.0);
  {
    std::vector<double> fact(static_cast<std::size_t>(n) + 1, 1.0);
    for (std::size_t i = 1; i < fact.size(); ++i)
      fact[i] = fact[i - 1] * static_cast<double>(i);
    for (int s = 0; s < n; ++s)
      weight[static_cast<std::size_t>(s)] =
          fact[static_cast<std::size_t>(s)] *
          fact[static_cast<std::size_t>(n - s - 1)] /
          fact[static_cast<std::size_t>(n)];
  }
  Allocation out;
  out.x.assign(static_cast<std::size_t>(n), 0.0);
  const std::uint32_t full = Coalition::full(n).bits();
  for (int i = 0; i < n; ++i) {
    double value = 0;
    const std::uint32_t others = full & ~(1u << i);
    // iterate all subsets of the other players, empty set included
    std::uint32_t m = 0;
    while (true) {
      value += weight[static_cast<std::size_t>(std::popcount(m))] *
               (g.value(Coalition(m | (1u << i))) - g.value(Coalition(m)));
      if (m == others) break;
      m = (m - others) & others;
    }
    out.x[static_cast<std::size_t>(i)] = value;
  }
  return out;
}

double transfer_weight(const PAdditiveGame& g) {
  if (g.is_zero()) return 0.0;
  const double wN = g.value(Coalition::full(g.player_count()));
  return std::pow(wN, g.exponent() - 1.0);
}

bool check_efficiency(const Solution& sol, const PAdditiveGame& g, double tol) {
  const Allocation phi = sol.apply(g);
  double total = 0;
  for (double v : phi.x) total += v;
  const double wN = g.value(Coalition::full(g.player_count()));
  return std::abs(total - wN) <= tol * std::max(1.0, std::abs(wN));
}

bool check_null_player(const Solution& sol, const PAdditiveGame& g,
                       double tol) {
  const Allocation phi = sol.apply(g);
  for (int i = 0; i < g.player_count(); ++i)
    if (g.singleton(i) == 0.0 &&
        std::abs(phi.x[static_cast<std::size_t>(i)]) > tol)
      return false;
  return true;
}

bool check_p_transfer(const Solution& sol, const PAdditiveGame& g,
                      const PAdditiveGame& h, double tol) {
  const double p = effective_exponent(g, h);
  const PAdditiveGame combined = p_sum(g, h);
  const Allocation pg = sol.apply(g);
  const Allocation ph = sol.apply(h);
  const Allocation pc = sol.apply(combined);
  const double wg = transfer_weight(g);
  const double wh = transfer_weight(h);
  const double wc = transfer_weight(combined);
  const double scale = std::max(
      {axiom_scale(g, p), axiom_scale(h, p), axiom_scale(combined, p)});
  for (int i = 0; i < g.player_count(); ++i) {
    const auto idx = static_cast<std::size_t>(i);
    const double lhs = wc * pc.x[idx];
    const double rhs = wg * pg.x[idx] + wh * ph.x[idx];
    if (std::abs(lhs - rhs) > tol * scale) return false;
  }
  return true;
}

bool check_p_monotonicity(const Solution& sol, const PAdditiveGame& g,
                          const PAdditiveGame& h, double tol) {
  if (g.is_zero() && h.is_zero()) return true;
  const double p = effective_exponent(g, h);
  const Allocation pg = sol.apply(g);
  const Allocation ph = sol.apply(h);
  const double wg = transfer_weight(g);
  const double wh = transfer_weight(h);
  const double scale = std::max(axiom_scale(g, p), axiom_scale(h, p));
  constexpr double kSingletonTol = 1e-12;
  for (int i = 0; i < g.player_count(); ++i) {
    const auto idx = static_cast<std::size_t>(i);
    const double a = g.singleton(i);
    const double b = h.singleton(i);
    const double wa = wg * pg.x[idx];
    const double wb = wh * ph.x[idx];
    if (p > 0) {
      if (a >= b - kSingletonTol && wa < wb - tol * scale) return false;
    } else {
      // x^p reverses order for p < 0, so a dominance hypothesis pins no
      // direction; equal singletons must still earn equal weighted payoffs.
      if (std::abs(a - b) <= kSingletonTol && std::abs(wa - wb) > tol * scale)
        return false;
    }
  }
  return true;
}

Solution modified_soc_solution() {
  return {"modified-soc", "", [](const PAdditiveGame& g) {
            return modified_soc(g);
          }};
}

std::vector<Solution> builtin_counterexamples() {
  std::vector<Solution> out;

  out.push_back({"beta-scaled-soc", "EF", [](const PAdditiveGame& g) {
                   Allocation phi = modified_soc(g);
                   for (double& v : phi.x) v *= 2.0;
                   return phi;
                 }});

  out.push_back({"equal-split", "NP", [](const PAdditiveGame& g) {
                   const int n = g.player_count();
                   const double share =
                       g.value(Coalition::full(n)) / static_cast<double>(n);
                   Allocation phi;
                   phi.x.assign(static_cast<std::size_t>(n), share);
                   return phi;
                 }});

  out.push_back({"shapley", "PT", [](const PAdditiveGame& g) {
                   return shapley(g.expand());
                 }});

  // phi_i = w({i}) * w(N)^(1-p): keeps nulls at zero and weights
  // monotonically, but the singleton values rarely sum to w(N)^p.
  out.push_back({"linear-singleton", "EF", [](const PAdditiveGame& g) {
                   const int n = g.player_count();
                   Allocation phi;
                   phi.x.assign(static_cast<std::size_t>(n), 0.0);
                   if (g.is_zero()) return phi;
                   const double rescale = std::pow(
                       g.value(Coalition::full(n)), 1.0 - g.exponent());
                   for (int i = 0; i < n; ++i)
                     phi.x[static_cast<std::size_t>(i)] =
                         g.singleton(i) * rescale;
                   return phi;
                 }});

  // The proportional rule everywhere except the zero game, which gets the
  // fixed vector (1-n, 1, ..., 1); efficient there too, but pays null
  // players.
  out.push_back({"ratio-rule", "NP", [](const PAdditiveGame& g) {
                   const int n = g.player_count();
                   if (!g.is_zero()) return modified_soc(g);
                   Allocation phi;
                   phi.x.assign(static_cast<std::size_t>(n), 1.0);
                   phi.x[0] = 1.0 - static_cast<double>(n);
                   return phi;
                 }});

  out.push_back({"support-equal-split", "PMO", [](const PAdditiveGame& g) {
                   const int n = g.player_count();
                   Allocation phi;
                   phi.x.assign(static_cast<std::size_t>(n), 0.0);
                   const Coalition support = g.positive_support();
                   if (support.is_empty()) return phi;
                   const double share =
                       g.value(support) / static_cast<double>(support.size());
                   for (int i : support.members())
                     phi.x[static_cast<std::size_t>(i)] = share;
                   return phi;
                 }});

  return out;
}

}  // namespace coopgame
