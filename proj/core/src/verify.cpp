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

#include "coopgame/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "coopgame/simplex.hpp"

namespace coopgame {

namespace {

constexpr double kCompareTol = 1e-12;

void require_players(const TuGame& g, int cap, const char* what) {
  if (g.player_count() > cap)
    throw std::invalid_argument(std::string(what) + " is capped at " +
                                std::to_string(cap) + " players");
}

PropertyReport pass(std::string property) {
  return {std::move(property), true, std::nullopt};
}

PropertyReport fail(std::string property, Witness w) {
  return {std::move(property), false, std::move(w)};
}

}  // namespace

PropertyReport is_monotone(const TuGame& g, MonotoneDirection dir,
                           bool strict) {
  require_players(g, 16, "monotonicity scan");
  const std::string name =
      std::string(strict ? "strictly " : "") +
      (dir == MonotoneDirection::increasing ? "monotone increasing"
                                            : "monotone decreasing");
  const int n = g.player_count();
  const std::uint32_t full = Coalition::full(n).bits();
  // Single-element extensions of nonempty coalitions; equivalent to all
  // inclusion pairs by transitivity.
  for (std::uint32_t m = 1; m < g.coalition_count(); ++m) {
    const double base = g.value(Coalition(m));
    for (std::uint32_t rest = full & ~m; rest != 0; rest &= rest - 1) {
      const int i = std::countr_zero(rest);
      const double grown = g.value(Coalition(m | (1u << i)));
      bool ok;
      if (dir == MonotoneDirection::increasing)
        ok = strict ? grown > base + kCompareTol : grown >= base - kCompareTol;
      else
        ok = strict ? grown < base - kCompareTol : grown <= base + kCompareTol;
      if (!ok)
        return fail(name, {{Coalition(m), Coalition(m | (1u << i))},
                           i,
                           {},
                           "extension step breaks the direction"});
    }
  }
  return pass(name);
}

namespace {

PropertyReport additivity_scan(const TuGame& g, bool sub) {
  require_players(g, 14, "additivity scan");
  const std::string name = sub ? "subadditive" : "superadditive";
  const std::uint32_t full = Coalition::full(g.player_count()).bits();
  for (std::uint32_t s = 1; s < g.coalition_count(); ++s) {
    const std::uint32_t comp = full & ~s;
    // nonempty submasks of the complement, descending
    for (std::uint32_t t = comp; t != 0; t = (t - 1) & comp) {
      const double joint = g.value(Coalition(s | t));
      const double split = g.value(Coalition(s)) + g.value(Coalition(t));
      const bool ok = sub ? joint <= split + kCompareTol
                          : joint >= split - kCompareTol;
      if (!ok)
        return fail(name, {{Coalition(s), Coalition(t), Coalition(s | t)},
                           std::nullopt,
                           {},
                           "disjoint pair breaks the inequality"});
    }
  }
  return pass(name);
}

}  // namespace

PropertyReport is_subadditive(const TuGame& g) { return additivity_scan(g, true); }
PropertyReport is_superadditive(const TuGame& g) {
  return additivity_scan(g, false);
}

namespace {

PropertyReport modularity_scan(const TuGame& g, bool concave) {
  require_players(g, 14, "marginal-contribution scan");
  const std::string name = concave ? "concave" : "convex";
  const int n = g.player_count();
  const std::uint32_t full = Coalition::full(n).bits();
  for (int i = 0; i < n; ++i) {
    const std::uint32_t bit = 1u << i;
    const std::uint32_t rest = full & ~bit;
    // every T avoiding i, every S inside T
    for (std::uint32_t t = rest;; t = (t - 1) & rest) {
      const double top = g.value(Coalition(t | bit)) - g.value(Coalition(t));
      for (std::uint32_t s = t;; s = (s - 1) & t) {
        const double bottom =
            g.value(Coalition(s | bit)) - g.value(Coalition(s));
        const bool ok = concave ? bottom >= top - kCompareTol
                                : bottom <= top + kCompareTol;
        if (!ok)
          return fail(name, {{Coalition(s), Coalition(t)},
                             i,
                             {},
                             "marginal contribution breaks the direction"});
        if (s == 0) break;
      }
      if (t == 0) break;
    }
  }
  return pass(name);
}

}  // namespace

PropertyReport is_convex(const TuGame& g) { return modularity_scan(g, false); }
PropertyReport is_concave(const TuGame& g) { return modularity_scan(g, true); }

PropertyReport is_permutationally_concave(const TuGame& g) {
  require_players(g, 7, "permutational concavity scan");
  const int n = g.player_count();
  const std::uint32_t full = Coalition::full(n).bits();

  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);

  std::optional<Witness> first_violation;
  do {
    // prefix[u] is the coalition of the first u players of the order
    std::vector<std::uint32_t> prefix(static_cast<std::size_t>(n) + 1, 0);
    for (int u = 0; u < n; ++u)
      prefix[static_cast<std::size_t>(u) + 1] =
          prefix[static_cast<std::size_t>(u)] |
          (1u << order[static_cast<std::size_t>(u)]);

    bool good = true;
    for (int u = 0; u <= n && good; ++u) {
      const std::uint32_t a = prefix[static_cast<std::size_t>(u)];
      const double base_a = g.value(Coalition(a));
      for (int v = u; v <= n && good; ++v) {
        const std::uint32_t b = prefix[static_cast<std::size_t>(v)];
        const double base_b = g.value(Coalition(b));
        const std::uint32_t comp = full & ~b;
        for (std::uint32_t r = comp;; r = (r - 1) & comp) {
          const double lhs = g.value(Coalition(a | r)) - base_a;
          const double rhs = g.value(Coalition(b | r)) - base_b;
          if (lhs < rhs - kCompareTol) {
            good = false;
            if (!first_violation)
              first_violation = Witness{{Coalition(a), Coalition(b), Coalition(r)},
                                        std::nullopt,
                                        order,
                                        "prefix inequality fails"};
            break;
          }
          if (r == 0) break;
        }
      }
    }
    if (good) return pass("permutationally concave");
  } while (std::next_permutation(order.begin(), order.end()));

  first_violation->note =
      "every player order fails; shown for the first order scanned";
  return fail("permutationally concave", *first_violation);
}

CoreMembership core_contains(const TuGame& g, const Allocation& x,
                             Orientation o, double tol) {
  if (x.player_count() != g.player_count())
    throw std::invalid_argument("allocation length must match the game");
  const std::uint32_t full = Coalition::full(g.player_count()).bits();
  const double wN = g.value(Coalition(full));
  if (std::abs(allocation_sum(x, Coalition(full)) - wN) >
      tol * std::max(1.0, std::abs(wN)))
    return {false, Coalition(full)};
  for (std::uint32_t m = 1; m < full; ++m) {
    const double xs = allocation_sum(x, Coalition(m));
    const double ws = g.value(Coalition(m));
    const double slack = tol * std::max(1.0, std::abs(ws));
    const bool ok =
        o == Orientation::cost ? xs <= ws + slack : xs >= ws - slack;
    if (!ok) return {false, Coalition(m)};
  }
  return {true, std::nullopt};
}

namespace {

lp::Program core_program(const TuGame& g, Orientation o) {
  const int n = g.player_count();
  const std::uint32_t full = Coalition::full(n).bits();
  lp::Program prog;
  prog.num_vars = n;
  prog.objective.assign(static_cast<std::size_t>(n), 0.0);
  prog.rows.reserve(g.coalition_count() - 1);
  for (std::uint32_t m = 1; m <= full; ++m) {
    lp::Constraint row;
    row.coeffs.assign(static_cast<std::size_t>(n), 0.0);
    for (std::uint32_t b = m; b != 0; b &= b - 1)
      row.coeffs[static_cast<std::size_t>(std::countr_zero(b))] = 1.0;
    row.rhs = g.value(Coalition(m));
    if (m == full)
      row.sense = lp::Sense::eq;
    else
      row.sense = o == Orientation::cost ? lp::Sense::less_eq
                                         : lp::Sense::greater_eq;
    prog.rows.push_back(std::move(row));
  }
  return prog;
}

}  // namespace

CoreCertificate core_nonempty(const TuGame& g, Orientation o) {
  require_players(g, 10, "core feasibility");
  const lp::Outcome sol = lp::minimize(core_program(g, o));
  CoreCertificate cert;
  cert.nonempty = sol.status == lp::Status::optimal;
  if (cert.nonempty) cert.point.x = sol.x;
  return cert;
}

CoreBounds core_bounds(const TuGame& g, Orientation o) {
  require_players(g, 10, "core bounds");
  const int n = g.player_count();
  lp::Program prog = core_program(g, o);
  CoreBounds bounds;
  bounds.lo.assign(static_cast<std::size_t>(n), 0.0);
  bounds.hi.assign(static_cast<std::size_t>(n), 0.0);
  for (int i = 0; i < n; ++i) {
    std::fill(prog.objective.begin(), prog.objective.end(), 0.0);
    prog.objective[static_cast<std::size_t>(i)] = 1.0;
    const lp::Outcome low = lp::minimize(prog);
    const lp::Outcome high = lp::maximize(prog);
    if (low.status != lp::Status::optimal || high.status != lp::Status::optimal)
      throw std::domain_error("core bounds need a nonempty bounded core");
    bounds.lo[static_cast<std::size_t>(i)] = low.objective;
    bounds.hi[static_cast<std::size_t>(i)] = high.objective;
  }
  return bounds;
}

PropertyReport is_totally_balanced(const TuGame& g, Orientation o) {
  require_players(g, 8, "total balancedness");
  for (std::uint32_t m = 1; m < g.coalition_count(); ++m) {
    if (!core_nonempty(g.subgame(Coalition(m)), o).nonempty)
      return fail("totally balanced",
                  {{Coalition(m)}, std::nullopt, {}, "subgame has an empty core"});
  }
  return pass("totally balanced");
}

Allocation single_payer_core_certificate(const PAdditiveGame& g) {
  if (g.exponent() >= 0.0 && !g.is_zero())
    throw std::invalid_argument(
        "single-payer certificate applies to negative exponents");
  const int n = g.player_count();
  Allocation x;
  x.x.assign(static_cast<std::size_t>(n), 0.0);
  const Coalition support = g.positive_support();
  if (support.is_empty()) return x;
  const int payer = support.members().front();
  const double wN = g.value(Coalition::full(n));
  x.x[static_cast<std::size_t>(payer)] = wN;
  if (n <= 16) {
    // w(N) never exceeds the worth of a coalition containing the payer
    for (std::uint32_t m = 1; m < (1u << n); ++m) {
      if (!((m >> payer) & 1u)) continue;
      const double ws = g.value(Coalition(m));
      if (wN > ws + 1e-9 * std::max(1.0, std::abs(ws)))
        throw std::domain_error("certificate fell outside the core");
    }
  }
  return x;
}

}  // namespace coopgame
