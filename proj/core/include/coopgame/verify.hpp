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

#ifndef COOPGAME_VERIFY_HPP
#define COOPGAME_VERIFY_HPP

#include <optional>
#include <string>
#include <vector>

#include "coopgame/padditive.hpp"
#include "coopgame/tu_game.hpp"

namespace coopgame {

/// Concrete data demonstrating a failed property; which fields are set
/// depends on the property (a coalition pair for monotonicity, a triple and
/// a player for concavity, an order for permutational checks, ...).
struct Witness {
  std::vector<Coalition> coalitions;
  std::optional<int> player;
  std::vector<int> order;
  std::string note;
};

struct PropertyReport {
  std::string property;
  bool verdict = false;
  std::optional<Witness> witness;  // present whenever verdict is false
};

enum class MonotoneDirection { increasing, decreasing };

/// Exhaustive monotonicity over nonempty coalitions, scanned as
/// single-element extensions (equivalent to all inclusion pairs by
/// transitivity). Strict mode demands strict steps. n <= 16.
PropertyReport is_monotone(const TuGame& g, MonotoneDirection dir,
                           bool strict);

/// Exhaustive over ordered disjoint nonempty pairs. n <= 14.
PropertyReport is_subadditive(const TuGame& g);
PropertyReport is_superadditive(const TuGame& g);

/// Exhaustive marginal-contribution comparison over all i and all
/// S subseteq T avoiding i, with 1e-12 absolute slack. n <= 14.
PropertyReport is_convex(const TuGame& g);
PropertyReport is_concave(const TuGame& g);

/// Scans every player order for the prefix inequalities
/// c(P_i + R) - c(P_i) >= c(P_j + R) - c(P_j), including the empty prefix;
/// true when some order satisfies all of them. n <= 7.
PropertyReport is_permutationally_concave(const TuGame& g);

struct CoreMembership {
  bool inside = false;
  std::optional<Coalition> violator;  // smallest-bitmask failing constraint
};

/// Efficiency plus all 2^n - 2 coalition constraints, with
/// tol * max(1, |w(S)|) slack per constraint.
CoreMembership core_contains(const TuGame& g, const Allocation& x,
                             Orientation o, double tol = 1e-9);

struct CoreCertificate {
  bool nonempty = false;
  Allocation point;  // a feasible core allocation when nonempty
};

/// Direct linear feasibility of the core polytope via the dense simplex;
/// the certificate is deterministic. n <= 10.
CoreCertificate core_nonempty(const TuGame& g, Orientation o);

struct CoreBounds {
  std::vector<double> lo;
  std::vector<double> hi;
};

/// Per-player minimum and maximum payoff over the core polytope; throws
/// std::domain_error when the core is empty. n <= 10.
CoreBounds core_bounds(const TuGame& g, Orientation o);

/// core_nonempty on every nonempty subgame. n <= 8.
PropertyReport is_totally_balanced(const TuGame& g, Orientation o);

/// For p < 0: the allocation paying w(N) to the lowest-index player of the
/// positive support and 0 to everybody else, which always sits in the core;
/// the zero game maps to the zero vector.
Allocation single_payer_core_certificate(const PAdditiveGame& g);

}  // namespace coopgame

#endif  // COOPGAME_VERIFY_HPP
