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

#ifndef COOPGAME_PADDITIVE_HPP
#define COOPGAME_PADDITIVE_HPP

#include <optional>
#include <vector>

#include "coopgame/tu_game.hpp"

namespace coopgame {

/// Game implied by a nonzero exponent p and nonnegative singleton values:
///
///   w(S) = (sum over {i in S : w({i}) > 0} of w({i})^p)^(1/p),
///
/// and w(S) = 0 when that sum is empty. Summing over the positive support
/// only keeps negative exponents away from 0^p. The all-zero game is
/// normalized to exponent 2 whatever was requested, which makes the
/// transfer weight w(N)^(p-1) vanish exactly; exponent_normalized() tells
/// whether that happened.
class PAdditiveGame {
 public:
  PAdditiveGame(double p, std::vector<double> singletons);

  int player_count() const { return static_cast<int>(singletons_.size()); }
  double exponent() const { return p_; }
  bool exponent_normalized() const { return normalized_; }
  bool is_zero() const;

  double singleton(int i) const { return singletons_[static_cast<std::size_t>(i)]; }
  const std::vector<double>& singletons() const { return singletons_; }

  double value(Coalition S) const;
  /// {i in S : w({i}) > 0}.
  Coalition support(Coalition S) const;
  Coalition positive_support() const;

  /// Explicit 2^n characteristic function.
  TuGame expand() const;

 private:
  double p_;
  std::vector<double> singletons_;
  bool normalized_ = false;
};

PAdditiveGame from_individual_values(double p, std::vector<double> singletons);

/// Singleton-wise p-sum. The zero game combines with any exponent; two
/// nonzero operands must share theirs.
PAdditiveGame p_sum(const PAdditiveGame& a, const PAdditiveGame& b);

/// Class-level guarantees for exponent p. Flags are the unconditional
/// entries; for p < 0 strict decrease and concavity depend on the game at
/// hand (all singletons positive, resp. at most two positive singletons)
/// and are not class flags.
struct ClassProfile {
  bool monotone_increasing = false;
  bool monotone_strictly_decreasing_iff_positive = false;
  bool convex = false;
  bool concave = false;
  bool subadditive = false;
  bool superadditive = false;
  bool totally_balanced = false;
  Orientation interpretation = Orientation::cost;
};

ClassProfile classify(double p);

/// cost when p >= 1 or p < 0, benefit when 0 < p < 1. At p = 1 both
/// readings are consistent; cost is reported.
Orientation inferred_orientation(double p);

struct MembershipResult {
  bool member = false;
  /// Smallest-bitmask violating coalition when member is false.
  std::optional<Coalition> violator;
};

/// Tolerance-based membership test for the exponent-p class on an explicit
/// game: values must be nonnegative, coalitions of zero-valued players must
/// be worth zero, and w(S)^p must match the sum of positive singleton
/// p-powers to tol * max(1, |w(S)^p|).
MembershipResult validate_membership(const TuGame& g, double p,
                                     double tol = 1e-9);

/// The scalars alpha_i = w({i}) whose one-player unanimity games rebuild g
/// under the p-sum. The reconstruction is performed explicitly and checked
/// to 1e-9 relative; failure throws std::domain_error.
std::vector<double> decompose_unanimity(const PAdditiveGame& g);

}  // namespace coopgame

#endif  // COOPGAME_PADDITIVE_HPP
