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

#ifndef COOPGAME_SIMPLEX_HPP
#define COOPGAME_SIMPLEX_HPP

#include <vector>

namespace coopgame::lp {

enum class Sense { less_eq, greater_eq, eq };
enum class Status { optimal, infeasible, unbounded };

struct Constraint {
  std::vector<double> coeffs;  // one per variable
  Sense sense = Sense::less_eq;
  double rhs = 0;
};

/// min objective . x subject to the rows; all variables are free.
struct Program {
  int num_vars = 0;
  std::vector<double> objective;
  std::vector<Constraint> rows;
};

struct Outcome {
  Status status = Status::infeasible;
  double objective = 0;
  std::vector<double> x;
};

/// Dense two-phase tableau simplex.
///
/// Free variables are split internally into nonnegative pairs; rows are
/// equilibrated and pivoting uses Bland's smallest-index rule with a 1e-10
/// pivot tolerance, so the method cannot cycle and the returned vertex is a
/// deterministic function of the input. Intended for the small dense
/// programs of core computations (at most ~2^10 rows and 10 variables);
/// reported optima are accurate to about 1e-9 on well-scaled inputs.
Outcome minimize(const Program& p);
Outcome maximize(const Program& p);

}  // namespace coopgame::lp

#endif  // COOPGAME_SIMPLEX_HPP
