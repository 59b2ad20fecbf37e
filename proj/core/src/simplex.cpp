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

#include "coopgame/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace coopgame::lp {

namespace {

constexpr double kPivotTol = 1e-10;
constexpr double kFeasTol = 1e-8;
constexpr long kMaxPivots = 500000;

// Dense tableau over columns [structural u/v pairs | slacks | artificials],
// one rhs per row, plus the reduced-cost row and the running objective.
struct Tableau {
  int rows = 0;
  int cols = 0;  // without rhs
  std::vector<double> a;
  std::vector<double> rhs;
  std::vector<double> reduced;  // reduced costs, one per column
  double objective = 0;
  std::vector<int> basis;       // basic column per row
  std::vector<bool> active;     // rows dropped as redundant are inactive
  std::vector<bool> banned;     // columns barred from entering (artificials)

  double& at(int r, int c) { return a[static_cast<std::size_t>(r) * cols + c]; }
  double get(int r, int c) const {
    return a[static_cast<std::size_t>(r) * cols + c];
  }

  void pivot(int pr, int pc) {
    const double pe = at(pr, pc);
    const double inv = 1.0 / pe;
    for (int c = 0; c < cols; ++c) at(pr, c) *= inv;
    rhs[static_cast<std::size_t>(pr)] *= inv;
    at(pr, pc) = 1.0;
    for (int r = 0; r < rows; ++r) {
      if (r == pr || !active[static_cast<std::size_t>(r)]) continue;
      const double f = at(r, pc);
      if (f == 0.0) continue;
      for (int c = 0; c < cols; ++c) at(r, c) -= f * at(pr, c);
      at(r, pc) = 0.0;
      rhs[static_cast<std::size_t>(r)] -= f * rhs[static_cast<std::size_t>(pr)];
    }
    const double f = reduced[static_cast<std::size_t>(pc)];
    if (f != 0.0) {
      for (int c = 0; c < cols; ++c)
        reduced[static_cast<std::size_t>(c)] -= f * at(pr, c);
      reduced[static_cast<std::size_t>(pc)] = 0.0;
      objective += f * rhs[static_cast<std::size_t>(pr)];
    }
    basis[static_cast<std::size_t>(pr)] = pc;
  }

  // Bland's rule: enter the lowest-index improving column, leave via the
  // lowest-index basic variable among the minimum ratios.
  Status iterate() {
    for (long it = 0; it < kMaxPivots; ++it) {
      int enter = -1;
      for (int c = 0; c < cols; ++c) {
        if (banned[static_cast<std::size_t>(c)]) continue;
        if (reduced[static_cast<std::size_t>(c)] < -kPivotTol) {
          enter = c;
          break;
        }
      }
      if (enter < 0) return Status::optimal;
      int leave = -1;
      double best = 0;
      for (int r = 0; r < rows; ++r) {
        if (!active[static_cast<std::size_t>(r)]) continue;
        const double coeff = get(r, enter);
        if (coeff <= kPivotTol) continue;
        const double ratio = rhs[static_cast<std::size_t>(r)] / coeff;
        if (leave < 0 || ratio < best - kPivotTol ||
            (std::abs(ratio - best) <= kPivotTol &&
             basis[static_cast<std::size_t>(r)] <
                 basis[static_cast<std::size_t>(leave)])) {
          leave = r;
          best = ratio;
        }
      }
      if (leave < 0) return Status::unbounded;
      pivot(leave, enter);
    }
    throw std::domain_error("simplex exceeded its pivot budget");
  }

  // Rebuild reduced costs and the objective for the given column costs.
  void load_objective(const std::vector<double>& cost) {
    reduced = cost;
    objective = 0;
    for (int r = 0; r < rows; ++r) {
      if (!active[static_cast<std::size_t>(r)]) continue;
      const double cb = cost[static_cast<std::size_t>(basis[static_cast<std::size_t>(r)])];
      if (cb == 0.0) continue;
      for (int c = 0; c < cols; ++c)
        reduced[static_cast<std::size_t>(c)] -= cb * get(r, c);
      objective += cb * rhs[static_cast<std::size_t>(r)];
    }
  }
};

}  // namespace

Outcome minimize(const Program& p) {
  const int n = p.num_vars;
  const int m = static_cast<int>(p.rows.size());
  if (static_cast<int>(p.objective.size()) != n)
    throw std::invalid_argument("objective length must match num_vars");
  for (const Constraint& row : p.rows)
    if (static_cast<int>(row.coeffs.size()) != n)
      throw std::invalid_argument("constraint length must match num_vars");

  if (m == 0) {
    const bool flat = std::all_of(p.objective.begin(), p.objective.end(),
                                  [](double c) { return c == 0.0; });
    Outcome out;
    out.status = flat ? Status::optimal : Status::unbounded;
    out.x.assign(static_cast<std::size_t>(n), 0.0);
    return out;
  }

  // Row equilibration on the structural part, with rhs normalized >= 0.
  std::vector<std::vector<double>> coeffs(static_cast<std::size_t>(m));
  std::vector<double> rhs(static_cast<std::size_t>(m));
  std::vector<Sense> sense(static_cast<std::size_t>(m));
  for (int r = 0; r < m; ++r) {
    const auto idx = static_cast<std::size_t>(r);
    coeffs[idx] = p.rows[idx].coeffs;
    rhs[idx] = p.rows[idx].rhs;
    sense[idx] = p.rows[idx].sense;
    double mag = std::abs(rhs[idx]);
    for (double c : coeffs[idx]) mag = std::max(mag, std::abs(c));
    if (mag > 0) {
      for (double& c : coeffs[idx]) c /= mag;
      rhs[idx] /= mag;
    }
    if (rhs[idx] < 0) {
      for (double& c : coeffs[idx]) c = -c;
      rhs[idx] = -rhs[idx];
      if (sense[idx] == Sense::less_eq)
        sense[idx] = Sense::greater_eq;
      else if (sense[idx] == Sense::greater_eq)
        sense[idx] = Sense::less_eq;
    }
  }

  int num_slack = 0;
  int num_art = 0;
  for (Sense s : sense) {
    if (s != Sense::eq) ++num_slack;
    if (s != Sense::less_eq) ++num_art;
  }

  Tableau t;
  t.rows = m;
  t.cols = 2 * n + num_slack + num_art;
  t.a.assign(static_cast<std::size_t>(t.rows) * t.cols, 0.0);
  t.rhs = rhs;
  t.basis.assign(static_cast<std::size_t>(m), -1);
  t.active.assign(static_cast<std::size_t>(m), true);
  t.banned.assign(static_cast<std::size_t>(t.cols), false);

  const int slack0 = 2 * n;
  const int art0 = 2 * n + num_slack;
  int next_slack = slack0;
  int next_art = art0;
  for (int r = 0; r < m; ++r) {
    const auto idx = static_cast<std::size_t>(r);
    for (int j = 0; j < n; ++j) {
      t.at(r, 2 * j) = coeffs[idx][static_cast<std::size_t>(j)];
      t.at(r, 2 * j + 1) = -coeffs[idx][static_cast<std::size_t>(j)];
    }
    if (sense[idx] == Sense::less_eq) {
      t.at(r, next_slack) = 1.0;
      t.basis[idx] = next_slack++;
    } else if (sense[idx] == Sense::greater_eq) {
      t.at(r, next_slack++) = -1.0;
      t.at(r, next_art) = 1.0;
      t.basis[idx] = next_art++;
    } else {
      t.at(r, next_art) = 1.0;
      t.basis[idx] = next_art++;
    }
  }

  Outcome out;
  out.x.assign(static_cast<std::size_t>(n), 0.0);

  // Phase 1: price out the artificial variables.
  if (num_art > 0) {
    std::vector<double> cost(static_cast<std::size_t>(t.cols), 0.0);
    for (int c = art0; c < t.cols; ++c) cost[static_cast<std::size_t>(c)] = 1.0;
    t.load_objective(cost);
    if (t.iterate() != Status::optimal)
      throw std::domain_error("phase-1 simplex did not converge");
    if (t.objective > kFeasTol) {
      out.status = Status::infeasible;
      return out;
    }
    for (int r = 0; r < m; ++r) {
      const auto idx = static_cast<std::size_t>(r);
      if (!t.active[idx] || t.basis[idx] < art0) continue;
      int col = -1;
      for (int c = 0; c < art0; ++c)
        if (std::abs(t.get(r, c)) > kPivotTol) {
          col = c;
          break;
        }
      if (col >= 0) {
        t.pivot(r, col);
      } else {
        t.active[idx] = false;  // redundant constraint
      }
    }
    for (int c = art0; c < t.cols; ++c) t.banned[static_cast<std::size_t>(c)] = true;
  }

  // Phase 2 on the real objective.
  std::vector<double> cost(static_cast<std::size_t>(t.cols), 0.0);
  for (int j = 0; j < n; ++j) {
    cost[static_cast<std::size_t>(2 * j)] = p.objective[static_cast<std::size_t>(j)];
    cost[static_cast<std::size_t>(2 * j + 1)] = -p.objective[static_cast<std::size_t>(j)];
  }
  t.load_objective(cost);
  const Status status = t.iterate();
  if (status != Status::optimal) {
    out.status = status;
    return out;
  }

  std::vector<double> split(static_cast<std::size_t>(2 * n), 0.0);
  for (int r = 0; r < m; ++r) {
    const auto idx = static_cast<std::size_t>(r);
    if (t.active[idx] && t.basis[idx] < 2 * n)
      split[static_cast<std::size_t>(t.basis[idx])] = t.rhs[idx];
  }
  double objective = 0;
  for (int j = 0; j < n; ++j) {
    out.x[static_cast<std::size_t>(j)] = split[static_cast<std::size_t>(2 * j)] -
                                         split[static_cast<std::size_t>(2 * j + 1)];
    objective += p.objective[static_cast<std::size_t>(j)] *
                 out.x[static_cast<std::size_t>(j)];
  }
  out.status = Status::optimal;
  out.objective = objective;
  return out;
}

Outcome maximize(const Program& p) {
  Program flipped = p;
  for (double& c : flipped.objective) c = -c;
  Outcome out = minimize(flipped);
  out.objective = -out.objective;
  return out;
}

}  // namespace coopgame::lp
