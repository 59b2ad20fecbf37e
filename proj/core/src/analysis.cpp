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

#include "coopgame/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "coopgame/solutions.hpp"
#include "coopgame/verify.hpp"
#include "json_util.hpp"

namespace coopgame {

using nlohmann::json;

const char* version() { return "0.1.0"; }

namespace {

const std::set<std::string> kKnownCommands = {
    "analyze", "soc", "pmas", "core", "bounds", "axioms", "classify"};

json labels_json(Coalition S) {
  json out = json::array();
  for (int label : S.labels()) out.push_back(label);
  return out;
}

json allocation_json(const std::vector<double>& x) {
  json out = json::array();
  for (double v : x) out.push_back(v);
  return out;
}

json witness_json(const Witness& w) {
  json out;
  json coalitions = json::array();
  for (Coalition c : w.coalitions) coalitions.push_back(labels_json(c));
  out["coalitions"] = coalitions;
  if (w.player) out["player"] = *w.player + 1;
  if (!w.order.empty()) {
    json order = json::array();
    for (int p : w.order) order.push_back(p + 1);
    out["order"] = order;
  }
  if (!w.note.empty()) out["note"] = w.note;
  return out;
}

json report_json(const PropertyReport& r) {
  json out;
  out["verdict"] = r.verdict;
  if (r.witness) out["witness"] = witness_json(*r.witness);
  return out;
}

std::string verdict_text(const PropertyReport& r) {
  std::string line = r.verdict ? "yes" : "no";
  if (r.witness) {
    line += " (witness:";
    for (Coalition c : r.witness->coalitions) line += " " + c.to_string();
    if (r.witness->player) line += " player " + std::to_string(*r.witness->player + 1);
    line += ")";
  }
  return line;
}

// Everything a command needs, assembled once per request.
struct Workspace {
  InputMode mode = InputMode::game;
  double tol = 1e-9;
  std::optional<TuGame> game;
  std::optional<PAdditiveGame> pgame;
  std::optional<Orientation> orientation;
  std::optional<InventorySituation> situation;
  std::vector<std::string> notes;

  const TuGame& need_game() const { return *game; }
  const PAdditiveGame& need_pgame(const char* command) const {
    if (!pgame)
      throw std::invalid_argument(std::string(command) +
                                  " needs a class exponent; supply p");
    return *pgame;
  }
  Orientation need_orientation(const char* command) const {
    if (!orientation)
      throw std::invalid_argument(std::string(command) +
                                  " needs an orientation; supply one or p");
    return *orientation;
  }
};

Workspace build_workspace(const AnalysisRequest& req, const LoadedInput& input) {
  Workspace ws;
  ws.mode = input.mode;
  ws.tol = req.tol;

  std::optional<double> p = req.p_override;
  if (input.mode == InputMode::game) {
    ws.game = input.game->game;
    if (!p) p = input.game->p;
    if (p) {
      std::vector<double> singles;
      for (int i = 0; i < ws.game->player_count(); ++i) {
        const double v = ws.game->value(Coalition::single(i));
        singles.push_back(std::max(v, 0.0));
        if (v < 0)
          ws.notes.push_back("negative singleton clipped to 0 for the rule");
      }
      ws.pgame = PAdditiveGame(*p, std::move(singles));
    }
    if (input.game->orientation) ws.orientation = input.game->orientation;
  } else if (input.mode == InputMode::padditive) {
    if (!p) p = input.padditive->p;
    if (!p)
      throw std::invalid_argument("padditive mode requires p (file field or --p)");
    ws.pgame = PAdditiveGame(*p, input.padditive->singletons);
    ws.game = ws.pgame->expand();
  } else {
    ws.situation = input.situation;
    ws.pgame = build_id_game(*ws.situation);  // may throw domain_error
    ws.game = ws.pgame->expand();
  }

  if (ws.pgame && ws.pgame->exponent_normalized())
    ws.notes.push_back("all singleton values are zero: exponent normalized to 2");
  if (req.orientation_override)
    ws.orientation = req.orientation_override;
  else if (!ws.orientation && ws.pgame)
    ws.orientation = inferred_orientation(ws.pgame->exponent());
  return ws;
}

json input_echo(const LoadedInput& input) {
  json echo;
  echo["mode"] = to_string(input.mode);
  if (input.mode == InputMode::game) {
    const GameInput& gi = *input.game;
    echo["n"] = gi.game.player_count();
    json values = json::array();
    for (std::uint32_t m = 1; m < gi.game.coalition_count(); ++m) {
      json entry;
      entry["coalition"] = labels_json(Coalition(m));
      entry["value"] = gi.game.value(Coalition(m));
      values.push_back(entry);
    }
    echo["values"] = values;
    if (gi.p) echo["p"] = *gi.p;
    if (gi.orientation) echo["orientation"] = to_string(*gi.orientation);
  } else if (input.mode == InputMode::padditive) {
    if (input.padditive->p) echo["p"] = *input.padditive->p;
    echo["indiv"] = allocation_json(input.padditive->singletons);
  } else {
    echo = json::parse(serialize_situation(*input.situation));
  }
  return echo;
}

// ---------------------------------------------------------------------------
// commands

json run_classify(const Workspace& ws, std::ostream& text) {
  const PAdditiveGame& g = ws.need_pgame("classify");
  const ClassProfile c = classify(g.exponent());
  json out;
  out["p"] = g.exponent();
  out["monotone_increasing"] = c.monotone_increasing;
  out["monotone_strictly_decreasing_iff_positive"] =
      c.monotone_strictly_decreasing_iff_positive;
  out["convex"] = c.convex;
  out["concave"] = c.concave;
  out["subadditive"] = c.subadditive;
  out["superadditive"] = c.superadditive;
  out["totally_balanced"] = c.totally_balanced;
  out["orientation"] = to_string(c.interpretation);
  text << "-- classify (p = " << format_human(g.exponent()) << ") --\n";
  text << "orientation: " << to_string(c.interpretation) << "\n";
  auto flag = [&](const char* name, bool v) {
    text << name << ": " << (v ? "yes" : "no") << "\n";
  };
  flag("monotone increasing", c.monotone_increasing);
  flag("strictly decreasing iff all singletons positive",
       c.monotone_strictly_decreasing_iff_positive);
  flag("convex", c.convex);
  flag("concave", c.concave);
  flag("subadditive", c.subadditive);
  flag("superadditive", c.superadditive);
  flag("totally balanced", c.totally_balanced);
  return out;
}

json run_soc(const Workspace& ws, std::ostream& text) {
  const PAdditiveGame& g = ws.need_pgame("soc");
  const Allocation sigma = modified_soc(g);
  const double wN = g.value(Coalition::full(g.player_count()));
  double total = 0;
  for (double v : sigma.x) total += v;
  json out;
  out["p"] = g.exponent();
  out["allocation"] = allocation_json(sigma.x);
  out["efficient"] = std::abs(total - wN) <= ws.tol * std::max(1.0, std::abs(wN));
  text << "-- soc --\n";
  for (int i = 0; i < g.player_count(); ++i)
    text << "player " << i + 1 << ": "
         << format_human(sigma.x[static_cast<std::size_t>(i)]) << "\n";
  return out;
}

json run_pmas(const Workspace& ws, std::ostream& text) {
  const PAdditiveGame& g = ws.need_pgame("pmas");
  if (g.player_count() > 16)
    throw std::invalid_argument("pmas tables are capped at 16 players");
  const Pmas scheme = pmas_soc(g);
  json table = json::array();
  text << "-- pmas --\n";
  for (std::uint32_t m = 1; m < scheme.rows.size(); ++m) {
    json row;
    row["coalition"] = labels_json(Coalition(m));
    row["payoffs"] = allocation_json(scheme.rows[m]);
    table.push_back(row);
    text << Coalition(m).to_string() << ":";
    for (double v : scheme.rows[m]) text << ' ' << format_human(v);
    text << "\n";
  }
  json out;
  out["table"] = table;
  return out;
}

json run_core(const Workspace& ws, std::ostream& text) {
  const Orientation o = ws.need_orientation("core");
  const TuGame& g = ws.need_game();
  const CoreCertificate cert = core_nonempty(g, o);
  json out;
  out["orientation"] = to_string(o);
  out["nonempty"] = cert.nonempty;
  text << "-- core (" << to_string(o) << ") --\n";
  text << "nonempty: " << (cert.nonempty ? "yes" : "no") << "\n";
  if (cert.nonempty) {
    out["certificate"] = allocation_json(cert.point.x);
    text << "certificate:";
    for (double v : cert.point.x) text << ' ' << format_human(v);
    text << "\n";
  }
  if (ws.pgame) {
    const Allocation sigma = modified_soc(*ws.pgame);
    const CoreMembership member = core_contains(g, sigma, o, ws.tol);
    out["soc_in_core"] = member.inside;
    if (member.violator) out["soc_violator"] = labels_json(*member.violator);
    text << "soc in core: " << (member.inside ? "yes" : "no") << "\n";
  }
  return out;
}

json run_bounds(const Workspace& ws, std::ostream& text) {
  const Orientation o = ws.need_orientation("bounds");
  const TuGame& g = ws.need_game();
  const CoreBounds bounds = core_bounds(g, o);
  json players = json::array();
  text << "-- bounds (" << to_string(o) << ") --\n";
  for (int i = 0; i < g.player_count(); ++i) {
    const auto idx = static_cast<std::size_t>(i);
    json entry;
    entry["player"] = i + 1;
    entry["lo"] = bounds.lo[idx];
    entry["hi"] = bounds.hi[idx];
    players.push_back(entry);
    text << "player " << i + 1 << ": [" << format_human(bounds.lo[idx]) << ", "
         << format_human(bounds.hi[idx]) << "]\n";
  }
  json out;
  out["per_player"] = players;
  return out;
}

// Deterministic axiom battery: the rule under test plus the six separating
// rules, each run against seeded games of the input's class.
json run_axioms(const Workspace& ws, std::ostream& text) {
  const PAdditiveGame& input_game = ws.need_pgame("axioms");
  const double p = input_game.exponent();
  const int n = std::min(input_game.player_count(), 5);
  std::mt19937_64 rng(0x5eed5eedULL);
  std::uniform_real_distribution<double> positive(0.2, 3.0);

  auto positive_game = [&]() {
    std::vector<double> singles(static_cast<std::size_t>(n));
    for (double& v : singles) v = positive(rng);
    return PAdditiveGame(p, std::move(singles));
  };
  auto nulled_game = [&]() {
    std::vector<double> singles(static_cast<std::size_t>(n));
    for (double& v : singles) v = positive(rng);
    singles[rng() % static_cast<std::size_t>(n)] = 0.0;
    return PAdditiveGame(p, std::move(singles));
  };
  // a pair sharing at least one singleton, differing in at least one
  auto related_pair = [&]() {
    std::vector<double> a(static_cast<std::size_t>(n)), b;
    for (double& v : a) v = positive(rng);
    b = a;
    const std::size_t keep = rng() % static_cast<std::size_t>(n);
    for (std::size_t i = 0; i < b.size(); ++i)
      if (i != keep) b[i] = positive(rng);
    return std::pair{PAdditiveGame(p, a), PAdditiveGame(p, b)};
  };

  std::vector<PAdditiveGame> ef_games, np_games;
  std::vector<std::pair<PAdditiveGame, PAdditiveGame>> pairs;
  for (int i = 0; i < 12; ++i) ef_games.push_back(positive_game());
  for (int i = 0; i < 12; ++i) np_games.push_back(nulled_game());
  np_games.emplace_back(2.0, std::vector<double>(static_cast<std::size_t>(n), 0.0));
  for (int i = 0; i < 12; ++i) pairs.push_back(related_pair());

  std::vector<Solution> rules;
  rules.push_back(modified_soc_solution());
  for (Solution& s : builtin_counterexamples()) rules.push_back(std::move(s));

  json out = json::array();
  text << "-- axioms (p = " << format_human(p) << ", battery n = " << n << ") --\n";
  for (const Solution& rule : rules) {
    bool ef = true, np = true, pt = true, pmo = true;
    for (const PAdditiveGame& g : ef_games)
      ef = ef && check_efficiency(rule, g, ws.tol);
    for (const PAdditiveGame& g : np_games)
      np = np && check_null_player(rule, g);
    for (const auto& [g, h] : pairs) {
      pt = pt && check_p_transfer(rule, g, h, ws.tol);
      pmo = pmo && check_p_monotonicity(rule, g, h, ws.tol) &&
            check_p_monotonicity(rule, h, g, ws.tol);
    }
    json entry;
    entry["name"] = rule.name;
    if (!rule.documented_violation.empty())
      entry["documented_violation"] = rule.documented_violation;
    entry["ef"] = ef;
    entry["np"] = np;
    entry["pt"] = pt;
    entry["pmo"] = pmo;
    out.push_back(entry);
    text << rule.name << ": EF " << (ef ? "pass" : "fail") << ", NP "
         << (np ? "pass" : "fail") << ", PT " << (pt ? "pass" : "fail")
         << ", PMO " << (pmo ? "pass" : "fail") << "\n";
  }
  return out;
}

json run_analyze(const Workspace& ws, std::ostream& text) {
  const TuGame& g = ws.need_game();
  const int n = g.player_count();
  json props;
  text << "-- analyze --\n";

  auto put = [&](const char* key, const PropertyReport& report) {
    props[key] = report_json(report);
    text << key << ": " << verdict_text(report) << "\n";
  };
  auto skip = [&](const char* key, const std::string& why) {
    props[key] = json{{"skipped", why}};
    text << key << ": skipped (" << why << ")\n";
  };

  put("monotone_increasing", is_monotone(g, MonotoneDirection::increasing, false));
  put("monotone_decreasing", is_monotone(g, MonotoneDirection::decreasing, false));
  put("monotone_strictly_decreasing",
      is_monotone(g, MonotoneDirection::decreasing, true));
  if (n <= 14) {
    put("subadditive", is_subadditive(g));
    put("superadditive", is_superadditive(g));
    put("convex", is_convex(g));
    put("concave", is_concave(g));
  } else {
    skip("subadditive", "n > 14");
    skip("superadditive", "n > 14");
    skip("convex", "n > 14");
    skip("concave", "n > 14");
  }
  if (n <= 7)
    put("permutationally_concave", is_permutationally_concave(g));
  else
    skip("permutationally_concave", "n > 7");
  if (ws.orientation && n <= 8)
    put("totally_balanced", is_totally_balanced(g, *ws.orientation));
  else
    skip("totally_balanced", ws.orientation ? "n > 8" : "no orientation");

  json out;
  out["properties"] = props;

  if (ws.pgame) {
    const MembershipResult membership =
        validate_membership(g, ws.pgame->exponent(), ws.tol);
    json mj;
    mj["p"] = ws.pgame->exponent();
    mj["member"] = membership.member;
    if (membership.violator) mj["violator"] = labels_json(*membership.violator);
    out["membership"] = mj;
    text << "class membership (p = " << format_human(ws.pgame->exponent())
         << "): " << (membership.member ? "yes" : "no") << "\n";
  }

  if (ws.situation) {
    const InventorySituation& sit = *ws.situation;
    json firms = json::array();
    text << "firm   Q*          M*          m           saving\n";
    int label = 0;
    for (const Firm& f : sit.firms) {
      const EpqPolicy policy = epq_optimal(f, sit.a);
      const double saving = saving_single(f, sit.a, sit.k);
      json fj;
      fj["d"] = f.d;
      fj["h"] = f.h;
      fj["s"] = f.s;
      fj["r"] = f.r;
      fj["Q_star"] = policy.Q;
      fj["M_star"] = policy.M;
      fj["m"] = orders_rate(f, sit.a);
      fj["saving"] = saving;
      firms.push_back(fj);
      std::ostringstream row;
      row.precision(6);
      row << label + 1 << "      " << policy.Q << "  " << policy.M << "  "
          << orders_rate(f, sit.a) << "  " << saving;
      text << row.str() << "\n";
      ++label;
    }
    out["firms"] = firms;
    const Coalition N = Coalition::full(sit.player_count());
    const double mN = coalition_policy(sit, N).mS;
    if (mN > 0)
      out["K_lambda"] =
          sit.lambda_n * sit.alpha * sit.k * sit.k / (4.0 * sit.a * mN * mN);
    if (sit.player_count() <= 8) {
      json coalitions = json::array();
      text << "coalition: joint m | saving | lambda\n";
      for (std::uint32_t m = 1; m < (1u << sit.player_count()); ++m) {
        const Coalition S(m);
        const double joint_m = coalition_policy(sit, S).mS;
        const double saving = coalition_saving(sit, S);
        const double lambda = lambda_of(sit, S);
        json cj;
        cj["coalition"] = labels_json(S);
        cj["m"] = joint_m;
        cj["saving"] = saving;
        cj["lambda"] = lambda;
        coalitions.push_back(cj);
        std::ostringstream row;
        row.precision(6);
        row << S.to_string() << ": " << joint_m << " | " << saving << " | "
            << lambda;
        text << row.str() << "\n";
      }
      out["coalitions"] = coalitions;
    }
  }
  return out;
}

}  // namespace

Report run(const AnalysisRequest& req) {
  if (!(req.tol > 0) || !std::isfinite(req.tol))
    throw std::invalid_argument("tolerance must be a positive real");

  std::vector<std::string> commands;
  for (const std::string& c : req.commands) {
    if (!kKnownCommands.count(c))
      throw std::invalid_argument("unknown command: " + c);
    if (std::find(commands.begin(), commands.end(), c) == commands.end())
      commands.push_back(c);
  }
  if (commands.empty()) commands.push_back("analyze");

  const LoadedInput input = load_input(req.input_path);
  Workspace ws = build_workspace(req, input);

  // fail the whole request before any command runs
  for (const std::string& command : commands) {
    if ((command == "soc" || command == "pmas" || command == "axioms" ||
         command == "classify") &&
        !ws.pgame)
      throw std::invalid_argument(command + " needs a class exponent; supply p");
    if ((command == "core" || command == "bounds") && !ws.orientation)
      throw std::invalid_argument(command +
                                  " needs an orientation; supply one or p");
  }

  std::ostringstream text;
  text << "coopgame " << version() << "\n";
  text << "mode: " << to_string(ws.mode);
  if (ws.game) text << " (n = " << ws.game->player_count() << ")";
  text << "\n";

  json results;
  for (const std::string& command : commands) {
    if (command == "classify")
      results["classify"] = run_classify(ws, text);
    else if (command == "soc")
      results["soc"] = run_soc(ws, text);
    else if (command == "pmas")
      results["pmas"] = run_pmas(ws, text);
    else if (command == "core")
      results["core"] = run_core(ws, text);
    else if (command == "bounds")
      results["bounds"] = run_bounds(ws, text);
    else if (command == "axioms")
      results["axioms"] = run_axioms(ws, text);
    else
      results["analyze"] = run_analyze(ws, text);
  }

  json doc;
  doc["tool"] = "coopgame";
  doc["version"] = version();
  doc["mode"] = to_string(ws.mode);
  doc["tolerance"] = req.tol;
  doc["input"] = input_echo(input);
  doc["results"] = results;
  json notes = json::array();
  for (const std::string& note : ws.notes) notes.push_back(note);
  doc["notes"] = notes;
  for (const std::string& note : ws.notes) text << "note: " << note << "\n";

  Report report;
  report.machine_json = detail::dump_canonical(doc) + "\n";
  report.text = text.str();
  return report;
}

}  // namespace coopgame
