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

#include "coopgame/io.hpp"

#include <cerrno>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "json_util.hpp"

namespace coopgame {

using nlohmann::json;

namespace detail {

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open input file: " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw std::invalid_argument("malformed JSON in " + path + ": " + e.what());
  }
}

double json_real(const json& v, const std::string& what) {
  if (v.is_number()) return v.get<double>();
  if (v.is_string()) return parse_real(v.get<std::string>());
  throw std::invalid_argument(what + " must be a number or a fraction string");
}

namespace {

void dump_value(const json& j, std::string& out) {
  switch (j.type()) {
    case json::value_t::object: {
      out += '{';
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) out += ',';
        first = false;
        out += json(it.key()).dump();
        out += ':';
        dump_value(it.value(), out);
      }
      out += '}';
      break;
    }
    case json::value_t::array: {
      out += '[';
      bool first = true;
      for (const json& item : j) {
        if (!first) out += ',';
        first = false;
        dump_value(item, out);
      }
      out += ']';
      break;
    }
    case json::value_t::number_float:
      out += format_real(j.get<double>());
      break;
    default:
      out += j.dump();
      break;
  }
}

}  // namespace

std::string dump_canonical(const json& j) {
  std::string out;
  dump_value(j, out);
  return out;
}

}  // namespace detail

const char* to_string(InputMode m) {
  switch (m) {
    case InputMode::game:
      return "game";
    case InputMode::padditive:
      return "padditive";
    default:
      return "inventory";
  }
}

double parse_real(const std::string& text) {
  std::string t = text;
  t.erase(0, t.find_first_not_of(" \t"));
  t.erase(t.find_last_not_of(" \t") + 1);
  if (t.empty()) throw std::invalid_argument("empty numeric field");
  const std::size_t slash = t.find('/');
  if (slash != std::string::npos) {
    long long num = 0, den = 0;
    const char* nb = t.data();
    const char* ne = t.data() + slash;
    const char* db = t.data() + slash + 1;
    const char* de = t.data() + t.size();
    auto rn = std::from_chars(nb, ne, num);
    auto rd = std::from_chars(db, de, den);
    if (rn.ec != std::errc{} || rn.ptr != ne || rd.ec != std::errc{} ||
        rd.ptr != de)
      throw std::invalid_argument("malformed fraction: " + text);
    if (den == 0) throw std::invalid_argument("fraction with zero denominator");
    return static_cast<double>(num) / static_cast<double>(den);
  }
  std::size_t used = 0;
  double value = 0;
  try {
    value = std::stod(t, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("malformed real: " + text);
  }
  if (used != t.size()) throw std::invalid_argument("malformed real: " + text);
  return value;
}

std::string format_real(double v) {
  char buffer[40];
  std::snprintf(buffer, sizeof buffer, "%.17g", v);
  return buffer;
}

std::string format_human(double v) {
  if (!std::isfinite(v) || std::abs(v) > 1000.5) return format_real(v);
  for (long long q = 1; q <= 1000; ++q) {
    const double scaled = v * static_cast<double>(q);
    const long long p = std::llround(scaled);
    if (std::llabs(p) > 1000) continue;
    if (std::abs(v - static_cast<double>(p) / static_cast<double>(q)) <= 1e-12) {
      if (q == 1) return std::to_string(p);
      const long long g = std::gcd(std::llabs(p), q);
      std::ostringstream os;
      os << p / g << '/' << q / g;
      return os.str();
    }
  }
  return format_real(v);
}

namespace {

Orientation parse_orientation(const json& v) {
  const std::string s = v.get<std::string>();
  if (s == "cost") return Orientation::cost;
  if (s == "benefit") return Orientation::benefit;
  throw std::invalid_argument("orientation must be \"cost\" or \"benefit\"");
}

GameInput load_game_input(const json& j) {
  if (!j.contains("n") || !j["n"].is_number_integer())
    throw std::invalid_argument("game input needs an integer field \"n\"");
  const int n = j["n"].get<int>();
  if (n < 1 || n > TuGame::kMaxPlayers)
    throw std::invalid_argument("n must be in [1, 20]");
  if (!j.contains("values") || !j["values"].is_array())
    throw std::invalid_argument("game input needs an array field \"values\"");

  std::vector<double> values(std::size_t{1} << n, 0.0);
  std::vector<bool> seen(values.size(), false);
  for (const json& entry : j["values"]) {
    if (!entry.is_object() || !entry.contains("coalition") ||
        !entry.contains("value"))
      throw std::invalid_argument(
          "each value entry needs \"coalition\" and \"value\"");
    std::uint32_t mask = 0;
    for (const json& label : entry["coalition"]) {
      if (!label.is_number_integer())
        throw std::invalid_argument("coalition members must be integer labels");
      const int player = label.get<int>();
      if (player < 1 || player > n)
        throw std::invalid_argument("player label out of range: " +
                                    std::to_string(player));
      const std::uint32_t bit = 1u << (player - 1);
      if (mask & bit)
        throw std::invalid_argument("player listed twice in one coalition");
      mask |= bit;
    }
    if (seen[mask])
      throw std::invalid_argument("coalition listed twice: " +
                                  Coalition(mask).to_string());
    seen[mask] = true;
    const double v = detail::json_real(entry["value"], "coalition value");
    if (mask == 0 && v != 0.0)
      throw std::invalid_argument("the empty coalition must be worth 0");
    values[mask] = v;
  }
  for (std::uint32_t m = 1; m < values.size(); ++m)
    if (!seen[m])
      throw std::invalid_argument("missing coalition " +
                                  Coalition(m).to_string() +
                                  "; every nonempty coalition must be listed");

  GameInput out{TuGame(n, std::move(values)), std::nullopt, std::nullopt};
  if (j.contains("p")) {
    const double p = detail::json_real(j["p"], "exponent p");
    if (p == 0.0 || !std::isfinite(p))
      throw std::invalid_argument("exponent p must be a nonzero real");
    out.p = p;
  }
  if (j.contains("orientation")) out.orientation = parse_orientation(j["orientation"]);
  return out;
}

PAdditiveInput load_padditive_input(const json& j) {
  if (!j.contains("indiv") || !j["indiv"].is_array())
    throw std::invalid_argument("padditive input needs an array field \"indiv\"");
  PAdditiveInput out;
  for (const json& v : j["indiv"]) {
    const double value = detail::json_real(v, "individual value");
    if (!(value >= 0.0) || !std::isfinite(value))
      throw std::invalid_argument("individual values must be nonnegative reals");
    out.singletons.push_back(value);
  }
  if (out.singletons.empty() ||
      out.singletons.size() > static_cast<std::size_t>(TuGame::kMaxPlayers))
    throw std::invalid_argument("indiv must list between 1 and 20 values");
  if (j.contains("p")) {
    const double p = detail::json_real(j["p"], "exponent p");
    if (p == 0.0 || !std::isfinite(p))
      throw std::invalid_argument("exponent p must be a nonzero real");
    out.p = p;
  }
  return out;
}

InventorySituation load_situation_input(const json& j) {
  // the discount design is the one-parameter family (alpha, lambda_n);
  // free per-coalition probability vectors are not a thing here
  for (const char* banned : {"lambda", "lambdas", "lambda_s"})
    if (j.contains(banned))
      throw std::invalid_argument(
          "per-coalition discount probabilities are not supported; "
          "supply alpha and lambda_n");
  InventorySituation sit;
  auto field = [&](const char* name) -> double {
    if (!j.contains(name))
      throw std::invalid_argument(std::string("inventory input needs field \"") +
                                  name + "\"");
    return detail::json_real(j[name], name);
  };
  sit.a = field("a");
  sit.k = field("k");
  sit.P = field("P");
  sit.alpha = field("alpha");
  sit.lambda_n = field("lambda_n");
  if (!j.contains("firms") || !j["firms"].is_array())
    throw std::invalid_argument("inventory input needs an array field \"firms\"");
  for (const json& fj : j["firms"]) {
    Firm f;
    auto firm_field = [&](const char* name) -> double {
      if (!fj.contains(name))
        throw std::invalid_argument(std::string("each firm needs field \"") +
                                    name + "\"");
      return detail::json_real(fj[name], name);
    };
    f.d = firm_field("d");
    f.h = firm_field("h");
    f.s = firm_field("s");
    f.r = firm_field("r");
    sit.firms.push_back(f);
  }
  validate(sit);
  return sit;
}

}  // namespace

LoadedInput load_input(const std::string& path) {
  const json j = detail::read_json_file(path);
  if (!j.is_object() || !j.contains("mode") || !j["mode"].is_string())
    throw std::invalid_argument("input needs a string field \"mode\"");
  const std::string mode = j["mode"].get<std::string>();
  LoadedInput out;
  if (mode == "game") {
    out.mode = InputMode::game;
    out.game = load_game_input(j);
  } else if (mode == "padditive") {
    out.mode = InputMode::padditive;
    out.padditive = load_padditive_input(j);
  } else if (mode == "inventory") {
    out.mode = InputMode::inventory;
    out.situation = load_situation_input(j);
  } else {
    throw std::invalid_argument("unknown mode: " + mode);
  }
  return out;
}

InventorySituation load_situation(const std::string& path) {
  const LoadedInput input = load_input(path);
  if (input.mode != InputMode::inventory)
    throw std::invalid_argument("expected an inventory file: " + path);
  return *input.situation;
}

std::string serialize_situation(const InventorySituation& sit) {
  json j;
  j["mode"] = "inventory";
  j["a"] = sit.a;
  j["k"] = sit.k;
  j["P"] = sit.P;
  j["alpha"] = sit.alpha;
  j["lambda_n"] = sit.lambda_n;
  json firms = json::array();
  for (const Firm& f : sit.firms) {
    json fj;
    fj["d"] = f.d;
    fj["h"] = f.h;
    fj["s"] = f.s;
    fj["r"] = f.r;
    firms.push_back(fj);
  }
  j["firms"] = firms;
  return detail::dump_canonical(j);
}

}  // namespace coopgame
