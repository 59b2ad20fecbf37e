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

#ifndef COOPGAME_IO_HPP
#define COOPGAME_IO_HPP

#include <optional>
#include <string>
#include <vector>

#include "coopgame/inventory.hpp"
#include "coopgame/tu_game.hpp"

namespace coopgame {

// JSON input documents carry a top-level "mode". Validation failures throw
// std::invalid_argument; they map to the CLI's exit code 2.
enum class InputMode { game, padditive, inventory };

const char* to_string(InputMode m);

/// mode "game": explicit characteristic function. Every nonempty coalition
/// must be listed exactly once (the empty one may be listed with value 0);
/// values may be reals or exact fraction strings like "1/6". Optional "p"
/// and "orientation" fields.
struct GameInput {
  TuGame game;
  std::optional<double> p;
  std::optional<Orientation> orientation;
};

/// mode "padditive": exponent (optional here, the CLI may supply it) plus
/// the singleton values.
struct PAdditiveInput {
  std::optional<double> p;
  std::vector<double> singletons;
};

struct LoadedInput {
  InputMode mode = InputMode::game;
  std::optional<GameInput> game;
  std::optional<PAdditiveInput> padditive;
  std::optional<InventorySituation> situation;
};

LoadedInput load_input(const std::string& path);

/// mode "inventory" loader; all Firm and InventorySituation invariants are
/// enforced, naming the violated one.
InventorySituation load_situation(const std::string& path);

/// Canonical JSON for a situation; load_situation(serialize(sit)) is the
/// identity because reals are rendered with 17 significant digits.
std::string serialize_situation(const InventorySituation& sit);

/// Accepts plain reals and exact fraction strings ("-3/8").
double parse_real(const std::string& text);

/// %.17g, the rendering used by all machine-readable output.
std::string format_real(double v);

/// "p/q" when v is within 1e-12 of a fraction with |p|, q <= 1000 (plain
/// integers render bare), otherwise format_real. Used by human-readable
/// tables.
std::string format_human(double v);

}  // namespace coopgame

#endif  // COOPGAME_IO_HPP
