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

#ifndef COOPGAME_SRC_JSON_UTIL_HPP
#define COOPGAME_SRC_JSON_UTIL_HPP

#include <string>

#include "json.hpp"

namespace coopgame::detail {

nlohmann::json read_json_file(const std::string& path);

/// Accepts a JSON number or an exact fraction string like "1/6".
double json_real(const nlohmann::json& v, const std::string& what);

/// Canonical dump: sorted keys (nlohmann's default object order), compact
/// separators, every float at 17 significant digits.
std::string dump_canonical(const nlohmann::json& j);

}  // namespace coopgame::detail

#endif  // COOPGAME_SRC_JSON_UTIL_HPP
