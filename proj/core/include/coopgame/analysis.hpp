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

#ifndef COOPGAME_ANALYSIS_HPP
#define COOPGAME_ANALYSIS_HPP

#include <optional>
#include <string>
#include <vector>

#include "coopgame/io.hpp"

namespace coopgame {

const char* version();

/// Commands: analyze, soc, pmas, core, bounds, axioms, classify.
/// Mode/command compatibility is validated before anything runs: soc, pmas,
/// axioms and classify need an exponent (from the file or p_override), core
/// and bounds need an orientation (inferred from the exponent when one is
/// known).
struct AnalysisRequest {
  std::string input_path;
  std::vector<std::string> commands = {"analyze"};
  double tol = 1e-9;
  std::optional<double> p_override;
  std::optional<Orientation> orientation_override;
};

/// Both renderings of the same results. machine_json is canonical: sorted
/// keys, reals at 17 significant digits, no volatile fields, so identical
/// requests produce byte-identical documents.
struct Report {
  std::string machine_json;
  std::string text;
};

/// Executes the commands in order. Validation problems throw
/// std::invalid_argument, numeric failures std::domain_error; the CLI maps
/// those to exit codes 2 and 3.
Report run(const AnalysisRequest& req);

}  // namespace coopgame

#endif  // COOPGAME_ANALYSIS_HPP
