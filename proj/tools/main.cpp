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

#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "coopgame/analysis.hpp"

namespace {

// exit codes: 0 ok, 2 validation error, 3 numeric failure

std::vector<std::string> split_commands(const std::string& list) {
  std::vector<std::string> out;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

double default_tolerance() {
  if (const char* env = std::getenv("COOPGAME_TOL"))
    return coopgame::parse_real(env);
  return 1e-9;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cooperative game analysis for inventory-style situations"};
  app.set_version_flag("--version", std::string("coopgame ") + coopgame::version());

  auto* analyze = app.add_subcommand("analyze", "run commands against an input file");
  std::string input_path;
  std::string command_list = "analyze";
  std::string format = "text";
  std::string orientation;
  double tol = 0;
  double p = 0;
  bool p_set = false;
  analyze->add_option("file", input_path, "JSON input document")->required();
  analyze->add_option("--commands", command_list,
                      "comma-separated: analyze,soc,pmas,core,bounds,axioms,classify");
  analyze->add_option("--tol", tol, "tolerance override (default 1e-9 or COOPGAME_TOL)");
  analyze->add_option("--format", format, "json or text")
      ->check(CLI::IsMember({"json", "text"}));
  analyze->add_option("--orientation", orientation, "cost or benefit")
      ->check(CLI::IsMember({"cost", "benefit"}));
  analyze->add_option("--p", p, "class exponent (required for padditive inputs without one)")
      ->each([&](const std::string&) { p_set = true; });
  analyze->require_option(0, 5);

  app.require_subcommand(1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  coopgame::AnalysisRequest req;
  req.input_path = input_path;
  req.commands = split_commands(command_list);
  try {
    req.tol = tol > 0 ? tol : default_tolerance();
    if (p_set) req.p_override = p;
    if (orientation == "cost")
      req.orientation_override = coopgame::Orientation::cost;
    else if (orientation == "benefit")
      req.orientation_override = coopgame::Orientation::benefit;

    const coopgame::Report report = coopgame::run(req);
    std::cout << (format == "json" ? report.machine_json : report.text);
    return 0;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "numeric error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
}
