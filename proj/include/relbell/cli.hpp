// Copyright 2026 The relbell Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "relbell/oracle.hpp"

namespace relbell {

/// Exit statuses of the command-line front end.
enum ExitStatus : int
{
    exit_ok = 0,
    exit_verification_failure = 1,
    exit_usage_error = 2,
};

/*!
 * Runs one subcommand (wigner, boost-bell, correlate, chsh, sweep, maximize,
 * verify). args excludes the program name. Records go to out as CSV (one
 * header row) or JSON; diagnostics go to err.
 */
int run_cli(std::vector<std::string> const& args, std::ostream& out,
            std::ostream& err);

/// JSON form of a crosscheck report.
nlohmann::json to_json(CrosscheckReport const& report);

}  // namespace relbell
