// Copyright 2026 The opmivp Authors
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

#pragma once

#include "opmivp/expr.hpp"
#include "opmivp/ivp_solver.hpp"

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

namespace opmivp {

/// Raw contents of a problem file:
///
///     # comment
///     [problem]
///     P = "tan(x)"
///     Q = "2*cos(x)^2"
///     r = "2*cos(x)^4"
///     alpha = 0
///     beta = 0
///     domain = [0, 1]
///     n = 6
///     exact = "..."        # optional
///
/// Only `r` is required. P, Q, alpha and beta default to 0, the domain to
/// [0, 1] and n to 6.
struct ProblemConfig {
  std::string P = "0";
  std::string Q = "0";
  std::string r;
  std::string alpha = "0";
  std::string beta = "0";
  std::string domain = "[0, 1]";
  std::string n = "6";
  std::optional<std::string> exact;
};

/// Throws ConfigError naming the key (or line) at fault.
ProblemConfig parse_problem_config(std::string_view text);
ProblemConfig load_problem_config(const std::filesystem::path& path);

struct ParsedProblem {
  IVProblem problem;
  std::optional<Expr> exact;
};

/// Parses every expression up front. Throws ConfigError naming the key, with
/// the expression position in the message.
ParsedProblem build_problem(const ProblemConfig& config);

}  // namespace opmivp
