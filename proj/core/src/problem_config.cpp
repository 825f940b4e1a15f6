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

#include "opmivp/problem_config.hpp"

#include "opmivp/error.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

namespace opmivp {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

// Strips a trailing '#' comment that is not inside double quotes.
std::string_view strip_comment(std::string_view line) {
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    if (line[i] == '"') quoted = !quoted;
    if (line[i] == '#' && !quoted) return line.substr(0, i);
  }
  return line;
}

std::string unquote(std::string_view key, std::string_view v) {
  if (!v.empty() && v.front() == '"') {
    if (v.size() < 2 || v.back() != '"') throw ConfigError(std::string(key), "unterminated string");
    return std::string(v.substr(1, v.size() - 2));
  }
  return std::string(v);
}

Expr parse_key(const std::string& key, const std::string& text) {
  try {
    return parse(text);
  } catch (const ParseError& e) {
    throw ConfigError(key, std::string("cannot parse \"") + text + "\": " + e.what());
  }
}

double constant_value(const std::string& key, const std::string& text) {
  const Expr e = parse_key(key, text);
  if (!e.is_constant()) throw ConfigError(key, "must be a constant, got \"" + text + "\"");
  const double v = eval_expr(e, 0.0);
  if (!std::isfinite(v)) throw ConfigError(key, "value is not finite");
  return v;
}

Interval parse_domain(const std::string& text) {
  const std::string_view v = trim(text);
  if (v.size() < 2 || v.front() != '[' || v.back() != ']')
    throw ConfigError("domain", "expected [a, b], got \"" + text + "\"");
  const std::string_view inner = v.substr(1, v.size() - 2);
  const auto comma = inner.find(',');
  if (comma == std::string_view::npos || inner.find(',', comma + 1) != std::string_view::npos)
    throw ConfigError("domain", "expected [a, b], got \"" + text + "\"");
  const Interval d{constant_value("domain", std::string(trim(inner.substr(0, comma)))),
                   constant_value("domain", std::string(trim(inner.substr(comma + 1))))};
  if (!(d.a < d.b)) throw ConfigError("domain", "requires a < b");
  return d;
}

}  // namespace

ProblemConfig parse_problem_config(std::string_view text) {
  ProblemConfig cfg;
  std::set<std::string> seen;
  bool in_problem = false;
  std::size_t line_no = 0;
  std::istringstream in{std::string(text)};
  std::string raw;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string_view line = trim(strip_comment(raw));
    if (line.empty()) continue;
    const std::string where = "line " + std::to_string(line_no);
    if (line.front() == '[') {
      if (line != "[problem]") throw ConfigError(where, "unknown section " + std::string(line));
      in_problem = true;
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) throw ConfigError(where, "expected key = value");
    const std::string key(trim(line.substr(0, eq)));
    if (!in_problem) throw ConfigError(key, "appears before the [problem] section (" + where + ")");
    if (!seen.insert(key).second) throw ConfigError(key, "given twice (" + where + ")");
    std::string value = unquote(key, trim(line.substr(eq + 1)));
    if (value.empty()) throw ConfigError(key, "empty value (" + where + ")");

    if (key == "P") cfg.P = std::move(value);
    else if (key == "Q") cfg.Q = std::move(value);
    else if (key == "r") cfg.r = std::move(value);
    else if (key == "alpha") cfg.alpha = std::move(value);
    else if (key == "beta") cfg.beta = std::move(value);
    else if (key == "domain") cfg.domain = std::move(value);
    else if (key == "n") cfg.n = std::move(value);
    else if (key == "exact") cfg.exact = std::move(value);
    else throw ConfigError(key, "unknown key (" + where + ")");
  }
  if (cfg.r.empty()) throw ConfigError("r", "missing");
  return cfg;
}

ProblemConfig load_problem_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open config file " + path.string());
  std::ostringstream os;
  os << in.rdbuf();
  return parse_problem_config(os.str());
}

ParsedProblem build_problem(const ProblemConfig& cfg) {
  ParsedProblem out;
  auto& p = out.problem;
  p.P = IntegrableFunction::from_expr(parse_key("P", cfg.P));
  p.Q = IntegrableFunction::from_expr(parse_key("Q", cfg.Q));
  p.r = IntegrableFunction::from_expr(parse_key("r", cfg.r));
  p.alpha = constant_value("alpha", cfg.alpha);
  p.beta = constant_value("beta", cfg.beta);
  p.domain = parse_domain(cfg.domain);
  const double n = constant_value("n", cfg.n);
  if (n != std::floor(n) || n < 1 || n > 1000) throw ConfigError("n", "must be a positive integer");
  p.n = static_cast<int>(n);
  if (cfg.exact) out.exact = parse_key("exact", *cfg.exact);
  return out;
}

}  // namespace opmivp
