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

#include "opmivp/report.hpp"

#include "opmivp/error.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>

namespace opmivp {

std::string format_fixed(double v, int decimals) {
  std::array<char, 64> buf{};
  std::snprintf(buf.data(), buf.size(), "%.*f", decimals, v);
  std::string s(buf.data());
  if (s.front() == '-' && s.find_first_not_of("-0.") == std::string::npos) s.erase(0, 1);
  return s;
}

std::string format_full(double v) {
  std::array<char, 64> buf{};
  const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), ptr);
}

std::string display_vector(std::span<const double> v, int decimals) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += format_fixed(v[i], decimals);
  }
  return out + ")";
}

std::string display_polynomial(std::span<const double> power, int decimals, std::string_view var) {
  std::string out;
  for (std::size_t k = 0; k < power.size(); ++k) {
    const std::string mag = format_fixed(std::abs(power[k]), decimals);
    if (mag.find_first_not_of("0.") == std::string::npos) continue;
    const bool negative = power[k] < 0;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    out += mag;
    if (k >= 1) {
      out += ' ';
      out += var;
    }
    if (k >= 2) out += "^" + std::to_string(k);
  }
  return out.empty() ? "0" : out;
}

PlotData make_plot_data(const SpectralSolution& sol, const IVProblem& problem, const SampleSet* oracle,
                        const SampleSet* exact, int grid) {
  PlotData d;
  if (oracle) {
    d.x = oracle->x;
  } else if (exact) {
    d.x = exact->x;
  } else {
    d.x = uniform_grid(problem.domain, grid);
  }
  if (oracle && exact) compare(*oracle, *exact);  // grid agreement check only
  for (double x : d.x) {
    const double y = sol.y(x);
    d.y_approx.push_back(y);
    d.residual.push_back(sol.ddy(x) + problem.P(x) * sol.dy(x) + problem.Q(x) * y - problem.r(x));
  }
  if (oracle) d.y_oracle = oracle->y;
  if (exact) d.y_exact = exact->y;
  const auto& ref = exact ? d.y_exact : d.y_oracle;
  if (!ref.empty()) {
    if (ref.size() != d.x.size()) throw DimensionMismatch("reference samples do not match the grid");
    for (std::size_t i = 0; i < d.x.size(); ++i) d.abs_error.push_back(std::abs(d.y_approx[i] - ref[i]));
  }
  return d;
}

void write_plot_csv(std::ostream& os, const PlotData& d) {
  os << "x,y_approx";
  if (!d.y_oracle.empty()) os << ",y_oracle";
  if (!d.y_exact.empty()) os << ",y_exact";
  if (!d.abs_error.empty()) os << ",abs_error";
  os << ",residual\n";
  for (std::size_t i = 0; i < d.x.size(); ++i) {
    os << format_full(d.x[i]) << ',' << format_full(d.y_approx[i]);
    if (!d.y_oracle.empty()) os << ',' << format_full(d.y_oracle[i]);
    if (!d.y_exact.empty()) os << ',' << format_full(d.y_exact[i]);
    if (!d.abs_error.empty()) os << ',' << format_full(d.abs_error[i]);
    os << ',' << format_full(d.residual[i]) << '\n';
  }
}

void emit_plot_data(const PlotData& data, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open " + path.string() + " for writing");
  write_plot_csv(out, data);
  out.flush();
  if (!out) throw Error("failed writing " + path.string());
}

}  // namespace opmivp
