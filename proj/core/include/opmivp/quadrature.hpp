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

#include <memory>
#include <vector>

namespace opmivp {

/// Gauss-Legendre nodes and weights mapped to [0,1]. Exact for polynomials
/// of degree <= 2 * size() - 1.
struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;

  std::size_t size() const noexcept { return nodes.size(); }
};

/// Computes the m-point rule by Newton iteration on P_m. Rules are cached,
/// so repeated requests for the same m are cheap; the cache is thread-safe.
std::shared_ptr<const GaussRule> gauss_legendre_01(int m);

}  // namespace opmivp
