// Copyright 2026 The inhomsat Authors
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

#include "inhomsat/components.hpp"

#include <algorithm>
#include <stdexcept>

namespace inhomsat {

namespace {

bool HasBothSigns(const BlockSet& set, std::size_t type) {
  return set.contains(2 * type) && set.contains(2 * type + 1);
}

}  // namespace

CsrGraph SupportDigraph(const BlockDigraphon& gamma) {
  const std::size_t dim = gamma.values.dim();
  std::vector<std::pair<std::uint32_t, std::uint32_t>> arcs;
  for (std::size_t a = 0; a < dim; ++a) {
    for (std::size_t b = 0; b < dim; ++b) {
      if (gamma.values(a, b) > 0) {
        arcs.emplace_back(static_cast<std::uint32_t>(a),
                          static_cast<std::uint32_t>(b));
      }
    }
  }
  return CsrGraph(static_cast<std::uint32_t>(dim), std::move(arcs));
}

bool IsStronglyConnected(const BlockDigraphon& gamma, const BlockSet& set) {
  if (set.empty()) throw std::invalid_argument("strong connectivity of an empty set");
  if (set.size() == 1) {
    const std::size_t b = set.members()[0];
    return gamma.values(b, b) > 0;
  }
  const BlockDigraphon sub = Restrict(gamma, set);
  const SccResult scc = StrongComponents(SupportDigraph(sub));
  const std::uint32_t c = scc.component[set.members()[0]];
  return std::all_of(set.members().begin(), set.members().end(),
                     [&](std::size_t b) { return scc.component[b] == c; });
}

Decomposition Decompose(const BlockDigraphon& gamma) {
  const std::size_t dim = gamma.values.dim();
  const CsrGraph support = SupportDigraph(gamma);
  const SccResult scc = StrongComponents(support);

  std::vector<std::vector<std::size_t>> groups(scc.count);
  for (std::size_t b = 0; b < dim; ++b) groups[scc.component[b]].push_back(b);

  Decomposition d;
  std::vector<std::size_t> fragmented;
  for (auto& g : groups) {
    const bool trivial = g.size() == 1 && gamma.values(g[0], g[0]) <= 0;
    if (trivial) {
      fragmented.push_back(g[0]);
    } else {
      d.components.emplace_back(dim, std::move(g));
    }
  }
  std::sort(d.components.begin(), d.components.end(),
            [](const BlockSet& x, const BlockSet& y) {
              return x.members().front() < y.members().front();
            });
  d.fragmented = BlockSet(dim, std::move(fragmented));
  d.contradictory.assign(d.components.size(), false);
  for (std::size_t i : ContradictoryComponents(d)) d.contradictory[i] = true;
  return d;
}

std::vector<std::size_t> Decomposition::contradictory_indices() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < contradictory.size(); ++i) {
    if (contradictory[i]) out.push_back(i);
  }
  return out;
}

std::size_t Decomposition::component_of(std::size_t block) const {
  for (std::size_t i = 0; i < components.size(); ++i) {
    if (components[i].contains(block)) return i;
  }
  return components.size();
}

std::vector<std::size_t> ContradictoryComponents(const Decomposition& d) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < d.components.size(); ++i) {
    const BlockSet& c = d.components[i];
    const bool contradictory =
        std::any_of(c.members().begin(), c.members().end(),
                    [&](std::size_t b) { return HasBothSigns(c, b / 2); });
    if (contradictory) out.push_back(i);
  }
  return out;
}

std::vector<bool> CheckProductForm(const Decomposition& d) {
  std::vector<bool> out;
  for (std::size_t i : ContradictoryComponents(d)) {
    const BlockSet& c = d.components[i];
    out.push_back(std::all_of(c.members().begin(), c.members().end(),
                              [&](std::size_t b) { return HasBothSigns(c, b / 2); }));
  }
  return out;
}

}  // namespace inhomsat
