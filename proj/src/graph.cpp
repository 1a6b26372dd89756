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

#include "inhomsat/graph.hpp"

#include <algorithm>
#include <limits>

namespace inhomsat {

CsrGraph::CsrGraph(std::uint32_t num_nodes,
                   std::vector<std::pair<std::uint32_t, std::uint32_t>> arcs) {
  std::sort(arcs.begin(), arcs.end());
  arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());
  offsets_.assign(std::size_t{num_nodes} + 1, 0);
  for (const auto& [u, v] : arcs) ++offsets_[u + 1];
  for (std::size_t i = 0; i < num_nodes; ++i) offsets_[i + 1] += offsets_[i];
  targets_.reserve(arcs.size());
  for (const auto& arc : arcs) targets_.push_back(arc.second);
}

bool CsrGraph::has_arc(std::uint32_t u, std::uint32_t v) const {
  auto s = successors(u);
  return std::binary_search(s.begin(), s.end(), v);
}

SccResult StrongComponents(const CsrGraph& g) {
  constexpr std::uint32_t kUnvisited = std::numeric_limits<std::uint32_t>::max();
  const std::uint32_t n = g.num_nodes();
  SccResult out;
  out.component.assign(n, kUnvisited);

  std::vector<std::uint32_t> index(n, kUnvisited);
  std::vector<std::uint32_t> lowlink(n, 0);
  std::vector<std::uint32_t> stack;
  std::vector<bool> on_stack(n, false);
  // (node, position of next successor to scan)
  std::vector<std::pair<std::uint32_t, std::uint32_t>> call;
  std::uint32_t next_index = 0;

  for (std::uint32_t root = 0; root < n; ++root) {
    if (index[root] != kUnvisited) continue;
    call.emplace_back(root, 0);
    index[root] = lowlink[root] = next_index++;
    stack.push_back(root);
    on_stack[root] = true;

    while (!call.empty()) {
      auto& [u, pos] = call.back();
      const auto succ = g.successors(u);
      if (pos < succ.size()) {
        const std::uint32_t v = succ[pos++];
        if (index[v] == kUnvisited) {
          index[v] = lowlink[v] = next_index++;
          stack.push_back(v);
          on_stack[v] = true;
          call.emplace_back(v, 0);
        } else if (on_stack[v]) {
          lowlink[u] = std::min(lowlink[u], index[v]);
        }
        continue;
      }
      const std::uint32_t done = u;
      call.pop_back();
      if (!call.empty()) {
        const std::uint32_t parent = call.back().first;
        lowlink[parent] = std::min(lowlink[parent], lowlink[done]);
      }
      if (lowlink[done] == index[done]) {
        std::uint32_t w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          out.component[w] = out.count;
        } while (w != done);
        ++out.count;
      }
    }
  }
  return out;
}

}  // namespace inhomsat
