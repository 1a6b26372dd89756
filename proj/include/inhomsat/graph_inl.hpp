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

#ifndef INHOMSAT_GRAPH_INL_HPP_
#define INHOMSAT_GRAPH_INL_HPP_

#include <algorithm>
#include <deque>
#include <limits>

namespace inhomsat {

template <typename Allowed>
std::vector<std::uint32_t> ShortestPath(const CsrGraph& g, std::uint32_t from,
                                        std::uint32_t to, Allowed allowed) {
  constexpr std::uint32_t kNone = std::numeric_limits<std::uint32_t>::max();
  std::vector<std::uint32_t> parent(g.num_nodes(), kNone);
  std::deque<std::uint32_t> queue{from};
  // The source is not marked so that from == to finds a cycle.
  bool found = false;
  while (!queue.empty() && !found) {
    const std::uint32_t u = queue.front();
    queue.pop_front();
    for (std::uint32_t v : g.successors(u)) {
      if (parent[v] != kNone || !allowed(v)) continue;
      parent[v] = u;
      if (v == to) {
        found = true;
        break;
      }
      queue.push_back(v);
    }
  }
  if (!found) return {};
  std::vector<std::uint32_t> path{to};
  std::uint32_t cur = parent[to];
  while (cur != from) {
    path.push_back(cur);
    cur = parent[cur];
  }
  path.push_back(from);
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace inhomsat

#endif  // INHOMSAT_GRAPH_INL_HPP_
