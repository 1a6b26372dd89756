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

#ifndef INHOMSAT_GRAPH_HPP_
#define INHOMSAT_GRAPH_HPP_

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace inhomsat {

// Compressed adjacency arrays: successors of u are
// targets[offsets[u] .. offsets[u+1]), sorted and duplicate free.
class CsrGraph {
 public:
  CsrGraph() : offsets_(1, 0) {}
  CsrGraph(std::uint32_t num_nodes,
           std::vector<std::pair<std::uint32_t, std::uint32_t>> arcs);

  std::uint32_t num_nodes() const {
    return static_cast<std::uint32_t>(offsets_.size() - 1);
  }
  std::size_t num_arcs() const { return targets_.size(); }
  std::span<const std::uint32_t> successors(std::uint32_t u) const {
    return {targets_.data() + offsets_[u], offsets_[u + 1] - offsets_[u]};
  }
  bool has_arc(std::uint32_t u, std::uint32_t v) const;

 private:
  std::vector<std::size_t> offsets_;
  std::vector<std::uint32_t> targets_;
};

struct SccResult {
  // component[u] in [0, count). Ids follow completion order of the
  // lowlink search, i.e. a reverse topological order of the condensation:
  // if u -> v crosses components then component[u] > component[v].
  std::vector<std::uint32_t> component;
  std::uint32_t count = 0;
};

// Iterative single-pass lowlink (Tarjan) search; no recursion.
SccResult StrongComponents(const CsrGraph& g);

// Shortest path from `from` to `to` using only nodes accepted by `allowed`
// (endpoints included). Empty when unreachable. A path from a node to itself
// is a shortest nonempty cycle through it.
template <typename Allowed>
std::vector<std::uint32_t> ShortestPath(const CsrGraph& g, std::uint32_t from,
                                        std::uint32_t to, Allowed allowed);

}  // namespace inhomsat

#include "inhomsat/graph_inl.hpp"

#endif  // INHOMSAT_GRAPH_HPP_
