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

#ifndef INHOMSAT_COMPONENTS_HPP_
#define INHOMSAT_COMPONENTS_HPP_

// Strong-component decomposition of block digraphons.
//
// For a step kernel everything reduces to the support digraph on blocks
// (arc a -> b iff Gamma(a,b) > 0):
//
//  * A union X of blocks lying in one nontrivial support SCC is strongly
//    connected. Split X = A + B with both parts of positive measure and call
//    a block "in A" ("in B") if it meets A (B) in positive measure. Some
//    arc leads from a block in A to a block in B: every block of X has an
//    out-arc inside X, and a path from any block in A to any block in B
//    must cross from the first class to the second at some arc. That
//    arc's rectangle meets A x B in positive measure.
//  * A single block without a self-loop is not strongly connected: split it
//    in half, Gamma vanishes on the block square.
//  * Blocks in trivial SCCs (no internal arc) therefore form the fragmented
//    part: any positive-measure subset of them either lies in one
//    loop-free block or spans blocks with no cycle among them, and the
//    acyclic order yields a split with zero cross integral.
//
// Hence the digraphon components are exactly the nontrivial support SCCs.

#include <cstddef>
#include <vector>

#include "inhomsat/graph.hpp"
#include "inhomsat/kernel.hpp"

namespace inhomsat {

// Support digraph of Gamma on block indices.
CsrGraph SupportDigraph(const BlockDigraphon& gamma);

// Throws std::invalid_argument if `set` is empty.
bool IsStronglyConnected(const BlockDigraphon& gamma, const BlockSet& set);

struct Decomposition {
  BlockSet fragmented;
  std::vector<BlockSet> components;  // ordered by smallest member
  std::vector<bool> contradictory;   // one flag per component

  std::vector<std::size_t> contradictory_indices() const;
  // Index of the component containing `block`, or components.size() when it
  // is fragmented.
  std::size_t component_of(std::size_t block) const;
  friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

Decomposition Decompose(const BlockDigraphon& gamma);

// Indices of components holding both signs of at least one type.
std::vector<std::size_t> ContradictoryComponents(const Decomposition& d);

// For each contradictory component (in index order): true iff every type it
// touches appears with both signs.
std::vector<bool> CheckProductForm(const Decomposition& d);

}  // namespace inhomsat

#endif  // INHOMSAT_COMPONENTS_HPP_
