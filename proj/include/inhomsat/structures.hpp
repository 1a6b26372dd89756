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

#ifndef INHOMSAT_STRUCTURES_HPP_
#define INHOMSAT_STRUCTURES_HPP_

// Witness substructures of unsatisfiability: contradictory cycles,
// (k,a,b)-bicycles, (a,b)-snakes and their serpents. Indices a and b are
// one-based, matching the usual notation u_1..u_k and l_1..l_{a+b-2}.

#include <cstdint>
#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "inhomsat/formula.hpp"

namespace inhomsat {

// Path u_1 -> ... -> u_k on distinct variables plus the arcs
// not u_a -> u_1 and u_k -> not u_b, with 2 <= a <= k and 1 <= b <= k - 1.
struct Bicycle {
  std::vector<Literal> basis;
  std::size_t a = 0;
  std::size_t b = 0;

  std::size_t k() const { return basis.size(); }
  friend bool operator==(const Bicycle&, const Bicycle&) = default;
};

bool IsBicycle(const LiteralDigraph& g, const Bicycle& bicycle);

// Simple cycle (no repeated literal) containing a complementary pair, or
// nothing when no strong component is contradictory. `budget` bounds the
// exhaustive fallback used when the two-path construction fails.
std::optional<std::vector<Literal>> FindContradictoryCycle(
    const LiteralDigraph& g, std::uint64_t budget = 1'000'000);

// Bicycle cut from a simple contradictory cycle: the longest distinct-variable
// subpath (first by rotation), extended by one arc at each end.
std::optional<Bicycle> BicycleFromCycle(const LiteralDigraph& g,
                                        const std::vector<Literal>& cycle);

std::optional<Bicycle> FindBicycle(const LiteralDigraph& g,
                                   std::uint64_t budget = 1'000'000);

inline constexpr std::size_t kCountBicyclesMaxK = 8;
inline constexpr std::uint32_t kCountBicyclesMaxVars = 12;

// Exact number of (k,a,b)-bicycle bases in `g`.
std::uint64_t CountBicycles(const LiteralDigraph& g, std::size_t k, std::size_t a,
                            std::size_t b);

// (not f or l_1), (not l_1 or l_2), ..., (not l_{a-1} or not f),
// (f or l_a), (not l_a or l_{a+1}), ..., (not l_{a+b-2} or f).
struct Snake {
  Literal center;
  std::vector<Literal> chain;  // l_1 .. l_{a+b-2}
  std::size_t a = 0;
  std::size_t b = 0;

  std::vector<Clause> Clauses() const;   // sorted
  std::vector<Literal> Literals() const;  // Lit(F), sorted
  friend bool operator==(const Snake&, const Snake&) = default;
};

// Shape check: a, b >= 2, chain length a + b - 2, all variables distinct.
bool IsWellFormed(const Snake& s);
// Shape check plus every clause present in `f`.
bool IsSnakeOf(const Formula& f, const Snake& s);
// Same clause set.
bool SameSnake(const Snake& x, const Snake& y);

using BigInt = boost::multiprecision::cpp_int;

// 2^{a+b-3} (N)_{a+b-1}: the number of rooted snake representations on N
// variables divided by the four serpent forms per root.
BigInt CountSnakeUniverse(std::uint32_t num_vars, std::size_t a, std::size_t b);

// Rooted implication cycle g -> p_1 -> ... -> p_{a-1} -> not g -> q_1 -> ...
// -> q_{b-1} -> g, stored from the root.
struct Serpent {
  std::vector<Literal> cycle;
  std::size_t a = 0;
  std::size_t b = 0;

  Literal root() const { return cycle.front(); }
  friend bool operator==(const Serpent&, const Serpent&) = default;
};

// The snake read off a serpent: f = root, chain = p then q.
Snake SnakeOf(const Serpent& s);
std::vector<Clause> ClausesOf(const Serpent& s);

struct SerpentSet {
  std::vector<Serpent> serpents;  // distinct forms rooted at the center
  // With a == b the cycles rooted at not f are also (a,b)-serpents of the
  // same snake, doubling the representation count.
  bool a_equals_b = false;
  std::size_t representations() const {
    return serpents.size() * (a_equals_b ? 2 : 1);
  }
};

// The four forms: either branch may be reversed and negated.
SerpentSet SerpentsOf(const Snake& s);

struct SnakeSearch {
  std::optional<Snake> snake;
  std::uint64_t expansions = 0;
  bool budget_exhausted = false;  // a miss is then inconclusive
};

// Depth-first search for a snake subformula, centers in variable order with
// the positive literal first.
SnakeSearch DetectSnake(const Formula& f, std::uint64_t budget = 1'000'000);

}  // namespace inhomsat

#endif  // INHOMSAT_STRUCTURES_HPP_
