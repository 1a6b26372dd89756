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

#ifndef INHOMSAT_SOLVER_HPP_
#define INHOMSAT_SOLVER_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "inhomsat/components.hpp"
#include "inhomsat/formula.hpp"
#include "inhomsat/sampler.hpp"

namespace inhomsat {

// Clause {l1, l2} contributes the arcs not l1 -> l2 and not l2 -> l1.
class ImplicationDigraph {
 public:
  ImplicationDigraph() = default;
  explicit ImplicationDigraph(const Formula& f);

  const LiteralDigraph& digraph() const { return digraph_; }
  std::uint32_t num_vars() const { return digraph_.num_vars(); }
  std::size_t num_arcs() const { return digraph_.num_arcs(); }
  // The clause that produced the arc, if the arc is present.
  std::optional<Clause> ClauseOf(Literal from, Literal to) const;

 private:
  LiteralDigraph digraph_;
  std::vector<Clause> clauses_;
};

enum class Status { kSat, kUnsat };
const char* StatusName(Status s);

struct Verdict {
  Status status = Status::kSat;
  std::vector<bool> assignment;  // when SAT
  // When UNSAT: closed walk w_0 -> w_1 -> ... -> w_{k-1} -> w_0 through
  // some literal and its negation. w_0 is the first literal in the list.
  std::vector<Literal> witness;
};

// Linear time via strong components of the implication digraph.
Verdict SolveScc(const Formula& f);

// Exhaustive scan over all 2^n assignments; n <= 25.
Verdict SolveBruteforce(const Formula& f);
inline constexpr std::uint32_t kBruteforceMaxVars = 25;

// For any literal digraph: true iff some strong component contains a
// literal and its negation. Fills `witness` with a closed walk if given.
bool HasContradictoryComponent(const LiteralDigraph& g,
                               std::vector<Literal>* witness = nullptr);

// True iff `walk` is a closed walk of `g` containing a complementary pair.
bool IsContradictoryWalk(const LiteralDigraph& g, const std::vector<Literal>& walk);

struct ConfinementViolation {
  std::uint32_t scc = 0;     // strong component id in the literal digraph
  std::string description;
};

struct ConfinementReport {
  std::size_t nontrivial_sccs = 0;
  std::size_t contradictory_sccs = 0;
  std::vector<ConfinementViolation> violations;
  bool ok() const { return violations.empty(); }
};

// Every nontrivial strong component of `g` must map under tau into a single
// component of the decomposition, and contradictory ones into a
// contradictory component. `tau` must carry signs.
ConfinementReport ConfinementCheck(const LiteralDigraph& g, const TypeAssignment& tau,
                                   const Decomposition& d);

}  // namespace inhomsat

#endif  // INHOMSAT_SOLVER_HPP_
