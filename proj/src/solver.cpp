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

#include "inhomsat/solver.hpp"

#include <algorithm>
#include <stdexcept>

namespace inhomsat {

ImplicationDigraph::ImplicationDigraph(const Formula& f) : clauses_(f.clauses()) {
  std::vector<std::pair<Literal, Literal>> arcs;
  arcs.reserve(2 * clauses_.size());
  for (const Clause& c : clauses_) {
    arcs.emplace_back(~c.first(), c.second());
    arcs.emplace_back(~c.second(), c.first());
  }
  digraph_ = LiteralDigraph(f.num_vars(), std::move(arcs));
}

std::optional<Clause> ImplicationDigraph::ClauseOf(Literal from, Literal to) const {
  if (from.variable() == to.variable() || !digraph_.has_arc(from, to)) return std::nullopt;
  const Clause c(~from, to);
  if (!std::binary_search(clauses_.begin(), clauses_.end(), c)) return std::nullopt;
  return c;
}

const char* StatusName(Status s) { return s == Status::kSat ? "SAT" : "UNSAT"; }

namespace {

std::vector<Literal> WitnessWalk(const CsrGraph& g, const SccResult& scc, std::uint32_t v) {
  const std::uint32_t nv = v ^ 1U;
  const std::uint32_t id = scc.component[v];
  auto inside = [&](std::uint32_t u) { return scc.component[u] == id; };
  const std::vector<std::uint32_t> there = ShortestPath(g, v, nv, inside);
  const std::vector<std::uint32_t> back = ShortestPath(g, nv, v, inside);
  if (there.empty() || back.empty()) throw std::logic_error("witness path missing");
  std::vector<Literal> walk;
  for (std::size_t i = 0; i + 1 < there.size(); ++i) walk.push_back(Literal::FromCode(there[i]));
  for (std::size_t i = 0; i + 1 < back.size(); ++i) walk.push_back(Literal::FromCode(back[i]));
  return walk;
}

}  // namespace

bool HasContradictoryComponent(const LiteralDigraph& g, std::vector<Literal>* witness) {
  const SccResult scc = StrongComponents(g.graph());
  for (std::uint32_t x = 0; x < g.num_vars(); ++x) {
    if (scc.component[2 * x] == scc.component[2 * x + 1]) {
      if (witness) *witness = WitnessWalk(g.graph(), scc, 2 * x);
      return true;
    }
  }
  return false;
}

bool IsContradictoryWalk(const LiteralDigraph& g, const std::vector<Literal>& walk) {
  if (walk.empty()) return false;
  for (std::size_t i = 0; i < walk.size(); ++i) {
    const Literal u = walk[i], v = walk[(i + 1) % walk.size()];
    if (u.variable() >= g.num_vars() || v.variable() >= g.num_vars()) return false;
    if (!g.has_arc(u, v)) return false;
  }
  std::vector<Literal> sorted = walk;
  std::sort(sorted.begin(), sorted.end());
  for (const Literal l : sorted) {
    if (!l.negated() && std::binary_search(sorted.begin(), sorted.end(), ~l)) return true;
  }
  return false;
}

Verdict SolveScc(const Formula& f) {
  const ImplicationDigraph dg(f);
  const CsrGraph& g = dg.digraph().graph();
  const SccResult scc = StrongComponents(g);
  Verdict verdict;
  for (std::uint32_t x = 0; x < f.num_vars(); ++x) {
    if (scc.component[2 * x] == scc.component[2 * x + 1]) {
      verdict.status = Status::kUnsat;
      verdict.witness = WitnessWalk(g, scc, 2 * x);
      return verdict;
    }
  }
  // Component ids are reverse topological, so the literal whose component
  // finishes first (smaller id) is downstream and is made true.
  verdict.assignment.resize(f.num_vars());
  for (std::uint32_t x = 0; x < f.num_vars(); ++x) {
    verdict.assignment[x] = scc.component[2 * x] < scc.component[2 * x + 1];
  }
  if (!f.SatisfiedBy(verdict.assignment)) {
    throw std::logic_error("strong-component assignment does not satisfy the formula");
  }
  return verdict;
}

Verdict SolveBruteforce(const Formula& f) {
  const std::uint32_t n = f.num_vars();
  if (n > kBruteforceMaxVars) {
    throw std::invalid_argument("brute force limited to " +
                                std::to_string(kBruteforceMaxVars) + " variables");
  }
  // Per clause: bit masks of the variables and the polarity that satisfies.
  struct Packed {
    std::uint32_t mask_a, want_a, mask_b, want_b;
  };
  std::vector<Packed> packed;
  packed.reserve(f.size());
  for (const Clause& c : f.clauses()) {
    const std::uint32_t ma = 1U << c.first().variable(), mb = 1U << c.second().variable();
    packed.push_back({ma, c.first().negated() ? 0U : ma, mb, c.second().negated() ? 0U : mb});
  }
  Verdict verdict;
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t bits = 0; bits < total; ++bits) {
    const auto a = static_cast<std::uint32_t>(bits);
    const bool all = std::all_of(packed.begin(), packed.end(), [a](const Packed& p) {
      return (a & p.mask_a) == p.want_a || (a & p.mask_b) == p.want_b;
    });
    if (all) {
      verdict.assignment.resize(n);
      for (std::uint32_t x = 0; x < n; ++x) verdict.assignment[x] = (a >> x) & 1U;
      return verdict;
    }
  }
  verdict.status = Status::kUnsat;
  return verdict;
}

ConfinementReport ConfinementCheck(const LiteralDigraph& g, const TypeAssignment& tau,
                                   const Decomposition& d) {
  if (!tau.has_signs() || tau.size() != g.num_vars()) {
    throw std::invalid_argument("confinement check needs a signed type assignment of length n");
  }
  const SccResult scc = StrongComponents(g.graph());
  std::vector<std::uint32_t> size(scc.count, 0);
  for (std::uint32_t c : scc.component) ++size[c];
  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> target(scc.count, kUnset);
  std::vector<bool> bad(scc.count, false), contradictory(scc.count, false);
  ConfinementReport report;
  for (std::uint32_t code = 0; code < g.num_literals(); ++code) {
    const std::uint32_t c = scc.component[code];
    if (size[c] < 2 || bad[c]) continue;  // no self-loops exist on literals
    if (scc.component[code ^ 1U] == c) contradictory[c] = true;
    const std::size_t comp = d.component_of(tau.BlockOf(Literal::FromCode(code)));
    if (comp == d.components.size()) {
      bad[c] = true;
      report.violations.push_back(
          {c, "literal " + Literal::FromCode(code).ToString() + " maps to the fragmented part"});
    } else if (target[c] == kUnset) {
      target[c] = comp;
    } else if (target[c] != comp) {
      bad[c] = true;
      report.violations.push_back({c, "strong component spans kernel components " +
                                          std::to_string(target[c]) + " and " +
                                          std::to_string(comp)});
    }
  }
  for (std::uint32_t c = 0; c < scc.count; ++c) {
    if (size[c] < 2) continue;
    ++report.nontrivial_sccs;
    if (!contradictory[c]) continue;
    ++report.contradictory_sccs;
    if (!bad[c] && target[c] != kUnset && !d.contradictory[target[c]]) {
      report.violations.push_back(
          {c, "contradictory strong component maps into non-contradictory component " +
                  std::to_string(target[c])});
    }
  }
  return report;
}

}  // namespace inhomsat
