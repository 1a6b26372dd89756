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

#include "gtest/gtest.h"
#include "inhomsat/solver.hpp"

using namespace inhomsat;

namespace {

Literal P(std::uint32_t v) { return Literal(v - 1, false); }
Literal N(std::uint32_t v) { return Literal(v - 1, true); }

// Five clauses over three variables; v2 implies its own negation and back.
Formula SmallUnsat() {
  return Formula(3, {Clause(N(1), P(2)), Clause(N(2), P(3)), Clause(N(3), P(1)),
                     Clause(P(1), P(2)), Clause(N(3), N(2))});
}

// Every clause over three variables, indexed for subset enumeration.
std::vector<Clause> AllClauses(std::uint32_t n) {
  std::vector<Clause> out;
  for (std::uint32_t i = 0; i < n; ++i) {
    for (std::uint32_t j = i + 1; j < n; ++j) {
      for (bool a : {false, true}) {
        for (bool b : {false, true}) out.emplace_back(Literal(i, a), Literal(j, b));
      }
    }
  }
  return out;
}

}  // namespace

TEST(ImplicationDigraphTest, TwoArcsPerClause) {
  const ImplicationDigraph g(SmallUnsat());
  EXPECT_EQ(g.num_arcs(), 10u);
  EXPECT_TRUE(g.digraph().has_arc(P(1), P(2)));
  EXPECT_TRUE(g.digraph().has_arc(N(2), N(1)));
  EXPECT_TRUE(g.digraph().has_arc(N(1), P(2)));
  EXPECT_TRUE(g.digraph().has_arc(N(2), P(1)));
  EXPECT_EQ(g.ClauseOf(P(3), N(2)), Clause(N(3), N(2)));
  EXPECT_FALSE(g.ClauseOf(P(2), P(1)).has_value());
}

TEST(ImplicationDigraphTest, ArcsComeInContrapositivePairs) {
  const std::vector<Clause> all = AllClauses(4);
  std::vector<Clause> some;
  for (std::size_t i = 0; i < all.size(); i += 3) some.push_back(all[i]);
  const ImplicationDigraph g(Formula(4, some));
  for (const auto& [u, v] : g.digraph().arcs()) {
    EXPECT_TRUE(g.digraph().has_arc(~v, ~u));
    EXPECT_EQ(g.ClauseOf(u, v), Clause(~u, v));
  }
}

TEST(SolveSccTest, SmallUnsatHasWitness) {
  const Formula f = SmallUnsat();
  const Verdict v = SolveScc(f);
  EXPECT_EQ(v.status, Status::kUnsat);
  EXPECT_TRUE(IsContradictoryWalk(ImplicationDigraph(f).digraph(), v.witness));
  EXPECT_EQ(SolveBruteforce(f).status, Status::kUnsat);
  EXPECT_STREQ(StatusName(v.status), "UNSAT");
}

TEST(SolveSccTest, AgreesWithBruteForceOnEveryThreeVariableFormula) {
  const std::vector<Clause> all = AllClauses(3);
  ASSERT_EQ(all.size(), 12u);
  int unsat = 0;
  for (std::uint32_t mask = 0; mask < (1U << all.size()); ++mask) {
    std::vector<Clause> cs;
    for (std::size_t i = 0; i < all.size(); ++i) {
      if (mask >> i & 1U) cs.push_back(all[i]);
    }
    const Formula f(3, cs);
    const Verdict scc = SolveScc(f);
    const Verdict brute = SolveBruteforce(f);
    ASSERT_EQ(scc.status, brute.status) << "mask " << mask;
    if (scc.status == Status::kSat) {
      ASSERT_TRUE(f.SatisfiedBy(scc.assignment)) << "mask " << mask;
      ASSERT_TRUE(f.SatisfiedBy(brute.assignment));
    } else {
      ++unsat;
      ASSERT_TRUE(IsContradictoryWalk(ImplicationDigraph(f).digraph(), scc.witness));
    }
  }
  EXPECT_GT(unsat, 0);
}

TEST(SolveSccTest, AgreesWithBruteForceOnRandomFormulas) {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const std::uint32_t n = 4 + seed % 9;
    const Formula f = SampleFormula(n, ConstantKernel(1.0 + double(seed % 7)), seed).formula;
    const Verdict scc = SolveScc(f);
    ASSERT_EQ(scc.status, SolveBruteforce(f).status) << "seed " << seed;
    if (scc.status == Status::kSat) {
      ASSERT_TRUE(f.SatisfiedBy(scc.assignment));
    }
  }
}

TEST(SolveSccTest, EmptyFormulaIsSat) {
  const Verdict v = SolveScc(Formula(5, {}));
  EXPECT_EQ(v.status, Status::kSat);
  EXPECT_EQ(v.assignment.size(), 5u);
}

TEST(SolveBruteforceTest, RefusesLargeInstances) {
  EXPECT_THROW(SolveBruteforce(Formula(kBruteforceMaxVars + 1, {})), std::invalid_argument);
}

TEST(ContradictoryWalkTest, RejectsNonWalks) {
  const LiteralDigraph g = ImplicationDigraph(SmallUnsat()).digraph();
  EXPECT_FALSE(IsContradictoryWalk(g, {}));
  EXPECT_FALSE(IsContradictoryWalk(g, {P(1), P(2)}));
  // v2 -> v3 -> -v2 -> v1 -> v2 is a closed walk through both signs of v2.
  EXPECT_TRUE(IsContradictoryWalk(g, {P(2), P(3), N(2), P(1)}));
  std::vector<Literal> w;
  EXPECT_TRUE(HasContradictoryComponent(g, &w));
  EXPECT_TRUE(IsContradictoryWalk(g, w));
}

TEST(ConfinementTest, SignPreservingKernelNeverContradicts) {
  // Mixed-sign clauses only: the implication digraph never leaves a sign class.
  const BlockKernel w = SingleTypeKernel(0, 3, 0);
  const Decomposition d = Decompose(ImplicationDigraphon(w));
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const FormulaSample s = SampleFormulaDagger(200, w, seed);
    const ConfinementReport r = ConfinementCheck(ImplicationDigraph(s.formula).digraph(), s.types, d);
    ASSERT_TRUE(r.ok()) << "seed " << seed << ": " << r.violations.front().description;
    EXPECT_EQ(r.contradictory_sccs, 0u);
    EXPECT_EQ(SolveScc(s.formula).status, Status::kSat);
  }
}

TEST(ConfinementTest, ZeroAndHomogeneousKernels) {
  const BlockKernel zero = ConstantKernel(0);
  const FormulaSample s0 = SampleFormulaDagger(100, zero, 1);
  const ConfinementReport r0 =
      ConfinementCheck(ImplicationDigraph(s0.formula).digraph(), s0.types,
                       Decompose(ImplicationDigraphon(zero)));
  EXPECT_TRUE(r0.ok());
  EXPECT_EQ(r0.nontrivial_sccs, 0u);

  const BlockKernel w = ConstantKernel(3);
  const Decomposition d = Decompose(ImplicationDigraphon(w));
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const FormulaSample s = SampleFormulaDagger(300, w, seed);
    EXPECT_TRUE(ConfinementCheck(ImplicationDigraph(s.formula).digraph(), s.types, d).ok());
  }
}

TEST(ConfinementTest, FlagsSccInFragmentedPart) {
  // A 2-cycle over positive literals, but the kernel says no component exists.
  const LiteralDigraph g(2, {{P(1), P(2)}, {P(2), P(1)}});
  const TypeAssignment tau{{0, 0}, {Sign::kPlus, Sign::kPlus}};
  const ConfinementReport r = ConfinementCheck(g, tau, Decompose(ImplicationDigraphon(ConstantKernel(0))));
  EXPECT_FALSE(r.ok());
}
