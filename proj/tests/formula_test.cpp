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

#include <sstream>

#include "gtest/gtest.h"
#include "inhomsat/formula.hpp"

using namespace inhomsat;

TEST(LiteralTest, CodesAndDimacs) {
  const Literal l(4, true);
  EXPECT_EQ(l.code(), 9u);
  EXPECT_EQ(l.variable(), 4u);
  EXPECT_TRUE(l.negated());
  EXPECT_EQ(~l, Literal(4, false));
  EXPECT_EQ(l.ToDimacs(), -5);
  EXPECT_EQ(Literal::FromDimacs(-5), l);
  EXPECT_EQ(l.ToString(), "-v5");
  EXPECT_THROW(Literal::FromDimacs(0), std::invalid_argument);
}

TEST(ClauseTest, CanonicalOrderAndDistinctVariables) {
  const Clause c(Literal(3, false), Literal(1, true));
  EXPECT_EQ(c.first(), Literal(1, true));
  EXPECT_EQ(c, Clause(Literal(1, true), Literal(3, false)));
  EXPECT_THROW(Clause(Literal(2, false), Literal(2, true)), std::invalid_argument);
  EXPECT_TRUE(c.SatisfiedBy({false, false, false, false}));
  EXPECT_FALSE(c.SatisfiedBy({false, true, false, false}));
}

TEST(FormulaTest, DeduplicatesAndChecksRange) {
  const Formula f(3, {Clause(Literal(0, false), Literal(1, false)),
                      Clause(Literal(1, false), Literal(0, false))});
  EXPECT_EQ(f.size(), 1u);
  EXPECT_TRUE(f.contains(Clause(Literal(0, false), Literal(1, false))));
  EXPECT_THROW(Formula(2, {Clause(Literal(0, false), Literal(2, false))}), std::invalid_argument);
}

TEST(DimacsTest, RoundTripKeepsClausesAndProvenance) {
  const Formula f(4,
                  {Clause(Literal(0, false), Literal(1, true)),
                   Clause(Literal(2, true), Literal(3, true))},
                  Provenance{42, "0123456789abcdef", "dagger"});
  std::stringstream ss;
  WriteDimacs(ss, f);
  const Formula back = ReadDimacs(ss);
  EXPECT_EQ(back, f);
  EXPECT_EQ(back.provenance(), f.provenance());
}

TEST(DimacsTest, AcceptsCommentsAndSplitLines) {
  std::stringstream ss("c hello\np cnf 3 2\n1 -2\n 0 -3 2 0\n");
  const Formula f = ReadDimacs(ss);
  EXPECT_EQ(f.num_vars(), 3u);
  EXPECT_EQ(f.size(), 2u);
}

TEST(DimacsTest, RejectsMalformedInput) {
  std::stringstream no_header("1 2 0\n");
  EXPECT_THROW(ReadDimacs(no_header), std::invalid_argument);
  std::stringstream three("p cnf 3 1\n1 2 3 0\n");
  EXPECT_THROW(ReadDimacs(three), std::invalid_argument);
  std::stringstream range("p cnf 2 1\n1 3 0\n");
  EXPECT_THROW(ReadDimacs(range), std::invalid_argument);
  std::stringstream open("p cnf 2 1\n1 2\n");
  EXPECT_THROW(ReadDimacs(open), std::invalid_argument);
  std::stringstream junk("p cnf 2 1\n1 x 0\n");
  EXPECT_THROW(ReadDimacs(junk), std::invalid_argument);
}

TEST(EdgeListTest, RoundTrip) {
  const LiteralDigraph g(3, {{Literal(0, false), Literal(1, true)},
                             {Literal(2, true), Literal(0, true)}});
  std::stringstream ss;
  WriteEdgeList(ss, g);
  EXPECT_EQ(ReadEdgeList(ss), g);
}

TEST(LiteralDigraphTest, RejectsSameVariableArcs) {
  EXPECT_THROW(LiteralDigraph(2, {{Literal(0, false), Literal(0, true)}}), std::invalid_argument);
  const LiteralDigraph g(2, {{Literal(0, false), Literal(1, false)},
                             {Literal(0, false), Literal(1, false)}});
  EXPECT_EQ(g.num_arcs(), 1u);
  EXPECT_TRUE(g.has_arc(Literal(0, false), Literal(1, false)));
  EXPECT_FALSE(g.has_arc(Literal(1, false), Literal(0, false)));
}
