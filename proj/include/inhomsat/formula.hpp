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

#ifndef INHOMSAT_FORMULA_HPP_
#define INHOMSAT_FORMULA_HPP_

// 2-CNF formulas and literal digraphs, with DIMACS / edge-list I/O.

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "inhomsat/graph.hpp"

namespace inhomsat {

// Literal code = 2 * variable + (negated ? 1 : 0), variables zero-based.
// Variable v_i of the text (1-based) is variable i - 1 here.
class Literal {
 public:
  constexpr Literal() = default;
  constexpr Literal(std::uint32_t variable, bool negated)
      : code_(2 * variable + (negated ? 1U : 0U)) {}
  static constexpr Literal FromCode(std::uint32_t code) {
    Literal l;
    l.code_ = code;
    return l;
  }
  // DIMACS integer: +k for v_k, -k for not v_k.
  static Literal FromDimacs(long long value);

  constexpr std::uint32_t code() const { return code_; }
  constexpr std::uint32_t variable() const { return code_ >> 1; }
  constexpr bool negated() const { return code_ & 1U; }
  constexpr Literal operator~() const { return FromCode(code_ ^ 1U); }
  long long ToDimacs() const {
    return negated() ? -static_cast<long long>(variable() + 1)
                     : static_cast<long long>(variable() + 1);
  }
  std::string ToString() const;  // "v3" or "-v3"

  friend constexpr auto operator<=>(Literal, Literal) = default;

 private:
  std::uint32_t code_ = 0;
};

// Unordered pair of literals on distinct variables, stored lower code first.
class Clause {
 public:
  Clause(Literal a, Literal b);
  Literal first() const { return first_; }
  Literal second() const { return second_; }
  bool SatisfiedBy(const std::vector<bool>& assignment) const;
  friend auto operator<=>(const Clause&, const Clause&) = default;

 private:
  Literal first_;
  Literal second_;
};

struct Provenance {
  std::uint64_t seed = 0;
  std::string kernel_digest;
  std::string model;
  bool empty() const { return kernel_digest.empty() && model.empty() && seed == 0; }
  friend bool operator==(const Provenance&, const Provenance&) = default;
};

// Clause set over variables 0..n-1; kept sorted and duplicate free.
class Formula {
 public:
  Formula() = default;
  Formula(std::uint32_t num_vars, std::vector<Clause> clauses,
          Provenance provenance = {});

  std::uint32_t num_vars() const { return num_vars_; }
  const std::vector<Clause>& clauses() const { return clauses_; }
  std::size_t size() const { return clauses_.size(); }
  bool contains(const Clause& c) const;
  bool SatisfiedBy(const std::vector<bool>& assignment) const;

  const Provenance& provenance() const { return provenance_; }
  void set_provenance(Provenance p) { provenance_ = std::move(p); }

  friend bool operator==(const Formula& a, const Formula& b) {
    return a.num_vars_ == b.num_vars_ && a.clauses_ == b.clauses_;
  }

 private:
  std::uint32_t num_vars_ = 0;
  std::vector<Clause> clauses_;
  Provenance provenance_;
};

// Directed graph on the 2n literals of n variables.
class LiteralDigraph {
 public:
  LiteralDigraph() = default;
  LiteralDigraph(std::uint32_t num_vars,
                 std::vector<std::pair<Literal, Literal>> arcs);

  std::uint32_t num_vars() const { return num_vars_; }
  std::uint32_t num_literals() const { return 2 * num_vars_; }
  std::size_t num_arcs() const { return graph_.num_arcs(); }
  const CsrGraph& graph() const { return graph_; }
  bool has_arc(Literal from, Literal to) const {
    return graph_.has_arc(from.code(), to.code());
  }
  std::vector<std::pair<Literal, Literal>> arcs() const;

  friend bool operator==(const LiteralDigraph& a, const LiteralDigraph& b) {
    return a.num_vars_ == b.num_vars_ && a.arcs() == b.arcs();
  }

 private:
  std::uint32_t num_vars_ = 0;
  CsrGraph graph_;
};

// DIMACS CNF. Provenance is written as "c seed=... kernel=... model=..." and
// read back when present. Only two-literal clauses are accepted.
void WriteDimacs(std::ostream& out, const Formula& f);
Formula ReadDimacs(std::istream& in);

// Edge list: header "p edges <n> <m>", then one "<from> <to>" line per arc
// using DIMACS literal integers; "c" lines are comments.
void WriteEdgeList(std::ostream& out, const LiteralDigraph& g);
LiteralDigraph ReadEdgeList(std::istream& in);

}  // namespace inhomsat

#endif  // INHOMSAT_FORMULA_HPP_
