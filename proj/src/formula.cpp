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

#include "inhomsat/formula.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace inhomsat {

Literal Literal::FromDimacs(long long value) {
  if (value == 0) throw std::invalid_argument("0 is not a DIMACS literal");
  const long long var = value > 0 ? value : -value;
  return Literal(static_cast<std::uint32_t>(var - 1), value < 0);
}

std::string Literal::ToString() const {
  return (negated() ? "-v" : "v") + std::to_string(variable() + 1);
}

Clause::Clause(Literal a, Literal b) {
  if (a.variable() == b.variable()) {
    throw std::invalid_argument("clause literals must be on distinct variables: " +
                                a.ToString() + " " + b.ToString());
  }
  first_ = std::min(a, b);
  second_ = std::max(a, b);
}

namespace {

bool LiteralTrue(Literal l, const std::vector<bool>& assignment) {
  return assignment[l.variable()] != l.negated();
}

}  // namespace

bool Clause::SatisfiedBy(const std::vector<bool>& assignment) const {
  return LiteralTrue(first_, assignment) || LiteralTrue(second_, assignment);
}

Formula::Formula(std::uint32_t num_vars, std::vector<Clause> clauses,
                 Provenance provenance)
    : num_vars_(num_vars),
      clauses_(std::move(clauses)),
      provenance_(std::move(provenance)) {
  std::sort(clauses_.begin(), clauses_.end());
  clauses_.erase(std::unique(clauses_.begin(), clauses_.end()), clauses_.end());
  for (const Clause& c : clauses_) {
    if (c.second().variable() >= num_vars_) {
      throw std::invalid_argument("clause mentions variable beyond n");
    }
  }
}

bool Formula::contains(const Clause& c) const {
  return std::binary_search(clauses_.begin(), clauses_.end(), c);
}

bool Formula::SatisfiedBy(const std::vector<bool>& assignment) const {
  if (assignment.size() != num_vars_) return false;
  return std::all_of(clauses_.begin(), clauses_.end(),
                     [&](const Clause& c) { return c.SatisfiedBy(assignment); });
}

LiteralDigraph::LiteralDigraph(std::uint32_t num_vars,
                               std::vector<std::pair<Literal, Literal>> arcs)
    : num_vars_(num_vars) {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> raw;
  raw.reserve(arcs.size());
  for (const auto& [u, v] : arcs) {
    if (u.variable() >= num_vars || v.variable() >= num_vars) {
      throw std::invalid_argument("arc mentions variable beyond n");
    }
    if (u.variable() == v.variable()) {
      throw std::invalid_argument("arcs must join literals of distinct variables");
    }
    raw.emplace_back(u.code(), v.code());
  }
  graph_ = CsrGraph(2 * num_vars, std::move(raw));
}

std::vector<std::pair<Literal, Literal>> LiteralDigraph::arcs() const {
  std::vector<std::pair<Literal, Literal>> out;
  out.reserve(graph_.num_arcs());
  for (std::uint32_t u = 0; u < graph_.num_nodes(); ++u) {
    for (std::uint32_t v : graph_.successors(u)) {
      out.emplace_back(Literal::FromCode(u), Literal::FromCode(v));
    }
  }
  return out;
}

void WriteDimacs(std::ostream& out, const Formula& f) {
  const Provenance& p = f.provenance();
  if (!p.empty()) {
    out << "c seed=" << p.seed << " kernel=" << (p.kernel_digest.empty() ? "-" : p.kernel_digest)
        << " model=" << (p.model.empty() ? "-" : p.model) << "\n";
  }
  out << "p cnf " << f.num_vars() << " " << f.size() << "\n";
  for (const Clause& c : f.clauses()) {
    out << c.first().ToDimacs() << " " << c.second().ToDimacs() << " 0\n";
  }
}

namespace {

void ParseProvenance(const std::string& line, Provenance& p) {
  std::istringstream ss(line.substr(1));
  std::string tok;
  while (ss >> tok) {
    const auto eq = tok.find('=');
    if (eq == std::string::npos) continue;
    const std::string key = tok.substr(0, eq), value = tok.substr(eq + 1);
    if (key == "seed") {
      p.seed = std::stoull(value);
    } else if (key == "kernel") {
      p.kernel_digest = value == "-" ? "" : value;
    } else if (key == "model") {
      p.model = value == "-" ? "" : value;
    }
  }
}

}  // namespace

Formula ReadDimacs(std::istream& in) {
  std::string line;
  bool have_header = false;
  long long n = 0, m = 0;
  Provenance prov;
  std::vector<Clause> clauses;
  std::vector<long long> pending;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    if (line[first] == 'c') {
      ParseProvenance(line.substr(first), prov);
      continue;
    }
    if (line[first] == '%') break;  // SATLIB trailer
    if (line[first] == 'p') {
      std::istringstream ss(line.substr(first + 1));
      std::string kind;
      if (!(ss >> kind >> n >> m) || kind != "cnf" || n < 0 || m < 0) {
        throw std::invalid_argument("bad DIMACS header on line " + std::to_string(line_no));
      }
      have_header = true;
      continue;
    }
    if (!have_header) {
      throw std::invalid_argument("clause before DIMACS header on line " +
                                  std::to_string(line_no));
    }
    std::istringstream ss(line);
    long long v;
    while (ss >> v) {
      if (v != 0) {
        if (v > n || -v > n) {
          throw std::invalid_argument("literal " + std::to_string(v) +
                                      " exceeds n on line " + std::to_string(line_no));
        }
        pending.push_back(v);
        continue;
      }
      if (pending.size() != 2) {
        throw std::invalid_argument("only 2-literal clauses are supported (line " +
                                    std::to_string(line_no) + ")");
      }
      clauses.emplace_back(Literal::FromDimacs(pending[0]), Literal::FromDimacs(pending[1]));
      pending.clear();
    }
    if (!ss.eof()) {
      throw std::invalid_argument("unparsable token on line " + std::to_string(line_no));
    }
  }
  if (!have_header) throw std::invalid_argument("missing DIMACS header");
  if (!pending.empty()) throw std::invalid_argument("unterminated final clause");
  return Formula(static_cast<std::uint32_t>(n), std::move(clauses), std::move(prov));
}

void WriteEdgeList(std::ostream& out, const LiteralDigraph& g) {
  out << "p edges " << g.num_vars() << " " << g.num_arcs() << "\n";
  for (const auto& [u, v] : g.arcs()) out << u.ToDimacs() << " " << v.ToDimacs() << "\n";
}

LiteralDigraph ReadEdgeList(std::istream& in) {
  std::string line;
  bool have_header = false;
  long long n = 0, m = 0;
  std::vector<std::pair<Literal, Literal>> arcs;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == 'c') continue;
    std::istringstream ss(line.substr(first));
    if (line[first] == 'p') {
      std::string p, kind;
      if (!(ss >> p >> kind >> n >> m) || kind != "edges" || n < 0) {
        throw std::invalid_argument("bad edge-list header on line " + std::to_string(line_no));
      }
      have_header = true;
      continue;
    }
    if (!have_header) throw std::invalid_argument("arc before edge-list header");
    long long a, b;
    if (!(ss >> a >> b) || a == 0 || b == 0 || std::llabs(a) > n || std::llabs(b) > n) {
      throw std::invalid_argument("bad arc on line " + std::to_string(line_no));
    }
    arcs.emplace_back(Literal::FromDimacs(a), Literal::FromDimacs(b));
  }
  if (!have_header) throw std::invalid_argument("missing edge-list header");
  return LiteralDigraph(static_cast<std::uint32_t>(n), std::move(arcs));
}

}  // namespace inhomsat
