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

#include "inhomsat/structures.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "inhomsat/solver.hpp"

namespace inhomsat {

namespace {

bool DistinctVariables(const std::vector<Literal>& lits) {
  std::vector<std::uint32_t> vars;
  vars.reserve(lits.size());
  for (Literal l : lits) vars.push_back(l.variable());
  std::sort(vars.begin(), vars.end());
  return std::adjacent_find(vars.begin(), vars.end()) == vars.end();
}

bool InRange(const LiteralDigraph& g, Literal l) { return l.variable() < g.num_vars(); }

// Depth-first enumeration of paths from `from` to `to` whose interior uses
// fresh variables (not in `used`) and nodes accepted by `inside`. Calls
// `found(interior)` for each path with a nonempty interior; stops when it
// returns true or the shared budget runs out.
class PathSearch {
 public:
  PathSearch(const CsrGraph& g, std::uint64_t& budget, bool& exhausted)
      : g_(g), budget_(budget), exhausted_(exhausted) {}

  template <typename Inside>
  bool Run(std::uint32_t from, std::uint32_t to, std::vector<bool>& used, Inside inside,
           const std::function<bool(const std::vector<Literal>&)>& found) {
    struct Frame {
      std::uint32_t node;
      std::size_t next;
    };
    std::vector<Frame> stack{{from, 0}};
    std::vector<Literal> interior;
    while (!stack.empty()) {
      Frame& top = stack.back();
      const auto succ = g_.successors(top.node);
      if (top.next == succ.size()) {
        if (stack.size() > 1) {
          used[top.node >> 1] = false;
          interior.pop_back();
        }
        stack.pop_back();
        continue;
      }
      const std::uint32_t v = succ[top.next++];
      if (v == to) {
        if (!interior.empty() && found(interior)) return true;
        if (exhausted_) return false;
        continue;
      }
      if (used[v >> 1] || !inside(v)) continue;
      if (budget_ == 0) {
        exhausted_ = true;
        return false;
      }
      --budget_;
      used[v >> 1] = true;
      interior.push_back(Literal::FromCode(v));
      stack.push_back({v, 0});
    }
    return false;
  }

 private:
  const CsrGraph& g_;
  std::uint64_t& budget_;
  bool& exhausted_;
};

// Exhaustive simple-cycle search through `start` over nodes of one strong
// component with code >= start, keeping the first cycle with a
// complementary pair.
std::optional<std::vector<Literal>> EnumerateCycles(const CsrGraph& g, const SccResult& scc,
                                                    std::uint32_t start,
                                                    std::uint64_t& budget) {
  const std::uint32_t id = scc.component[start];
  std::vector<bool> on_path(g.num_nodes(), false);
  std::vector<std::uint32_t> path{start};
  std::vector<std::size_t> next{0};
  on_path[start] = true;
  std::size_t pairs = 0;
  while (!path.empty()) {
    const std::uint32_t u = path.back();
    const auto succ = g.successors(u);
    if (next.back() == succ.size()) {
      on_path[u] = false;
      if (on_path[u ^ 1U]) --pairs;
      path.pop_back();
      next.pop_back();
      continue;
    }
    const std::uint32_t v = succ[next.back()++];
    if (v == start) {
      if (pairs > 0) {
        std::vector<Literal> cycle;
        for (std::uint32_t w : path) cycle.push_back(Literal::FromCode(w));
        return cycle;
      }
      continue;
    }
    if (v < start || on_path[v] || scc.component[v] != id) continue;
    if (budget == 0) return std::nullopt;
    --budget;
    on_path[v] = true;
    if (on_path[v ^ 1U]) ++pairs;
    path.push_back(v);
    next.push_back(0);
  }
  return std::nullopt;
}

std::optional<std::vector<Literal>> TwoPathCycle(const CsrGraph& g, const SccResult& scc,
                                                 std::uint32_t v) {
  const std::uint32_t id = scc.component[v];
  const std::uint32_t nv = v ^ 1U;
  const std::vector<std::uint32_t> there =
      ShortestPath(g, v, nv, [&](std::uint32_t u) { return scc.component[u] == id; });
  if (there.empty()) return std::nullopt;
  std::vector<bool> blocked(g.num_nodes(), false);
  for (std::uint32_t u : there) blocked[u] = true;
  blocked[v] = false;
  const std::vector<std::uint32_t> back = ShortestPath(g, nv, v, [&](std::uint32_t u) {
    return scc.component[u] == id && !blocked[u];
  });
  if (back.empty()) return std::nullopt;
  std::vector<Literal> cycle;
  for (std::size_t i = 0; i + 1 < there.size(); ++i) cycle.push_back(Literal::FromCode(there[i]));
  for (std::size_t i = 0; i + 1 < back.size(); ++i) cycle.push_back(Literal::FromCode(back[i]));
  return cycle;
}

bool IsSimpleContradictoryCycle(const LiteralDigraph& g, const std::vector<Literal>& cycle) {
  std::vector<Literal> sorted = cycle;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  return IsContradictoryWalk(g, cycle);
}

std::vector<Literal> ReverseNegate(std::vector<Literal> xs) {
  std::reverse(xs.begin(), xs.end());
  for (Literal& l : xs) l = ~l;
  return xs;
}

}  // namespace

bool IsBicycle(const LiteralDigraph& g, const Bicycle& bc) {
  const std::size_t k = bc.k();
  if (k < 2 || bc.a < 2 || bc.a > k || bc.b < 1 || bc.b > k - 1) return false;
  for (Literal l : bc.basis) {
    if (!InRange(g, l)) return false;
  }
  if (!DistinctVariables(bc.basis)) return false;
  for (std::size_t i = 0; i + 1 < k; ++i) {
    if (!g.has_arc(bc.basis[i], bc.basis[i + 1])) return false;
  }
  return g.has_arc(~bc.basis[bc.a - 1], bc.basis.front()) &&
         g.has_arc(bc.basis.back(), ~bc.basis[bc.b - 1]);
}

std::optional<std::vector<Literal>> FindContradictoryCycle(const LiteralDigraph& g,
                                                           std::uint64_t budget) {
  const CsrGraph& cg = g.graph();
  const SccResult scc = StrongComponents(cg);
  // Contradictory components in order of their smallest literal code.
  std::vector<std::uint32_t> order;
  std::vector<bool> seen(scc.count, false);
  for (std::uint32_t c = 0; c < g.num_literals(); ++c) {
    const std::uint32_t id = scc.component[c];
    if (!seen[id] && scc.component[c ^ 1U] == id) {
      seen[id] = true;
      order.push_back(id);
    }
  }
  for (std::uint32_t id : order) {
    for (std::uint32_t v = 0; v < g.num_literals(); ++v) {
      if (scc.component[v] != id || scc.component[v ^ 1U] != id) continue;
      if (auto cycle = TwoPathCycle(cg, scc, v)) {
        if (!IsSimpleContradictoryCycle(g, *cycle)) throw std::logic_error("bad cycle");
        return cycle;
      }
    }
  }
  for (std::uint32_t id : order) {
    for (std::uint32_t s = 0; s < g.num_literals(); ++s) {
      if (scc.component[s] != id) continue;
      if (auto cycle = EnumerateCycles(cg, scc, s, budget)) {
        if (!IsSimpleContradictoryCycle(g, *cycle)) throw std::logic_error("bad cycle");
        return cycle;
      }
      if (budget == 0) return std::nullopt;
    }
  }
  return std::nullopt;
}

std::optional<Bicycle> BicycleFromCycle(const LiteralDigraph& g,
                                        const std::vector<Literal>& cycle) {
  const std::size_t len = cycle.size();
  if (len < 3 || !IsSimpleContradictoryCycle(g, cycle)) return std::nullopt;
  std::size_t best_start = 0, best_len = 0;
  std::vector<bool> used(g.num_vars(), false);
  for (std::size_t r = 0; r < len; ++r) {
    std::size_t k = 0;
    while (k < len && !used[cycle[(r + k) % len].variable()]) {
      used[cycle[(r + k) % len].variable()] = true;
      ++k;
    }
    for (std::size_t i = 0; i < k; ++i) used[cycle[(r + i) % len].variable()] = false;
    if (k > best_len) {
      best_len = k;
      best_start = r;
    }
  }
  Bicycle bc;
  for (std::size_t i = 0; i < best_len; ++i) bc.basis.push_back(cycle[(best_start + i) % len]);
  const Literal before = cycle[(best_start + len - 1) % len];
  const Literal after = cycle[(best_start + best_len) % len];
  for (std::size_t i = 0; i < best_len; ++i) {
    if (bc.basis[i] == ~before) bc.a = i + 1;
    if (bc.basis[i] == ~after) bc.b = i + 1;
  }
  if (!IsBicycle(g, bc)) return std::nullopt;
  return bc;
}

std::optional<Bicycle> FindBicycle(const LiteralDigraph& g, std::uint64_t budget) {
  const auto cycle = FindContradictoryCycle(g, budget);
  if (!cycle) return std::nullopt;
  return BicycleFromCycle(g, *cycle);
}

std::uint64_t CountBicycles(const LiteralDigraph& g, std::size_t k, std::size_t a,
                            std::size_t b) {
  if (k < 2 || a < 2 || a > k || b < 1 || b > k - 1) {
    throw std::invalid_argument("need k >= 2, 2 <= a <= k, 1 <= b <= k - 1");
  }
  if (k > kCountBicyclesMaxK || g.num_vars() > kCountBicyclesMaxVars) {
    throw std::invalid_argument("exhaustive bicycle count limited to k <= 8, n <= 12");
  }
  const CsrGraph& cg = g.graph();
  std::uint64_t count = 0;
  std::vector<std::uint32_t> path;
  std::vector<bool> used(g.num_vars(), false);
  std::function<void()> extend = [&]() {
    if (path.size() == k) {
      const Literal u1 = Literal::FromCode(path.front());
      const Literal uk = Literal::FromCode(path.back());
      if (g.has_arc(~Literal::FromCode(path[a - 1]), u1) &&
          g.has_arc(uk, ~Literal::FromCode(path[b - 1]))) {
        ++count;
      }
      return;
    }
    for (std::uint32_t v : cg.successors(path.back())) {
      if (used[v >> 1]) continue;
      used[v >> 1] = true;
      path.push_back(v);
      extend();
      path.pop_back();
      used[v >> 1] = false;
    }
  };
  for (std::uint32_t s = 0; s < g.num_literals(); ++s) {
    used[s >> 1] = true;
    path.assign(1, s);
    extend();
    used[s >> 1] = false;
  }
  return count;
}

std::vector<Clause> Snake::Clauses() const {
  if (!IsWellFormed(*this)) throw std::invalid_argument("malformed snake");
  std::vector<Clause> out;
  const Literal f = center;
  out.emplace_back(~f, chain[0]);
  for (std::size_t i = 0; i + 2 < a; ++i) out.emplace_back(~chain[i], chain[i + 1]);
  out.emplace_back(~chain[a - 2], ~f);
  out.emplace_back(f, chain[a - 1]);
  for (std::size_t i = a - 1; i + 2 < a + b - 1; ++i) out.emplace_back(~chain[i], chain[i + 1]);
  out.emplace_back(~chain.back(), f);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Literal> Snake::Literals() const {
  std::vector<Literal> out;
  for (const Clause& c : Clauses()) {
    for (Literal l : {c.first(), c.second()}) {
      out.push_back(l);
      out.push_back(~l);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool IsWellFormed(const Snake& s) {
  if (s.a < 2 || s.b < 2 || s.chain.size() != s.a + s.b - 2) return false;
  std::vector<Literal> all = s.chain;
  all.push_back(s.center);
  return DistinctVariables(all);
}

bool IsSnakeOf(const Formula& f, const Snake& s) {
  if (!IsWellFormed(s)) return false;
  for (Literal l : s.chain) {
    if (l.variable() >= f.num_vars()) return false;
  }
  if (s.center.variable() >= f.num_vars()) return false;
  const std::vector<Clause> clauses = s.Clauses();
  return std::all_of(clauses.begin(), clauses.end(),
                     [&](const Clause& c) { return f.contains(c); });
}

bool SameSnake(const Snake& x, const Snake& y) {
  return IsWellFormed(x) && IsWellFormed(y) && x.Clauses() == y.Clauses();
}

BigInt CountSnakeUniverse(std::uint32_t num_vars, std::size_t a, std::size_t b) {
  if (a < 2 || b < 2) throw std::invalid_argument("snake needs a, b >= 2");
  const std::size_t vars = a + b - 1;
  if (vars > num_vars) {
    throw std::invalid_argument("snake needs a + b - 1 = " + std::to_string(vars) +
                                " distinct variables, have " + std::to_string(num_vars));
  }
  BigInt count = 1;
  count <<= static_cast<unsigned>(a + b - 3);
  for (std::size_t i = 0; i < vars; ++i) count *= num_vars - i;
  return count;
}

Snake SnakeOf(const Serpent& s) {
  if (s.a < 2 || s.b < 2 || s.cycle.size() != s.a + s.b ||
      s.cycle[s.a] != ~s.cycle.front()) {
    throw std::invalid_argument("malformed serpent");
  }
  Snake snake{s.cycle.front(), {}, s.a, s.b};
  for (std::size_t i = 1; i < s.cycle.size(); ++i) {
    if (i != s.a) snake.chain.push_back(s.cycle[i]);
  }
  if (!IsWellFormed(snake)) throw std::invalid_argument("serpent literals repeat a variable");
  return snake;
}

std::vector<Clause> ClausesOf(const Serpent& s) {
  SnakeOf(s);  // shape check
  std::vector<Clause> out;
  for (std::size_t i = 0; i < s.cycle.size(); ++i) {
    out.emplace_back(~s.cycle[i], s.cycle[(i + 1) % s.cycle.size()]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

SerpentSet SerpentsOf(const Snake& s) {
  if (!IsWellFormed(s)) throw std::invalid_argument("malformed snake");
  const std::vector<Literal> first(s.chain.begin(), s.chain.begin() + (s.a - 1));
  const std::vector<Literal> second(s.chain.begin() + (s.a - 1), s.chain.end());
  SerpentSet out;
  out.a_equals_b = s.a == s.b;
  for (const auto& p : {first, ReverseNegate(first)}) {
    for (const auto& q : {second, ReverseNegate(second)}) {
      Serpent serpent{{s.center}, s.a, s.b};
      serpent.cycle.insert(serpent.cycle.end(), p.begin(), p.end());
      serpent.cycle.push_back(~s.center);
      serpent.cycle.insert(serpent.cycle.end(), q.begin(), q.end());
      if (std::find(out.serpents.begin(), out.serpents.end(), serpent) == out.serpents.end()) {
        out.serpents.push_back(std::move(serpent));
      }
    }
  }
  return out;
}

SnakeSearch DetectSnake(const Formula& f, std::uint64_t budget) {
  SnakeSearch result;
  const ImplicationDigraph dg(f);
  const CsrGraph& g = dg.digraph().graph();
  const SccResult scc = StrongComponents(g);
  std::uint64_t remaining = budget;
  PathSearch search(g, remaining, result.budget_exhausted);
  std::vector<bool> used(f.num_vars(), false);
  for (std::uint32_t x = 0; x < f.num_vars() && !result.snake; ++x) {
    for (const Literal center : {Literal(x, false), Literal(x, true)}) {
      const std::uint32_t fc = center.code(), nf = fc ^ 1U;
      const std::uint32_t id = scc.component[fc];
      if (scc.component[nf] != id) continue;
      auto inside = [&](std::uint32_t u) { return scc.component[u] == id; };
      used[x] = true;
      const bool hit = search.Run(fc, nf, used, inside, [&](const std::vector<Literal>& p) {
        return search.Run(nf, fc, used, inside, [&](const std::vector<Literal>& q) {
          Snake snake{center, p, p.size() + 1, q.size() + 1};
          snake.chain.insert(snake.chain.end(), q.begin(), q.end());
          result.snake = std::move(snake);
          return true;
        });
      });
      used[x] = false;
      if (hit || result.budget_exhausted) break;
    }
    if (result.budget_exhausted) break;
  }
  result.expansions = budget - remaining;
  if (result.snake && !IsSnakeOf(f, *result.snake)) {
    throw std::logic_error("snake search produced an invalid snake");
  }
  return result;
}

}  // namespace inhomsat
