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

#ifndef INHOMSAT_SAMPLER_HPP_
#define INHOMSAT_SAMPLER_HPP_

// Random formulas and digraphs driven by block kernels.
//
// All draws come from counter streams keyed by the sample seed (see rng.hpp).
// Potential clauses are visited as (i < j, then sign pair ++, +-, -+, --),
// and the pair {i, j} owns the counters 2*(i*n + j) and 2*(i*n + j) + 1,
// whose two 64-bit outputs are split into four 32-bit uniforms, one per
// sign pair. A clause is kept iff its uniform is below
// floor(p * 2^32) with p = min(1, W / 2n), so inclusion probabilities are
// exact up to the 2^-32 grid and the clamp at 1 is exact. Because the
// uniform depends only on (seed, clause), samples of scale(W, c) and
// scale(W, c') with c <= c' are nested clause-wise.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "inhomsat/formula.hpp"
#include "inhomsat/kernel.hpp"

namespace inhomsat {

enum class Model { kTwoSat, kDagger, kDensest, kDigraph };

std::string_view ModelName(Model m);
// Accepts "twosat", "dagger", "densest", "digraph".
Model ParseModel(std::string_view name);

// Per-variable types and, for the dagger/digraph models, signs. The literal
// map is tau(v_i) = (type_i, sign_i), tau(not v_i) = (type_i, not sign_i);
// without signs every sign is +.
struct TypeAssignment {
  std::vector<std::uint32_t> types;
  std::vector<Sign> signs;  // empty when unsigned

  std::size_t size() const { return types.size(); }
  bool has_signs() const { return !signs.empty(); }
  std::size_t BlockOf(Literal l) const {
    const unsigned flip = has_signs() ? static_cast<unsigned>(signs[l.variable()]) : 0U;
    return 2 * std::size_t{types[l.variable()]} + ((flip ^ (l.negated() ? 1U : 0U)) & 1U);
  }
  friend bool operator==(const TypeAssignment&, const TypeAssignment&) = default;
};

struct SampleStats {
  std::uint64_t potential = 0;  // potential clauses/arcs visited
  std::uint64_t clamped = 0;    // of which W / 2n exceeded 1
};

struct FormulaSample {
  Formula formula;
  TypeAssignment types;
  SampleStats stats;
};

struct DigraphSample {
  LiteralDigraph digraph;
  TypeAssignment types;
  SampleStats stats;
};

// i.i.d. types by inverse CDF over the weights; optional fair signs.
TypeAssignment SampleTypes(std::uint32_t n, const TypeSpace& space,
                           std::uint64_t seed, bool with_signs);

// Clause {q v_i, s v_j} kept with probability min(1, W((x_i,q),(x_j,s)) / 2n).
FormulaSample SampleFormula(std::uint32_t n, const BlockKernel& w, std::uint64_t seed);

// Single-step dagger construction: signed types, clause {l1, l2} kept with
// probability min(1, W(tau(l1), tau(l2)) / 2n).
FormulaSample SampleFormulaDagger(std::uint32_t n, const BlockKernel& w,
                                  std::uint64_t seed);

// Clause kept iff W((x_i,q),(x_j,s)) > 0.
FormulaSample SampleDensest(std::uint32_t n, const BlockKernel& w, std::uint64_t seed);

// Ordered literal pair (l1, l2) on distinct variables becomes an arc with
// probability min(1, Gamma(tau(l1), tau(l2)) / 2n).
DigraphSample SampleDigraph(std::uint32_t n, const BlockDigraphon& gamma,
                            std::uint64_t seed);

// Negates every literal on a masked variable.
Formula FlipVariables(const Formula& f, const std::vector<bool>& mask);

// Fair coin per variable from the mask stream of `seed`.
std::vector<bool> SampleMask(std::uint32_t n, std::uint64_t seed);

}  // namespace inhomsat

#endif  // INHOMSAT_SAMPLER_HPP_
