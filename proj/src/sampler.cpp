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

#include "inhomsat/sampler.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "inhomsat/kernel_io.hpp"
#include "inhomsat/rng.hpp"

namespace inhomsat {

std::string_view ModelName(Model m) {
  switch (m) {
    case Model::kTwoSat:
      return "twosat";
    case Model::kDagger:
      return "dagger";
    case Model::kDensest:
      return "densest";
    case Model::kDigraph:
      return "digraph";
  }
  return "?";
}

Model ParseModel(std::string_view name) {
  for (Model m : {Model::kTwoSat, Model::kDagger, Model::kDensest, Model::kDigraph}) {
    if (ModelName(m) == name) return m;
  }
  throw std::invalid_argument("unknown model '" + std::string(name) + "'");
}

namespace {

constexpr std::uint64_t kAlways = std::uint64_t{1} << 32;

// Per block-pair acceptance thresholds on the 32-bit grid.
struct ThresholdTable {
  std::size_t dim = 0;
  std::vector<std::uint64_t> threshold;
  std::vector<std::uint8_t> clamped;
};

ThresholdTable ScaledThresholds(const SquareMatrix& values, std::uint32_t n) {
  ThresholdTable t;
  t.dim = values.dim();
  t.threshold.resize(t.dim * t.dim);
  t.clamped.resize(t.dim * t.dim);
  const double denom = 2.0 * double(n);
  for (std::size_t a = 0; a < t.dim; ++a) {
    for (std::size_t b = 0; b < t.dim; ++b) {
      const double p = values(a, b) / denom;
      const std::size_t k = a * t.dim + b;
      t.clamped[k] = p > 1.0;
      t.threshold[k] = p >= 1.0 ? kAlways
                                : static_cast<std::uint64_t>(std::floor(p * 4294967296.0));
    }
  }
  return t;
}

ThresholdTable IndicatorThresholds(const SquareMatrix& values) {
  ThresholdTable t;
  t.dim = values.dim();
  t.threshold.resize(t.dim * t.dim);
  t.clamped.assign(t.dim * t.dim, 0);
  for (std::size_t k = 0; k < t.threshold.size(); ++k) {
    t.threshold[k] = values.data()[k] > 0 ? kAlways : 0;
  }
  return t;
}

// Four 32-bit uniforms for the (ordered or unordered) variable pair `pair`.
inline void PairUniforms(std::uint64_t key, std::uint64_t pair, std::uint64_t u[4]) {
  const std::uint64_t h0 = CounterDraw(key, 2 * pair);
  const std::uint64_t h1 = CounterDraw(key, 2 * pair + 1);
  u[0] = h0 >> 32;
  u[1] = h0 & 0xffffffffULL;
  u[2] = h1 >> 32;
  u[3] = h1 & 0xffffffffULL;
}

std::vector<std::uint32_t> LiteralBlocks(const TypeAssignment& tau) {
  std::vector<std::uint32_t> blocks(2 * tau.size());
  for (std::uint32_t code = 0; code < blocks.size(); ++code) {
    blocks[code] = static_cast<std::uint32_t>(tau.BlockOf(Literal::FromCode(code)));
  }
  return blocks;
}

// Visits every potential clause (unordered) or arc (ordered) on the pairs
// i < j, respectively i != j, and calls keep(i, q, j, s) for the kept ones.
template <typename Keep>
void ScanPairs(std::uint32_t n, bool ordered, const std::vector<std::uint32_t>& blocks,
               const ThresholdTable& table, std::uint64_t key, SampleStats& stats,
               Keep keep) {
  const bool any_clamped =
      std::find(table.clamped.begin(), table.clamped.end(), true) != table.clamped.end();
  std::uint64_t u[4];
  for (std::uint32_t i = 0; i < n; ++i) {
    const std::uint64_t* row[2] = {&table.threshold[blocks[2 * i] * table.dim],
                                   &table.threshold[blocks[2 * i + 1] * table.dim]};
    for (std::uint32_t j = ordered ? 0 : i + 1; j < n; ++j) {
      if (j == i) continue;
      const std::uint32_t bj[2] = {blocks[2 * j], blocks[2 * j + 1]};
      const std::uint64_t t[4] = {row[0][bj[0]], row[0][bj[1]], row[1][bj[0]], row[1][bj[1]]};
      if (any_clamped) {
        for (unsigned k = 0; k < 4; ++k) {
          stats.clamped += table.clamped[blocks[2 * i + (k >> 1)] * table.dim + bj[k & 1U]];
        }
      }
      if ((t[0] | t[1] | t[2] | t[3]) == 0) continue;
      PairUniforms(key, std::uint64_t{i} * n + j, u);
      for (unsigned k = 0; k < 4; ++k) {
        if (u[k] < t[k]) keep(i, k >> 1, j, k & 1U);
      }
    }
  }
  const std::uint64_t pairs =
      ordered ? std::uint64_t{n} * (n - 1) : std::uint64_t{n} * (n - 1) / 2;
  stats.potential += 4 * pairs;
}

std::vector<Clause> SampleClauses(std::uint32_t n, const TypeAssignment& tau,
                                  const ThresholdTable& table, std::uint64_t seed,
                                  SampleStats& stats) {
  std::vector<Clause> clauses;
  ScanPairs(n, false, LiteralBlocks(tau), table, StreamKey(seed, StreamTag::kClauses), stats,
            [&](std::uint32_t i, unsigned q, std::uint32_t j, unsigned s) {
              clauses.emplace_back(Literal(i, q != 0), Literal(j, s != 0));
            });
  return clauses;
}

void RequireVariables(std::uint32_t n, std::uint32_t minimum) {
  if (n < minimum) {
    throw std::invalid_argument("need at least " + std::to_string(minimum) + " variables");
  }
}

FormulaSample BuildFormulaSample(std::uint32_t n, const BlockKernel& w, std::uint64_t seed,
                                 TypeAssignment tau, const ThresholdTable& table,
                                 Model model) {
  FormulaSample out;
  std::vector<Clause> clauses = SampleClauses(n, tau, table, seed, out.stats);
  out.formula = Formula(n, std::move(clauses),
                        Provenance{seed, KernelDigest(w), std::string(ModelName(model))});
  out.types = std::move(tau);
  return out;
}

}  // namespace

TypeAssignment SampleTypes(std::uint32_t n, const TypeSpace& space, std::uint64_t seed,
                           bool with_signs) {
  if (space.num_types() == 0) throw std::invalid_argument("empty type space");
  std::vector<double> cdf(space.num_types());
  double acc = 0;
  for (std::size_t i = 0; i < cdf.size(); ++i) {
    acc += space.weight(i);
    cdf[i] = acc;
  }
  TypeAssignment tau;
  tau.types.resize(n);
  const std::uint64_t type_key = StreamKey(seed, StreamTag::kTypes);
  for (std::uint32_t i = 0; i < n; ++i) {
    const double u = ToUnit(CounterDraw(type_key, i)) * acc;
    const auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
    tau.types[i] = static_cast<std::uint32_t>(
        std::min<std::size_t>(static_cast<std::size_t>(it - cdf.begin()), cdf.size() - 1));
  }
  if (with_signs) {
    tau.signs.resize(n);
    const std::uint64_t sign_key = StreamKey(seed, StreamTag::kSigns);
    for (std::uint32_t i = 0; i < n; ++i) {
      tau.signs[i] = (CounterDraw(sign_key, i) >> 63) ? Sign::kMinus : Sign::kPlus;
    }
  }
  return tau;
}

FormulaSample SampleFormula(std::uint32_t n, const BlockKernel& w, std::uint64_t seed) {
  RequireValid(w);
  RequireVariables(n, 2);
  return BuildFormulaSample(n, w, seed, SampleTypes(n, w.space, seed, false),
                            ScaledThresholds(w.values, n), Model::kTwoSat);
}

FormulaSample SampleFormulaDagger(std::uint32_t n, const BlockKernel& w,
                                  std::uint64_t seed) {
  RequireValid(w);
  RequireVariables(n, 2);
  return BuildFormulaSample(n, w, seed, SampleTypes(n, w.space, seed, true),
                            ScaledThresholds(w.values, n), Model::kDagger);
}

FormulaSample SampleDensest(std::uint32_t n, const BlockKernel& w, std::uint64_t seed) {
  RequireValid(w);
  RequireVariables(n, 2);
  return BuildFormulaSample(n, w, seed, SampleTypes(n, w.space, seed, false),
                            IndicatorThresholds(w.values), Model::kDensest);
}

DigraphSample SampleDigraph(std::uint32_t n, const BlockDigraphon& gamma,
                            std::uint64_t seed) {
  RequireVariables(n, 1);
  for (double v : gamma.values.data()) {
    if (!(v >= 0) || !std::isfinite(v)) {
      throw std::invalid_argument("digraphon entries must be finite and >= 0");
    }
  }
  DigraphSample out;
  out.types = SampleTypes(n, gamma.space, seed, true);
  std::vector<std::pair<Literal, Literal>> arcs;
  ScanPairs(n, true, LiteralBlocks(out.types), ScaledThresholds(gamma.values, n),
            StreamKey(seed, StreamTag::kArcs), out.stats,
            [&](std::uint32_t i, unsigned q, std::uint32_t j, unsigned s) {
              arcs.emplace_back(Literal(i, q != 0), Literal(j, s != 0));
            });
  out.digraph = LiteralDigraph(n, std::move(arcs));
  return out;
}

Formula FlipVariables(const Formula& f, const std::vector<bool>& mask) {
  if (mask.size() != f.num_vars()) throw std::invalid_argument("mask length must equal n");
  auto flip = [&](Literal l) { return mask[l.variable()] ? ~l : l; };
  std::vector<Clause> clauses;
  clauses.reserve(f.size());
  for (const Clause& c : f.clauses()) clauses.emplace_back(flip(c.first()), flip(c.second()));
  return Formula(f.num_vars(), std::move(clauses), f.provenance());
}

std::vector<bool> SampleMask(std::uint32_t n, std::uint64_t seed) {
  std::vector<bool> mask(n);
  const std::uint64_t key = StreamKey(seed, StreamTag::kMask);
  for (std::uint32_t i = 0; i < n; ++i) mask[i] = (CounterDraw(key, i) >> 63) != 0;
  return mask;
}

}  // namespace inhomsat
