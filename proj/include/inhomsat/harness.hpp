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

#ifndef INHOMSAT_HARNESS_HPP_
#define INHOMSAT_HARNESS_HPP_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "inhomsat/formula.hpp"
#include "inhomsat/kernel.hpp"
#include "inhomsat/sampler.hpp"

namespace inhomsat {

struct ExperimentConfig {
  BlockKernel kernel;
  std::string kernel_name;
  std::vector<std::uint32_t> ns;
  std::vector<double> scales;
  std::uint32_t trials = 100;
  std::uint64_t seed = 1;
  Model model = Model::kTwoSat;
  unsigned threads = 0;              // 0: hardware concurrency
  double cell_timeout_seconds = 0;   // 0: no limit

  // Empty when the config is usable.
  std::vector<std::string> Problems() const;
};

struct Interval {
  double lo = 0;
  double hi = 1;
};

// Wilson score interval; z defaults to the two-sided 95% quantile.
Interval Wilson(std::uint64_t successes, std::uint64_t trials, double z = 1.959963985);

struct CellResult {
  double scale = 0;
  std::uint32_t n = 0;
  std::uint32_t requested = 0;
  std::uint32_t trials = 0;  // completed
  std::uint32_t sat = 0;
  double sat_fraction = 0;
  Interval ci;
  bool timed_out = false;
  std::string error;  // first failure in the cell, with its coordinates
  double seconds = 0;
  bool ok() const { return error.empty() && !timed_out; }
};

struct SweepResult {
  std::vector<CellResult> cells;  // n-major, scales in config order
  double rho_star = 0;
  double predicted_scale = 0;  // 1 / rho_star, +inf when rho_star == 0
};

// Trial seed shared by every scale of one n, which couples the cells:
// clause sets are nested in the scale.
std::uint64_t TrialSeed(std::uint64_t master, std::uint32_t n, std::uint32_t trial);

// One sample of the configured model at scale c, solved. True when SAT
// (for the digraph model: no strong component holds a complementary pair).
bool RunTrial(const BlockKernel& w, Model model, std::uint32_t n, double scale,
              std::uint64_t seed);

// Cells run in order; trials within a cell run on a thread pool and are
// aggregated by trial index, so results do not depend on scheduling.
SweepResult RunSweep(const ExperimentConfig& cfg);

struct ThresholdEstimate {
  bool infinite = false;
  std::string rationale;
  double lo = 0;  // last scale classified SAT (fraction >= 1/2)
  double hi = 0;  // last scale classified UNSAT
  double estimate = 0;
  double predicted = 0;
  bool bracket_valid = true;
  bool non_monotone = false;
  std::vector<CellResult> probes;  // in probe order
};

// Bisection on the scale with boundary sat_fraction = 1/2, using cfg.ns[0]
// and cfg.trials. The bracket defaults to [predicted / 4, 4 * predicted].
ThresholdEstimate EstimateThreshold(const ExperimentConfig& cfg, std::size_t probes,
                                    std::optional<std::pair<double, double>> bracket = {});

// |rho* - 1| at or below this gives no prediction at scale 1.
inline constexpr double kCriticalBand = 1e-9;

// Text report: decomposition, per-component spectra, rho*, 1 / rho*, and
// the empirical estimate when given.
std::string CompareToPrediction(const BlockKernel& w, const std::string& name,
                                const ThresholdEstimate* empirical = nullptr);

struct MarginalTest {
  std::vector<std::uint64_t> digraph_counts;  // per pattern of F
  std::vector<std::uint64_t> dagger_counts;
  double statistic = 0;
  std::size_t degrees_of_freedom = 0;
  double p_value = 1;
  bool degenerate = false;  // fewer than two patterns observed
};

// Throws std::invalid_argument when F holds both (l1, l2) and (not l2, not l1),
// an arc on a single variable, or a variable >= n.
void RequirePairFree(std::uint32_t n, const std::vector<std::pair<Literal, Literal>>& arcs);

// Chi-square homogeneity test of the pattern of F in the random digraph of
// the implication digraphon versus the implication digraph of the dagger
// formula, `trials` samples each.
MarginalTest MarginalEqualityTest(const BlockKernel& w,
                                  const std::vector<std::pair<Literal, Literal>>& arcs,
                                  std::uint32_t n, std::uint32_t trials, std::uint64_t seed);

void WriteCsv(std::ostream& out, const SweepResult& r);
// sat_fraction against scale, one line per n, dashed marker at 1 / rho*.
void WriteSvg(std::ostream& out, const SweepResult& r, const std::string& title);

}  // namespace inhomsat

#endif  // INHOMSAT_HARNESS_HPP_
