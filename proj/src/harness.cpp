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

#include "inhomsat/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <thread>

#include <boost/math/distributions/chi_squared.hpp>
#include <fmt/format.h>

#include "inhomsat/components.hpp"
#include "inhomsat/rng.hpp"
#include "inhomsat/solver.hpp"
#include "inhomsat/spectra.hpp"

namespace inhomsat {

std::vector<std::string> ExperimentConfig::Problems() const {
  std::vector<std::string> out;
  for (const KernelViolation& v : ValidateKernel(kernel).violations) out.push_back(v.message);
  if (ns.empty()) out.push_back("no n given");
  for (std::uint32_t n : ns) {
    if (n < 2) out.push_back(fmt::format("n = {} is below 2", n));
  }
  if (scales.empty()) out.push_back("no scale given");
  for (double c : scales) {
    if (!(c >= 0) || !std::isfinite(c)) out.push_back(fmt::format("scale {} is not >= 0", c));
  }
  if (trials < 1) out.push_back("trials must be >= 1");
  if (cell_timeout_seconds < 0) out.push_back("cell timeout must be >= 0");
  return out;
}

Interval Wilson(std::uint64_t successes, std::uint64_t trials, double z) {
  if (trials == 0) return {0, 1};
  if (successes > trials) throw std::invalid_argument("more successes than trials");
  const double nn = double(trials);
  const double p = double(successes) / nn;
  const double z2 = z * z;
  const double denom = 1 + z2 / nn;
  const double center = (p + z2 / (2 * nn)) / denom;
  const double half = z * std::sqrt(p * (1 - p) / nn + z2 / (4 * nn * nn)) / denom;
  return {std::max(0.0, center - half), std::min(1.0, center + half)};
}

std::uint64_t TrialSeed(std::uint64_t master, std::uint32_t n, std::uint32_t trial) {
  return DeriveKey(master, {std::uint64_t{n}, std::uint64_t{trial}});
}

bool RunTrial(const BlockKernel& w, Model model, std::uint32_t n, double scale,
              std::uint64_t seed) {
  const BlockKernel scaled = Scale(w, scale);
  switch (model) {
    case Model::kTwoSat:
      return SolveScc(SampleFormula(n, scaled, seed).formula).status == Status::kSat;
    case Model::kDagger:
      return SolveScc(SampleFormulaDagger(n, scaled, seed).formula).status == Status::kSat;
    case Model::kDensest:
      return SolveScc(SampleDensest(n, scaled, seed).formula).status == Status::kSat;
    case Model::kDigraph:
      return !HasContradictoryComponent(
          SampleDigraph(n, ImplicationDigraphon(scaled), seed).digraph);
  }
  throw std::logic_error("unhandled model");
}

namespace {

using Clock = std::chrono::steady_clock;

CellResult RunCell(const ExperimentConfig& cfg, std::uint32_t n, double scale) {
  CellResult cell;
  cell.scale = scale;
  cell.n = n;
  cell.requested = cfg.trials;
  // -1 not run, 0 UNSAT, 1 SAT, 2 failed
  std::vector<signed char> outcome(cfg.trials, -1);
  std::vector<std::string> errors(cfg.trials);
  std::atomic<std::uint32_t> next{0};
  std::atomic<bool> out_of_time{false};
  const auto start = Clock::now();
  const auto deadline =
      cfg.cell_timeout_seconds > 0
          ? start + std::chrono::duration_cast<Clock::duration>(
                        std::chrono::duration<double>(cfg.cell_timeout_seconds))
          : Clock::time_point::max();
  auto worker = [&]() {
    for (std::uint32_t t = next++; t < cfg.trials; t = next++) {
      if (Clock::now() > deadline) {
        out_of_time = true;
        return;
      }
      try {
        outcome[t] = RunTrial(cfg.kernel, cfg.model, n, scale, TrialSeed(cfg.seed, n, t)) ? 1 : 0;
      } catch (const std::exception& e) {
        outcome[t] = 2;
        errors[t] = e.what();
      }
    }
  };
  unsigned threads = cfg.threads ? cfg.threads : std::max(1U, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, cfg.trials);
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
  }
  cell.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  for (std::uint32_t t = 0; t < cfg.trials; ++t) {
    if (outcome[t] == 2) {
      if (cell.error.empty()) {
        cell.error = fmt::format("n={} scale={} trial={}: {}", n, scale, t, errors[t]);
      }
    } else if (outcome[t] >= 0) {
      ++cell.trials;
      cell.sat += static_cast<std::uint32_t>(outcome[t]);
    }
  }
  cell.timed_out = out_of_time;
  cell.sat_fraction = cell.trials ? double(cell.sat) / cell.trials : 0.0;
  cell.ci = Wilson(cell.sat, cell.trials);
  return cell;
}

double PredictedScale(double rho_star) {
  return rho_star > 0 ? 1.0 / rho_star : std::numeric_limits<double>::infinity();
}

}  // namespace

SweepResult RunSweep(const ExperimentConfig& cfg) {
  const std::vector<std::string> problems = cfg.Problems();
  if (!problems.empty()) throw std::invalid_argument("bad config: " + problems.front());
  SweepResult result;
  result.rho_star = RhoStar(cfg.kernel).rho_star;
  result.predicted_scale = PredictedScale(result.rho_star);
  for (std::uint32_t n : cfg.ns) {
    for (double scale : cfg.scales) {
      try {
        result.cells.push_back(RunCell(cfg, n, scale));
      } catch (const std::exception& e) {
        CellResult failed;
        failed.n = n;
        failed.scale = scale;
        failed.requested = cfg.trials;
        failed.error = fmt::format("n={} scale={}: {}", n, scale, e.what());
        result.cells.push_back(failed);
      }
    }
  }
  return result;
}

ThresholdEstimate EstimateThreshold(const ExperimentConfig& cfg, std::size_t probes,
                                    std::optional<std::pair<double, double>> bracket) {
  ThresholdEstimate est;
  const double rho = RhoStar(cfg.kernel).rho_star;
  est.predicted = PredictedScale(rho);
  if (rho == 0) {
    est.infinite = true;
    est.estimate = est.lo = est.hi = std::numeric_limits<double>::infinity();
    est.rationale = "no contradictory component (rho* = 0): satisfiable at every scale";
    return est;
  }
  if (cfg.ns.empty()) throw std::invalid_argument("threshold estimation needs an n");
  const auto [lo0, hi0] = bracket.value_or(std::pair{est.predicted / 4, est.predicted * 4});
  if (!(lo0 >= 0) || !(hi0 > lo0)) throw std::invalid_argument("bracket must satisfy 0 <= lo < hi");
  ExperimentConfig probe_cfg = cfg;
  probe_cfg.ns = {cfg.ns.front()};
  auto probe = [&](double c) {
    probe_cfg.scales = {c};
    CellResult cell = RunSweep(probe_cfg).cells.front();
    if (!cell.error.empty()) throw std::runtime_error(cell.error);
    est.probes.push_back(cell);
    return cell.sat_fraction >= 0.5;
  };
  est.lo = lo0;
  est.hi = hi0;
  const bool lo_sat = probe(est.lo);
  const bool hi_sat = probe(est.hi);
  if (!lo_sat || hi_sat) {
    est.bracket_valid = false;
    est.rationale = fmt::format("bracket [{}, {}] does not straddle sat_fraction 1/2", lo0, hi0);
  } else {
    for (std::size_t i = 0; i < probes; ++i) {
      const double mid = 0.5 * (est.lo + est.hi);
      (probe(mid) ? est.lo : est.hi) = mid;
    }
    est.rationale = fmt::format("bisection, {} probes at n = {}, {} trials each", probes,
                                probe_cfg.ns.front(), cfg.trials);
  }
  est.estimate = 0.5 * (est.lo + est.hi);
  std::vector<CellResult> sorted = est.probes;
  std::sort(sorted.begin(), sorted.end(),
            [](const CellResult& a, const CellResult& b) { return a.scale < b.scale; });
  for (std::size_t i = 0; i + 1 < sorted.size(); ++i) {
    if (sorted[i + 1].sat_fraction > sorted[i].sat_fraction) est.non_monotone = true;
  }
  return est;
}

namespace {

std::string FormatSet(const TypeSpace& space, const BlockSet& set) {
  std::string out = "{";
  for (std::size_t i = 0; i < set.members().size(); ++i) {
    if (i) out += ", ";
    out += BlockName(space, set.members()[i]);
  }
  return out + "}";
}

std::string FormatScale(double c) {
  return std::isinf(c) ? std::string("inf") : fmt::format("{:.10g}", c);
}

}  // namespace

std::string CompareToPrediction(const BlockKernel& w, const std::string& name,
                                const ThresholdEstimate* empirical) {
  const RhoStarReport rs = RhoStar(w);
  const TypeSpace& space = w.space;
  std::string out = fmt::format("kernel: {}\ntypes: {}\n", name.empty() ? "-" : name,
                                space.num_types());
  out += fmt::format("fragmented: {}\n", FormatSet(space, rs.decomposition.fragmented));
  auto describe = [&](const ComponentSpectrum& cs) {
    const SpectralReport& r = cs.report;
    out += fmt::format(
        "component {} {}: {} rho = {:.12g} period = {} residual = {:.3g} iterations = {}{}\n",
        cs.component,
        rs.decomposition.contradictory[cs.component] ? "contradictory" : "consistent",
        FormatSet(space, rs.decomposition.components[cs.component]), r.rho, r.period,
        r.residual, r.iterations, r.converged ? "" : " NOT CONVERGED");
  };
  for (const ComponentSpectrum& cs : rs.contradictory) describe(cs);
  for (const ComponentSpectrum& cs : rs.other) describe(cs);
  const double predicted = PredictedScale(rs.rho_star);
  out += fmt::format("rho* = {:.12g}\npredicted threshold scale 1/rho* = {}\n", rs.rho_star,
                     FormatScale(predicted));
  std::string verdict;
  if (std::abs(rs.rho_star - 1) <= kCriticalBand) {
    verdict = "critical - no prediction";
  } else if (rs.rho_star < 1) {
    verdict = "satisfiable a.a.s.";
  } else {
    verdict = "unsatisfiable a.a.s.";
  }
  out += "prediction at scale 1: " + verdict + "\n";
  if (empirical) {
    if (empirical->infinite) {
      out += "empirical threshold: inf (" + empirical->rationale + ")\n";
    } else {
      out += fmt::format("empirical threshold: {:.6g} in [{:.6g}, {:.6g}]{}{}\n",
                         empirical->estimate, empirical->lo, empirical->hi,
                         empirical->bracket_valid ? "" : " (bracket invalid)",
                         empirical->non_monotone ? " (non-monotone data)" : "");
    }
  }
  return out;
}

void RequirePairFree(std::uint32_t n, const std::vector<std::pair<Literal, Literal>>& arcs) {
  for (const auto& [u, v] : arcs) {
    if (u.variable() >= n || v.variable() >= n) {
      throw std::invalid_argument("arc " + u.ToString() + "->" + v.ToString() + " exceeds n");
    }
    if (u.variable() == v.variable()) {
      throw std::invalid_argument("arc " + u.ToString() + "->" + v.ToString() +
                                  " stays on one variable");
    }
    for (const auto& [x, y] : arcs) {
      if (x == ~v && y == ~u) {
        throw std::invalid_argument("arc set holds the mirrored pair " + u.ToString() + "->" +
                                    v.ToString() + ", " + x.ToString() + "->" + y.ToString());
      }
    }
  }
}

MarginalTest MarginalEqualityTest(const BlockKernel& w,
                                  const std::vector<std::pair<Literal, Literal>>& arcs,
                                  std::uint32_t n, std::uint32_t trials, std::uint64_t seed) {
  RequireValid(w);
  RequirePairFree(n, arcs);
  if (arcs.empty() || arcs.size() > 16) throw std::invalid_argument("need 1 to 16 arcs");
  if (trials < 1) throw std::invalid_argument("trials must be >= 1");
  const std::size_t patterns = std::size_t{1} << arcs.size();
  MarginalTest t;
  t.digraph_counts.assign(patterns, 0);
  t.dagger_counts.assign(patterns, 0);
  const BlockDigraphon gamma = ImplicationDigraphon(w);
  auto pattern = [&](auto&& has_arc) {
    std::size_t bits = 0;
    for (std::size_t i = 0; i < arcs.size(); ++i) {
      if (has_arc(arcs[i].first, arcs[i].second)) bits |= std::size_t{1} << i;
    }
    return bits;
  };
  for (std::uint32_t s = 0; s < trials; ++s) {
    const DigraphSample d = SampleDigraph(n, gamma, DeriveKey(seed, {0, s}));
    ++t.digraph_counts[pattern([&](Literal a, Literal b) { return d.digraph.has_arc(a, b); })];
    const ImplicationDigraph impl(SampleFormulaDagger(n, w, DeriveKey(seed, {1, s})).formula);
    ++t.dagger_counts[pattern(
        [&](Literal a, Literal b) { return impl.digraph().has_arc(a, b); })];
  }
  // 2 x K homogeneity table over the observed patterns.
  std::size_t observed = 0;
  const double total = 2.0 * trials;
  for (std::size_t k = 0; k < patterns; ++k) {
    const double col = double(t.digraph_counts[k] + t.dagger_counts[k]);
    if (col == 0) continue;
    ++observed;
    for (double o : {double(t.digraph_counts[k]), double(t.dagger_counts[k])}) {
      const double e = col * trials / total;
      t.statistic += (o - e) * (o - e) / e;
    }
  }
  if (observed < 2) {
    t.degenerate = true;
    return t;
  }
  t.degrees_of_freedom = observed - 1;
  const boost::math::chi_squared dist(static_cast<double>(t.degrees_of_freedom));
  t.p_value = boost::math::cdf(boost::math::complement(dist, t.statistic));
  return t;
}

void WriteCsv(std::ostream& out, const SweepResult& r) {
  out << "scale,n,trials,sat,frac,lo95,hi95\n";
  for (const CellResult& c : r.cells) {
    out << fmt::format("{},{},{},{},{:.6f},{:.6f},{:.6f}\n", c.scale, c.n, c.trials, c.sat,
                       c.sat_fraction, c.ci.lo, c.ci.hi);
  }
}

void WriteSvg(std::ostream& out, const SweepResult& r, const std::string& title) {
  constexpr double kW = 640, kH = 400, kLeft = 60, kRight = 20, kTop = 40, kBottom = 50;
  double xmax = 0;
  for (const CellResult& c : r.cells) xmax = std::max(xmax, c.scale);
  if (std::isfinite(r.predicted_scale)) xmax = std::max(xmax, r.predicted_scale);
  if (xmax <= 0) xmax = 1;
  auto px = [&](double x) { return kLeft + (kW - kLeft - kRight) * x / xmax; };
  auto py = [&](double y) { return kTop + (kH - kTop - kBottom) * (1 - y); };
  out << fmt::format(
      "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{}\" height=\"{}\" "
      "font-family=\"sans-serif\" font-size=\"12\">\n",
      kW, kH);
  out << fmt::format("<text x=\"{}\" y=\"20\">{}</text>\n", kLeft, title);
  out << fmt::format(
      "<line x1=\"{0}\" y1=\"{1}\" x2=\"{2}\" y2=\"{1}\" stroke=\"black\"/>\n"
      "<line x1=\"{0}\" y1=\"{3}\" x2=\"{0}\" y2=\"{1}\" stroke=\"black\"/>\n",
      px(0), py(0), px(xmax), py(1));
  for (double y : {0.0, 0.5, 1.0}) {
    out << fmt::format("<text x=\"{}\" y=\"{}\" text-anchor=\"end\">{}</text>\n", kLeft - 6,
                       py(y) + 4, y);
  }
  for (int i = 0; i <= 4; ++i) {
    const double x = xmax * i / 4;
    out << fmt::format("<text x=\"{}\" y=\"{}\" text-anchor=\"middle\">{:.3g}</text>\n", px(x),
                       py(0) + 18, x);
  }
  out << fmt::format("<text x=\"{}\" y=\"{}\" text-anchor=\"middle\">scale</text>\n",
                     px(xmax / 2), kH - 8);
  static const char* kColors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e"};
  std::vector<std::uint32_t> ns;
  for (const CellResult& c : r.cells) {
    if (std::find(ns.begin(), ns.end(), c.n) == ns.end()) ns.push_back(c.n);
  }
  for (std::size_t i = 0; i < ns.size(); ++i) {
    std::vector<const CellResult*> pts;
    for (const CellResult& c : r.cells) {
      if (c.n == ns[i] && c.trials > 0) pts.push_back(&c);
    }
    std::sort(pts.begin(), pts.end(),
              [](const CellResult* a, const CellResult* b) { return a->scale < b->scale; });
    std::string points;
    for (const CellResult* c : pts) {
      points += fmt::format("{:.2f},{:.2f} ", px(c->scale), py(c->sat_fraction));
    }
    const char* color = kColors[i % std::size(kColors)];
    out << fmt::format("<polyline fill=\"none\" stroke=\"{}\" points=\"{}\"/>\n", color, points);
    out << fmt::format("<text x=\"{}\" y=\"{}\" fill=\"{}\">n = {}</text>\n", kW - 110,
                       kTop + 16 * (i + 1), color, ns[i]);
  }
  if (std::isfinite(r.predicted_scale)) {
    out << fmt::format(
        "<line x1=\"{0}\" y1=\"{1}\" x2=\"{0}\" y2=\"{2}\" stroke=\"gray\" "
        "stroke-dasharray=\"4 3\"/>\n",
        px(r.predicted_scale), py(0), py(1));
  }
  out << "</svg>\n";
}

}  // namespace inhomsat
