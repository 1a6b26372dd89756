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

// Command-line front end: kernel inspection, sampling, solving, structure
// counts and Monte Carlo sweeps.

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "inhomsat/components.hpp"
#include "inhomsat/harness.hpp"
#include "inhomsat/kernel_io.hpp"
#include "inhomsat/sampler.hpp"
#include "inhomsat/solver.hpp"
#include "inhomsat/spectra.hpp"
#include "inhomsat/structures.hpp"

namespace {

using namespace inhomsat;

constexpr int kExitSat = 10;
constexpr int kExitUnsat = 20;

std::string SetText(const TypeSpace& space, const BlockSet& set) {
  std::string out = "{";
  for (std::size_t i = 0; i < set.members().size(); ++i) {
    out += (i ? ", " : "") + BlockName(space, set.members()[i]);
  }
  return out + "}";
}

std::string KernelName(const std::string& path) {
  return std::filesystem::path(path).stem().string();
}

// Opens `path` for writing, or returns std::cout for "" and "-".
class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty() && path != "-") {
      file_.open(path);
      if (!file_) throw std::runtime_error("cannot write " + path);
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

std::ifstream OpenInput(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  return in;
}

bool LooksLikeEdgeList(const std::string& path) {
  std::ifstream in = OpenInput(path);
  std::string line;
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == 'c') continue;
    return line.compare(first, 7, "p edges") == 0;
  }
  return false;
}

int Validate(const std::string& path) {
  std::ifstream in = OpenInput(path);
  std::stringstream text;
  text << in.rdbuf();
  BlockKernel w;
  try {
    w = ParseKernelJson(text.str());
  } catch (const std::exception& e) {
    std::cout << "invalid: " << e.what() << "\n";
    return 1;
  }
  const KernelDiagnostics d = ValidateKernel(w);
  if (!d.ok()) {
    std::cout << "invalid:\n" << d.Summary() << "\n";
    return 1;
  }
  std::cout << fmt::format("ok: {} types, {} blocks, digest {}\n", w.space.num_types(),
                           w.space.num_blocks(), KernelDigest(w));
  return 0;
}

int Decompose(const std::string& path) {
  const BlockKernel w = LoadKernelFile(path);
  const BlockDigraphon gamma = ImplicationDigraphon(w);
  const Decomposition d = inhomsat::Decompose(gamma);
  const std::vector<bool> product = CheckProductForm(d);
  std::cout << "fragmented: " << SetText(w.space, d.fragmented) << "\n";
  for (std::size_t i = 0; i < d.components.size(); ++i) {
    std::cout << fmt::format("component {}: {} {}{}\n", i, SetText(w.space, d.components[i]),
                             d.contradictory[i] ? "contradictory" : "consistent",
                             d.contradictory[i] && !product[i] ? " PRODUCT FORM VIOLATED" : "");
  }
  return 0;
}

int Spectrum(const std::string& path, double scale) {
  const BlockKernel w = Scale(LoadKernelFile(path), scale);
  std::cout << CompareToPrediction(w, KernelName(path));
  return 0;
}

int Sample(const std::string& path, std::uint32_t n, double scale, std::uint64_t seed,
           const std::string& model_name, const std::string& out_path) {
  const BlockKernel w = Scale(LoadKernelFile(path), scale);
  const Model model = ParseModel(model_name);
  Output out(out_path);
  if (model == Model::kDigraph) {
    const DigraphSample s = SampleDigraph(n, ImplicationDigraphon(w), seed);
    out.stream() << fmt::format("c seed={} kernel={} model=digraph\n", seed, KernelDigest(w));
    WriteEdgeList(out.stream(), s.digraph);
    return 0;
  }
  FormulaSample s = model == Model::kTwoSat   ? SampleFormula(n, w, seed)
                    : model == Model::kDagger ? SampleFormulaDagger(n, w, seed)
                                              : SampleDensest(n, w, seed);
  if (s.stats.clamped > 0) {
    std::cerr << fmt::format("note: {} of {} potential clauses had W/2n > 1 (clamped)\n",
                             s.stats.clamped, s.stats.potential);
  }
  WriteDimacs(out.stream(), s.formula);
  return 0;
}

void PrintWalk(const char* label, const std::vector<Literal>& walk) {
  std::cout << label;
  for (Literal l : walk) std::cout << " " << l.ToDimacs();
  std::cout << "\n";
}

int Solve(const std::string& path, bool show_assignment, bool show_witness) {
  std::ifstream in = OpenInput(path);
  const Formula f = ReadDimacs(in);
  const Verdict v = SolveScc(f);
  std::cout << "s " << (v.status == Status::kSat ? "SATISFIABLE" : "UNSATISFIABLE") << "\n";
  if (v.status == Status::kSat && show_assignment) {
    std::cout << "v";
    for (std::uint32_t x = 0; x < f.num_vars(); ++x) {
      std::cout << " " << (v.assignment[x] ? "" : "-") << x + 1;
    }
    std::cout << " 0\n";
  }
  if (v.status == Status::kUnsat && show_witness) PrintWalk("c witness", v.witness);
  return v.status == Status::kSat ? kExitSat : kExitUnsat;
}

int CountStructures(const std::string& path, std::uint64_t budget) {
  const bool edges = LooksLikeEdgeList(path);
  std::ifstream in = OpenInput(path);
  std::optional<Formula> formula;
  LiteralDigraph g;
  if (edges) {
    g = ReadEdgeList(in);
  } else {
    formula = ReadDimacs(in);
    g = ImplicationDigraph(*formula).digraph();
  }
  std::cout << fmt::format("input: {}\nvariables: {}\narcs: {}\n", edges ? "edge-list" : "cnf",
                           g.num_vars(), g.num_arcs());
  std::vector<Literal> walk;
  const bool contradictory = HasContradictoryComponent(g, &walk);
  std::cout << "contradictory_component: " << (contradictory ? "yes" : "no") << "\n";
  if (const auto cycle = FindContradictoryCycle(g, budget)) {
    PrintWalk("contradictory_cycle:", *cycle);
  } else if (contradictory) {
    std::cout << "contradictory_cycle: not found within budget\n";
  }
  if (const auto bc = FindBicycle(g, budget)) {
    std::cout << fmt::format("bicycle: k={} a={} b={}", bc->k(), bc->a, bc->b);
    PrintWalk(" basis:", bc->basis);
  } else {
    std::cout << "bicycle: none\n";
  }
  if (formula) {
    const SnakeSearch s = DetectSnake(*formula, budget);
    if (s.snake) {
      std::cout << fmt::format("snake: a={} b={} center={}", s.snake->a, s.snake->b,
                               s.snake->center.ToDimacs());
      PrintWalk(" chain:", s.snake->chain);
    } else {
      std::cout << (s.budget_exhausted ? "snake: not found (budget exhausted)\n"
                                       : "snake: not found\n");
    }
    std::cout << "snake_search_expansions: " << s.expansions << "\n";
  }
  if (g.num_vars() <= kCountBicyclesMaxVars) {
    const std::size_t kmax = std::min<std::size_t>(kCountBicyclesMaxK, g.num_vars());
    std::uint64_t total = 0;
    for (std::size_t k = 2; k <= kmax; ++k) {
      for (std::size_t a = 2; a <= k; ++a) {
        for (std::size_t b = 1; b < k; ++b) {
          const std::uint64_t c = CountBicycles(g, k, a, b);
          total += c;
          if (c) std::cout << fmt::format("bicycles k={} a={} b={}: {}\n", k, a, b, c);
        }
      }
    }
    std::cout << "bicycles_total: " << total << "\n";
  }
  return 0;
}

std::vector<double> ScaleGrid(const std::vector<double>& scales, double lo, double hi,
                              std::size_t steps) {
  if (!scales.empty()) return scales;
  if (steps < 1) throw std::invalid_argument("--scale-steps must be >= 1");
  std::vector<double> out;
  for (std::size_t i = 0; i < steps; ++i) {
    out.push_back(steps == 1 ? lo : lo + (hi - lo) * double(i) / double(steps - 1));
  }
  return out;
}

std::vector<std::pair<Literal, Literal>> ParseArcs(const std::vector<std::string>& specs) {
  std::vector<std::pair<Literal, Literal>> arcs;
  for (const std::string& s : specs) {
    long long a = 0, b = 0;
    char sep = 0;
    std::istringstream ss(s);
    if (!(ss >> a >> sep >> b) || sep != ',') {
      throw std::invalid_argument("arc '" + s + "' must look like 1,-2");
    }
    arcs.emplace_back(Literal::FromDimacs(a), Literal::FromDimacs(b));
  }
  return arcs;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Random 2-SAT over block kernels: spectra, sampling, solving, sweeps"};
  app.require_subcommand(1);

  std::string kernel, out_path, model = "twosat", input, svg_path;
  std::vector<std::uint32_t> ns{1000};
  std::vector<double> scales;
  double scale = 1, scale_min = 0.5, scale_max = 1.5, timeout = 0, alpha = 0.001;
  double lo = -1, hi = -1;
  std::size_t steps = 11, probes = 8;
  std::uint32_t trials = 100, n = 1000;
  std::uint64_t seed = 1, budget = 1'000'000;
  unsigned threads = 0;
  bool show_assignment = false, show_witness = false;
  std::vector<std::string> arc_specs;

  auto* validate = app.add_subcommand("validate", "Check a kernel file");
  validate->add_option("--kernel", kernel, "Kernel JSON")->required();

  auto* spectrum = app.add_subcommand("spectrum", "rho*, components and 1/rho*");
  spectrum->add_option("--kernel", kernel, "Kernel JSON")->required();
  spectrum->add_option("--scale", scale, "Multiply the kernel first");

  auto* decompose = app.add_subcommand("decompose", "Strong components of the implication digraphon");
  decompose->add_option("--kernel", kernel, "Kernel JSON")->required();

  auto* sample = app.add_subcommand("sample", "Draw one formula (DIMACS) or digraph (edge list)");
  sample->add_option("--kernel", kernel, "Kernel JSON")->required();
  sample->add_option("--n", n, "Variables")->required();
  sample->add_option("--scale", scale, "Scaling factor");
  sample->add_option("--seed", seed, "Seed");
  sample->add_option("--model", model, "twosat | dagger | densest | digraph");
  sample->add_option("--out", out_path, "Output file (default stdout)");

  auto* solve = app.add_subcommand("solve", "Solve a DIMACS 2-CNF; exit 10 SAT, 20 UNSAT");
  solve->add_option("input", input, "DIMACS file")->required();
  solve->add_flag("--assignment", show_assignment, "Print a satisfying assignment");
  solve->add_flag("--witness", show_witness, "Print a contradictory closed walk");

  auto* count = app.add_subcommand("count-structures", "Cycles, bicycles and snakes");
  count->add_option("input", input, "DIMACS or edge-list file")->required();
  count->add_option("--budget", budget, "Search expansions");

  auto add_sweep_options = [&](CLI::App* sub) {
    sub->add_option("--kernel", kernel, "Kernel JSON")->required();
    sub->add_option("--trials", trials, "Trials per cell");
    sub->add_option("--seed", seed, "Master seed");
    sub->add_option("--model", model, "twosat | dagger | densest | digraph");
    sub->add_option("--threads", threads, "Worker threads (0: all cores)");
    sub->add_option("--timeout", timeout, "Per-cell time limit in seconds (0: none)");
  };
  auto* sweep = app.add_subcommand("sweep", "sat_fraction over a scale grid");
  add_sweep_options(sweep);
  sweep->add_option("--n", ns, "Variables (repeatable)");
  sweep->add_option("--scale", scales, "Explicit scales (repeatable)");
  sweep->add_option("--scale-min", scale_min, "Grid start");
  sweep->add_option("--scale-max", scale_max, "Grid end");
  sweep->add_option("--scale-steps", steps, "Grid points");
  sweep->add_option("--out", out_path, "CSV file (default stdout)");
  sweep->add_option("--svg", svg_path, "SVG plot file");

  auto* threshold = app.add_subcommand("threshold", "Bisection for the empirical threshold");
  add_sweep_options(threshold);
  threshold->add_option("--n", n, "Variables");
  threshold->add_option("--probes", probes, "Bisection steps");
  threshold->add_option("--lo", lo, "Bracket start (default 1/(4 rho*))");
  threshold->add_option("--hi", hi, "Bracket end (default 4/rho*)");

  auto* marginal = app.add_subcommand("marginal-test", "Chi-square test of arc-set marginals");
  marginal->add_option("--kernel", kernel, "Kernel JSON")->required();
  marginal->add_option("--n", n, "Variables");
  marginal->add_option("--trials", trials, "Samples per model");
  marginal->add_option("--seed", seed, "Seed");
  marginal->add_option("--arc", arc_specs, "Arc as from,to in DIMACS literals (default 1,2)");
  marginal->add_option("--alpha", alpha, "Significance level");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*validate) return Validate(kernel);
    if (*spectrum) return Spectrum(kernel, scale);
    if (*decompose) return Decompose(kernel);
    if (*sample) return Sample(kernel, n, scale, seed, model, out_path);
    if (*solve) return Solve(input, show_assignment, show_witness);
    if (*count) return CountStructures(input, budget);
    if (*sweep || *threshold) {
      ExperimentConfig cfg;
      cfg.kernel = LoadKernelFile(kernel);
      cfg.kernel_name = KernelName(kernel);
      cfg.trials = trials;
      cfg.seed = seed;
      cfg.model = ParseModel(model);
      cfg.threads = threads;
      cfg.cell_timeout_seconds = timeout;
      if (*sweep) {
        cfg.ns = ns;
        cfg.scales = ScaleGrid(scales, scale_min, scale_max, steps);
        const SweepResult r = RunSweep(cfg);
        Output out(out_path);
        WriteCsv(out.stream(), r);
        if (!svg_path.empty()) {
          Output svg(svg_path);
          WriteSvg(svg.stream(), r, cfg.kernel_name + " (" + model + ")");
        }
        int status = 0;
        for (const CellResult& c : r.cells) {
          if (!c.error.empty()) {
            std::cerr << "cell failed: " << c.error << "\n";
            status = 1;
          } else if (c.timed_out) {
            std::cerr << fmt::format("cell n={} scale={} timed out after {} of {} trials\n",
                                     c.n, c.scale, c.trials, c.requested);
          }
        }
        return status;
      }
      cfg.ns = {n};
      cfg.scales = {1.0};
      std::optional<std::pair<double, double>> bracket;
      if (lo >= 0 && hi > lo) bracket = std::pair{lo, hi};
      const ThresholdEstimate est = EstimateThreshold(cfg, probes, bracket);
      for (const CellResult& c : est.probes) {
        std::cout << fmt::format("probe scale={:.6g} sat={}/{} frac={:.3f}\n", c.scale, c.sat,
                                 c.trials, c.sat_fraction);
      }
      std::cout << CompareToPrediction(cfg.kernel, cfg.kernel_name, &est);
      if (!est.rationale.empty()) std::cout << "note: " << est.rationale << "\n";
      return 0;
    }
    if (*marginal) {
      const BlockKernel w = LoadKernelFile(kernel);
      if (arc_specs.empty()) arc_specs = {"1,2"};
      const MarginalTest t = MarginalEqualityTest(w, ParseArcs(arc_specs), n, trials, seed);
      std::cout << "pattern,digraph,dagger\n";
      for (std::size_t k = 0; k < t.digraph_counts.size(); ++k) {
        std::cout << fmt::format("{},{},{}\n", k, t.digraph_counts[k], t.dagger_counts[k]);
      }
      if (t.degenerate) {
        std::cout << "degenerate: fewer than two arc patterns observed, no test\n";
        return 0;
      }
      std::cout << fmt::format("chi2={:.6g} df={} p={:.6g} verdict={}\n", t.statistic,
                               t.degrees_of_freedom, t.p_value,
                               t.p_value < alpha ? "reject" : "no-reject");
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
