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

#include "inhomsat/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numeric>
#include <stdexcept>

namespace inhomsat {

namespace {

// Small dense matrix over the blocks of one component (local indices).
using Local = SquareMatrix;

std::vector<double> Apply(const Local& p, const std::vector<double>& v) {
  const std::size_t m = p.dim();
  std::vector<double> w(m, 0.0);
  for (std::size_t i = 0; i < m; ++i) {
    double s = 0;
    for (std::size_t j = 0; j < m; ++j) s += p(i, j) * v[j];
    w[i] = s;
  }
  return w;
}

Local Multiply(const Local& a, const Local& b) {
  const std::size_t m = a.dim();
  Local c(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t k = 0; k < m; ++k) {
      const double aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < m; ++j) c(i, j) += aik * b(k, j);
    }
  }
  return c;
}

double MaxAbs(const std::vector<double>& v) {
  double m = 0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

double RelativeResidual(const Local& p, const std::vector<double>& v, double lambda) {
  const std::vector<double> w = Apply(p, v);
  double r = 0;
  for (std::size_t i = 0; i < v.size(); ++i) r = std::max(r, std::abs(w[i] - lambda * v[i]));
  const double scale = MaxAbs(v);
  return scale > 0 ? r / scale : r;
}

struct PowerResult {
  double lambda = 0;
  std::vector<double> vec;
  std::size_t iterations = 0;
  bool converged = false;
  double decay = 0;
};

// Shifted power iteration for the Perron root of an irreducible,
// aperiodic nonnegative matrix. Iterates with p + shift*I, which has the
// same Perron vector and Perron root shifted by exactly `shift`.
PowerResult PowerIterate(const Local& p, const SpectralOptions& opt,
                         std::size_t max_iter) {
  const std::size_t m = p.dim();
  const double shift = opt.shift_fraction * p.max_entry();
  PowerResult out;
  std::vector<double> v(m, 1.0 / double(m));
  std::vector<double> history;
  for (std::size_t it = 1; it <= max_iter; ++it) {
    const std::vector<double> w = Apply(p, v);
    const double lambda = std::accumulate(w.begin(), w.end(), 0.0);
    double r = 0;
    for (std::size_t i = 0; i < m; ++i) r = std::max(r, std::abs(w[i] - lambda * v[i]));
    r /= MaxAbs(v);
    history.push_back(r);
    out.iterations = it;
    out.lambda = lambda;
    if (r <= opt.tolerance * std::max(1.0, lambda)) {
      out.converged = true;
      break;
    }
    double total = 0;
    for (std::size_t i = 0; i < m; ++i) {
      v[i] = w[i] + shift * v[i];
      total += v[i];
    }
    for (double& x : v) x /= total;
  }
  out.vec = std::move(v);
  // Geometric mean contraction over the tail of the residual history.
  const std::size_t k = std::min<std::size_t>(20, history.size() > 1 ? history.size() - 1 : 0);
  if (k > 0 && history.back() > 0 && history[history.size() - 1 - k] > 0) {
    out.decay = std::pow(history.back() / history[history.size() - 1 - k], 1.0 / double(k));
  }
  return out;
}

Periodicity PeriodOfComponent(const BlockDigraphon& gamma, const BlockSet& set) {
  const std::size_t dim = gamma.values.dim();
  constexpr std::size_t kUnseen = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> level(dim, kUnseen);
  const std::size_t root = set.members().front();
  level[root] = 0;
  std::deque<std::size_t> queue{root};
  while (!queue.empty()) {
    const std::size_t u = queue.front();
    queue.pop_front();
    for (std::size_t v : set.members()) {
      if (gamma.values(u, v) > 0 && level[v] == kUnseen) {
        level[v] = level[u] + 1;
        queue.push_back(v);
      }
    }
  }
  std::size_t g = 0;
  for (std::size_t u : set.members()) {
    for (std::size_t v : set.members()) {
      if (gamma.values(u, v) <= 0) continue;
      const long long diff = static_cast<long long>(level[u]) + 1 -
                             static_cast<long long>(level[v]);
      g = std::gcd(g, static_cast<std::size_t>(std::llabs(diff)));
    }
  }
  Periodicity p;
  p.period = g == 0 ? 1 : g;
  std::vector<std::vector<std::size_t>> parts(p.period);
  p.part_of.assign(dim, Periodicity::kNoPart);
  for (std::size_t b : set.members()) {
    p.part_of[b] = level[b] % p.period;
    parts[p.part_of[b]].push_back(b);
  }
  for (auto& part : parts) p.parts.emplace_back(dim, std::move(part));
  return p;
}

// Perron data of one strongly connected block set.
SpectralReport PerronOfComponent(const BlockDigraphon& gamma, const BlockSet& comp,
                                 const SpectralOptions& opt) {
  const TypeSpace& space = gamma.space;
  const std::size_t dim = gamma.values.dim();
  const auto& idx = comp.members();
  const std::size_t m = idx.size();

  // right operator A[i][j] = Gamma(i,j) kappa(j); left operator M = T.
  Local a(m), mt(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      a(i, j) = gamma.values(idx[i], idx[j]) * space.block_measure(idx[j]);
      mt(i, j) = space.block_measure(idx[j]) * gamma.values(idx[j], idx[i]);
    }
  }

  const Periodicity per = PeriodOfComponent(gamma, comp);
  const std::size_t d = per.period;
  const std::size_t max_iter =
      opt.max_iterations ? opt.max_iterations : std::max<std::size_t>(100 * dim, 100000);

  // For period d > 1 iterate on the d-th power restricted to part 0, which
  // is primitive with Perron root rho^d, then spread the vector over the
  // other parts with v = sum_j (P / rho)^j v0.
  std::vector<std::size_t> part0;
  for (std::size_t i = 0; i < m; ++i) {
    if (per.part_of[idx[i]] == 0) part0.push_back(i);
  }

  auto solve = [&](const Local& p, PowerResult& pr) -> std::pair<double, std::vector<double>> {
    if (d == 1) {
      pr = PowerIterate(p, opt, max_iter);
      return {pr.lambda, pr.vec};
    }
    Local pd = p;
    for (std::size_t k = 1; k < d; ++k) pd = Multiply(pd, p);
    Local sub(part0.size());
    for (std::size_t i = 0; i < part0.size(); ++i) {
      for (std::size_t j = 0; j < part0.size(); ++j) sub(i, j) = pd(part0[i], part0[j]);
    }
    pr = PowerIterate(sub, opt, max_iter);
    const double rho = std::pow(std::max(pr.lambda, 0.0), 1.0 / double(d));
    std::vector<double> v0(m, 0.0);
    for (std::size_t i = 0; i < part0.size(); ++i) v0[part0[i]] = pr.vec[i];
    std::vector<double> v = v0, term = v0;
    for (std::size_t k = 1; k < d; ++k) {
      term = Apply(p, term);
      for (double& x : term) x /= rho;
      for (std::size_t i = 0; i < m; ++i) v[i] += term[i];
    }
    return {rho, v};
  };

  PowerResult right_pr, left_pr;
  auto [rho_r, vr] = solve(a, right_pr);
  auto [rho_l, vl] = solve(mt, left_pr);
  // Two-sided quotient <u, A v> / <u, v> with u = kappa * v_left, the left
  // eigenvector of A; its error is quadratic in the eigenvector errors.
  double rho = 0.5 * (rho_r + rho_l);
  {
    const std::vector<double> av = Apply(a, vr);
    double num = 0, den = 0;
    for (std::size_t i = 0; i < m; ++i) {
      const double u = space.block_measure(idx[i]) * vl[i];
      num += u * av[i];
      den += u * vr[i];
    }
    if (den > 0 && num > 0 && std::isfinite(num / den)) rho = num / den;
  }

  double norm_r = 0;
  for (std::size_t i = 0; i < m; ++i) norm_r += space.block_measure(idx[i]) * vr[i];
  for (double& x : vr) x /= norm_r;
  double pair = 0;
  for (std::size_t i = 0; i < m; ++i) pair += space.block_measure(idx[i]) * vl[i] * vr[i];
  for (double& x : vl) x /= pair;

  SpectralReport rep;
  rep.rho = rho;
  rep.v_right.assign(dim, 0.0);
  rep.v_left.assign(dim, 0.0);
  for (std::size_t i = 0; i < m; ++i) {
    rep.v_right[idx[i]] = vr[i];
    rep.v_left[idx[i]] = vl[i];
  }
  rep.period = d;
  rep.cyclic_parts = per.parts;
  rep.iterations = right_pr.iterations + left_pr.iterations;
  rep.right_residual = RelativeResidual(a, vr, rho);
  rep.left_residual = RelativeResidual(mt, vl, rho);
  rep.residual = std::max(rep.right_residual, rep.left_residual);
  rep.converged = right_pr.converged && left_pr.converged;
  rep.residual_decay = std::max(right_pr.decay, left_pr.decay);
  if (d == 1 && rep.residual_decay > 0) {
    const double shift = opt.shift_fraction * a.max_entry();
    rep.alpha_estimate = std::max(0.0, rep.residual_decay * (rho + shift) - shift);
  }
  rep.dominant = comp;
  return rep;
}

}  // namespace

SquareMatrix OperatorMatrix(const BlockDigraphon& gamma) {
  const std::size_t dim = gamma.values.dim();
  SquareMatrix m(dim);
  for (std::size_t x = 0; x < dim; ++x) {
    for (std::size_t y = 0; y < dim; ++y) {
      m(x, y) = gamma.space.block_measure(y) * gamma.values(y, x);
    }
  }
  return m;
}

SpectralReport SpectralRadius(const BlockDigraphon& gamma, const BlockSet& set,
                              const SpectralOptions& options) {
  if (set.empty()) throw std::invalid_argument("spectral radius of an empty set");
  const std::size_t dim = gamma.values.dim();
  const Decomposition d = Decompose(Restrict(gamma, set));

  SpectralReport best;
  best.v_right.assign(dim, 0.0);
  best.v_left.assign(dim, 0.0);
  best.cyclic_parts = {set};
  best.dominant = BlockSet::Empty(dim);
  bool have = false;
  for (const BlockSet& comp : d.components) {
    SpectralReport r = PerronOfComponent(gamma, comp, options);
    if (!have || r.rho > best.rho) {
      const std::size_t iterations = have ? best.iterations : 0;
      best = std::move(r);
      best.iterations += iterations;
      have = true;
    }
  }
  best.strongly_connected = d.components.size() == 1 && d.components[0] == set;
  return best;
}

RhoStarReport RhoStar(const BlockKernel& w, const SpectralOptions& options) {
  RhoStarReport out;
  out.digraphon = ImplicationDigraphon(w);
  out.decomposition = Decompose(out.digraphon);
  for (std::size_t i = 0; i < out.decomposition.components.size(); ++i) {
    ComponentSpectrum cs{i, SpectralRadius(out.digraphon,
                                           out.decomposition.components[i], options)};
    if (out.decomposition.contradictory[i]) {
      out.rho_star = std::max(out.rho_star, cs.report.rho);
      out.contradictory.push_back(std::move(cs));
    } else {
      out.other.push_back(std::move(cs));
    }
  }
  return out;
}

SquareMatrix Compose(const TypeSpace& space, const SquareMatrix& p,
                     const SquareMatrix& q) {
  const std::size_t dim = p.dim();
  SquareMatrix out(dim);
  for (std::size_t x = 0; x < dim; ++x) {
    for (std::size_t z = 0; z < dim; ++z) {
      const double pz = space.block_measure(z) * p(x, z);
      if (pz == 0) continue;
      for (std::size_t y = 0; y < dim; ++y) out(x, y) += pz * q(z, y);
    }
  }
  return out;
}

BlockDigraphon KernelPower(const BlockDigraphon& gamma, std::size_t k) {
  if (k == 0) throw std::invalid_argument("kernel powers start at k = 1");
  BlockDigraphon out = gamma;
  for (std::size_t i = 1; i < k; ++i) {
    out.values = Compose(gamma.space, out.values, gamma.values);
  }
  return out;
}

namespace {

double WeightedFrobenius(const TypeSpace& space, const SquareMatrix& p) {
  const std::size_t dim = p.dim();
  double s = 0;
  for (std::size_t x = 0; x < dim; ++x) {
    for (std::size_t y = 0; y < dim; ++y) {
      s += space.block_measure(x) * space.block_measure(y) * p(x, y) * p(x, y);
    }
  }
  return std::sqrt(s);
}

}  // namespace

std::vector<double> GelfandEstimate(const BlockDigraphon& gamma, std::size_t k_max) {
  if (k_max == 0) throw std::invalid_argument("k_max must be >= 1");
  std::vector<double> terms;
  terms.reserve(k_max);
  SquareMatrix power = gamma.values;
  double log_scale = 0;
  for (std::size_t k = 1; k <= k_max; ++k) {
    if (k > 1) power = Compose(gamma.space, power, gamma.values);
    const double top = power.max_entry();
    if (top == 0) {
      terms.push_back(0.0);
      continue;
    }
    if (top > 1e150 || top < 1e-150) {
      std::vector<double> data = power.data();
      for (double& x : data) x /= top;
      power = SquareMatrix(power.dim(), std::move(data));
      log_scale += std::log(top);
    }
    const double log_norm = std::log(WeightedFrobenius(gamma.space, power)) + log_scale;
    terms.push_back(std::exp(log_norm / double(k)));
  }
  return terms;
}

Periodicity Period(const BlockDigraphon& gamma, const BlockSet& set) {
  if (!IsStronglyConnected(gamma, set)) {
    throw std::invalid_argument("period needs a strongly connected set");
  }
  return PeriodOfComponent(gamma, set);
}

AsymptoticCheck CheckAsymptotics(const BlockDigraphon& gamma, const BlockSet& set,
                                 std::size_t power, std::size_t x, std::size_t y) {
  if (!set.contains(x) || !set.contains(y)) {
    throw std::invalid_argument("asymptotic check blocks must lie in the set");
  }
  const Periodicity per = Period(gamma, set);
  const SpectralReport rep = SpectralRadius(gamma, set);
  const BlockDigraphon restricted = Restrict(gamma, set);
  AsymptoticCheck out;
  out.actual = KernelPower(restricted, power).values(x, y);
  const std::size_t d = per.period;
  out.period_compatible =
      (per.part_of[x] + power) % d == per.part_of[y] % d;
  if (out.period_compatible) {
    out.predicted = double(d) * std::pow(rep.rho, double(power)) *
                    rep.v_right[x] * rep.v_left[y];
  }
  if (out.predicted > 0) {
    out.relative_error = std::abs(out.actual / out.predicted - 1.0);
  } else {
    out.relative_error =
        out.actual == 0 ? 0.0 : std::numeric_limits<double>::infinity();
  }
  return out;
}

}  // namespace inhomsat
