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

#ifndef INHOMSAT_SPECTRA_HPP_
#define INHOMSAT_SPECTRA_HPP_

// Spectral data of block digraphons.
//
// Conventions. Gamma acts on functions by
//   (T f)(x) = sum_y kappa(y) f(y) Gamma(y, x),
// whose matrix is OperatorMatrix(Gamma). The two Perron eigenfunctions are
//   v_right:  sum_y Gamma(x,y) kappa(y) v_right(y) = rho v_right(x)
//   v_left:   sum_x kappa(x) v_left(x) Gamma(x,y) = rho v_left(y)
// (v_left is the eigenvector of T), normalized so that
//   sum_x kappa(x) v_right(x) = 1  and  <v_left, v_right>_kappa = 1.
// With these, Gamma^l(x,y) ~ D rho^l v_right(x) v_left(y) on the
// period-compatible entries, D the period.

#include <cstddef>
#include <limits>
#include <vector>

#include "inhomsat/components.hpp"
#include "inhomsat/kernel.hpp"

namespace inhomsat {

// M[x][y] = kappa(y) Gamma(y, x).
SquareMatrix OperatorMatrix(const BlockDigraphon& gamma);

struct SpectralOptions {
  double tolerance = 1e-12;
  // 0 selects max(100 * dim, 100000).
  std::size_t max_iterations = 0;
  // Shift is shift_fraction * (largest entry of the iterated matrix).
  double shift_fraction = 1e-3;
};

struct Periodicity {
  std::size_t period = 1;
  std::vector<BlockSet> parts;  // parts[j]; arcs only go parts[j] -> parts[j+1 mod D]
  // part_of[b] for b in the set, kNoPart elsewhere.
  std::vector<std::size_t> part_of;
  static constexpr std::size_t kNoPart = std::numeric_limits<std::size_t>::max();
};

struct SpectralReport {
  double rho = 0;
  std::vector<double> v_right;  // per block, zero outside the dominant component
  std::vector<double> v_left;
  std::size_t period = 1;
  std::vector<BlockSet> cyclic_parts;
  std::size_t iterations = 0;
  double residual = 0;        // max of the two relative eigen-residuals
  double right_residual = 0;  // |A v_right - rho v_right|_inf / |v_right|_inf
  double left_residual = 0;   // |M v_left - rho v_left|_inf / |v_left|_inf
  bool converged = true;
  // False when the set was not a single strongly connected block union; rho
  // is then the maximum over its sub-components and the eigenvectors belong
  // to the maximizing one.
  bool strongly_connected = true;
  // Empirical per-iteration contraction of the residual and the implied
  // estimate of the second-largest eigenvalue modulus. Not certified.
  double residual_decay = 0;
  double alpha_estimate = 0;
  BlockSet dominant;  // blocks carrying the eigenvectors
};

// Throws std::invalid_argument on an empty set.
SpectralReport SpectralRadius(const BlockDigraphon& gamma, const BlockSet& set,
                              const SpectralOptions& options = {});

struct ComponentSpectrum {
  std::size_t component = 0;  // index into decomposition.components
  SpectralReport report;
};

struct RhoStarReport {
  double rho_star = 0;  // 0 when there is no contradictory component
  BlockDigraphon digraphon;
  Decomposition decomposition;
  std::vector<ComponentSpectrum> contradictory;  // one per contradictory component
  std::vector<ComponentSpectrum> other;          // non-contradictory components
};

RhoStarReport RhoStar(const BlockKernel& w, const SpectralOptions& options = {});

// sum_z kappa(z) P(x,z) Q(z,y).
SquareMatrix Compose(const TypeSpace& space, const SquareMatrix& p,
                     const SquareMatrix& q);

// Gamma^1 = Gamma, Gamma^{k+1} = Compose(Gamma^k, Gamma). k >= 1.
BlockDigraphon KernelPower(const BlockDigraphon& gamma, std::size_t k);

// (||Gamma^k||_2)^{1/k} for k = 1..k_max, with the kappa-weighted
// Hilbert-Schmidt norm; powers carried as mantissa * exp(log_scale).
std::vector<double> GelfandEstimate(const BlockDigraphon& gamma, std::size_t k_max);

// Requires `set` strongly connected (throws otherwise).
Periodicity Period(const BlockDigraphon& gamma, const BlockSet& set);

struct AsymptoticCheck {
  double actual = 0;
  double predicted = 0;
  double relative_error = 0;
  bool period_compatible = true;  // l == part(y) - part(x) mod D
};

AsymptoticCheck CheckAsymptotics(const BlockDigraphon& gamma, const BlockSet& set,
                                 std::size_t power, std::size_t x, std::size_t y);

}  // namespace inhomsat

#endif  // INHOMSAT_SPECTRA_HPP_
