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

#include <cmath>

#include "gtest/gtest.h"
#include "inhomsat/components.hpp"
#include "inhomsat/spectra.hpp"
#include "oracles.hpp"

using namespace inhomsat;

namespace {

double ClosedFormRho(double a, double b, double c) { return (b + std::sqrt(a * c)) / 2; }

}  // namespace

TEST(SpectralRadiusTest, SingleTypeClosedForm) {
  const double cases[][3] = {{1, 1, 1}, {2, 0, 2}, {1, 2, 3}, {0.5, 4, 0.1}, {3, 0.2, 1}};
  for (const auto& abc : cases) {
    const BlockKernel w = SingleTypeKernel(abc[0], abc[1], abc[2]);
    const RhoStarReport rs = RhoStar(w);
    EXPECT_NEAR(rs.rho_star, ClosedFormRho(abc[0], abc[1], abc[2]), 1e-12)
        << abc[0] << " " << abc[1] << " " << abc[2];
  }
}

TEST(SpectralRadiusTest, EigenvectorsSatisfyNormalization) {
  const BlockKernel w = oracle::RandomKernel(5, 3, 3.0, 0.0);
  const BlockDigraphon g = ImplicationDigraphon(w);
  const SpectralReport r = SpectralRadius(g, BlockSet::Full(6));
  ASSERT_TRUE(r.converged);
  double mass = 0, pairing = 0;
  for (std::size_t x = 0; x < 6; ++x) {
    mass += g.space.block_measure(x) * r.v_right[x];
    pairing += g.space.block_measure(x) * r.v_left[x] * r.v_right[x];
  }
  EXPECT_NEAR(mass, 1.0, 1e-12);
  EXPECT_NEAR(pairing, 1.0, 1e-12);
  for (std::size_t x = 0; x < 6; ++x) {
    double right = 0, left = 0;
    for (std::size_t y = 0; y < 6; ++y) {
      right += g(x, y) * g.space.block_measure(y) * r.v_right[y];
      left += g.space.block_measure(y) * r.v_left[y] * g(y, x);
    }
    EXPECT_NEAR(right, r.rho * r.v_right[x], 1e-10);
    EXPECT_NEAR(left, r.rho * r.v_left[x], 1e-10);
    EXPECT_GT(r.v_right[x], 0);
    EXPECT_GT(r.v_left[x], 0);
  }
}

TEST(SpectralRadiusTest, MatchesDenseEigensolverOnRandomKernels) {
  for (std::uint64_t s = 0; s < 40; ++s) {
    const BlockKernel w = oracle::RandomKernel(300 + s, 1 + s % 5, 4.0, 0.5);
    const BlockDigraphon g = ImplicationDigraphon(w);
    // Per component: the Perron root is simple there, so the dense solver is
    // accurate. On the full set C and its negation share a root, which can
    // form a Jordan block and cost the dense route half its digits.
    for (const BlockSet& comp : Decompose(g).components) {
      const SpectralReport r = SpectralRadius(g, comp);
      const oracle::DenseSpectrum dense = oracle::DenseRadius(g, comp.members());
      EXPECT_NEAR(r.rho, dense.radius, 1e-10 * std::max(1.0, dense.radius)) << "seed " << s;
    }
  }
}

TEST(SpectralRadiusTest, PeriodicComponentConverges) {
  // Directed four-cycle over the blocks of two types.
  const BlockDigraphon g{TypeSpace::Uniform(2),
                         SquareMatrix(4, {0, 2, 0, 0,  //
                                          0, 0, 3, 0,  //
                                          0, 0, 0, 4,  //
                                          1, 0, 0, 0})};
  const BlockSet all = BlockSet::Full(4);
  EXPECT_EQ(Period(g, all).period, 4u);
  const SpectralReport r = SpectralRadius(g, all);
  EXPECT_TRUE(r.converged);
  EXPECT_EQ(r.period, 4u);
  // Product of the cycle weights times kappa^4, fourth root.
  EXPECT_NEAR(r.rho, std::pow(2.0 * 3 * 4 * 1 * std::pow(0.25, 4), 0.25), 1e-12);
  EXPECT_LE(r.residual, 1e-10);
}

TEST(SpectralRadiusTest, NonStronglyConnectedSetTakesMaximum) {
  const BlockDigraphon g{TypeSpace::Uniform(1), SquareMatrix(2, {4, 1, 0, 2})};
  const SpectralReport r = SpectralRadius(g, BlockSet::Full(2));
  EXPECT_FALSE(r.strongly_connected);
  EXPECT_NEAR(r.rho, 2.0, 1e-12);  // kappa = 1/2, max(4, 2) / 2
  EXPECT_THROW(SpectralRadius(g, BlockSet::Empty(2)), std::invalid_argument);
}

TEST(RhoStarTest, ZeroWithoutContradictoryComponent) {
  const RhoStarReport rs = RhoStar(SingleTypeKernel(0, 3, 0));
  EXPECT_EQ(rs.rho_star, 0.0);
  EXPECT_TRUE(rs.contradictory.empty());
  EXPECT_EQ(rs.other.size(), 2u);
}

TEST(RhoStarTest, ScalesLinearly) {
  const BlockKernel w = oracle::RandomKernel(17, 3, 2.0, 0.2);
  EXPECT_NEAR(RhoStar(Scale(w, 2.5)).rho_star, 2.5 * RhoStar(w).rho_star, 1e-10);
}

TEST(PeriodTest, BipartiteAndAperiodic) {
  const BlockDigraphon bip = ImplicationDigraphon(SingleTypeKernel(2, 0, 2));
  const Periodicity p = Period(bip, BlockSet::Full(2));
  EXPECT_EQ(p.period, 2u);
  EXPECT_NE(p.part_of[0], p.part_of[1]);
  EXPECT_EQ(Period(ImplicationDigraphon(ConstantKernel(1)), BlockSet::Full(2)).period, 1u);
  const BlockDigraphon frag = ImplicationDigraphon(SingleTypeKernel(1, 0, 0));
  EXPECT_THROW(Period(frag, BlockSet::Full(2)), std::invalid_argument);
}

TEST(ComposeTest, MatchesDenseOracle) {
  const BlockDigraphon g = ImplicationDigraphon(oracle::RandomKernel(23, 2, 2.0, 0.3));
  const auto dense = oracle::DensePower(g, 5);
  const BlockDigraphon p = KernelPower(g, 5);
  for (std::size_t x = 0; x < 4; ++x) {
    for (std::size_t y = 0; y < 4; ++y) {
      EXPECT_NEAR(p(x, y), double(dense[x][y]), 1e-12 * std::max(1.0, double(dense[x][y])));
    }
  }
  EXPECT_EQ(KernelPower(g, 1), g);
  EXPECT_THROW(KernelPower(g, 0), std::invalid_argument);
}

TEST(GelfandTest, ConvergesTowardRho) {
  const BlockDigraphon g = ImplicationDigraphon(oracle::RandomKernel(29, 2, 3.0, 0.0));
  const double rho = SpectralRadius(g, BlockSet::Full(4)).rho;
  const std::vector<double> est = GelfandEstimate(g, 400);
  ASSERT_EQ(est.size(), 400u);
  EXPECT_LT(std::abs(est[399] - rho), std::abs(est[9] - rho) + 1e-15);
  EXPECT_NEAR(est[399], rho, 1e-3 * rho);
}

TEST(GelfandTest, SurvivesHugeAndTinyPowers) {
  const BlockDigraphon big{TypeSpace::Uniform(1), SquareMatrix(2, {1e6, 1e6, 1e6, 1e6})};
  const std::vector<double> est = GelfandEstimate(big, 300);
  EXPECT_TRUE(std::isfinite(est.back()));
  EXPECT_NEAR(est.back(), 1e6, 1e6 * 1e-2);
  const BlockDigraphon tiny{TypeSpace::Uniform(1), SquareMatrix(2, {1e-6, 1e-6, 1e-6, 1e-6})};
  EXPECT_NEAR(GelfandEstimate(tiny, 300).back(), 1e-6, 1e-8);
}

TEST(AsymptoticsTest, PeriodicPredictionCarriesPeriodFactor) {
  const BlockDigraphon bip = ImplicationDigraphon(SingleTypeKernel(2, 0, 2));
  const BlockSet all = BlockSet::Full(2);
  for (std::size_t l : {10, 11}) {
    for (std::size_t x = 0; x < 2; ++x) {
      for (std::size_t y = 0; y < 2; ++y) {
        const AsymptoticCheck c = CheckAsymptotics(bip, all, l, x, y);
        if (c.period_compatible) {
          EXPECT_NEAR(c.actual, 2.0, 1e-12);
          EXPECT_NEAR(c.predicted, 2.0, 1e-12);
        } else {
          EXPECT_EQ(c.actual, 0.0);
        }
      }
    }
  }
}
