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

#include "inhomsat/kernel.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace inhomsat {

std::string BlockName(const TypeSpace& space, std::size_t block) {
  const SignedBlock sb = SignedBlock::FromIndex(block);
  std::string label = sb.type_index < space.labels().size()
                          ? space.labels()[sb.type_index]
                          : "t" + std::to_string(sb.type_index);
  return "(" + label + "," + SignChar(sb.sign) + ")";
}

TypeSpace::TypeSpace(std::vector<std::string> labels,
                     std::vector<double> weights)
    : labels_(std::move(labels)), weights_(std::move(weights)) {}

TypeSpace TypeSpace::Uniform(std::size_t m) {
  if (m == 0) throw std::invalid_argument("type space needs at least one type");
  std::vector<std::string> labels;
  labels.reserve(m);
  for (std::size_t i = 0; i < m; ++i) labels.push_back("t" + std::to_string(i));
  return TypeSpace(std::move(labels), std::vector<double>(m, 1.0 / double(m)));
}

std::size_t TypeSpace::FindLabel(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  return static_cast<std::size_t>(it - labels_.begin());
}

std::vector<std::string> TypeSpace::Problems() const {
  std::vector<std::string> out;
  if (weights_.empty()) out.push_back("type space is empty");
  if (labels_.size() != weights_.size()) {
    out.push_back("labels/weights length mismatch");
  }
  std::set<std::string> seen;
  for (const auto& l : labels_) {
    if (!seen.insert(l).second) out.push_back("duplicate type label '" + l + "'");
  }
  double sum = 0;
  for (std::size_t i = 0; i < weights_.size(); ++i) {
    const double w = weights_[i];
    if (!std::isfinite(w) || w <= 0) {
      std::ostringstream os;
      os << "weight of type " << i << " is " << w << ", must be > 0";
      out.push_back(os.str());
    }
    sum += w;
  }
  if (!weights_.empty() && std::abs(sum - 1.0) > 1e-12) {
    std::ostringstream os;
    os.precision(17);
    os << "weights sum " << sum << ", must be 1";
    out.push_back(os.str());
  }
  return out;
}

SquareMatrix::SquareMatrix(std::size_t dim, std::vector<double> row_major)
    : dim_(dim), data_(std::move(row_major)) {
  if (data_.size() != dim * dim) {
    throw std::invalid_argument("matrix data size does not match dimension");
  }
}

double SquareMatrix::max_entry() const {
  double m = 0;
  for (double v : data_) m = std::max(m, v);
  return m;
}

BlockSet::BlockSet(std::size_t dim, std::vector<std::size_t> members)
    : dim_(dim), members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  if (!members_.empty() && members_.back() >= dim_) {
    throw std::invalid_argument("block index out of range");
  }
}

BlockSet BlockSet::Full(std::size_t dim) {
  std::vector<std::size_t> all(dim);
  std::iota(all.begin(), all.end(), std::size_t{0});
  return BlockSet(dim, std::move(all));
}

bool BlockSet::contains(std::size_t block) const {
  return std::binary_search(members_.begin(), members_.end(), block);
}

double BlockSet::measure(const TypeSpace& space) const {
  double m = 0;
  for (std::size_t b : members_) m += space.block_measure(b);
  return m;
}

BlockSet BlockSet::Union(const BlockSet& other) const {
  if (other.dim_ != dim_) throw std::invalid_argument("block set dimension mismatch");
  std::vector<std::size_t> merged = members_;
  merged.insert(merged.end(), other.members_.begin(), other.members_.end());
  return BlockSet(dim_, std::move(merged));
}

BlockSet BlockSet::Negated() const {
  std::vector<std::size_t> neg;
  neg.reserve(members_.size());
  for (std::size_t b : members_) neg.push_back(NegateBlock(b));
  return BlockSet(dim_, std::move(neg));
}

std::string KernelDiagnostics::Summary() const {
  if (ok()) return "ok";
  std::ostringstream os;
  for (std::size_t i = 0; i < violations.size(); ++i) {
    if (i) os << "; ";
    os << violations[i].message;
  }
  return os.str();
}

KernelDiagnostics ValidateKernel(const BlockKernel& w) {
  KernelDiagnostics d;
  for (auto& p : w.space.Problems()) {
    d.violations.push_back({KernelViolation::Kind::kBadWeights, std::move(p)});
  }
  const std::size_t dim = w.space.num_blocks();
  if (w.values.dim() != dim) {
    d.violations.push_back({KernelViolation::Kind::kShape,
                            "matrix is " + std::to_string(w.values.dim()) +
                                "x" + std::to_string(w.values.dim()) +
                                ", expected " + std::to_string(dim) + "x" +
                                std::to_string(dim)});
    return d;
  }
  for (std::size_t a = 0; a < dim; ++a) {
    for (std::size_t b = 0; b < dim; ++b) {
      const double v = w.values(a, b);
      if (!std::isfinite(v)) {
        d.violations.push_back({KernelViolation::Kind::kNonFinite,
                                "non-finite entry at " + BlockName(w.space, a) +
                                    "x" + BlockName(w.space, b),
                                a, b});
      } else if (v < 0) {
        d.violations.push_back({KernelViolation::Kind::kNegativeEntry,
                                "negative entry at " + BlockName(w.space, a) +
                                    "x" + BlockName(w.space, b),
                                a, b});
      }
      if (a < b && v != w.values(b, a)) {
        d.violations.push_back({KernelViolation::Kind::kAsymmetry,
                                "asymmetry at " + BlockName(w.space, a) + "x" +
                                    BlockName(w.space, b) + " vs " +
                                    BlockName(w.space, b) + "x" +
                                    BlockName(w.space, a),
                                a, b});
      }
    }
  }
  return d;
}

void RequireValid(const BlockKernel& w) {
  const KernelDiagnostics d = ValidateKernel(w);
  if (!d.ok()) throw std::invalid_argument("invalid kernel: " + d.Summary());
}

BlockKernel MakeKernel(TypeSpace space, std::vector<double> row_major) {
  const std::size_t dim = space.num_blocks();
  return BlockKernel{std::move(space), SquareMatrix(dim, std::move(row_major))};
}

BlockKernel SingleTypeKernel(double a, double b, double c) {
  return MakeKernel(TypeSpace::Uniform(1), {a, b, b, c});
}

BlockKernel ConstantKernel(double c) { return SingleTypeKernel(c, c, c); }

BlockDigraphon ImplicationDigraphon(const BlockKernel& w) {
  RequireValid(w);
  const std::size_t dim = w.space.num_blocks();
  BlockDigraphon g{w.space, SquareMatrix(dim)};
  for (std::size_t x = 0; x < dim; ++x) {
    for (std::size_t y = 0; y < dim; ++y) {
      g.values(x, y) = w.values(NegateBlock(x), y);
    }
  }
  return g;
}

BlockDigraphon Restrict(const BlockDigraphon& gamma, const BlockSet& set) {
  if (set.dim() != gamma.values.dim()) {
    throw std::invalid_argument("block set dimension mismatch");
  }
  BlockDigraphon out{gamma.space, SquareMatrix(gamma.values.dim())};
  for (std::size_t x : set.members()) {
    for (std::size_t y : set.members()) out.values(x, y) = gamma.values(x, y);
  }
  return out;
}

double L1Norm(const BlockKernel& w) {
  RequireValid(w);
  const std::size_t dim = w.space.num_blocks();
  double s = 0;
  for (std::size_t a = 0; a < dim; ++a) {
    for (std::size_t b = 0; b < dim; ++b) {
      s += w.space.block_measure(a) * w.space.block_measure(b) * w.values(a, b);
    }
  }
  return s;
}

BlockKernel Scale(const BlockKernel& w, double c) {
  if (!std::isfinite(c) || c < 0) {
    throw std::invalid_argument("scale factor must be finite and >= 0");
  }
  BlockKernel out = w;
  std::vector<double> data = w.values.data();
  for (double& v : data) v *= c;
  out.values = SquareMatrix(w.values.dim(), std::move(data));
  return out;
}

BlockDigraphon IndicatorDigraphon(const BlockDigraphon& gamma) {
  BlockDigraphon out = gamma;
  std::vector<double> data = gamma.values.data();
  for (double& v : data) v = v > 0 ? 1.0 : 0.0;
  out.values = SquareMatrix(gamma.values.dim(), std::move(data));
  return out;
}

namespace {

// Mean of x^-a over [lo, hi] via the antiderivative x^(1-a)/(1-a).
double CellMeanOfPower(double a, double lo, double hi) {
  if (a == 0) return 1.0;
  const double e = 1.0 - a;
  return (std::pow(hi, e) - std::pow(lo, e)) / (e * (hi - lo));
}

}  // namespace

BlockKernel PowerLawKernel(const PowerLawExponents& ex, std::size_t m) {
  for (double e : {ex.alpha, ex.beta, ex.gamma, ex.delta}) {
    if (!(e >= 0 && e < 1)) {
      throw std::invalid_argument("power-law exponents must lie in [0,1)");
    }
  }
  if (m == 0) throw std::invalid_argument("grid size must be >= 1");
  TypeSpace space = TypeSpace::Uniform(m);
  std::vector<double> plus_alpha(m), minus_beta(m), plus_gamma(m), minus_delta(m);
  for (std::size_t i = 0; i < m; ++i) {
    const double lo = double(i) / double(m);
    const double hi = double(i + 1) / double(m);
    plus_alpha[i] = CellMeanOfPower(ex.alpha, lo, hi);
    plus_gamma[i] = CellMeanOfPower(ex.gamma, lo, hi);
    minus_delta[i] = CellMeanOfPower(ex.delta, lo, hi);
    // (1-x)^-beta on [lo,hi] is y^-beta on [1-hi, 1-lo].
    minus_beta[i] = CellMeanOfPower(ex.beta, 1.0 - hi, 1.0 - lo);
  }
  const std::size_t dim = 2 * m;
  SquareMatrix v(dim);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      const std::size_t ip = 2 * i, im = 2 * i + 1;
      const std::size_t jp = 2 * j, jm = 2 * j + 1;
      v(ip, jp) = plus_alpha[i] * plus_alpha[j];
      v(im, jm) = minus_beta[i] * minus_beta[j];
      v(ip, jm) = plus_gamma[i] * minus_delta[j];
      v(jm, ip) = v(ip, jm);
    }
  }
  return BlockKernel{std::move(space), std::move(v)};
}

}  // namespace inhomsat
