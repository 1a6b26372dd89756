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

#ifndef INHOMSAT_KERNEL_HPP_
#define INHOMSAT_KERNEL_HPP_

// Piecewise-constant clause kernels on the signed ground space
// K = Lambda x {+,-}.
//
// Lambda is discretized into t types with weights gamma_0..gamma_{t-1}.
// Every type carries two signed blocks, enumerated in the fixed order
//   (type 0,+), (type 0,-), (type 1,+), (type 1,-), ...
// so block index = 2 * type + sign and negation flips the low bit. A block
// has measure gamma_type / 2.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace inhomsat {

enum class Sign : std::uint8_t { kPlus = 0, kMinus = 1 };

constexpr Sign Negate(Sign s) {
  return s == Sign::kPlus ? Sign::kMinus : Sign::kPlus;
}
constexpr char SignChar(Sign s) { return s == Sign::kPlus ? '+' : '-'; }

struct SignedBlock {
  std::size_t type_index = 0;
  Sign sign = Sign::kPlus;

  constexpr std::size_t index() const {
    return 2 * type_index + static_cast<std::size_t>(sign);
  }
  static constexpr SignedBlock FromIndex(std::size_t block) {
    return {block / 2, (block & 1U) ? Sign::kMinus : Sign::kPlus};
  }
  friend constexpr bool operator==(SignedBlock, SignedBlock) = default;
};

constexpr std::size_t NegateBlock(std::size_t block) { return block ^ 1U; }

// Human readable block name, e.g. "(t0,+)" or "(hub,-)".
class TypeSpace;
std::string BlockName(const TypeSpace& space, std::size_t block);

// Finite discretization of (Lambda, lambda). Construction does not validate;
// use ValidateKernel / TypeSpace::Problems for diagnostics.
class TypeSpace {
 public:
  TypeSpace() = default;
  TypeSpace(std::vector<std::string> labels, std::vector<double> weights);

  // m types "t0".."t{m-1}" of weight 1/m each.
  static TypeSpace Uniform(std::size_t m);

  std::size_t num_types() const { return weights_.size(); }
  std::size_t num_blocks() const { return 2 * weights_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<double>& weights() const { return weights_; }
  double weight(std::size_t type) const { return weights_[type]; }

  // kappa(block) = gamma_type / 2.
  double block_measure(std::size_t block) const {
    return 0.5 * weights_[block / 2];
  }

  // Index of the type with the given label, or num_types() if absent.
  std::size_t FindLabel(const std::string& label) const;

  // Empty when the space is well formed.
  std::vector<std::string> Problems() const;

  friend bool operator==(const TypeSpace&, const TypeSpace&) = default;

 private:
  std::vector<std::string> labels_;
  std::vector<double> weights_;
};

// Dense row-major square matrix of doubles.
class SquareMatrix {
 public:
  SquareMatrix() = default;
  explicit SquareMatrix(std::size_t dim, double fill = 0.0)
      : dim_(dim), data_(dim * dim, fill) {}
  SquareMatrix(std::size_t dim, std::vector<double> row_major);

  std::size_t dim() const { return dim_; }
  double& operator()(std::size_t r, std::size_t c) { return data_[r * dim_ + c]; }
  double operator()(std::size_t r, std::size_t c) const {
    return data_[r * dim_ + c];
  }
  const std::vector<double>& data() const { return data_; }
  double max_entry() const;

  friend bool operator==(const SquareMatrix&, const SquareMatrix&) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<double> data_;
};

// Symmetric nonnegative clause kernel W over signed blocks.
struct BlockKernel {
  TypeSpace space;
  SquareMatrix values;  // num_blocks x num_blocks

  double operator()(std::size_t a, std::size_t b) const { return values(a, b); }
  friend bool operator==(const BlockKernel&, const BlockKernel&) = default;
};

// Nonnegative, not necessarily symmetric, kernel over signed blocks.
struct BlockDigraphon {
  TypeSpace space;
  SquareMatrix values;

  double operator()(std::size_t a, std::size_t b) const { return values(a, b); }
  friend bool operator==(const BlockDigraphon&, const BlockDigraphon&) = default;
};

// Sorted set of block indices inside a ground space of `dim` blocks.
class BlockSet {
 public:
  BlockSet() = default;
  BlockSet(std::size_t dim, std::vector<std::size_t> members);

  static BlockSet Full(std::size_t dim);
  static BlockSet Empty(std::size_t dim) { return BlockSet(dim, {}); }

  std::size_t dim() const { return dim_; }
  const std::vector<std::size_t>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  bool contains(std::size_t block) const;
  double measure(const TypeSpace& space) const;

  BlockSet Union(const BlockSet& other) const;
  // {negate(b) : b in this}.
  BlockSet Negated() const;

  friend bool operator==(const BlockSet&, const BlockSet&) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<std::size_t> members_;
};

struct KernelViolation {
  enum class Kind { kBadWeights, kAsymmetry, kNegativeEntry, kNonFinite, kShape };
  Kind kind;
  std::string message;
  std::size_t row = 0;  // block coordinates when relevant
  std::size_t col = 0;
};

struct KernelDiagnostics {
  std::vector<KernelViolation> violations;
  bool ok() const { return violations.empty(); }
  std::string Summary() const;
};

KernelDiagnostics ValidateKernel(const BlockKernel& w);

// Throws std::invalid_argument listing the violations.
void RequireValid(const BlockKernel& w);

// Builds a kernel from a row-major matrix over blocks.
BlockKernel MakeKernel(TypeSpace space, std::vector<double> row_major);

// One-type kernel with blocks A = W(+,+), B = W(+,-) = W(-,+), C = W(-,-).
BlockKernel SingleTypeKernel(double a, double b, double c);

// W ≡ c on a single type.
BlockKernel ConstantKernel(double c);

// Gamma(x, y) = W(not x, y).
BlockDigraphon ImplicationDigraphon(const BlockKernel& w);

// Entries inside set x set kept, everything else zeroed.
BlockDigraphon Restrict(const BlockDigraphon& gamma, const BlockSet& set);

// sum_{a,b} kappa(a) kappa(b) W(a,b).
double L1Norm(const BlockKernel& w);

BlockKernel Scale(const BlockKernel& w, double c);

// 0/1 indicator of positivity.
BlockDigraphon IndicatorDigraphon(const BlockDigraphon& gamma);

struct PowerLawExponents {
  double alpha = 0;  // (+,+) slice: x^-alpha y^-alpha
  double beta = 0;   // (-,-) slice: (1-x)^-beta (1-y)^-beta
  double gamma = 0;  // (+,-) slice: x^-gamma on the + coordinate
  double delta = 0;  // (+,-) slice: y^-delta on the - coordinate
};

// Cell-averaged discretization of the separable scale-free kernel onto m
// equal cells of (0,1).
BlockKernel PowerLawKernel(const PowerLawExponents& exponents, std::size_t m);

}  // namespace inhomsat

#endif  // INHOMSAT_KERNEL_HPP_
