// Copyright 2026 The pstlab Authors
//
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

#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "pstlab/graph.hpp"
#include "pstlab/linalg.hpp"

namespace pstlab {

/// Assignment of vertices to cells 0..m-1. Cells are always numbered by their
/// smallest vertex, so two partitions with the same cells compare equal.
class Partition {
 public:
  /// Any labelling; labels are renumbered canonically.
  static Partition fromLabels(const std::vector<std::size_t>& labels);
  /// Cells must be disjoint, nonempty and cover 0..n-1.
  static Partition fromCells(std::size_t n, const std::vector<std::vector<Vertex>>& cells);
  static Partition singletons(std::size_t n);
  static Partition unit(std::size_t n);

  [[nodiscard]] std::size_t order() const { return cellOf_.size(); }
  [[nodiscard]] std::size_t cellCount() const { return cellCount_; }
  [[nodiscard]] std::size_t cellOf(Vertex v) const { return cellOf_.at(v); }
  [[nodiscard]] const std::vector<std::size_t>& labels() const { return cellOf_; }
  [[nodiscard]] std::vector<std::vector<Vertex>> cells() const;
  [[nodiscard]] std::vector<std::size_t> cellSizes() const;
  [[nodiscard]] bool isSingleton(Vertex v) const;
  /// Every cell of *this lies inside a cell of `coarser`.
  [[nodiscard]] bool refines(const Partition& coarser) const;

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<std::size_t> cellOf_;
  std::size_t cellCount_ = 0;
};

/// Q[x][k] = |V_k|^{-1/2} if x ∈ V_k, else 0.
struct NormalizedPartitionMatrix {
  Matrix entries;
  Partition partition;
};

NormalizedPartitionMatrix partitionMatrix(const Partition& p);

/// Recovers the partition described by a normalized partition matrix (e.g. a
/// Kronecker product of such matrices). Throws PreconditionError if some row
/// does not have exactly one nonzero or the values are not |V_k|^{-1/2}.
/// The result is canonically numbered, so its cell order may differ from the
/// column order of `q`.
Partition partitionFromMatrix(const Matrix& q, double tol = 1e-12);

struct EquitabilityWitness {
  Vertex vertex;     ///< first vertex of the offending cell
  Vertex other;      ///< vertex of the same cell with a different weight sum
  std::size_t cell;  ///< cell the two vertices disagree about
};

struct EquitabilityResult {
  bool equitable = true;
  std::optional<EquitabilityWitness> witness;
  explicit operator bool() const { return equitable; }
};

/// Weighted equitability: Σ_{y∈V_k} A[x][y] is constant over x ∈ V_j for all j, k.
EquitabilityResult isEquitable(const Graph& g, const Partition& p, double tol = 1e-9);

/// Coarsest equitable partition refining `initial`.
Partition refine(const Graph& g, const Partition& initial);

/// refine(G, {{a}, {b}, V∖{a,b}})
Partition seededPartition(const Graph& g, Vertex a, Vertex b);

struct QuotientResult {
  Graph quotient;
  Partition cellMap;
  Matrix cellWeights;  ///< d[j][k] = Σ_{y∈V_k} A[x][y] for x ∈ V_j
};

/// Weighted quotient with entries √(d_jk·d_kj) and loops d_jj. Throws
/// PreconditionError carrying the witness if `p` is not equitable.
QuotientResult quotient(const Graph& g, const Partition& p);

struct PartitionIdentityReport {
  double orthonormality;  ///< max |QᵀQ - I|
  double blockDiagonal;   ///< max |QQᵀ - blockdiag(|V_k|^{-1} J)|
  double commutator;      ///< max |QQᵀA - AQQᵀ|
  double quotientMatch;   ///< max |A(G/π) - QᵀAQ|
  [[nodiscard]] double worst() const;
};

PartitionIdentityReport verifyPartitionIdentities(const Graph& g, const Partition& p);

/// Hop distances from `source` on the support of nonzero off-diagonal weights;
/// unreachable vertices get SIZE_MAX.
std::vector<std::size_t> hopDistances(const Graph& g, Vertex source);

/// x ↦ (d_a(x), d_b(x)) is injective. Throws InputError on disconnected G.
bool distanceMinimal(const Graph& g, Vertex a, Vertex b);

}  // namespace pstlab
