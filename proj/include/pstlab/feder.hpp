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
#include <map>
#include <vector>

#include "pstlab/graph.hpp"
#include "pstlab/partition.hpp"

namespace pstlab {

/// Boson counts per vertex of the primary graph.
struct OccupationVector {
  std::vector<unsigned> counts;

  [[nodiscard]] unsigned total() const;
  friend auto operator<=>(const OccupationVector&, const OccupationVector&) = default;
};

/// All occupation vectors of k bosons on n vertices, in descending
/// lexicographic order of counts (k·e_0 first). This coincides with the
/// lexicographic order of sorted k-tuples.
std::vector<OccupationVector> occupationVectors(std::size_t n, unsigned k);

/// Secondary graph F(G,k) with the index of each occupation vector.
struct FederGraph {
  Graph graph;
  std::vector<OccupationVector> vertices;
  std::map<OccupationVector, std::size_t> index;
};

/// Requires a loop-free 0/1 primary graph. Edge n -> n - e_u + e_v has weight
/// sqrt(n_u (n_v + 1)) for every edge uv of G with n_u >= 1.
FederGraph federGraph(const Graph& g, unsigned k);

/// Product-space guard: |V|^k must not exceed this.
inline constexpr std::size_t kProductSpaceLimit = 4096;

/// Digits of a product-space index, left factor major.
std::vector<Vertex> tupleOf(std::size_t index, std::size_t n, unsigned k);
std::size_t indexOf(const std::vector<Vertex>& tuple, std::size_t n);

/// Partition of V(G)^k into S_k orbits; cell c has sorted tuple keys[c].
struct OrbitPartition {
  Partition partition;
  std::vector<std::vector<Vertex>> keys;
};

OrbitPartition orbitPartition(const Graph& g, unsigned k);

struct SymmetrizerReport {
  double symmetrizerVsProjector;  ///< max |𝕊 - QQᵀ|
  double commutator;              ///< max |𝕊A - A𝕊|, A = A(G^□k)
  bool explicitPermutations;      ///< 𝕊 summed over all k! permutations
};

/// 𝕊 is summed over S_k explicitly for k <= 5 and built by orbit averaging
/// up to k = 8.
SymmetrizerReport symmetrizerCheck(const Graph& g, unsigned k);

struct IsomorphismCheck {
  bool matches;
  double deviation;
};

/// Compares G^□k/π (S_k orbits) with F(G,k) through φ(O_x) = n[x].
IsomorphismCheck verifyFederIso(const Graph& g, unsigned k, double tol = 1e-12);

struct CompositionCheck {
  bool matches;
  double residual;
  Partition composed;     ///< partition of G^□(m1·m2) with matrix Q₁^{⊗m2}·Q₂
  bool composedEquitable;
};

/// (G^□m1/π1)^□m2/π2 against G^□(m1·m2)/π3 with Q₃ = Q₁^{⊗m2}·Q₂.
CompositionCheck composeQuotients(const Graph& g, unsigned m1, const Partition& pi1, unsigned m2,
                                  const Partition& pi2, double tol = 1e-10);

struct QuotientFactor {
  Graph graph;
  Partition partition;
};

/// □_k (G_k/π_k) against (□_k G_k)/π with Q = ⊗_k Q_k.
CompositionCheck productOfQuotients(const std::vector<QuotientFactor>& factors,
                                    double tol = 1e-10);

struct PstFactor {
  Graph graph;
  Vertex a;
  Vertex b;
};

/// Checks each factor (PST when a != b, periodicity when a == b) at t, then
/// PST on the product between the tuple vertices. Throws PreconditionError
/// naming the first factor that fails its own check.
bool productPst(const std::vector<PstFactor>& factors, double t, double tol = 1e-8);

}  // namespace pstlab
