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

#include <cstdint>
#include <optional>
#include <vector>

#include "pstlab/graph.hpp"

namespace pstlab {

/// image[u] = τ(u)
struct VertexPermutation {
  std::vector<Vertex> image;

  [[nodiscard]] bool isBijection() const;
  friend bool operator==(const VertexPermutation&, const VertexPermutation&) = default;
};

inline constexpr std::size_t kSymmetryOrderLimit = 64;
inline constexpr double kWeightTolerance = 1e-9;

/// A[τ(u)][τ(v)] == A[u][v] for all u, v (within tol).
bool isAutomorphism(const Graph& g, const VertexPermutation& p, double tol = kWeightTolerance);

struct AutomorphismGroup {
  std::vector<VertexPermutation> elements;  ///< in search order, at most `limit`
  std::uint64_t order = 0;                  ///< number of elements found
  bool complete = false;                    ///< order is exact
};

/// Individualization/refinement backtracking; deterministic order.
AutomorphismGroup automorphisms(const Graph& g, std::size_t limit = 1'000'000);

/// Some automorphism maps a to b.
std::optional<VertexPermutation> findSwap(const Graph& g, Vertex a, Vertex b);
bool existsSwap(const Graph& g, Vertex a, Vertex b);

/// Weight-preserving bijection G → H, if one exists.
std::optional<VertexPermutation> findIsomorphism(const Graph& g, const Graph& h);
bool isIsomorphic(const Graph& g, const Graph& h);

/// Triangles through each vertex on the 0/1 support of off-diagonal weights.
std::vector<std::size_t> triangleCensus(const Graph& g);
std::size_t triangleCount(const Graph& g);

}  // namespace pstlab
