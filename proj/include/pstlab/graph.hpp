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
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "pstlab/linalg.hpp"

namespace pstlab {

using Vertex = std::size_t;

/// Undirected weighted graph on vertices 0..n-1 backed by a dense symmetric
/// adjacency matrix. Diagonal entries are loop weights (stored once, not doubled).
class Graph {
 public:
  /// Validates symmetry (exact), finiteness, non-negativity and n >= 1.
  explicit Graph(Matrix adjacency, std::string name = {},
                 std::vector<std::string> vertexLabels = {});

  /// Edgeless graph on n vertices.
  static Graph empty(std::size_t n, std::string name = {});

  [[nodiscard]] std::size_t order() const { return adjacency_.rows(); }
  [[nodiscard]] const Matrix& adjacency() const { return adjacency_; }
  [[nodiscard]] double weight(Vertex u, Vertex v) const { return adjacency_(u, v); }
  [[nodiscard]] const std::string& name() const { return name_; }
  [[nodiscard]] const std::vector<std::string>& vertexLabels() const { return labels_; }

  [[nodiscard]] Graph withName(std::string name) const;

  /// Number of off-diagonal nonzero pairs u < v.
  [[nodiscard]] std::size_t edgeCount() const;
  /// Sum of row u (loop counted once).
  [[nodiscard]] double rowSum(Vertex u) const;
  /// True iff every off-diagonal weight is 0 or 1 and all loops are 0.
  [[nodiscard]] bool isSimple() const;
  [[nodiscard]] bool isConnected() const;

  void checkVertex(Vertex v) const;

  friend bool operator==(const Graph& a, const Graph& b) { return a.adjacency_ == b.adjacency_; }

 private:
  Matrix adjacency_;
  std::string name_;
  std::vector<std::string> labels_;
};

/// Circulant connection set on Z_n; stored as residues in 1..n-1, sorted.
struct CirculantSpec {
  std::size_t n = 0;
  std::vector<std::size_t> connection;

  /// Builds {±s : s in offsets} reduced mod n.
  static CirculantSpec symmetric(std::size_t n, const std::vector<long long>& offsets);
  void validate() const;
};

/// Cayley graph X(Z_2^d, S); generators are d-bit integers (bit d-1 is the
/// leftmost character of the bit-string form).
struct CubelikeSpec {
  unsigned d = 0;
  std::vector<std::uint32_t> generators;

  static constexpr unsigned kMaxDimension = 20;
  void validate() const;
};

namespace family {
struct Complete { std::size_t n; };
struct Path { std::size_t n; };
struct Cycle { std::size_t n; };
struct Hypercube { unsigned d; };
struct Circulant { CirculantSpec spec; };
struct Cubelike { CubelikeSpec spec; };
struct WeightedP4 { double a; double b; };
struct WeightedP5 { double a; double b; };
struct ChristandlPath { std::size_t n; };
struct GodsilFamily {
  unsigned m;
  std::optional<CirculantSpec> connection;
};
}  // namespace family

using GraphFamilySpec =
    std::variant<family::Complete, family::Path, family::Cycle, family::Hypercube,
                 family::Circulant, family::Cubelike, family::WeightedP4, family::WeightedP5,
                 family::ChristandlPath, family::GodsilFamily>;

Graph build(const GraphFamilySpec& spec);

/// K_1 + A_n∘B_n + K_1 with its two apex vertices.
struct GodsilGraph {
  Graph graph;
  Vertex aVertex;
  Vertex bVertex;
  std::size_t n;           ///< size of each middle layer
  CirculantSpec inner;     ///< connection set of the layer next to aVertex
  CirculantSpec outer;     ///< connection set of the layer next to bVertex
  CirculantSpec crossing;  ///< connection between the two layers
};

/// Layout: aVertex = 0, first layer 1..n, second layer n+1..2n, bVertex = 2n+1.
GodsilGraph godsilFamily(unsigned m, const std::optional<CirculantSpec>& connection = {});

/// Adjacency A(G)⊗I + I⊗A(H); vertex (g,h) has index g·|V(H)| + h.
Graph cartesianProduct(const Graph& g, const Graph& h);
/// k-fold Cartesian power, k >= 1.
Graph cartesianPower(const Graph& g, unsigned k);
/// Disjoint union plus every unit-weight edge between the two parts.
Graph join(const Graph& g, const Graph& h);
Graph disjointUnion(const Graph& g, const Graph& h);
/// Unit edge wherever the off-diagonal weight is 0; diagonal zeroed.
Graph complement(const Graph& g);
Graph scale(const Graph& g, double c);
/// Graph with vertex v removed (remaining vertices keep their relative order).
Graph deleteVertex(const Graph& g, Vertex v);
Graph inducedSubgraph(const Graph& g, const std::vector<Vertex>& vertices);

}  // namespace pstlab
