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

#include <algorithm>
#include <cmath>
#include <functional>
#include <optional>
#include <random>

#include "pstlab/graph.hpp"
#include "pstlab/partition.hpp"

namespace testing {

// Random connected weighted graph: a random spanning tree plus extra edges.
inline pstlab::Graph randomConnected(std::mt19937_64& rng, std::size_t n, bool weighted,
                                     double density = 0.4) {
  pstlab::Matrix a(n, n);
  std::uniform_real_distribution<double> w(0.2, 3.0);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  auto weight = [&] { return weighted ? w(rng) : 1.0; };
  for (std::size_t v = 1; v < n; ++v) {
    const std::size_t u = std::uniform_int_distribution<std::size_t>(0, v - 1)(rng);
    a(u, v) = a(v, u) = weight();
  }
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (a(u, v) == 0.0 && coin(rng) < density) a(u, v) = a(v, u) = weight();
  return pstlab::Graph(std::move(a));
}

inline double maxAbsDiff(const pstlab::Graph& g, const pstlab::Graph& h) {
  return pstlab::maxAbsDiff(g.adjacency(), h.adjacency());
}

inline bool oracleEquitable(const pstlab::Graph& g, const std::vector<std::size_t>& label, std::size_t cells) {
  const std::size_t n = g.order();
  for (std::size_t j = 0; j < cells; ++j)
    for (std::size_t k = 0; k < cells; ++k) {
      std::optional<double> seen;
      for (pstlab::Vertex x = 0; x < n; ++x) {
        if (label[x] != j) continue;
        double sum = 0;
        for (pstlab::Vertex y = 0; y < n; ++y)
          if (label[y] == k) sum += g.weight(x, y);
        if (seen && std::abs(*seen - sum) > 1e-9) return false;
        seen = sum;
      }
    }
  return true;
}

// Coarsest equitable partition refining `seed` by enumerating restricted
// growth strings.
inline pstlab::Partition bruteForceCoarsest(const pstlab::Graph& g, const pstlab::Partition& seed) {
  const std::size_t n = g.order();
  std::vector<std::size_t> label(n, 0);
  std::optional<std::vector<std::size_t>> best;
  std::size_t bestCells = n + 1;
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t v, std::size_t used) {
    if (v == n) {
      if (used >= bestCells) return;
      for (pstlab::Vertex x = 0; x < n; ++x)
        for (pstlab::Vertex y = x + 1; y < n; ++y)
          if (label[x] == label[y] && seed.cellOf(x) != seed.cellOf(y)) return;
      if (oracleEquitable(g, label, used)) {
        best = label;
        bestCells = used;
      }
      return;
    }
    for (std::size_t c = 0; c <= used && c < n; ++c) {
      label[v] = c;
      rec(v + 1, std::max(used, c + 1));
    }
  };
  rec(0, 0);
  return pstlab::Partition::fromLabels(*best);
}

}  // namespace testing
