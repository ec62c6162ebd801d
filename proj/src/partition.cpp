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

#include "pstlab/partition.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <queue>
#include <set>
#include <string>
#include <utility>

#include "pstlab/errors.hpp"

namespace pstlab {

Partition Partition::fromLabels(const std::vector<std::size_t>& labels) {
  Partition p;
  p.cellOf_.resize(labels.size());
  std::map<std::size_t, std::size_t> renumber;
  for (std::size_t v = 0; v < labels.size(); ++v) {
    auto [it, inserted] = renumber.emplace(labels[v], renumber.size());
    p.cellOf_[v] = it->second;
  }
  p.cellCount_ = renumber.size();
  return p;
}

Partition Partition::fromCells(std::size_t n, const std::vector<std::vector<Vertex>>& cells) {
  constexpr std::size_t kUnset = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> labels(n, kUnset);
  for (std::size_t c = 0; c < cells.size(); ++c) {
    if (cells[c].empty()) throw InputError("partition: empty cell");
    for (Vertex v : cells[c]) {
      if (v >= n) throw InputError("partition: vertex " + std::to_string(v) + " out of range");
      if (labels[v] != kUnset)
        throw InputError("partition: vertex " + std::to_string(v) + " appears twice");
      labels[v] = c;
    }
  }
  for (std::size_t v = 0; v < n; ++v)
    if (labels[v] == kUnset)
      throw InputError("partition: vertex " + std::to_string(v) + " is not covered");
  return fromLabels(labels);
}

Partition Partition::singletons(std::size_t n) {
  std::vector<std::size_t> labels(n);
  for (std::size_t v = 0; v < n; ++v) labels[v] = v;
  return fromLabels(labels);
}

Partition Partition::unit(std::size_t n) { return fromLabels(std::vector<std::size_t>(n, 0)); }

std::vector<std::vector<Vertex>> Partition::cells() const {
  std::vector<std::vector<Vertex>> out(cellCount_);
  for (Vertex v = 0; v < cellOf_.size(); ++v) out[cellOf_[v]].push_back(v);
  return out;
}

std::vector<std::size_t> Partition::cellSizes() const {
  std::vector<std::size_t> sizes(cellCount_, 0);
  for (std::size_t c : cellOf_) ++sizes[c];
  return sizes;
}

bool Partition::isSingleton(Vertex v) const { return cellSizes()[cellOf(v)] == 1; }

bool Partition::refines(const Partition& coarser) const {
  if (coarser.order() != order()) return false;
  std::vector<std::size_t> image(cellCount_, std::numeric_limits<std::size_t>::max());
  for (Vertex v = 0; v < order(); ++v) {
    auto& slot = image[cellOf_[v]];
    if (slot == std::numeric_limits<std::size_t>::max()) slot = coarser.cellOf(v);
    else if (slot != coarser.cellOf(v)) return false;
  }
  return true;
}

NormalizedPartitionMatrix partitionMatrix(const Partition& p) {
  const auto sizes = p.cellSizes();
  Matrix q(p.order(), p.cellCount());
  for (Vertex v = 0; v < p.order(); ++v)
    q(v, p.cellOf(v)) = 1.0 / std::sqrt(static_cast<double>(sizes[p.cellOf(v)]));
  return {std::move(q), p};
}

Partition partitionFromMatrix(const Matrix& q, double tol) {
  std::vector<std::size_t> column(q.rows());
  for (std::size_t x = 0; x < q.rows(); ++x) {
    std::size_t nonzeros = 0;
    for (std::size_t k = 0; k < q.cols(); ++k)
      if (std::abs(q(x, k)) > tol) {
        column[x] = k;
        ++nonzeros;
      }
    if (nonzeros != 1)
      throw InputError("partition matrix row " + std::to_string(x) +
                              " does not have exactly one nonzero");
  }
  std::vector<std::size_t> sizes(q.cols(), 0);
  for (std::size_t k : column) ++sizes[k];
  for (std::size_t k = 0; k < q.cols(); ++k)
    if (sizes[k] == 0)
      throw InputError("partition matrix column " + std::to_string(k) + " is empty");
  for (std::size_t x = 0; x < q.rows(); ++x) {
    const double expected = 1.0 / std::sqrt(static_cast<double>(sizes[column[x]]));
    if (std::abs(q(x, column[x]) - expected) > tol)
      throw InputError("partition matrix entry in row " + std::to_string(x) +
                              " is not |V_k|^{-1/2}");
  }
  return Partition::fromLabels(column);
}

namespace {

Matrix cellSums(const Graph& g, const Partition& p) {
  Matrix s(g.order(), p.cellCount());
  for (Vertex x = 0; x < g.order(); ++x)
    for (Vertex y = 0; y < g.order(); ++y) {
      const double w = g.weight(x, y);
      if (w != 0.0) s(x, p.cellOf(y)) += w;
    }
  return s;
}

void checkCovers(const Graph& g, const Partition& p) {
  if (p.order() != g.order())
    throw InputError("partition covers " + std::to_string(p.order()) + " vertices, graph has " +
                     std::to_string(g.order()));
}

}  // namespace

EquitabilityResult isEquitable(const Graph& g, const Partition& p, double tol) {
  checkCovers(g, p);
  const Matrix sums = cellSums(g, p);
  for (const auto& cell : p.cells()) {
    const Vertex first = cell.front();
    for (Vertex x : cell)
      for (std::size_t k = 0; k < p.cellCount(); ++k)
        if (std::abs(sums(x, k) - sums(first, k)) > tol)
          return {false, EquitabilityWitness{first, x, k}};
  }
  return {};
}

Partition refine(const Graph& g, const Partition& initial) {
  checkCovers(g, initial);
  Partition current = initial;
  const std::size_t n = g.order();
  while (true) {
    const Matrix sums = cellSums(g, current);
    using Signature = std::pair<std::size_t, std::vector<std::pair<std::size_t, long long>>>;
    std::map<Signature, std::size_t> ids;
    std::vector<std::size_t> labels(n);
    for (Vertex x = 0; x < n; ++x) {
      Signature sig{current.cellOf(x), {}};
      for (std::size_t k = 0; k < current.cellCount(); ++k) {
        const auto key = std::llround(sums(x, k) * 1e12);
        if (key != 0) sig.second.emplace_back(k, key);
      }
      labels[x] = ids.emplace(std::move(sig), ids.size()).first->second;
    }
    Partition next = Partition::fromLabels(labels);
    if (next.cellCount() == current.cellCount()) return next;
    current = std::move(next);
  }
}

Partition seededPartition(const Graph& g, Vertex a, Vertex b) {
  g.checkVertex(a);
  g.checkVertex(b);
  if (a == b) throw InputError("seededPartition: vertices must differ");
  std::vector<std::size_t> labels(g.order(), 2);
  labels[a] = 0;
  labels[b] = 1;
  return refine(g, Partition::fromLabels(labels));
}

QuotientResult quotient(const Graph& g, const Partition& p) {
  const auto eq = isEquitable(g, p);
  if (!eq) {
    const auto& w = *eq.witness;
    throw PreconditionError("partition is not equitable: vertices " + std::to_string(w.vertex) +
                            " and " + std::to_string(w.other) + " disagree on cell " +
                            std::to_string(w.cell));
  }
  const Matrix sums = cellSums(g, p);
  const std::size_t m = p.cellCount();
  const auto sizes = p.cellSizes();
  Matrix d(m, m);
  for (Vertex x = 0; x < g.order(); ++x)
    for (std::size_t k = 0; k < m; ++k) d(p.cellOf(x), k) += sums(x, k);
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t k = 0; k < m; ++k) d(j, k) /= static_cast<double>(sizes[j]);

  Matrix a(m, m);
  for (std::size_t j = 0; j < m; ++j) {
    a(j, j) = d(j, j);
    for (std::size_t k = j + 1; k < m; ++k) a(j, k) = a(k, j) = std::sqrt(d(j, k) * d(k, j));
  }
  std::string name = g.name().empty() ? "" : g.name() + "/π";
  return {Graph(std::move(a), std::move(name)), p, std::move(d)};
}

double PartitionIdentityReport::worst() const {
  return std::max({orthonormality, blockDiagonal, commutator, quotientMatch});
}

PartitionIdentityReport verifyPartitionIdentities(const Graph& g, const Partition& p) {
  const QuotientResult qr = quotient(g, p);
  const Matrix q = partitionMatrix(p).entries;
  const Matrix qt = q.transpose();
  const Matrix& a = g.adjacency();
  const Matrix qqt = q * qt;

  Matrix blocks(g.order(), g.order());
  const auto sizes = p.cellSizes();
  for (Vertex x = 0; x < g.order(); ++x)
    for (Vertex y = 0; y < g.order(); ++y)
      if (p.cellOf(x) == p.cellOf(y)) blocks(x, y) = 1.0 / static_cast<double>(sizes[p.cellOf(x)]);

  PartitionIdentityReport r{};
  r.orthonormality = maxAbsDiff(qt * q, Matrix::identity(p.cellCount()));
  r.blockDiagonal = maxAbsDiff(qqt, blocks);
  r.commutator = maxAbsDiff(qqt * a, a * qqt);
  r.quotientMatch = maxAbsDiff(qr.quotient.adjacency(), qt * a * q);
  return r;
}

std::vector<std::size_t> hopDistances(const Graph& g, Vertex source) {
  g.checkVertex(source);
  std::vector<std::size_t> dist(g.order(), std::numeric_limits<std::size_t>::max());
  std::queue<Vertex> q;
  dist[source] = 0;
  q.push(source);
  while (!q.empty()) {
    const Vertex u = q.front();
    q.pop();
    for (Vertex v = 0; v < g.order(); ++v)
      if (v != u && g.weight(u, v) != 0.0 && dist[v] == std::numeric_limits<std::size_t>::max()) {
        dist[v] = dist[u] + 1;
        q.push(v);
      }
  }
  return dist;
}

bool distanceMinimal(const Graph& g, Vertex a, Vertex b) {
  if (a == b) throw InputError("distanceMinimal: vertices must differ");
  if (!g.isConnected()) throw InputError("distanceMinimal: graph is disconnected");
  const auto da = hopDistances(g, a);
  const auto db = hopDistances(g, b);
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (Vertex x = 0; x < g.order(); ++x)
    if (!seen.emplace(da[x], db[x]).second) return false;
  return true;
}

}  // namespace pstlab
