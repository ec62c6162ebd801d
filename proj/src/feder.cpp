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

#include "pstlab/feder.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "pstlab/errors.hpp"
#include "pstlab/walk.hpp"

namespace pstlab {

unsigned OccupationVector::total() const {
  return std::accumulate(counts.begin(), counts.end(), 0u);
}

namespace {

void enumerate(std::size_t n, unsigned remaining, std::vector<unsigned>& prefix,
               std::vector<OccupationVector>& out) {
  if (prefix.size() + 1 == n) {
    prefix.push_back(remaining);
    out.push_back({prefix});
    prefix.pop_back();
    return;
  }
  for (unsigned c = remaining + 1; c-- > 0;) {
    prefix.push_back(c);
    enumerate(n, remaining - c, prefix, out);
    prefix.pop_back();
  }
}

std::size_t productSize(std::size_t n, unsigned k) {
  std::size_t size = 1;
  for (unsigned i = 0; i < k; ++i) {
    size *= n;
    if (size > kProductSpaceLimit)
      throw NumericError("product space |V|^k exceeds the " +
                         std::to_string(kProductSpaceLimit) + "-vertex guard");
  }
  return size;
}

OccupationVector countsOf(const std::vector<Vertex>& tuple, std::size_t n) {
  OccupationVector occ{std::vector<unsigned>(n, 0)};
  for (Vertex x : tuple) ++occ.counts[x];
  return occ;
}

}  // namespace

std::vector<OccupationVector> occupationVectors(std::size_t n, unsigned k) {
  if (n == 0) throw InputError("occupationVectors: need at least one vertex");
  std::vector<OccupationVector> out;
  std::vector<unsigned> prefix;
  enumerate(n, k, prefix, out);
  return out;
}

FederGraph federGraph(const Graph& g, unsigned k) {
  if (k == 0) throw InputError("federGraph: k must be >= 1");
  if (!g.isSimple())
    throw InputError("federGraph: primary graph must be unweighted (0/1) and loop-free");
  const std::size_t n = g.order();

  FederGraph out{Graph::empty(1), occupationVectors(n, k), {}};
  if (out.vertices.size() > kProductSpaceLimit)
    throw NumericError("federGraph: secondary graph exceeds the size guard");
  for (std::size_t i = 0; i < out.vertices.size(); ++i) out.index.emplace(out.vertices[i], i);

  const std::size_t m = out.vertices.size();
  Matrix adj(m, m);
  std::vector<bool> assigned(m * m, false);
  for (std::size_t i = 0; i < m; ++i) {
    const auto& occ = out.vertices[i];
    for (Vertex u = 0; u < n; ++u) {
      if (occ.counts[u] == 0) continue;
      for (Vertex v = 0; v < n; ++v) {
        if (v == u || g.weight(u, v) == 0.0) continue;
        OccupationVector next = occ;
        --next.counts[u];
        ++next.counts[v];
        const std::size_t j = out.index.at(next);
        const double w = std::sqrt(static_cast<double>(occ.counts[u] * (occ.counts[v] + 1)));
        if (assigned[j * m + i] && adj(j, i) != w)
          throw NumericError("federGraph: edge weight rule is not symmetric");
        adj(i, j) = w;
        assigned[i * m + j] = true;
      }
    }
  }
  // Both directions have been written with identical values; make it explicit.
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      if (adj(i, j) != adj(j, i)) throw NumericError("federGraph: asymmetric secondary graph");
  std::string name = g.name().empty() ? "" : "F(" + g.name() + "," + std::to_string(k) + ")";
  out.graph = Graph(std::move(adj), std::move(name));
  return out;
}

std::vector<Vertex> tupleOf(std::size_t index, std::size_t n, unsigned k) {
  std::vector<Vertex> t(k);
  for (unsigned i = k; i-- > 0;) {
    t[i] = index % n;
    index /= n;
  }
  return t;
}

std::size_t indexOf(const std::vector<Vertex>& tuple, std::size_t n) {
  std::size_t idx = 0;
  for (Vertex x : tuple) idx = idx * n + x;
  return idx;
}

OrbitPartition orbitPartition(const Graph& g, unsigned k) {
  if (k == 0) throw InputError("orbitPartition: k must be >= 1");
  const std::size_t n = g.order();
  const std::size_t size = productSize(n, k);
  std::map<std::vector<Vertex>, std::size_t> cellOfKey;
  std::vector<std::size_t> labels(size);
  OrbitPartition out{Partition::unit(1), {}};
  for (std::size_t x = 0; x < size; ++x) {
    auto key = tupleOf(x, n, k);
    std::sort(key.begin(), key.end());
    auto [it, inserted] = cellOfKey.emplace(key, out.keys.size());
    if (inserted) out.keys.push_back(std::move(key));
    labels[x] = it->second;
  }
  // Keys are discovered in order of their smallest member, matching the
  // canonical numbering of Partition.
  out.partition = Partition::fromLabels(labels);
  return out;
}

SymmetrizerReport symmetrizerCheck(const Graph& g, unsigned k) {
  if (k == 0 || k > 8) throw InputError("symmetrizerCheck: k must be in 1..8");
  const std::size_t n = g.order();
  const std::size_t size = productSize(n, k);
  const OrbitPartition orbits = orbitPartition(g, k);
  Matrix sym(size, size);
  const bool explicitSum = k <= 5;
  if (explicitSum) {
    std::vector<unsigned> sigma(k);
    std::iota(sigma.begin(), sigma.end(), 0u);
    double factorial = 1.0;
    for (unsigned i = 2; i <= k; ++i) factorial *= i;
    do {
      for (std::size_t x = 0; x < size; ++x) {
        const auto tx = tupleOf(x, n, k);
        std::vector<Vertex> permuted(k);
        for (unsigned i = 0; i < k; ++i) permuted[i] = tx[sigma[i]];
        sym(x, indexOf(permuted, n)) += 1.0 / factorial;
      }
    } while (std::next_permutation(sigma.begin(), sigma.end()));
  } else {
    const auto sizes = orbits.partition.cellSizes();
    for (std::size_t x = 0; x < size; ++x)
      for (std::size_t y = 0; y < size; ++y)
        if (orbits.partition.cellOf(x) == orbits.partition.cellOf(y))
          sym(x, y) = 1.0 / static_cast<double>(sizes[orbits.partition.cellOf(x)]);
  }
  const Matrix q = partitionMatrix(orbits.partition).entries;
  const Matrix a = cartesianPower(g, k).adjacency();
  return {maxAbsDiff(sym, q * q.transpose()), maxAbsDiff(sym * a, a * sym), explicitSum};
}

IsomorphismCheck verifyFederIso(const Graph& g, unsigned k, double tol) {
  const FederGraph feder = federGraph(g, k);
  const OrbitPartition orbits = orbitPartition(g, k);
  const QuotientResult q = quotient(cartesianPower(g, k), orbits.partition);
  const std::size_t m = orbits.keys.size();
  if (m != feder.vertices.size()) return {false, INFINITY};
  std::vector<std::size_t> phi(m);
  for (std::size_t c = 0; c < m; ++c) phi[c] = feder.index.at(countsOf(orbits.keys[c], g.order()));
  double dev = 0.0;
  for (std::size_t c1 = 0; c1 < m; ++c1)
    for (std::size_t c2 = 0; c2 < m; ++c2)
      dev = std::max(dev, std::abs(q.quotient.weight(c1, c2) - feder.graph.weight(phi[c1], phi[c2])));
  return {dev < tol, dev};
}

CompositionCheck composeQuotients(const Graph& g, unsigned m1, const Partition& pi1, unsigned m2,
                                  const Partition& pi2, double tol) {
  if (m1 == 0 || m2 == 0) throw InputError("composeQuotients: powers must be >= 1");
  productSize(g.order(), m1 * m2);
  const Graph inner = quotient(cartesianPower(g, m1), pi1).quotient;
  const Graph left = quotient(cartesianPower(inner, m2), pi2).quotient;

  const Matrix q1 = partitionMatrix(pi1).entries;
  Matrix q1Power = q1;
  for (unsigned i = 1; i < m2; ++i) q1Power = kron(q1Power, q1);
  const Matrix q3 = q1Power * partitionMatrix(pi2).entries;
  const Graph big = cartesianPower(g, m1 * m2);
  const Matrix right = q3.transpose() * big.adjacency() * q3;

  const double residual = maxAbsDiff(left.adjacency(), right);
  Partition composed = partitionFromMatrix(q3);
  const bool equitable = isEquitable(big, composed).equitable;
  return {residual < tol, residual, std::move(composed), equitable};
}

CompositionCheck productOfQuotients(const std::vector<QuotientFactor>& factors, double tol) {
  if (factors.empty()) throw InputError("productOfQuotients: need at least one factor");
  Graph left = quotient(factors[0].graph, factors[0].partition).quotient;
  Graph product = factors[0].graph;
  Matrix q = partitionMatrix(factors[0].partition).entries;
  for (std::size_t i = 1; i < factors.size(); ++i) {
    left = cartesianProduct(left, quotient(factors[i].graph, factors[i].partition).quotient);
    product = cartesianProduct(product, factors[i].graph);
    q = kron(q, partitionMatrix(factors[i].partition).entries);
  }
  const Matrix right = q.transpose() * product.adjacency() * q;
  const double residual = maxAbsDiff(left.adjacency(), right);
  Partition composed = partitionFromMatrix(q);
  const bool equitable = isEquitable(product, composed).equitable;
  return {residual < tol, residual, std::move(composed), equitable};
}

bool productPst(const std::vector<PstFactor>& factors, double t, double tol) {
  if (factors.empty()) throw InputError("productPst: need at least one factor");
  bool anyTransfer = false;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    const auto& f = factors[i];
    f.graph.checkVertex(f.a);
    f.graph.checkVertex(f.b);
    anyTransfer = anyTransfer || f.a != f.b;
    const bool ok = f.a == f.b ? isPeriodic(f.graph, f.a, t, tol) : verifyPst(f.graph, f.a, f.b, t, tol);
    if (!ok)
      throw PreconditionError("productPst: factor " + std::to_string(i) +
                              (f.a == f.b ? " is not periodic" : " has no PST") + " at the given time");
  }
  if (!anyTransfer) throw PreconditionError("productPst: at least one factor needs a != b");

  Graph product = factors[0].graph;
  std::size_t a = factors[0].a, b = factors[0].b;
  for (std::size_t i = 1; i < factors.size(); ++i) {
    const auto& f = factors[i];
    a = a * f.graph.order() + f.a;
    b = b * f.graph.order() + f.b;
    product = cartesianProduct(product, f.graph);
  }
  return verifyPst(product, a, b, t, tol);
}

}  // namespace pstlab
