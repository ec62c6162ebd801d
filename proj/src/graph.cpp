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

#include "pstlab/graph.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <set>
#include <sstream>

#include "pstlab/errors.hpp"

namespace pstlab {
namespace {

constexpr std::size_t kMaxOrder = 4096;

void checkOrder(std::size_t n, const char* what) {
  if (n == 0) throw InputError(std::string(what) + ": vertex count must be positive");
  if (n > kMaxOrder)
    throw InputError(std::string(what) + ": vertex count exceeds " + std::to_string(kMaxOrder));
}

void setEdge(Matrix& a, std::size_t u, std::size_t v, double w) {
  a(u, v) = w;
  a(v, u) = w;
}

std::string joinOffsets(const std::vector<std::size_t>& xs) {
  std::ostringstream os;
  for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? "," : "") << xs[i];
  return os.str();
}

Matrix circulantMatrix(const CirculantSpec& spec) {
  Matrix a(spec.n, spec.n);
  for (std::size_t i = 0; i < spec.n; ++i)
    for (std::size_t s : spec.connection) a(i, (i + s) % spec.n) = 1.0;
  return a;
}

Graph buildOne(const family::Complete& f) {
  checkOrder(f.n, "Complete");
  Matrix a(f.n, f.n, 1.0);
  for (std::size_t i = 0; i < f.n; ++i) a(i, i) = 0.0;
  return Graph(std::move(a), "K" + std::to_string(f.n));
}

Graph buildOne(const family::Path& f) {
  checkOrder(f.n, "Path");
  Matrix a(f.n, f.n);
  for (std::size_t i = 0; i + 1 < f.n; ++i) setEdge(a, i, i + 1, 1.0);
  return Graph(std::move(a), "P" + std::to_string(f.n));
}

Graph buildOne(const family::Cycle& f) {
  if (f.n < 3) throw InputError("Cycle: need n >= 3");
  checkOrder(f.n, "Cycle");
  Matrix a(f.n, f.n);
  for (std::size_t i = 0; i < f.n; ++i) setEdge(a, i, (i + 1) % f.n, 1.0);
  return Graph(std::move(a), "C" + std::to_string(f.n));
}

Graph buildOne(const family::Hypercube& f) {
  if (f.d > 12) throw InputError("Hypercube: dimension above 12 exceeds the size guard");
  const std::size_t n = std::size_t{1} << f.d;
  Matrix a(n, n);
  for (std::size_t x = 0; x < n; ++x)
    for (unsigned i = 0; i < f.d; ++i) a(x, x ^ (std::size_t{1} << i)) = 1.0;
  return Graph(std::move(a), "Q" + std::to_string(f.d));
}

Graph buildOne(const family::Circulant& f) {
  f.spec.validate();
  return Graph(circulantMatrix(f.spec),
               "Circ(" + std::to_string(f.spec.n) + ";" + joinOffsets(f.spec.connection) + ")");
}

Graph buildOne(const family::Cubelike& f) {
  f.spec.validate();
  if (f.spec.d > 12) throw InputError("Cubelike: dimension above 12 exceeds the size guard");
  const std::size_t n = std::size_t{1} << f.spec.d;
  Matrix a(n, n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::uint32_t s : f.spec.generators) a(x, x ^ s) = 1.0;
  return Graph(std::move(a), "X(Z2^" + std::to_string(f.spec.d) + ")");
}

void checkPositive(double a, double b, const char* what) {
  if (!(a > 0.0) || !(b > 0.0) || !std::isfinite(a) || !std::isfinite(b))
    throw InputError(std::string(what) + ": weights must be positive and finite");
}

Graph buildOne(const family::WeightedP4& f) {
  checkPositive(f.a, f.b, "WeightedP4");
  Matrix a(4, 4);
  setEdge(a, 0, 1, 1.0);
  setEdge(a, 1, 2, f.b);
  setEdge(a, 2, 3, 1.0);
  a(1, 1) = f.a;
  a(2, 2) = f.a;
  return Graph(std::move(a), "P4(a,b)");
}

Graph buildOne(const family::WeightedP5& f) {
  checkPositive(f.a, f.b, "WeightedP5");
  Matrix a(5, 5);
  setEdge(a, 0, 1, f.a);
  setEdge(a, 1, 2, f.b);
  setEdge(a, 2, 3, f.b);
  setEdge(a, 3, 4, f.a);
  return Graph(std::move(a), "P5(a,b)");
}

Graph buildOne(const family::ChristandlPath& f) {
  checkOrder(f.n + 1, "ChristandlPath");
  Matrix a(f.n + 1, f.n + 1);
  for (std::size_t j = 0; j < f.n; ++j)
    setEdge(a, j, j + 1, std::sqrt(static_cast<double>((j + 1) * (f.n - j))));
  return Graph(std::move(a), "Christandl(" + std::to_string(f.n) + ")");
}

Graph buildOne(const family::GodsilFamily& f) { return godsilFamily(f.m, f.connection).graph; }

}  // namespace

Graph::Graph(Matrix adjacency, std::string name, std::vector<std::string> vertexLabels)
    : adjacency_(std::move(adjacency)), name_(std::move(name)), labels_(std::move(vertexLabels)) {
  const std::size_t n = adjacency_.rows();
  if (n == 0) throw InputError("graph must have at least one vertex");
  if (adjacency_.cols() != n) throw InputError("adjacency matrix must be square");
  if (!labels_.empty() && labels_.size() != n)
    throw InputError("vertex label count does not match vertex count");
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v) {
      const double w = adjacency_(u, v);
      if (!std::isfinite(w) || w < 0.0)
        throw InputError("adjacency entries must be finite and non-negative");
      if (w != adjacency_(v, u)) throw InputError("adjacency matrix must be symmetric");
    }
}

Graph Graph::empty(std::size_t n, std::string name) {
  checkOrder(n, "empty");
  return Graph(Matrix(n, n), std::move(name));
}

Graph Graph::withName(std::string name) const {
  Graph g = *this;
  g.name_ = std::move(name);
  return g;
}

std::size_t Graph::edgeCount() const {
  std::size_t m = 0;
  for (std::size_t u = 0; u < order(); ++u)
    for (std::size_t v = u + 1; v < order(); ++v)
      if (adjacency_(u, v) != 0.0) ++m;
  return m;
}

double Graph::rowSum(Vertex u) const {
  double s = 0.0;
  for (double w : adjacency_.row(u)) s += w;
  return s;
}

bool Graph::isSimple() const {
  for (std::size_t u = 0; u < order(); ++u) {
    if (adjacency_(u, u) != 0.0) return false;
    for (std::size_t v = 0; v < order(); ++v)
      if (adjacency_(u, v) != 0.0 && adjacency_(u, v) != 1.0) return false;
  }
  return true;
}

bool Graph::isConnected() const {
  std::vector<bool> seen(order(), false);
  std::queue<Vertex> q;
  q.push(0);
  seen[0] = true;
  std::size_t count = 1;
  while (!q.empty()) {
    const Vertex u = q.front();
    q.pop();
    for (Vertex v = 0; v < order(); ++v)
      if (!seen[v] && v != u && adjacency_(u, v) != 0.0) {
        seen[v] = true;
        ++count;
        q.push(v);
      }
  }
  return count == order();
}

void Graph::checkVertex(Vertex v) const {
  if (v >= order())
    throw InputError("vertex " + std::to_string(v) + " out of range for graph of order " +
                     std::to_string(order()));
}

CirculantSpec CirculantSpec::symmetric(std::size_t n, const std::vector<long long>& offsets) {
  if (n == 0) throw InputError("Circulant: n must be positive");
  std::set<std::size_t> s;
  const auto nn = static_cast<long long>(n);
  for (long long o : offsets) {
    const long long r = ((o % nn) + nn) % nn;
    s.insert(static_cast<std::size_t>(r));
    s.insert(static_cast<std::size_t>((nn - r) % nn));
  }
  CirculantSpec spec{n, {s.begin(), s.end()}};
  spec.validate();
  return spec;
}

void CirculantSpec::validate() const {
  checkOrder(n, "Circulant");
  if (connection.empty()) throw InputError("Circulant: connection set is empty");
  std::set<std::size_t> s(connection.begin(), connection.end());
  if (s.size() != connection.size()) throw InputError("Circulant: repeated connection element");
  for (std::size_t x : s) {
    if (x == 0 || x >= n) throw InputError("Circulant: connection elements must lie in 1..n-1");
    if (!s.contains(n - x)) throw InputError("Circulant: connection set is not closed under negation");
  }
}

void CubelikeSpec::validate() const {
  if (d == 0 || d > kMaxDimension)
    throw InputError("Cubelike: dimension must be in 1.." + std::to_string(kMaxDimension));
  if (generators.empty()) throw InputError("Cubelike: generator set is empty");
  std::set<std::uint32_t> s;
  for (std::uint32_t g : generators) {
    if (g == 0) throw InputError("Cubelike: generators must be nonzero");
    if (g >> d) throw InputError("Cubelike: generator has bits beyond dimension");
    if (!s.insert(g).second) throw InputError("Cubelike: generators must be distinct");
  }
}

Graph build(const GraphFamilySpec& spec) {
  return std::visit([](const auto& f) { return buildOne(f); }, spec);
}

GodsilGraph godsilFamily(unsigned m, const std::optional<CirculantSpec>& connection) {
  if (m < 2) throw InputError("GodsilFamily: need m >= 2");
  if (m > 5) throw InputError("GodsilFamily: m above 5 exceeds the size guard");
  const std::size_t scale = std::size_t{1} << (m - 2);
  const std::size_t n = 15 * scale * scale;
  const std::size_t a = 6 * scale;
  const std::size_t b = 8 * scale;

  std::vector<long long> innerOffsets, outerOffsets, crossOffsets;
  for (std::size_t j = 1; j <= a / 2; ++j) {
    innerOffsets.push_back(static_cast<long long>(n / 2 + j));
    outerOffsets.push_back(static_cast<long long>(j));
  }
  for (std::size_t j = 1; j <= b / 2; ++j) crossOffsets.push_back(static_cast<long long>(j));

  GodsilGraph out{Graph::empty(1), 0, 2 * n + 1, n, CirculantSpec::symmetric(n, innerOffsets),
                  CirculantSpec::symmetric(n, outerOffsets),
                  CirculantSpec::symmetric(n, crossOffsets)};
  if (connection) {
    connection->validate();
    if (connection->n != n || connection->connection.size() != b)
      throw InputError("GodsilFamily: connection must be a " + std::to_string(b) +
                       "-regular circulant on " + std::to_string(n) + " vertices");
    out.crossing = *connection;
  }

  const std::size_t total = 2 * n + 2;
  Matrix adj(total, total);
  const Matrix inner = circulantMatrix(out.inner);
  const Matrix outer = circulantMatrix(out.outer);
  const Matrix cross = circulantMatrix(out.crossing);
  for (std::size_t i = 0; i < n; ++i) {
    setEdge(adj, 0, 1 + i, 1.0);
    setEdge(adj, total - 1, 1 + n + i, 1.0);
    for (std::size_t j = 0; j < n; ++j) {
      if (inner(i, j) != 0.0) adj(1 + i, 1 + j) = 1.0;
      if (outer(i, j) != 0.0) adj(1 + n + i, 1 + n + j) = 1.0;
      if (cross(i, j) != 0.0) setEdge(adj, 1 + i, 1 + n + j, 1.0);
    }
  }
  out.graph = Graph(std::move(adj), "G_" + std::to_string(n) + "(m=" + std::to_string(m) + ")");
  return out;
}

Graph cartesianProduct(const Graph& g, const Graph& h) {
  const std::size_t ng = g.order(), nh = h.order();
  checkOrder(ng * nh, "cartesianProduct");
  Matrix a(ng * nh, ng * nh);
  for (std::size_t g1 = 0; g1 < ng; ++g1)
    for (std::size_t h1 = 0; h1 < nh; ++h1) {
      const std::size_t x = g1 * nh + h1;
      for (std::size_t g2 = 0; g2 < ng; ++g2) {
        const double w = g.weight(g1, g2);
        if (w != 0.0) a(x, g2 * nh + h1) += w;
      }
      for (std::size_t h2 = 0; h2 < nh; ++h2) {
        const double w = h.weight(h1, h2);
        if (w != 0.0) a(x, g1 * nh + h2) += w;
      }
    }
  std::string name = g.name().empty() || h.name().empty() ? "" : g.name() + "□" + h.name();
  return Graph(std::move(a), std::move(name));
}

Graph cartesianPower(const Graph& g, unsigned k) {
  if (k == 0) throw InputError("cartesianPower: k must be >= 1");
  Graph out = g;
  for (unsigned i = 1; i < k; ++i) out = cartesianProduct(out, g);
  if (k > 1 && !g.name().empty()) out = out.withName(g.name() + "^□" + std::to_string(k));
  return out;
}

Graph disjointUnion(const Graph& g, const Graph& h) {
  const std::size_t ng = g.order(), nh = h.order();
  checkOrder(ng + nh, "disjointUnion");
  Matrix a(ng + nh, ng + nh);
  for (std::size_t u = 0; u < ng; ++u)
    for (std::size_t v = 0; v < ng; ++v) a(u, v) = g.weight(u, v);
  for (std::size_t u = 0; u < nh; ++u)
    for (std::size_t v = 0; v < nh; ++v) a(ng + u, ng + v) = h.weight(u, v);
  return Graph(std::move(a));
}

Graph join(const Graph& g, const Graph& h) {
  Matrix a = disjointUnion(g, h).adjacency();
  for (std::size_t u = 0; u < g.order(); ++u)
    for (std::size_t v = 0; v < h.order(); ++v) setEdge(a, u, g.order() + v, 1.0);
  std::string name = g.name().empty() || h.name().empty() ? "" : g.name() + "+" + h.name();
  return Graph(std::move(a), std::move(name));
}

Graph complement(const Graph& g) {
  const std::size_t n = g.order();
  Matrix a(n, n);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v)
      if (u != v && g.weight(u, v) == 0.0) a(u, v) = 1.0;
  return Graph(std::move(a), g.name().empty() ? "" : "co-" + g.name());
}

Graph scale(const Graph& g, double c) {
  if (!(c > 0.0) || !std::isfinite(c)) throw InputError("scale: factor must be positive and finite");
  Matrix a = g.adjacency();
  for (std::size_t u = 0; u < a.rows(); ++u)
    for (std::size_t v = 0; v < a.cols(); ++v) a(u, v) *= c;
  return Graph(std::move(a), g.name(), g.vertexLabels());
}

Graph inducedSubgraph(const Graph& g, const std::vector<Vertex>& vertices) {
  for (Vertex v : vertices) g.checkVertex(v);
  Matrix a(vertices.size(), vertices.size());
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = 0; j < vertices.size(); ++j) a(i, j) = g.weight(vertices[i], vertices[j]);
  return Graph(std::move(a));
}

Graph deleteVertex(const Graph& g, Vertex v) {
  g.checkVertex(v);
  if (g.order() == 1) throw InputError("deleteVertex: cannot delete the only vertex");
  std::vector<Vertex> keep;
  for (Vertex u = 0; u < g.order(); ++u)
    if (u != v) keep.push_back(u);
  return inducedSubgraph(g, keep);
}

}  // namespace pstlab
