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

#include "pstlab/symmetry.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numeric>

#include "pstlab/errors.hpp"

namespace pstlab {

bool VertexPermutation::isBijection() const {
  std::vector<bool> hit(image.size(), false);
  for (Vertex v : image) {
    if (v >= image.size() || hit[v]) return false;
    hit[v] = true;
  }
  return true;
}

bool isAutomorphism(const Graph& g, const VertexPermutation& p, double tol) {
  if (p.image.size() != g.order() || !p.isBijection()) return false;
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v = 0; v < g.order(); ++v)
      if (std::abs(g.weight(p.image[u], p.image[v]) - g.weight(u, v)) > tol) return false;
  return true;
}

namespace {

void checkGuard(const Graph& g) {
  if (g.order() > kSymmetryOrderLimit)
    throw NumericError("symmetry search is limited to " + std::to_string(kSymmetryOrderLimit) +
                       " vertices");
}

// Joint colour refinement on (G, H): a colour class must have the same size in
// both graphs, otherwise no bijection respecting the colouring exists.
class Search {
 public:
  using Visitor = std::function<bool(const VertexPermutation&)>;  // false stops

  Search(const Graph& g, const Graph& h) : g_(g), h_(h), n_(g.order()) {
    std::vector<double> values;
    for (const Graph* x : {&g_, &h_})
      for (double w : x->adjacency().data()) values.push_back(w);
    std::sort(values.begin(), values.end());
    std::vector<double> reps;
    for (double w : values)
      if (reps.empty() || w - reps.back() > kWeightTolerance * std::max(1.0, std::abs(w)))
        reps.push_back(w);
    auto classify = [&](const Graph& x) {
      std::vector<int> cls(n_ * n_);
      for (std::size_t u = 0; u < n_; ++u)
        for (std::size_t v = 0; v < n_; ++v) {
          const double w = x.weight(u, v);
          auto it = std::upper_bound(reps.begin(), reps.end(),
                                     w + kWeightTolerance * std::max(1.0, std::abs(w)));
          cls[u * n_ + v] = static_cast<int>(it - reps.begin()) - 1;
        }
      return cls;
    };
    gw_ = classify(g_);
    hw_ = classify(h_);
    zeroClass_ = 0;  // weights are non-negative, so 0 (if present) is the first class
    hasZero_ = reps.front() <= kWeightTolerance;
  }

  struct Colouring {
    std::vector<int> g, h;
    int colours = 0;
  };

  Colouring initial() const {
    Colouring c{std::vector<int>(n_), std::vector<int>(n_), 0};
    std::map<int, int> ids;
    for (std::size_t v = 0; v < n_; ++v) ids.emplace(gw_[v * n_ + v], 0);
    for (std::size_t v = 0; v < n_; ++v) ids.emplace(hw_[v * n_ + v], 0);
    int next = 0;
    for (auto& [k, id] : ids) id = next++;
    for (std::size_t v = 0; v < n_; ++v) {
      c.g[v] = ids[gw_[v * n_ + v]];
      c.h[v] = ids[hw_[v * n_ + v]];
    }
    c.colours = next;
    return c;
  }

  static void individualize(Colouring& c, Vertex u, Vertex w) {
    c.g[u] = c.colours;
    c.h[w] = c.colours;
    ++c.colours;
  }

  /// Returns true when every leaf was visited (visitor never asked to stop).
  bool run(Colouring c, const Visitor& visit) {
    if (!refine(c)) return true;
    if (c.colours == static_cast<int>(n_)) {
      VertexPermutation p{std::vector<Vertex>(n_)};
      std::vector<Vertex> byColour(n_);
      for (std::size_t v = 0; v < n_; ++v) byColour[static_cast<std::size_t>(c.h[v])] = v;
      for (std::size_t v = 0; v < n_; ++v) p.image[v] = byColour[static_cast<std::size_t>(c.g[v])];
      if (!preservesWeights(p)) return true;
      return visit(p);
    }
    std::vector<std::size_t> size(static_cast<std::size_t>(c.colours), 0);
    for (int col : c.g) ++size[static_cast<std::size_t>(col)];
    int target = -1;
    for (int col = 0; col < c.colours; ++col) {
      const auto s = size[static_cast<std::size_t>(col)];
      if (s > 1 && (target < 0 || s < size[static_cast<std::size_t>(target)])) target = col;
    }
    Vertex u = 0;
    while (c.g[u] != target) ++u;
    for (Vertex w = 0; w < n_; ++w) {
      if (c.h[w] != target) continue;
      Colouring next = c;
      individualize(next, u, w);
      if (!run(std::move(next), visit)) return false;
    }
    return true;
  }

 private:
  using Signature = std::pair<int, std::vector<std::pair<int, int>>>;

  Signature signature(const std::vector<int>& colour, const std::vector<int>& weights,
                      std::size_t x) const {
    Signature sig{colour[x], {}};
    for (std::size_t y = 0; y < n_; ++y) {
      if (y == x) continue;
      const int w = weights[x * n_ + y];
      if (hasZero_ && w == zeroClass_) continue;
      sig.second.emplace_back(colour[y], w);
    }
    std::sort(sig.second.begin(), sig.second.end());
    return sig;
  }

  bool refine(Colouring& c) const {
    while (true) {
      std::vector<bool> used(static_cast<std::size_t>(c.colours), false);
      for (int col : c.g) used[static_cast<std::size_t>(col)] = true;
      for (int col : c.h) used[static_cast<std::size_t>(col)] = true;
      const auto before = std::count(used.begin(), used.end(), true);
      std::vector<Signature> sg(n_), sh(n_);
      std::map<Signature, int> ids;
      for (std::size_t x = 0; x < n_; ++x) {
        sg[x] = signature(c.g, gw_, x);
        sh[x] = signature(c.h, hw_, x);
        ids.emplace(sg[x], 0);
        ids.emplace(sh[x], 0);
      }
      int next = 0;
      for (auto& [sig, id] : ids) id = next++;
      std::vector<int> countG(static_cast<std::size_t>(next), 0), countH(countG);
      Colouring out{std::vector<int>(n_), std::vector<int>(n_), next};
      for (std::size_t x = 0; x < n_; ++x) {
        out.g[x] = ids[sg[x]];
        out.h[x] = ids[sh[x]];
        ++countG[static_cast<std::size_t>(out.g[x])];
        ++countH[static_cast<std::size_t>(out.h[x])];
      }
      if (countG != countH) return false;
      const bool stable = next == before;
      c = std::move(out);
      if (stable) return true;
    }
  }

  bool preservesWeights(const VertexPermutation& p) const {
    for (std::size_t u = 0; u < n_; ++u)
      for (std::size_t v = 0; v < n_; ++v)
        if (gw_[u * n_ + v] != hw_[p.image[u] * n_ + p.image[v]]) return false;
    return true;
  }

  const Graph& g_;
  const Graph& h_;
  std::size_t n_;
  std::vector<int> gw_, hw_;
  int zeroClass_ = 0;
  bool hasZero_ = true;
};

}  // namespace

AutomorphismGroup automorphisms(const Graph& g, std::size_t limit) {
  checkGuard(g);
  AutomorphismGroup out;
  Search search(g, g);
  out.complete = search.run(search.initial(), [&](const VertexPermutation& p) {
    out.elements.push_back(p);
    return out.elements.size() < limit;
  });
  out.order = out.elements.size();
  return out;
}

std::optional<VertexPermutation> findSwap(const Graph& g, Vertex a, Vertex b) {
  checkGuard(g);
  g.checkVertex(a);
  g.checkVertex(b);
  Search search(g, g);
  auto start = search.initial();
  if (start.g[a] != start.h[b]) return std::nullopt;
  Search::individualize(start, a, b);
  std::optional<VertexPermutation> found;
  search.run(std::move(start), [&](const VertexPermutation& p) {
    found = p;
    return false;
  });
  return found;
}

bool existsSwap(const Graph& g, Vertex a, Vertex b) { return findSwap(g, a, b).has_value(); }

std::optional<VertexPermutation> findIsomorphism(const Graph& g, const Graph& h) {
  checkGuard(g);
  checkGuard(h);
  if (g.order() != h.order()) return std::nullopt;
  auto tg = triangleCensus(g), th = triangleCensus(h);
  std::sort(tg.begin(), tg.end());
  std::sort(th.begin(), th.end());
  if (tg != th) return std::nullopt;
  Search search(g, h);
  std::optional<VertexPermutation> found;
  search.run(search.initial(), [&](const VertexPermutation& p) {
    found = p;
    return false;
  });
  return found;
}

bool isIsomorphic(const Graph& g, const Graph& h) { return findIsomorphism(g, h).has_value(); }

std::vector<std::size_t> triangleCensus(const Graph& g) {
  const std::size_t n = g.order();
  auto adj = [&](Vertex u, Vertex v) { return u != v && g.weight(u, v) != 0.0; };
  std::vector<std::size_t> count(n, 0);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) {
      if (!adj(u, v)) continue;
      for (Vertex w = v + 1; w < n; ++w)
        if (adj(u, w) && adj(v, w)) {
          ++count[u];
          ++count[v];
          ++count[w];
        }
    }
  return count;
}

std::size_t triangleCount(const Graph& g) {
  const auto c = triangleCensus(g);
  return std::accumulate(c.begin(), c.end(), std::size_t{0}) / 3;
}

}  // namespace pstlab
