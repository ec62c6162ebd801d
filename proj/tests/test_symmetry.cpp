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

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "helpers.hpp"
#include "pstlab/errors.hpp"
#include "pstlab/spectral.hpp"
#include "pstlab/symmetry.hpp"

using namespace pstlab;

namespace {

std::size_t bruteForceOrder(const Graph& g) {
  std::vector<Vertex> p(g.order());
  std::iota(p.begin(), p.end(), 0);
  std::size_t count = 0;
  do {
    bool ok = true;
    for (Vertex u = 0; u < g.order() && ok; ++u)
      for (Vertex v = 0; v < g.order() && ok; ++v)
        ok = std::abs(g.weight(p[u], p[v]) - g.weight(u, v)) <= 1e-9;
    count += ok;
  } while (std::next_permutation(p.begin(), p.end()));
  return count;
}

Graph star(std::size_t leaves) { return join(Graph::empty(1), Graph::empty(leaves)); }

}  // namespace

TEST_CASE("automorphism group orders") {
  CHECK(automorphisms(build(family::Cycle{5})).order == 10);
  CHECK(automorphisms(build(family::Complete{4})).order == 24);
  const double s = std::sqrt(15.0);
  CHECK(automorphisms(build(family::WeightedP4{8 / s, 6 / s})).order == 2);
  CHECK(automorphisms(build(family::Hypercube{3})).order == 48);
  CHECK(automorphisms(build(family::Hypercube{4})).order == 384);
  CHECK(automorphisms(Graph::empty(1)).order == 1);
}

TEST_CASE("automorphism search matches brute force on random graphs") {
  std::mt19937_64 rng(123);
  std::uniform_int_distribution<std::size_t> size(2, 6);
  for (int i = 0; i < 100; ++i) {
    const Graph g = testing::randomConnected(rng, size(rng), false, 0.3);
    const auto group = automorphisms(g);
    CHECK(group.complete);
    CHECK(group.order == bruteForceOrder(g));
    for (const auto& p : group.elements) {
      CHECK(p.isBijection());
      CHECK(isAutomorphism(g, p));
    }
  }
}

TEST_CASE("vertex swaps") {
  CHECK(existsSwap(build(family::Hypercube{3}), 0, 7));
  CHECK(existsSwap(build(family::Path{3}), 0, 2));
  CHECK_FALSE(existsSwap(build(family::Path{3}), 0, 1));
  const auto p = findSwap(build(family::Hypercube{3}), 0, 7);
  REQUIRE(p.has_value());
  CHECK(p->image[0] == 7);
  CHECK(isAutomorphism(build(family::Hypercube{3}), *p));
  const GodsilGraph g = godsilFamily(2);
  CHECK_FALSE(existsSwap(g.graph, g.aVertex, g.bVertex));
}

TEST_CASE("a swap implies vertex-deleted cospectrality") {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 40; ++i) {
    const Graph g = testing::randomConnected(rng, 6, false, 0.3);
    for (Vertex b = 1; b < 6; ++b)
      if (existsSwap(g, 0, b)) CHECK(deletedCospectral(g, 0, b));
  }
}

TEST_CASE("triangle census") {
  for (auto c : triangleCensus(build(family::Complete{4}))) CHECK(c == 3);
  CHECK(triangleCount(build(family::Complete{4})) == 4);
  CHECK(triangleCount(build(family::Hypercube{3})) == 0);
  const Graph a = build(family::Circulant{CirculantSpec::symmetric(15, {8, 9, 10})});
  for (auto c : triangleCensus(a)) CHECK(c == 1);
  const auto b = triangleCensus(build(family::Circulant{CirculantSpec::symmetric(15, {1, 2, 3})}));
  for (auto c : b) CHECK(c == b.front());
  CHECK(b.front() >= 2);
}

TEST_CASE("isomorphism") {
  const Graph a = build(family::Circulant{CirculantSpec::symmetric(15, {8, 9, 10})});
  const Graph b = build(family::Circulant{CirculantSpec::symmetric(15, {1, 2, 3})});
  CHECK_FALSE(isIsomorphic(a, b));
  const Graph k2 = build(family::Complete{2});
  CHECK(isIsomorphic(cartesianProduct(k2, k2), build(family::Cycle{4})));
  CHECK_FALSE(isIsomorphic(build(family::Path{4}), star(3)));
  CHECK_FALSE(isIsomorphic(build(family::Path{4}), build(family::Path{5})));

  std::mt19937_64 rng(17);
  for (int i = 0; i < 30; ++i) {
    const Graph g = testing::randomConnected(rng, 8, i % 2 == 0);
    std::vector<Vertex> perm(8);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    Matrix m(8, 8);
    for (Vertex u = 0; u < 8; ++u)
      for (Vertex v = 0; v < 8; ++v) m(perm[u], perm[v]) = g.weight(u, v);
    const Graph h(m);
    const auto iso = findIsomorphism(g, h);
    REQUIRE(iso.has_value());
    for (Vertex u = 0; u < 8; ++u)
      for (Vertex v = 0; v < 8; ++v)
        CHECK(std::abs(h.weight(iso->image[u], iso->image[v]) - g.weight(u, v)) <= 1e-9);
    auto cg = triangleCensus(g), ch = triangleCensus(h);
    std::sort(cg.begin(), cg.end());
    std::sort(ch.begin(), ch.end());
    CHECK(cg == ch);
  }
}

TEST_CASE("symmetry guard") {
  CHECK_THROWS_AS(automorphisms(build(family::Cycle{65})), NumericError);
}
