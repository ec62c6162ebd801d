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

#include <cmath>
#include <numbers>
#include <random>

#include "helpers.hpp"
#include "pstlab/errors.hpp"
#include "pstlab/feder.hpp"
#include "pstlab/partition.hpp"
#include "pstlab/spectral.hpp"
#include "pstlab/walk.hpp"

using namespace pstlab;

namespace {
constexpr double kPi = std::numbers::pi;

std::vector<double> randomTimes(std::uint64_t seed, double hi) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> d(0.0, hi);
  std::vector<double> ts(100);
  for (double& t : ts) t = d(rng);
  return ts;
}
}  // namespace

TEST_CASE("scan finds the K2 transfer at π/2") {
  const auto s = fidelityScan(build(family::Complete{2}), 0, 1, 4.0, 1000);
  CHECK(s.times.size() == 1000);
  CHECK(s.times.front() == 0.0);
  CHECK(s.times.back() == 4.0);
  REQUIRE(s.best().has_value());
  CHECK(std::abs(s.best()->t - kPi / 2) < 1e-9);
  CHECK(s.best()->fidelity == doctest::Approx(1.0).epsilon(1e-14));
  for (std::size_t i = 1; i < s.times.size(); ++i) CHECK(s.times[i] > s.times[i - 1]);
  for (double f : s.fidelities) {
    CHECK(f >= 0.0);
    CHECK(f <= 1.0 + 1e-12);
  }
}

TEST_CASE("scan finds the D6 antipodal transfer at π/√2") {
  const FederGraph d6 = federGraph(build(family::Path{3}), 2);
  const Vertex a = d6.index.at({{2, 0, 0}}), b = d6.index.at({{0, 0, 2}});
  const auto s = fidelityScan(d6.graph, a, b, 6.0, 10000);
  REQUIRE(s.best().has_value());
  CHECK(std::abs(s.best()->t - kPi / std::numbers::sqrt2) < 1e-9);
  CHECK(s.best()->fidelity >= 1 - 1e-12);
}

TEST_CASE("scan finds the Godsil apex transfer") {
  const GodsilGraph g = godsilFamily(2);
  const auto s = fidelityScan(g.graph, g.aVertex, g.bVertex, 4.0, 10000);
  REQUIRE(s.best().has_value());
  CHECK(s.best()->fidelity >= 1 - 1e-8);
}

TEST_CASE("peak refinement never loses to the bracketing grid points") {
  std::mt19937_64 rng(55);
  for (int i = 0; i < 10; ++i) {
    const Graph g = testing::randomConnected(rng, 6, true);
    const auto s = fidelityScan(g, 0, 5, 10.0, 500);
    for (const auto& peak : s.peaks) {
      const auto it = std::lower_bound(s.times.begin(), s.times.end(), peak.t);
      const std::size_t i1 = std::min<std::size_t>(it - s.times.begin(), s.times.size() - 1);
      const std::size_t i0 = i1 == 0 ? 0 : i1 - 1;
      CHECK(peak.fidelity >= std::max(s.fidelities[i0], s.fidelities[i1]) - 1e-15);
    }
    for (std::size_t p = 1; p < s.peaks.size(); ++p)
      CHECK(s.peaks[p - 1].fidelity >= s.peaks[p].fidelity);
  }
}

TEST_CASE("scan results do not depend on the thread count") {
  const Graph g = build(family::Hypercube{5});
  const auto one = fidelityScan(g, 0, 31, 5.0, 4000, ScanOptions{200, 1e-12, 1});
  const auto four = fidelityScan(g, 0, 31, 5.0, 4000, ScanOptions{200, 1e-12, 4});
  CHECK(one.fidelities == four.fidelities);
  REQUIRE(one.peaks.size() == four.peaks.size());
  for (std::size_t i = 0; i < one.peaks.size(); ++i) CHECK(one.peaks[i].t == four.peaks[i].t);
}

TEST_CASE("scan rejects bad parameters") {
  const Graph k2 = build(family::Complete{2});
  CHECK_THROWS_AS(fidelityScan(k2, 0, 1, 0.0, 100), InputError);
  CHECK_THROWS_AS(fidelityScan(k2, 0, 1, 1.0, 1), InputError);
  CHECK_THROWS_AS(fidelityScan(k2, 0, 2, 1.0, 10), InputError);
}

TEST_CASE("verifyPst and isPeriodic") {
  CHECK(verifyPst(build(family::Hypercube{5}), 0, 31, kPi / 2));
  CHECK(verifyPst(build(family::WeightedP5{std::numbers::sqrt2, std::sqrt(15.0)}), 0, 4,
                  kPi / std::numbers::sqrt2));
  CHECK_FALSE(verifyPst(build(family::Path{4}), 0, 3, kPi / 2));
  CHECK(isPeriodic(build(family::Complete{2}), 0, kPi));
  CHECK(isPeriodic(build(family::Cycle{4}), 0, kPi));
  CHECK_FALSE(isPeriodic(build(family::Complete{2}), 0, kPi / 2));
}

TEST_CASE("amplitude-level equivalence") {
  const Graph q4 = build(family::Hypercube{4});
  CHECK(verifyEquivalence(q4, seededPartition(q4, 0, 15), 0, 15, randomTimes(1, 2 * kPi)) < 1e-10);
  std::mt19937_64 rng(9);
  const Graph g = testing::randomConnected(rng, 7, true);
  CHECK(verifyEquivalence(g, Partition::singletons(7), 0, 6, randomTimes(2, 5.0)) < 1e-13);
  const GodsilGraph gd = godsilFamily(2);
  CHECK(verifyEquivalence(gd.graph, seededPartition(gd.graph, gd.aVertex, gd.bVertex), gd.aVertex,
                          gd.bVertex, {kPi / 4}) < 1e-10);
  CHECK_THROWS_AS(verifyEquivalence(q4, Partition::unit(16), 0, 15, {1.0}), PreconditionError);
}

TEST_CASE("fidelity is symmetric in its endpoints") {
  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> time(0.0, 10.0);
  for (int i = 0; i < 100; ++i) {
    const Graph g = testing::randomConnected(rng, 5, true);
    const double t = time(rng);
    CHECK(std::abs(fidelity(g, 0, 4, t) - fidelity(g, 4, 0, t)) < 1e-12);
  }
}

TEST_CASE("symbolic time matching") {
  CHECK(symbolicTime(kPi / 2) == std::optional<std::string>("π/2"));
  CHECK(symbolicTime(kPi / std::numbers::sqrt2) == std::optional<std::string>("π/√2"));
  CHECK(symbolicTime(std::sqrt(15.0) * kPi / 2) == std::optional<std::string>("√15·π/2"));
  CHECK_FALSE(symbolicTime(1.0).has_value());
  CHECK_FALSE(symbolicTime(kPi / 2 + 1e-6).has_value());
}

TEST_CASE("CSV and peak JSON output") {
  const auto s = fidelityScan(build(family::Complete{2}), 0, 1, 2.0, 3);
  const std::string csv = toCsv(s);
  CHECK(csv.rfind("t,fidelity\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 4);
  CHECK(csv.find("\n1,0.84147098480789") != std::string::npos);
  CHECK(peaksToJson({}) == "[]\n");
  CHECK(peaksToJson({{0.5, 1.0}}) == "[{\"t\": 0.5, \"fidelity\": 1}]\n");
}
