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

#include "pstlab/suites.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "pstlab/cubelike.hpp"
#include "pstlab/errors.hpp"
#include "pstlab/feder.hpp"
#include "pstlab/graph_json.hpp"
#include "pstlab/partition.hpp"
#include "pstlab/spectral.hpp"
#include "pstlab/symmetry.hpp"
#include "pstlab/walk.hpp"

namespace pstlab::suites {
namespace {

constexpr double kPi = std::numbers::pi;

Check below(std::string name, double residual, double tol, std::string note = {}) {
  return {std::move(name), residual, tol, residual < tol, std::move(note)};
}

Check fidelityAtLeast(std::string name, double f, double tol, std::string note = {}) {
  return {std::move(name), std::max(0.0, 1.0 - f), tol, f >= 1.0 - tol, std::move(note)};
}

Check holds(std::string name, bool ok, std::string note = {}) {
  return {std::move(name), ok ? 0.0 : 1.0, 0.5, ok, std::move(note)};
}

std::vector<double> randomTimes(std::mt19937_64& rng, std::size_t count, double hi) {
  std::uniform_real_distribution<double> dist(0.0, hi);
  std::vector<double> ts(count);
  for (double& t : ts) t = dist(rng);
  return ts;
}

Graph fig4Cubelike() {
  return build(family::Cubelike{CubelikeSpec{3, {0b100, 0b010, 0b001, 0b011}}});
}

void equivalence(Report& r, std::mt19937_64& rng) {
  struct Case {
    std::string name;
    Graph g;
    Vertex a, b;
  };
  const GodsilGraph godsil = godsilFamily(2);
  const Graph p3 = build(family::Path{3});
  std::vector<Case> cases{
      {"Q3", build(family::Hypercube{3}), 0, 7},
      {"Q4", build(family::Hypercube{4}), 0, 15},
      {"P3^2", cartesianPower(p3, 2), 0, 8},
      {"X(Z2^3,{100,010,001,011})", fig4Cubelike(), 0, 4},
      {"godsil(m=2)", godsil.graph, godsil.aVertex, godsil.bVertex},
  };
  for (const auto& c : cases) {
    const Partition p = seededPartition(c.g, c.a, c.b);
    const auto times = randomTimes(rng, 100, 8.0);
    r.checks.push_back(below(c.name + " amplitude equivalence (100 times in [0,8])",
                             verifyEquivalence(c.g, p, c.a, c.b, times), 1e-10,
                             std::to_string(p.cellCount()) + " cells"));
    r.checks.push_back(below(c.name + " partition-matrix identities",
                             verifyPartitionIdentities(c.g, p).worst(), 1e-10));
  }
}

void feder(Report& r) {
  const Graph k2 = build(family::Complete{2});
  const Graph k3 = build(family::Complete{3});
  const Graph p3 = build(family::Path{3});
  const Graph p4 = build(family::Path{4});
  const std::vector<std::pair<const Graph*, unsigned>> instances{{&k2, 6}, {&p3, 4}, {&k3, 3},
                                                                 {&p4, 2}};
  const char* names[] = {"K2", "P3", "K3", "P4"};
  for (std::size_t i = 0; i < instances.size(); ++i)
    for (unsigned k = 1; k <= instances[i].second; ++k) {
      const auto iso = verifyFederIso(*instances[i].first, k);
      r.checks.push_back(below(std::string("verifyFederIso(") + names[i] + ", k=" +
                                   std::to_string(k) + ")",
                               iso.deviation, 1e-12));
    }
  for (std::size_t n = 1; n <= 8; ++n) {
    const Graph f = federGraph(k2, static_cast<unsigned>(n)).graph;
    const Graph c = build(family::ChristandlPath{n});
    r.checks.push_back(holds("F(K2," + std::to_string(n) + ") == Christandl(" +
                                 std::to_string(n) + ") exactly",
                             f.adjacency() == c.adjacency()));
  }
  for (auto [g, k, name] : {std::tuple{&k2, 2u, "K2"}, std::tuple{&p3, 2u, "P3"},
                            std::tuple{&k2, 3u, "K2"}, std::tuple{&k3, 3u, "K3"}}) {
    const auto s = symmetrizerCheck(*g, k);
    r.checks.push_back(below(std::string("symmetrizer = QQᵀ on ") + name + "^□" +
                                 std::to_string(k),
                             std::max(s.symmetrizerVsProjector, s.commutator), 1e-12));
  }
  const FederGraph d6 = federGraph(p3, 2);
  const Vertex from = d6.index.at({{2, 0, 0}}), to = d6.index.at({{0, 0, 2}});
  r.checks.push_back(fidelityAtLeast("D6 = F(P3,2) PST |200> -> |002> at π/√2",
                                     fidelity(d6.graph, from, to, kPi / std::numbers::sqrt2), 1e-8));
}

void composition(Report& r) {
  const Graph k2 = build(family::Complete{2});
  const Graph p3 = build(family::Path{3});
  const Partition orbit2 = orbitPartition(k2, 2).partition;
  const Graph inner = quotient(cartesianPower(k2, 2), orbit2).quotient;
  const Partition outer = orbitPartition(inner, 2).partition;
  auto c1 = composeQuotients(k2, 2, orbit2, 2, outer);
  r.checks.push_back(below("(K2^□2/π1)^□2/π2 vs K2^□4/π3", c1.residual, 1e-10,
                           std::to_string(c1.composed.cellCount()) + " cells in π3"));
  r.checks.push_back(holds("π3 equitable on K2^□4", c1.composedEquitable));

  auto c2 = composeQuotients(k2, 1, Partition::singletons(2), 1, Partition::singletons(2));
  r.checks.push_back(below("m1 = m2 = 1 with singleton partitions", c2.residual, 1e-10));

  auto c3 = composeQuotients(p3, 2, orbitPartition(p3, 2).partition, 1, Partition::singletons(6));
  r.checks.push_back(below("P3^□2/orbit with trivial second step", c3.residual, 1e-10));

  // D6 from the 4-cube: (K2^□2/π2)^□2/π1 is a quotient of K2^□4.
  const Graph d6 = federGraph(p3, 2).graph;
  const Graph viaCube = scale(quotient(cartesianPower(inner, 2), outer).quotient, 1 / std::numbers::sqrt2);
  r.checks.push_back(holds("F(P3,2) is isomorphic to the K2^□4 composite quotient scaled by 1/√2",
                           isIsomorphic(d6, viaCube)));
}

void product(Report& r) {
  const Graph k2 = build(family::Complete{2});
  const Graph q3 = build(family::Hypercube{3});
  const Graph fig4 = fig4Cubelike();
  const Partition fig4Cells = seededPartition(fig4, 0, 4);
  auto p1 = productOfQuotients({{k2, Partition::singletons(2)}, {k2, Partition::singletons(2)}});
  r.checks.push_back(below("K2/1 □ K2/1 vs (K2□K2)/1", p1.residual, 1e-10));
  auto p2 = productOfQuotients({{q3, seededPartition(q3, 0, 7)}, {k2, Partition::singletons(2)}});
  r.checks.push_back(below("Q3/dist □ K2 vs (Q3□K2)/π", p2.residual, 1e-10));
  auto p3 = productOfQuotients({{k2, Partition::singletons(2)}, {fig4, fig4Cells}});
  r.checks.push_back(below("K2 □ X(Z2^3,S)/π vs (K2□X)/π", p3.residual, 1e-10));
  r.checks.push_back(holds("⊗Q_k partition equitable", p1.composedEquitable &&
                                                         p2.composedEquitable &&
                                                         p3.composedEquitable));

  const Graph fig4Quotient = quotient(fig4, fig4Cells).quotient;
  r.checks.push_back(holds(
      "K2 □ X(Z2^3,S)/π PST at π/2",
      productPst({{k2, 0, 1}, {fig4Quotient, fig4Cells.cellOf(0), fig4Cells.cellOf(4)}}, kPi / 2)));
  r.checks.push_back(holds("K2 □ K4 PST at π/2 (K4 periodic)",
                           productPst({{k2, 0, 1}, {build(family::Complete{4}), 0, 0}}, kPi / 2)));
  r.checks.push_back(
      holds("K2 □ K2 □ K2 PST at π/2", productPst({{k2, 0, 1}, {k2, 0, 1}, {k2, 0, 1}}, kPi / 2)));
}

void cubelikeSuite(Report& r) {
  using namespace cubelike;
  std::size_t exhaustive = 0;
  double worst = 0.0;
  for (std::uint32_t mask = 1; mask < (1u << 7); ++mask) {
    CubelikeSpec spec{3, {}};
    for (std::uint32_t x = 1; x < 8; ++x)
      if ((mask >> (x - 1)) & 1u) spec.generators.push_back(x);
    if (gf2Rank(spec.generators) != 3 || omega(spec) == 0) continue;
    ++exhaustive;
    const Graph g = build(family::Cubelike{spec});
    worst = std::max(worst, 1.0 - fidelity(g, 0, omega(spec), kPi / 2));
  }
  r.checks.push_back({"d=3 exhaustive, ω_S ≠ 0: PST 0 -> ω_S at π/2", worst, 1e-10, worst <= 1e-10,
                      std::to_string(exhaustive) + " generating sets"});

  std::size_t total = 0, mismatches = 0, positives = 0;
  for (std::uint32_t mask = 1; mask < (1u << 15); ++mask) {
    CubelikeSpec spec{4, {}};
    for (std::uint32_t x = 1; x < 16; ++x)
      if ((mask >> (x - 1)) & 1u) spec.generators.push_back(x);
    if (omega(spec) != 0 || gf2Rank(spec.generators) != 4) continue;
    ++total;
    const Certificate c = certify(spec);
    if (!c.certified) ++mismatches;
    if (c.prediction) ++positives;
  }
  r.checks.push_back(holds("d=4 exhaustive, ω_S = 0: prediction matches numeric PST at π/4",
                           mismatches == 0,
                           std::to_string(total) + " generating sets, " +
                               std::to_string(positives) + " predicted positive, " +
                               std::to_string(mismatches) + " mismatches"));

  const CubelikeSpec positive =
      parseGenerators("00011,00100,00110,00111,01001,01111,10000,10110,11000,11001,11011,11100");
  const Certificate c = certify(positive);
  r.checks.push_back(holds("d=5 self-orthogonal D=2 instance has PST at π/4",
                           c.prediction.has_value() && c.certified,
                           c.target ? "target " + formatBits(*c.target, 5) : "no target"));
}

void godsil(Report& r) {
  const GodsilGraph g = godsilFamily(2);
  const auto scan = fidelityScan(g.graph, g.aVertex, g.bVertex, 4.0, 10000);
  std::optional<FidelityPeak> first;
  for (const auto& p : scan.peaks)
    if (p.fidelity >= 1.0 - kPstTolerance && (!first || p.t < first->t)) first = p;
  const auto sym = first ? symbolicTime(first->t) : std::nullopt;
  const auto best = scan.best();
  r.checks.push_back(fidelityAtLeast("apex-to-apex PST found by scan over [0,4]",
                                     best ? best->fidelity : 0.0, 1e-8,
                                     first ? "first at t = " + io::formatReal(first->t) +
                                                 (sym ? " (" + *sym + ")" : "")
                                           : "no peak"));
  r.checks.push_back(holds(
      "first PST time is π/4 for loops 6, crossing 8 (π/2 needs the degrees exchanged)",
      sym && *sym == "π/4", "flagged: differs from the π/2 usually quoted for this family"));
  r.checks.push_back(holds("no automorphism maps apex a to apex b",
                           !existsSwap(g.graph, g.aVertex, g.bVertex)));
  const Graph inner = build(family::Circulant{g.inner});
  const Graph outer = build(family::Circulant{g.outer});
  r.checks.push_back(holds("A_15 and B_15 are not isomorphic", !isIsomorphic(inner, outer)));
  const auto census = triangleCensus(inner);
  r.checks.push_back(holds("every vertex of A_15 lies in exactly one triangle",
                           std::all_of(census.begin(), census.end(),
                                       [](std::size_t c) { return c == 1; })));
  const Partition p = seededPartition(g.graph, g.aVertex, g.bVertex);
  const Graph qp = scale(quotient(g.graph, p).quotient, 1.0 / std::sqrt(15.0));
  const Graph expected = build(family::WeightedP4{6 / std::sqrt(15.0), 8 / std::sqrt(15.0)});
  r.checks.push_back(below("quotient is P4(6/√15, 8/√15) after normalizing",
                           maxAbsDiff(qp.adjacency(), expected.adjacency()), 1e-12));
  r.checks.push_back(holds("apex vertex-deleted subgraphs are cospectral",
                           deletedCospectral(g.graph, g.aVertex, g.bVertex)));

  const CirculantSpec other = CirculantSpec::symmetric(15, {1, 2, 4, 7});
  const GodsilGraph g2 = godsilFamily(2, other);
  r.checks.push_back(fidelityAtLeast("alternative crossing Circ(15,{±1,±2,±4,±7}) PST at π/4",
                                     fidelity(g2.graph, g2.aVertex, g2.bVertex, kPi / 4), 1e-8));
}

void paths(Report& r) {
  for (int k = 1; k <= 5; ++k) {
    const Graph p5 = build(family::WeightedP5{std::numbers::sqrt2, std::sqrt(4.0 * k * k - 1)});
    r.checks.push_back(fidelityAtLeast("P5(√2, √(4k²-1)) PST at π/√2, k=" + std::to_string(k),
                                       fidelity(p5, 0, 4, kPi / std::numbers::sqrt2), 1e-10));
  }
  const Graph scaled = scale(build(family::ChristandlPath{4}), 1.0 / std::numbers::sqrt2);
  const Graph p5 = build(family::WeightedP5{std::numbers::sqrt2, std::sqrt(3.0)});
  r.checks.push_back(below("Christandl(4)/√2 == P5(√2,√3)",
                           maxAbsDiff(scaled.adjacency(), p5.adjacency()), 1e-12));

  for (int k = 2; k <= 4; ++k) {
    const double s = std::sqrt(4.0 * k * k - 1);
    const double big = 2.0 * k * k / s, small = 2.0 * (k * k - 1) / s;
    for (bool swapped : {false, true}) {
      const double a = swapped ? small : big, b = swapped ? big : small;
      const auto scan = fidelityScan(build(family::WeightedP4{a, b}), 0, 3, 10.0, 10000);
      const auto best = scan.best();
      const bool found = best && best->fidelity >= 1.0 - 1e-8;
      const std::string label = std::string(swapped ? "loops 2(k²-1)/s, middle 2k²/s"
                                                    : "loops 2k²/s, middle 2(k²-1)/s") +
                                ", k=" + std::to_string(k);
      if (found) {
        const auto cond = pstConditionP4(a, b, best->t);
        const auto sym = symbolicTime(best->t);
        r.checks.push_back(holds("P4 " + label + ": PST in [0,10] satisfies condition A or B",
                                 cond != P4Condition::Neither,
                                 std::string(toString(cond)) + " at t = " +
                                     io::formatReal(best->t) + (sym ? " (" + *sym + ")" : "")));
      } else {
        // k=3 admits no PST at all in this orientation; k=4 first transfers at √63·π/2 > 10.
        r.checks.push_back(holds("P4 " + label + ": no PST in [0,10]", !swapped,
                                 best ? "best fidelity " + io::formatReal(best->fidelity)
                                      : "no peak"));
      }
    }
  }
  r.checks.push_back(holds("unweighted P4 has no antipodal PST at π/2",
                           !verifyPst(build(family::Path{4}), 0, 3, kPi / 2)));
}

std::string shortest(double x) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

std::string jsonEscape(const std::string& s) {
  std::string out;
  for (char ch : s) {
    if (ch == '"' || ch == '\\') out += '\\';
    out += ch;
  }
  return out;
}

}  // namespace

bool Report::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

std::string Report::toText() const {
  std::ostringstream os;
  os << "suite " << suite << " (seed " << seed << ")\n";
  for (const auto& c : checks) {
    os << (c.pass ? "[PASS] " : "[FAIL] ") << c.name << "  residual=" << shortest(c.residual)
       << " tol=" << shortest(c.tolerance);
    if (!c.note.empty()) os << "  (" << c.note << ")";
    os << '\n';
  }
  os << (passed() ? "suite passed" : "suite FAILED") << '\n';
  return os.str();
}

std::string Report::toJson() const {
  std::ostringstream os;
  os << "{\"suite\": \"" << suite << "\", \"seed\": " << seed << ", \"passed\": "
     << (passed() ? "true" : "false") << ", \"checks\": [";
  for (std::size_t i = 0; i < checks.size(); ++i) {
    const auto& c = checks[i];
    os << (i ? ",\n  " : "\n  ") << "{\"name\": \"" << jsonEscape(c.name)
       << "\", \"residual\": " << shortest(c.residual)
       << ", \"tolerance\": " << shortest(c.tolerance)
       << ", \"pass\": " << (c.pass ? "true" : "false") << ", \"note\": \"" << jsonEscape(c.note)
       << "\"}";
  }
  os << "\n]}\n";
  return os.str();
}

const std::vector<std::string>& names() {
  static const std::vector<std::string> n{"thm32",    "feder",  "composition", "product",
                                          "cubelike", "godsil", "paths"};
  return n;
}

Report run(const std::string& suite, std::uint64_t seed) {
  Report r{suite, seed, {}};
  std::mt19937_64 rng(seed);
  if (suite == "thm32") equivalence(r, rng);
  else if (suite == "feder") feder(r);
  else if (suite == "composition") composition(r);
  else if (suite == "product") product(r);
  else if (suite == "cubelike") cubelikeSuite(r);
  else if (suite == "godsil") godsil(r);
  else if (suite == "paths") paths(r);
  else throw InputError("unknown suite '" + suite + "'");
  return r;
}

}  // namespace pstlab::suites
