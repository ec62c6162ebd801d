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

#include <bit>
#include <numeric>
#include <numbers>

#include "pstlab/cubelike.hpp"
#include "pstlab/errors.hpp"
#include "pstlab/spectral.hpp"

using namespace pstlab;
using namespace pstlab::cubelike;

namespace {

// Codeword for coefficient vector x: coordinate j is the parity of x·s_j.
std::vector<std::uint32_t> oracleWeights(const CubelikeSpec& spec) {
  std::vector<std::uint32_t> weights;
  for (std::uint32_t x = 0; x < (1u << spec.d); ++x) {
    std::uint32_t w = 0;
    for (auto s : spec.generators) w += std::popcount(x & s) & 1u;
    weights.push_back(w);
  }
  return weights;
}

std::size_t oracleGcd(const CubelikeSpec& spec) {
  std::size_t g = 0;
  for (auto w : oracleWeights(spec)) g = std::gcd<std::size_t>(g, w);
  return g;
}

bool oracleSelfOrthogonal(const CubelikeSpec& spec) {
  for (std::uint32_t x = 0; x < (1u << spec.d); ++x)
    for (std::uint32_t y = 0; y < (1u << spec.d); ++y) {
      unsigned dot = 0;
      for (auto s : spec.generators) dot += (std::popcount(x & s) & 1u) * (std::popcount(y & s) & 1u);
      if (dot % 2) return false;
    }
  return true;
}

CubelikeSpec subset(unsigned d, std::uint32_t mask) {
  CubelikeSpec spec{d, {}};
  for (std::uint32_t x = 1; x < (1u << d); ++x)
    if ((mask >> (x - 1)) & 1u) spec.generators.push_back(x);
  return spec;
}

}  // namespace

TEST_CASE("bit vectors") {
  BitVector v(70);
  v.set(0, true);
  v.set(69, true);
  CHECK(v.weight() == 2);
  CHECK(v.get(69));
  BitVector w(70);
  w.set(69, true);
  CHECK(v.dotParity(w));
  v ^= w;
  CHECK(v.weight() == 1);
  CHECK(BinaryCode::fromRows(std::vector<std::string>{"101"}).rows().front().toString() == "101");
}

TEST_CASE("omega") {
  CHECK(omega(parseGenerators("100,010,001")) == 0b111);
  CHECK(omega(parseGenerators("100,010,001,011")) == 0b100);
  CHECK(omega(parseGenerators("110,101,011")) == 0);
}

TEST_CASE("code and weight gcd") {
  CHECK(weightGcd(codeOf(parseGenerators("100,010,001"))) == 1);
  CHECK(weightGcd(BinaryCode::fromRows(std::vector<std::string>{"1100", "0011"})) == 2);
  CHECK(weightGcd(codeOf(parseGenerators("1100,0011"))) == 1);
  CHECK(weightGcd(BinaryCode::fromRows(std::vector<std::string>{"0000"})) == 0);
  CHECK(isSelfOrthogonal(BinaryCode::fromRows(std::vector<std::string>{"1100", "0011"})));
  CHECK_FALSE(isSelfOrthogonal(BinaryCode::fromRows(std::vector<std::string>{"1000"})));
  const auto words = BinaryCode::fromRows(std::vector<std::string>{"1100", "0011"}).codewords();
  CHECK(words.size() == 4);
  for (const auto& a : words)
    for (const auto& b : words) {
      BitVector s = a;
      s ^= b;
      CHECK(std::find(words.begin(), words.end(), s) != words.end());
    }
}

TEST_CASE("code functions agree with a brute-force oracle for d <= 4") {
  for (unsigned d = 1; d <= 3; ++d)
    for (std::uint32_t mask = 1; mask < (1u << ((1u << d) - 1)); ++mask) {
      const CubelikeSpec spec = subset(d, mask);
      const BinaryCode code = codeOf(spec);
      CHECK(weightGcd(code) == oracleGcd(spec));
      CHECK(isSelfOrthogonal(code) == oracleSelfOrthogonal(spec));
    }
  // d = 4: every generating set of size at most 6.
  std::size_t checked = 0;
  for (std::uint32_t mask = 1; mask < (1u << 15); ++mask) {
    if (std::popcount(mask) > 6) continue;
    const CubelikeSpec spec = subset(4, mask);
    const BinaryCode code = codeOf(spec);
    CHECK(weightGcd(code) == oracleGcd(spec));
    CHECK(isSelfOrthogonal(code) == oracleSelfOrthogonal(spec));
    ++checked;
  }
  CHECK(checked > 5000);
}

TEST_CASE("GF(2) rank") {
  CHECK(gf2Rank({1, 2, 4}) == 3);
  CHECK(gf2Rank({3, 5, 6}) == 2);
  CHECK(gf2Rank({}) == 0);
}

TEST_CASE("predictions") {
  const auto fig4 = predictPst(parseGenerators("100,010,001,011"));
  REQUIRE(fig4.has_value());
  CHECK(fig4->target == std::optional<std::uint32_t>(0b100));
  CHECK(fig4->time == std::numbers::pi / 2);
  const auto q4 = predictPst(parseGenerators("1000,0100,0010,0001"));
  REQUIRE(q4.has_value());
  CHECK(q4->target == std::optional<std::uint32_t>(0b1111));
  CHECK_FALSE(predictPst(parseGenerators("100,010,001,111")).has_value());
  CHECK_THROWS_AS(predictPst(parseGenerators("110,011")), InputError);
}

TEST_CASE("exhaustive d = 3 with nonzero omega") {
  std::size_t count = 0;
  for (std::uint32_t mask = 1; mask < (1u << 7); ++mask) {
    const CubelikeSpec spec = subset(3, mask);
    if (gf2Rank(spec.generators) != 3 || omega(spec) == 0) continue;
    ++count;
    CHECK(fidelity(build(family::Cubelike{spec}), 0, omega(spec), std::numbers::pi / 2) >=
          1 - 1e-10);
    CHECK(certify(spec).certified);
  }
  CHECK(count > 0);
}

TEST_CASE("self-orthogonal D = 2 codes at d = 5") {
  const CubelikeSpec a =
      parseGenerators("00011,00100,00110,00111,01001,01111,10000,10110,11000,11001,11011,11100");
  CHECK(omega(a) == 0);
  CHECK(weightGcd(codeOf(a)) == 2);
  CHECK(isSelfOrthogonal(codeOf(a)));
  const Certificate c = certify(a);
  REQUIRE(c.prediction.has_value());
  CHECK(c.certified);
  CHECK(c.target == std::optional<std::uint32_t>(31));
  CHECK(numericPstTargets(a, std::numbers::pi / 4) == std::vector<std::uint32_t>{31});
}

TEST_CASE("parsing and JSON") {
  CHECK(parseBits("0110") == 6);
  CHECK(formatBits(6, 4) == "0110");
  const CubelikeSpec s = parseGenerators("100,010,001,011");
  CHECK(s.d == 3);
  CHECK(s.generators == std::vector<std::uint32_t>{4, 2, 1, 3});
  CHECK_THROWS_AS(parseGenerators("100,01"), InputError);
  CHECK_THROWS_AS(parseGenerators("1a0"), InputError);
  CHECK_THROWS_AS(parseGenerators(""), InputError);
  const std::string json = certificateToJson(s, certify(s));
  CHECK(json.find("\"omega\": \"100\"") != std::string::npos);
  CHECK(json.find("\"certified\": true") != std::string::npos);
}
