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

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pstlab/graph.hpp"

namespace pstlab::cubelike {

/// Fixed-length GF(2) vector packed into 64-bit words.
class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(std::size_t length) : length_(length), words_((length + 63) / 64, 0) {}

  [[nodiscard]] std::size_t length() const { return length_; }
  [[nodiscard]] bool get(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1u; }
  void set(std::size_t i, bool value);
  BitVector& operator^=(const BitVector& other);
  [[nodiscard]] std::size_t weight() const;
  /// Parity of the coordinatewise product.
  [[nodiscard]] bool dotParity(const BitVector& other) const;
  [[nodiscard]] std::string toString() const;

  friend bool operator==(const BitVector&, const BitVector&) = default;

 private:
  std::size_t length_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Row space of a generator matrix.
class BinaryCode {
 public:
  /// Each row is a codeword of length `length`; rows need not be independent.
  static BinaryCode fromRows(std::vector<BitVector> rows);
  /// Bit strings of equal length, e.g. {"1100", "0011"}.
  static BinaryCode fromRows(const std::vector<std::string>& rows);

  [[nodiscard]] const std::vector<BitVector>& rows() const { return rows_; }
  [[nodiscard]] std::size_t length() const { return length_; }
  /// All 2^rows combinations (duplicates kept when rows are dependent).
  [[nodiscard]] std::vector<BitVector> codewords() const;

 private:
  std::size_t length_ = 0;
  std::vector<BitVector> rows_;
};

inline constexpr unsigned kMaxCodeRows = 20;

/// XOR of all generators.
std::uint32_t omega(const CubelikeSpec& spec);

/// Row space of the d×|S| matrix whose columns are the generators. Row i
/// holds bit i of every generator.
BinaryCode codeOf(const CubelikeSpec& spec);

/// gcd of the Hamming weights of the nonzero codewords; 0 for the trivial code.
std::size_t weightGcd(const BinaryCode& code);

/// Every pair of codewords (a codeword with itself included) has even inner
/// product. By bilinearity it is enough to test pairs of generator rows.
bool isSelfOrthogonal(const BinaryCode& code);

/// Rank over GF(2) of a set of d-bit vectors.
unsigned gf2Rank(const std::vector<std::uint32_t>& vectors);

struct Prediction {
  std::uint32_t source = 0;
  std::optional<std::uint32_t> target;  ///< known in the ω_S ≠ 0 case
  double time = 0.0;
  bool fromOmega = false;
};

/// ω_S ≠ 0 → (0, ω_S, π/2); ω_S = 0 with D = 2 and a self-orthogonal code →
/// (0, ?, π/4); otherwise none. Throws InputError when S does not span Z_2^d.
std::optional<Prediction> predictPst(const CubelikeSpec& spec);

/// Vertices x ≠ source with fidelity(source, x, t) >= 1 - tol (dense route,
/// d <= 12).
std::vector<std::uint32_t> numericPstTargets(const CubelikeSpec& spec, double t,
                                             double tol = 1e-8, std::uint32_t source = 0);

struct Certificate {
  std::optional<Prediction> prediction;
  bool certified = false;  ///< numerical check agrees with the prediction
  std::optional<std::uint32_t> target;
  double fidelity = 0.0;
};

/// Runs predictPst and cross-checks it numerically; for the ω_S = 0 branch the
/// target is located numerically. Without a prediction, certified means no
/// PST was found at π/4 (nor at π/2 from 0).
Certificate certify(const CubelikeSpec& spec, double tol = 1e-8);

/// "0110" → 0b0110 (leftmost character is the most significant bit).
std::uint32_t parseBits(std::string_view bits);
std::string formatBits(std::uint32_t value, unsigned d);
/// "100,010,001,011" → spec with d = common string length.
CubelikeSpec parseGenerators(std::string_view list);

std::string certificateToJson(const CubelikeSpec& spec, const Certificate& c);

}  // namespace pstlab::cubelike
