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

#include "pstlab/cubelike.hpp"

#include <bit>
#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>

#include "pstlab/errors.hpp"
#include "pstlab/graph_json.hpp"
#include "pstlab/spectral.hpp"

namespace pstlab::cubelike {

void BitVector::set(std::size_t i, bool value) {
  const std::uint64_t mask = std::uint64_t{1} << (i % 64);
  if (value) words_[i / 64] |= mask;
  else words_[i / 64] &= ~mask;
}

BitVector& BitVector::operator^=(const BitVector& other) {
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= other.words_[w];
  return *this;
}

std::size_t BitVector::weight() const {
  std::size_t s = 0;
  for (std::uint64_t w : words_) s += static_cast<std::size_t>(std::popcount(w));
  return s;
}

bool BitVector::dotParity(const BitVector& other) const {
  std::uint64_t acc = 0;
  for (std::size_t w = 0; w < words_.size(); ++w) acc ^= words_[w] & other.words_[w];
  return std::popcount(acc) % 2 == 1;
}

std::string BitVector::toString() const {
  std::string s(length_, '0');
  for (std::size_t i = 0; i < length_; ++i)
    if (get(i)) s[i] = '1';
  return s;
}

BinaryCode BinaryCode::fromRows(std::vector<BitVector> rows) {
  if (rows.size() > kMaxCodeRows)
    throw NumericError("BinaryCode: more than " + std::to_string(kMaxCodeRows) + " generator rows");
  BinaryCode code;
  code.length_ = rows.empty() ? 0 : rows.front().length();
  for (const auto& r : rows)
    if (r.length() != code.length_) throw InputError("BinaryCode: rows differ in length");
  code.rows_ = std::move(rows);
  return code;
}

BinaryCode BinaryCode::fromRows(const std::vector<std::string>& rows) {
  std::vector<BitVector> bits;
  for (const auto& s : rows) {
    BitVector v(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s[i] != '0' && s[i] != '1') throw InputError("BinaryCode: rows must be bit strings");
      v.set(i, s[i] == '1');
    }
    bits.push_back(std::move(v));
  }
  return fromRows(std::move(bits));
}

std::vector<BitVector> BinaryCode::codewords() const {
  const std::size_t count = std::size_t{1} << rows_.size();
  std::vector<BitVector> out;
  out.reserve(count);
  for (std::size_t mask = 0; mask < count; ++mask) {
    BitVector w(length_);
    for (std::size_t r = 0; r < rows_.size(); ++r)
      if ((mask >> r) & 1u) w ^= rows_[r];
    out.push_back(std::move(w));
  }
  return out;
}

std::uint32_t omega(const CubelikeSpec& spec) {
  std::uint32_t w = 0;
  for (std::uint32_t s : spec.generators) w ^= s;
  return w;
}

BinaryCode codeOf(const CubelikeSpec& spec) {
  spec.validate();
  std::vector<BitVector> rows;
  for (unsigned i = 0; i < spec.d; ++i) {
    BitVector row(spec.generators.size());
    for (std::size_t j = 0; j < spec.generators.size(); ++j)
      row.set(j, (spec.generators[j] >> i) & 1u);
    rows.push_back(std::move(row));
  }
  return BinaryCode::fromRows(std::move(rows));
}

std::size_t weightGcd(const BinaryCode& code) {
  // Gray-code walk over the row combinations, one XOR per codeword.
  const std::size_t count = std::size_t{1} << code.rows().size();
  BitVector current(code.length());
  std::size_t d = 0;
  for (std::size_t i = 1; i < count; ++i) {
    current ^= code.rows()[static_cast<std::size_t>(std::countr_zero(i))];
    d = std::gcd(d, current.weight());
    if (d == 1) break;
  }
  return d;
}

bool isSelfOrthogonal(const BinaryCode& code) {
  const auto& rows = code.rows();
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = i; j < rows.size(); ++j)
      if (rows[i].dotParity(rows[j])) return false;
  return true;
}

unsigned gf2Rank(const std::vector<std::uint32_t>& vectors) {
  std::uint32_t basis[32] = {};
  unsigned rank = 0;
  for (std::uint32_t v : vectors) {
    for (int bit = 31; bit >= 0 && v; --bit) {
      if (!((v >> bit) & 1u)) continue;
      if (!basis[bit]) {
        basis[bit] = v;
        ++rank;
        v = 0;
      } else {
        v ^= basis[bit];
      }
    }
  }
  return rank;
}

std::optional<Prediction> predictPst(const CubelikeSpec& spec) {
  spec.validate();
  if (gf2Rank(spec.generators) != spec.d)
    throw InputError("cubelike: generators do not span Z_2^" + std::to_string(spec.d));
  const std::uint32_t w = omega(spec);
  if (w != 0) return Prediction{0, w, std::numbers::pi / 2, true};
  const BinaryCode code = codeOf(spec);
  if (weightGcd(code) == 2 && isSelfOrthogonal(code))
    return Prediction{0, std::nullopt, std::numbers::pi / 4, false};
  return std::nullopt;
}

std::vector<std::uint32_t> numericPstTargets(const CubelikeSpec& spec, double t, double tol,
                                             std::uint32_t source) {
  const Graph g = build(family::Cubelike{spec});
  const Spectrum s = eigendecompose(g);
  std::vector<std::uint32_t> out;
  for (std::uint32_t x = 0; x < g.order(); ++x)
    if (x != source && fidelity(s, source, x, t) >= 1.0 - tol) out.push_back(x);
  return out;
}

Certificate certify(const CubelikeSpec& spec, double tol) {
  Certificate c;
  c.prediction = predictPst(spec);
  const Graph g = build(family::Cubelike{spec});
  const Spectrum s = eigendecompose(g);
  if (c.prediction && c.prediction->target) {
    c.target = c.prediction->target;
    c.fidelity = fidelity(s, 0, *c.target, c.prediction->time);
    c.certified = c.fidelity >= 1.0 - tol;
    return c;
  }
  const double t = std::numbers::pi / 4;
  double best = 0.0;
  std::optional<std::uint32_t> found;
  for (std::uint32_t x = 1; x < g.order(); ++x) {
    const double f = fidelity(s, 0, x, t);
    if (f > best) {
      best = f;
      if (f >= 1.0 - tol) found = x;
    }
  }
  c.fidelity = best;
  c.target = found;
  c.certified = c.prediction ? found.has_value() : !found.has_value();
  return c;
}

std::uint32_t parseBits(std::string_view bits) {
  if (bits.empty() || bits.size() > CubelikeSpec::kMaxDimension)
    throw InputError("bit string must have 1.." + std::to_string(CubelikeSpec::kMaxDimension) +
                     " characters");
  std::uint32_t v = 0;
  for (char ch : bits) {
    if (ch != '0' && ch != '1') throw InputError("invalid bit string '" + std::string(bits) + "'");
    v = (v << 1) | static_cast<std::uint32_t>(ch == '1');
  }
  return v;
}

std::string formatBits(std::uint32_t value, unsigned d) {
  std::string s(d, '0');
  for (unsigned i = 0; i < d; ++i)
    if ((value >> (d - 1 - i)) & 1u) s[i] = '1';
  return s;
}

CubelikeSpec parseGenerators(std::string_view list) {
  CubelikeSpec spec;
  std::size_t start = 0;
  while (start <= list.size()) {
    const std::size_t comma = list.find(',', start);
    const std::string_view token =
        list.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    if (spec.d == 0) spec.d = static_cast<unsigned>(token.size());
    else if (token.size() != spec.d) throw InputError("generators must have equal length");
    spec.generators.push_back(parseBits(token));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  spec.validate();
  return spec;
}

std::string certificateToJson(const CubelikeSpec& spec, const Certificate& c) {
  std::ostringstream os;
  os << "{\"omega\": \"" << formatBits(omega(spec), spec.d) << "\", \"time\": ";
  if (c.prediction) os << io::formatReal(c.prediction->time);
  else os << "null";
  os << ", \"target\": ";
  if (c.target) os << '"' << formatBits(*c.target, spec.d) << '"';
  else os << "null";
  os << ", \"fidelity\": " << io::formatReal(c.fidelity)
     << ", \"certified\": " << (c.certified ? "true" : "false") << "}\n";
  return os.str();
}

}  // namespace pstlab::cubelike
