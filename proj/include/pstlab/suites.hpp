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
#include <string>
#include <vector>

namespace pstlab::suites {

struct Check {
  std::string name;
  double residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  std::string note;
};

struct Report {
  std::string suite;
  std::uint64_t seed = 0;
  std::vector<Check> checks;

  [[nodiscard]] bool passed() const;
  [[nodiscard]] std::string toText() const;
  [[nodiscard]] std::string toJson() const;
};

inline constexpr std::uint64_t kDefaultSeed = 20140602;

/// Names accepted by run(): thm32, feder, composition, product, cubelike,
/// godsil, paths.
const std::vector<std::string>& names();

/// Throws InputError for an unknown suite name.
Report run(const std::string& suite, std::uint64_t seed = kDefaultSeed);

}  // namespace pstlab::suites
