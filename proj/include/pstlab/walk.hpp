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

#include <optional>
#include <string>
#include <vector>

#include "pstlab/graph.hpp"
#include "pstlab/partition.hpp"
#include "pstlab/spectral.hpp"

namespace pstlab {

struct FidelityPeak {
  double t;
  double fidelity;
};

/// Fidelity on a uniform grid over [0, t_max] plus the refined interior local
/// maxima, sorted by fidelity (descending).
struct FidelitySeries {
  std::vector<double> times;
  std::vector<double> fidelities;
  std::vector<FidelityPeak> peaks;

  [[nodiscard]] std::optional<FidelityPeak> best() const;
};

struct ScanOptions {
  int goldenIterations = 200;
  double timeTolerance = 1e-12;
  unsigned threads = 0;  ///< 0 = hardware concurrency
};

FidelitySeries fidelityScan(const Graph& g, Vertex a, Vertex b, double tMax, std::size_t steps,
                            const ScanOptions& options = {});
FidelitySeries fidelityScan(const Spectrum& spectrum, Vertex a, Vertex b, double tMax,
                            std::size_t steps, const ScanOptions& options = {});

/// Maximizes fidelity on [lo, hi] (golden-section, then a bisection on the
/// derivative of |amplitude|² when it changes sign on the bracket).
FidelityPeak refinePeak(const Spectrum& spectrum, Vertex a, Vertex b, double lo, double hi,
                        const ScanOptions& options = {});

inline constexpr double kPstTolerance = 1e-8;

bool verifyPst(const Graph& g, Vertex a, Vertex b, double t, double tol = kPstTolerance);
bool isPeriodic(const Graph& g, Vertex a, double t, double tol = kPstTolerance);

/// max_t |⟨b|e^{-itA(G)}|a⟩ - ⟨π(b)|e^{-itA(G/π)}|π(a)⟩| over complex amplitudes.
/// a and b must sit in singleton cells of the equitable partition π.
double verifyEquivalence(const Graph& g, const Partition& p, Vertex a, Vertex b,
                         const std::vector<double>& times);

/// Name of a documented closed-form time within `tol` of t (π/4, π/2, π/√2,
/// √15·π/2, ...), if any.
std::optional<std::string> symbolicTime(double t, double tol = 1e-9);

/// CSV with header "t,fidelity", 17 significant digits per value.
std::string toCsv(const FidelitySeries& series);
/// [{"t": ..., "fidelity": ...}, ...]
std::string peaksToJson(const std::vector<FidelityPeak>& peaks);

}  // namespace pstlab
