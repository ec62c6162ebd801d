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
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <unordered_map>
#include <vector>

#include "pstlab/graph.hpp"
#include "pstlab/linalg.hpp"

namespace pstlab {

/// Eigenvalues ascending; column j of `eigenvectors` is a unit eigenvector for
/// eigenvalue j.
struct Spectrum {
  std::vector<double> eigenvalues;
  Matrix eigenvectors;

  [[nodiscard]] std::size_t size() const { return eigenvalues.size(); }
  /// max |VᵀV - I|
  [[nodiscard]] double orthogonalityResidual() const;
  /// max |A - V·diag(λ)·Vᵀ|
  [[nodiscard]] double reconstructionResidual(const Matrix& a) const;
};

/// U(t) = exp(-itA).
struct Propagator {
  ComplexMatrix matrix;
  double time = 0.0;

  /// max |U†U - I|
  [[nodiscard]] double unitarityResidual() const;
};

struct JacobiOptions {
  double relativeThreshold = 1e-13;  ///< stop when off-diagonal norm <= this·‖A‖_F
  int maxSweeps = 100;
};

/// Cyclic Jacobi eigendecomposition of a real symmetric matrix. Throws
/// NumericError when the sweep budget runs out.
Spectrum eigendecompose(const Matrix& a, const JacobiOptions& options = {});
Spectrum eigendecompose(const Graph& g, const JacobiOptions& options = {});

Propagator propagator(const Spectrum& spectrum, double t);

/// ⟨b|exp(-itA)|a⟩
Complex amplitude(const Spectrum& spectrum, Vertex a, Vertex b, double t);
/// d/dt ⟨b|exp(-itA)|a⟩
Complex amplitudeDerivative(const Spectrum& spectrum, Vertex a, Vertex b, double t);

/// |⟨b|exp(-itA)|a⟩|
double fidelity(const Spectrum& spectrum, Vertex a, Vertex b, double t);
double fidelity(const Graph& g, Vertex a, Vertex b, double t);

/// Memo of decompositions keyed by adjacency contents. Lookups take a shared
/// lock; a disabled cache always recomputes.
class SpectrumCache {
 public:
  static SpectrumCache& global();

  std::shared_ptr<const Spectrum> get(const Graph& g);
  void setEnabled(bool enabled);
  [[nodiscard]] bool enabled() const;
  void clear();

 private:
  struct Entry {
    Matrix adjacency;
    std::shared_ptr<const Spectrum> spectrum;
  };
  mutable std::shared_mutex mutex_;
  std::unordered_multimap<std::uint64_t, Entry> entries_;
  bool enabled_ = true;
};

/// Closed-form eigenpairs of the weighted path P4(a,b) (unit outer edges,
/// loops a on the middle vertices, middle edge b).
struct P4Spectrum {
  double kPlus, kMinus;          // (a ± b)/2
  double deltaPlus, deltaMinus;  // sqrt(k±² + 1)
  double alphaPlus, alphaMinus;  // k₊ ± Δ₊
  double betaPlus, betaMinus;    // k₋ ± Δ₋
  double mPlus, mMinus;          // M±² = 2(1 + α±²)
  double nPlus, nMinus;          // N±² = 2(1 + β±²)
  Spectrum spectrum;
};
P4Spectrum p4Spectrum(double a, double b);

/// Closed-form eigenpairs of P5(a,b) (outer edges a, inner edges b).
/// Eigenvalues 0, ±a, ±Δ with Δ = sqrt(a² + 2b²), which equals a·sqrt(1 + b²)
/// on the a = √2 branch.
struct P5Spectrum {
  double delta;
  Spectrum spectrum;
};
P5Spectrum p5Spectrum(double a, double b);

enum class P4Condition { ConditionA, ConditionB, Neither };

const char* toString(P4Condition c);

/// Sufficient antipodal-PST conditions for P4(a,b) at time t:
///   (A) cos(tΔ₊)cos(tΔ₋) = +1 and sin(tb/2) = ±1
///   (B) cos(tΔ₊)cos(tΔ₋) = -1 and cos(tb/2) = ±1
/// each equality checked to `tol`.
P4Condition pstConditionP4(double a, double b, double t, double tol = 1e-8);

/// Sorted spectra of G∖a and G∖b agree entrywise within `tol`.
bool deletedCospectral(const Graph& g, Vertex a, Vertex b, double tol = 1e-8);

}  // namespace pstlab
