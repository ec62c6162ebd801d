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

#include "pstlab/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <numeric>

#include "pstlab/errors.hpp"

namespace pstlab {

double Spectrum::orthogonalityResidual() const {
  const std::size_t n = size();
  double worst = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      double dot = 0.0;
      for (std::size_t r = 0; r < n; ++r) dot += eigenvectors(r, i) * eigenvectors(r, j);
      worst = std::max(worst, std::abs(dot - (i == j ? 1.0 : 0.0)));
    }
  return worst;
}

double Spectrum::reconstructionResidual(const Matrix& a) const {
  const std::size_t n = size();
  double worst = 0.0;
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      double s = 0.0;
      for (std::size_t j = 0; j < n; ++j)
        s += eigenvectors(r, j) * eigenvalues[j] * eigenvectors(c, j);
      worst = std::max(worst, std::abs(a(r, c) - s));
    }
  return worst;
}

double Propagator::unitarityResidual() const {
  const ComplexMatrix prod = matrix.adjoint() * matrix;
  return maxAbsDiff(prod, toComplex(Matrix::identity(matrix.rows())));
}

Spectrum eigendecompose(const Matrix& input, const JacobiOptions& options) {
  const std::size_t n = input.rows();
  if (input.cols() != n) throw InputError("eigendecompose: matrix must be square");
  Matrix a = input;
  Matrix v = Matrix::identity(n);
  const double threshold = options.relativeThreshold * input.frobenius();

  auto offNorm = [&] {
    double s = 0.0;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) s += a(p, q) * a(p, q);
    return std::sqrt(2.0 * s);
  };

  bool converged = false;
  for (int sweep = 0; sweep <= options.maxSweeps; ++sweep) {
    if (offNorm() <= threshold) {
      converged = true;
      break;
    }
    if (sweep == options.maxSweeps) break;
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        const double app = a(p, p), aqq = a(q, q);
        // Negligible against both diagonal entries: drop it.
        if (sweep > 3 && std::abs(app) + 100.0 * std::abs(apq) == std::abs(app) &&
            std::abs(aqq) + 100.0 * std::abs(apq) == std::abs(aqq)) {
          a(p, q) = a(q, p) = 0.0;
          continue;
        }
        const double theta = (aqq - app) / (2.0 * apq);
        double t;
        if (std::abs(theta) > 1e150) {
          t = 0.5 / theta;
        } else {
          t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
          if (theta < 0.0) t = -t;
        }
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        a(p, p) = app - t * apq;
        a(q, q) = aqq + t * apq;
        a(p, q) = a(q, p) = 0.0;
        for (std::size_t r = 0; r < n; ++r) {
          if (r == p || r == q) continue;
          const double g = a(r, p), h = a(r, q);
          const double np = c * g - s * h;
          const double nq = s * g + c * h;
          a(r, p) = a(p, r) = np;
          a(r, q) = a(q, r) = nq;
        }
        for (std::size_t r = 0; r < n; ++r) {
          const double g = v(r, p), h = v(r, q);
          v(r, p) = c * g - s * h;
          v(r, q) = s * g + c * h;
        }
      }
    }
  }
  if (!converged)
    throw NumericError("eigendecompose: Jacobi sweeps did not converge within " +
                       std::to_string(options.maxSweeps) + " sweeps");

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return a(i, i) < a(j, j); });
  Spectrum out{std::vector<double>(n), Matrix(n, n)};
  for (std::size_t j = 0; j < n; ++j) {
    out.eigenvalues[j] = a(order[j], order[j]);
    for (std::size_t r = 0; r < n; ++r) out.eigenvectors(r, j) = v(r, order[j]);
  }
  return out;
}

Spectrum eigendecompose(const Graph& g, const JacobiOptions& options) {
  return eigendecompose(g.adjacency(), options);
}

Propagator propagator(const Spectrum& spectrum, double t) {
  if (!std::isfinite(t)) throw InputError("propagator: time must be finite");
  const std::size_t n = spectrum.size();
  std::vector<double> cs(n), sn(n);
  for (std::size_t j = 0; j < n; ++j) {
    cs[j] = std::cos(spectrum.eigenvalues[j] * t);
    sn[j] = -std::sin(spectrum.eigenvalues[j] * t);
  }
  Matrix re(n, n), im(n, n);
  const Matrix& v = spectrum.eigenvectors;
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = r; c < n; ++c) {
      double sr = 0.0, si = 0.0;
      for (std::size_t j = 0; j < n; ++j) {
        const double w = v(r, j) * v(c, j);
        sr += cs[j] * w;
        si += sn[j] * w;
      }
      re(r, c) = re(c, r) = sr;
      im(r, c) = im(c, r) = si;
    }
  return {ComplexMatrix(std::move(re), std::move(im)), t};
}

Complex amplitude(const Spectrum& spectrum, Vertex a, Vertex b, double t) {
  Complex z;
  for (std::size_t j = 0; j < spectrum.size(); ++j) {
    const double w = spectrum.eigenvectors(b, j) * spectrum.eigenvectors(a, j);
    z += w * Complex::expNegI(spectrum.eigenvalues[j] * t);
  }
  return z;
}

Complex amplitudeDerivative(const Spectrum& spectrum, Vertex a, Vertex b, double t) {
  Complex z;
  for (std::size_t j = 0; j < spectrum.size(); ++j) {
    const double lambda = spectrum.eigenvalues[j];
    const double w = spectrum.eigenvectors(b, j) * spectrum.eigenvectors(a, j) * lambda;
    z += w * (Complex{0.0, -1.0} * Complex::expNegI(lambda * t));
  }
  return z;
}

double fidelity(const Spectrum& spectrum, Vertex a, Vertex b, double t) {
  if (a >= spectrum.size() || b >= spectrum.size())
    throw InputError("fidelity: vertex index out of range");
  if (!std::isfinite(t)) throw InputError("fidelity: time must be finite");
  return std::min(amplitude(spectrum, a, b, t).abs(), 1.0 + 1e-12);
}

double fidelity(const Graph& g, Vertex a, Vertex b, double t) {
  g.checkVertex(a);
  g.checkVertex(b);
  return fidelity(*SpectrumCache::global().get(g), a, b, t);
}

namespace {

std::uint64_t hashMatrix(const Matrix& m) {
  std::uint64_t h = 1469598103934665603ull;
  for (double x : m.data()) {
    std::uint64_t bits;
    std::memcpy(&bits, &x, sizeof bits);
    h = (h ^ bits) * 1099511628211ull;
  }
  return h ^ m.rows();
}

}  // namespace

SpectrumCache& SpectrumCache::global() {
  static SpectrumCache cache;
  return cache;
}

std::shared_ptr<const Spectrum> SpectrumCache::get(const Graph& g) {
  const std::uint64_t key = hashMatrix(g.adjacency());
  {
    std::shared_lock lock(mutex_);
    if (!enabled_) {
      lock.unlock();
      return std::make_shared<const Spectrum>(eigendecompose(g));
    }
    auto [lo, hi] = entries_.equal_range(key);
    for (auto it = lo; it != hi; ++it)
      if (it->second.adjacency == g.adjacency()) return it->second.spectrum;
  }
  auto spectrum = std::make_shared<const Spectrum>(eigendecompose(g));
  std::unique_lock lock(mutex_);
  if (entries_.size() > 256) entries_.clear();
  entries_.emplace(key, Entry{g.adjacency(), spectrum});
  return spectrum;
}

void SpectrumCache::setEnabled(bool enabled) {
  std::unique_lock lock(mutex_);
  enabled_ = enabled;
  if (!enabled) entries_.clear();
}

bool SpectrumCache::enabled() const {
  std::shared_lock lock(mutex_);
  return enabled_;
}

void SpectrumCache::clear() {
  std::unique_lock lock(mutex_);
  entries_.clear();
}

namespace {

Spectrum sortedSpectrum(std::vector<std::pair<double, std::vector<double>>> pairs) {
  std::stable_sort(pairs.begin(), pairs.end(),
                   [](const auto& x, const auto& y) { return x.first < y.first; });
  const std::size_t n = pairs.size();
  Spectrum s{std::vector<double>(n), Matrix(n, n)};
  for (std::size_t j = 0; j < n; ++j) {
    s.eigenvalues[j] = pairs[j].first;
    for (std::size_t r = 0; r < n; ++r) s.eigenvectors(r, j) = pairs[j].second[r];
  }
  return s;
}

void checkPositive(double a, double b) {
  if (!(a > 0.0) || !(b > 0.0)) throw InputError("analytic spectrum: a and b must be positive");
}

}  // namespace

P4Spectrum p4Spectrum(double a, double b) {
  checkPositive(a, b);
  P4Spectrum p{};
  p.kPlus = 0.5 * (a + b);
  p.kMinus = 0.5 * (a - b);
  p.deltaPlus = std::sqrt(p.kPlus * p.kPlus + 1.0);
  p.deltaMinus = std::sqrt(p.kMinus * p.kMinus + 1.0);
  p.alphaPlus = p.kPlus + p.deltaPlus;
  p.alphaMinus = p.kPlus - p.deltaPlus;
  p.betaPlus = p.kMinus + p.deltaMinus;
  p.betaMinus = p.kMinus - p.deltaMinus;
  p.mPlus = std::sqrt(2.0 * (1.0 + p.alphaPlus * p.alphaPlus));
  p.mMinus = std::sqrt(2.0 * (1.0 + p.alphaMinus * p.alphaMinus));
  p.nPlus = std::sqrt(2.0 * (1.0 + p.betaPlus * p.betaPlus));
  p.nMinus = std::sqrt(2.0 * (1.0 + p.betaMinus * p.betaMinus));

  auto sym = [](double alpha, double m) {
    return std::vector<double>{1.0 / m, alpha / m, alpha / m, 1.0 / m};
  };
  auto anti = [](double beta, double nn) {
    return std::vector<double>{1.0 / nn, beta / nn, -beta / nn, -1.0 / nn};
  };
  p.spectrum = sortedSpectrum({{p.alphaPlus, sym(p.alphaPlus, p.mPlus)},
                               {p.alphaMinus, sym(p.alphaMinus, p.mMinus)},
                               {p.betaPlus, anti(p.betaPlus, p.nPlus)},
                               {p.betaMinus, anti(p.betaMinus, p.nMinus)}});
  return p;
}

P5Spectrum p5Spectrum(double a, double b) {
  checkPositive(a, b);
  P5Spectrum p{};
  p.delta = std::sqrt(a * a + 2.0 * b * b);
  const double zeroNorm = std::sqrt(2.0 + (a * a) / (b * b));
  const double r = p.delta / a;
  const double deltaNorm = std::sqrt(2.0 + 2.0 * r * r + 4.0 * b * b / (a * a));
  auto scaled = [](std::vector<double> v, double norm) {
    for (double& x : v) x /= norm;
    return v;
  };
  p.spectrum = sortedSpectrum({
      {0.0, scaled({1.0, 0.0, -a / b, 0.0, 1.0}, zeroNorm)},
      {a, scaled({-1.0, -1.0, 0.0, 1.0, 1.0}, 2.0)},
      {-a, scaled({1.0, -1.0, 0.0, 1.0, -1.0}, 2.0)},
      {p.delta, scaled({1.0, r, 2.0 * b / a, r, 1.0}, deltaNorm)},
      {-p.delta, scaled({1.0, -r, 2.0 * b / a, -r, 1.0}, deltaNorm)},
  });
  return p;
}

const char* toString(P4Condition c) {
  switch (c) {
    case P4Condition::ConditionA: return "ConditionA";
    case P4Condition::ConditionB: return "ConditionB";
    case P4Condition::Neither: return "Neither";
  }
  return "?";
}

P4Condition pstConditionP4(double a, double b, double t, double tol) {
  const P4Spectrum p = p4Spectrum(a, b);
  const double product = std::cos(t * p.deltaPlus) * std::cos(t * p.deltaMinus);
  if (std::abs(product - 1.0) <= tol && std::abs(std::abs(std::sin(0.5 * t * b)) - 1.0) <= tol)
    return P4Condition::ConditionA;
  if (std::abs(product + 1.0) <= tol && std::abs(std::abs(std::cos(0.5 * t * b)) - 1.0) <= tol)
    return P4Condition::ConditionB;
  return P4Condition::Neither;
}

bool deletedCospectral(const Graph& g, Vertex a, Vertex b, double tol) {
  g.checkVertex(a);
  g.checkVertex(b);
  if (a == b) throw InputError("deletedCospectral: vertices must differ");
  const Spectrum sa = eigendecompose(deleteVertex(g, a));
  const Spectrum sb = eigendecompose(deleteVertex(g, b));
  for (std::size_t j = 0; j < sa.size(); ++j)
    if (std::abs(sa.eigenvalues[j] - sb.eigenvalues[j]) > tol) return false;
  return true;
}

}  // namespace pstlab
