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

#include "pstlab/walk.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <thread>

#include "pstlab/errors.hpp"
#include "pstlab/graph_json.hpp"

namespace pstlab {

std::optional<FidelityPeak> FidelitySeries::best() const {
  if (peaks.empty()) return std::nullopt;
  return peaks.front();
}

namespace {

// d/dt |amp|² = 2 Re(conj(amp)·amp')
double slope(const Spectrum& s, Vertex a, Vertex b, double t) {
  const Complex z = amplitude(s, a, b, t);
  const Complex dz = amplitudeDerivative(s, a, b, t);
  return 2.0 * (z.re * dz.re + z.im * dz.im);
}

}  // namespace

FidelityPeak refinePeak(const Spectrum& spectrum, Vertex a, Vertex b, double lo, double hi,
                        const ScanOptions& options) {
  const double invPhi = (std::sqrt(5.0) - 1.0) / 2.0;
  auto f = [&](double t) { return fidelity(spectrum, a, b, t); };

  double x0 = lo, x3 = hi;
  double x1 = x3 - invPhi * (x3 - x0), x2 = x0 + invPhi * (x3 - x0);
  double f1 = f(x1), f2 = f(x2);
  for (int it = 0; it < options.goldenIterations && x3 - x0 > options.timeTolerance; ++it) {
    if (f1 >= f2) {
      x3 = x2;
      x2 = x1;
      f2 = f1;
      x1 = x3 - invPhi * (x3 - x0);
      f1 = f(x1);
    } else {
      x0 = x1;
      x1 = x2;
      f1 = f2;
      x2 = x0 + invPhi * (x3 - x0);
      f2 = f(x2);
    }
  }
  FidelityPeak best{0.5 * (x0 + x3), f(0.5 * (x0 + x3))};

  // Near the top |amp| is flat to rounding, so the time is pinned down by the
  // sign change of the derivative instead.
  double l = lo, h = hi;
  if (slope(spectrum, a, b, l) > 0.0 && slope(spectrum, a, b, h) < 0.0) {
    for (int it = 0; it < options.goldenIterations && h - l > options.timeTolerance; ++it) {
      const double mid = 0.5 * (l + h);
      if (slope(spectrum, a, b, mid) > 0.0) l = mid;
      else h = mid;
    }
    const double t = 0.5 * (l + h);
    const double ft = f(t);
    if (ft >= best.fidelity - 1e-15) best = {t, ft};
  }
  return best;
}

FidelitySeries fidelityScan(const Spectrum& spectrum, Vertex a, Vertex b, double tMax,
                            std::size_t steps, const ScanOptions& options) {
  if (!(tMax > 0.0) || !std::isfinite(tMax)) throw InputError("scan: t_max must be positive");
  if (steps < 2) throw InputError("scan: need at least 2 grid points");
  if (a >= spectrum.size() || b >= spectrum.size())
    throw InputError("scan: vertex index out of range");

  FidelitySeries out;
  out.times.resize(steps);
  out.fidelities.resize(steps);
  const double dt = tMax / static_cast<double>(steps - 1);
  for (std::size_t i = 0; i < steps; ++i) out.times[i] = static_cast<double>(i) * dt;
  out.times.back() = tMax;

  unsigned threads = options.threads ? options.threads : std::thread::hardware_concurrency();
  threads = std::clamp<unsigned>(threads, 1, 16);
  auto work = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i)
      out.fidelities[i] = fidelity(spectrum, a, b, out.times[i]);
  };
  if (threads == 1 || steps < 1024) {
    work(0, steps);
  } else {
    std::vector<std::jthread> pool;
    const std::size_t chunk = (steps + threads - 1) / threads;
    for (unsigned w = 0; w < threads; ++w) {
      const std::size_t begin = w * chunk;
      const std::size_t end = std::min(steps, begin + chunk);
      if (begin < end) pool.emplace_back(work, begin, end);
    }
  }

  const auto& f = out.fidelities;
  for (std::size_t i = 1; i + 1 < steps; ++i) {
    if (!(f[i] > f[i - 1] && f[i] >= f[i + 1])) continue;
    FidelityPeak p = refinePeak(spectrum, a, b, out.times[i - 1], out.times[i + 1], options);
    if (p.fidelity < f[i]) p = {out.times[i], f[i]};
    out.peaks.push_back(p);
  }
  std::stable_sort(out.peaks.begin(), out.peaks.end(),
                   [](const FidelityPeak& x, const FidelityPeak& y) {
                     return x.fidelity > y.fidelity;
                   });
  return out;
}

FidelitySeries fidelityScan(const Graph& g, Vertex a, Vertex b, double tMax, std::size_t steps,
                            const ScanOptions& options) {
  g.checkVertex(a);
  g.checkVertex(b);
  return fidelityScan(*SpectrumCache::global().get(g), a, b, tMax, steps, options);
}

bool verifyPst(const Graph& g, Vertex a, Vertex b, double t, double tol) {
  return fidelity(g, a, b, t) >= 1.0 - tol;
}

bool isPeriodic(const Graph& g, Vertex a, double t, double tol) {
  return fidelity(g, a, a, t) >= 1.0 - tol;
}

double verifyEquivalence(const Graph& g, const Partition& p, Vertex a, Vertex b,
                         const std::vector<double>& times) {
  g.checkVertex(a);
  g.checkVertex(b);
  if (p.order() != g.order()) throw InputError("verifyEquivalence: partition does not cover G");
  if (!p.isSingleton(a) || !p.isSingleton(b))
    throw PreconditionError("verifyEquivalence: endpoints must lie in singleton cells");
  const QuotientResult q = quotient(g, p);
  const auto full = SpectrumCache::global().get(g);
  const auto reduced = SpectrumCache::global().get(q.quotient);
  double worst = 0.0;
  for (double t : times) {
    const Complex lhs = amplitude(*full, a, b, t);
    const Complex rhs = amplitude(*reduced, p.cellOf(a), p.cellOf(b), t);
    worst = std::max(worst, (lhs - rhs).abs());
  }
  return worst;
}

std::optional<std::string> symbolicTime(double t, double tol) {
  constexpr double pi = std::numbers::pi;
  const double r2 = std::numbers::sqrt2;
  const double r15 = std::sqrt(15.0);
  const std::pair<const char*, double> candidates[] = {
      {"π/4", pi / 4},          {"π/2", pi / 2},          {"3π/4", 3 * pi / 4},
      {"π", pi},                {"3π/2", 3 * pi / 2},     {"2π", 2 * pi},
      {"π/√2", pi / r2},        {"√2·π", r2 * pi},        {"√15·π/2", r15 * pi / 2},
      {"√15·π/4", r15 * pi / 4}, {"√35·π/6", std::sqrt(35.0) * pi / 6},
      {"√63·π/8", std::sqrt(63.0) * pi / 8},
  };
  for (const auto& [name, value] : candidates)
    if (std::abs(t - value) <= tol) return name;
  return std::nullopt;
}

std::string toCsv(const FidelitySeries& series) {
  std::ostringstream os;
  os << "t,fidelity\n";
  for (std::size_t i = 0; i < series.times.size(); ++i)
    os << io::formatReal(series.times[i]) << ',' << io::formatReal(series.fidelities[i]) << '\n';
  return os.str();
}

std::string peaksToJson(const std::vector<FidelityPeak>& peaks) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < peaks.size(); ++i)
    os << (i ? ",\n " : "") << "{\"t\": " << io::formatReal(peaks[i].t)
       << ", \"fidelity\": " << io::formatReal(peaks[i].fidelity) << '}';
  os << "]\n";
  return os.str();
}

}  // namespace pstlab
