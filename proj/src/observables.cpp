// Copyright 2026 The dtcsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "dtc/observables.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>

#include <unsupported/Eigen/FFT>

namespace dtc {

namespace {

constexpr double kUniformTolerance = 1e-9;
constexpr std::size_t kMinSamples = 16;
constexpr int kDefaultSamplesPerPeriod = 32;

// Diagonal of sum_i sigma_i^z in the product basis.
Eigen::VectorXd sigma_z_diagonal(const HilbertSpace& space) {
  Eigen::VectorXd d(space.dim());
  for (Index b = 0; b < space.dim(); ++b) {
    int ups = 0;
    for (int s = 1; s <= space.n_sites(); ++s) {
      if (((b >> space.bit_of(s)) & 1) == 0) ++ups;
    }
    d[b] = 2 * ups - space.n_sites();
  }
  return d;
}

std::size_t next_power_of_two(std::size_t n) {
  std::size_t p = 1;
  while (p < n) p <<= 1;
  return p;
}

}  // namespace

double raw_magnetization(const StateVector& psi) {
  const Eigen::VectorXd z = sigma_z_diagonal(psi.space());
  return (psi.amplitudes().cwiseAbs2().array() * z.array()).sum();
}

double raw_magnetization(const DensityMatrix& rho) {
  const Eigen::VectorXd z = sigma_z_diagonal(rho.space());
  return (rho.matrix().diagonal().real().array() * z.array()).sum();
}

double magnetization(const StateVector& psi) { return 0.5 * raw_magnetization(psi); }
double magnetization(const DensityMatrix& rho) { return 0.5 * raw_magnetization(rho); }

double overlap(const StateVector& psi0, const StateVector& psi) {
  if (!(psi0.space() == psi.space())) throw std::invalid_argument("overlap: dimension mismatch");
  return std::norm(psi0.amplitudes().dot(psi.amplitudes()));
}

double overlap(const StateVector& psi0, const DensityMatrix& rho) {
  if (!(psi0.space() == rho.space())) throw std::invalid_argument("overlap: dimension mismatch");
  const Vector& a = psi0.amplitudes();
  return a.dot(rho.matrix() * a).real();
}

// --- time series ------------------------------------------------------------

void TimeSeries::validate() const {
  if (times.size() != values.size()) {
    throw std::invalid_argument("time series has mismatched lengths");
  }
  for (std::size_t k = 1; k < times.size(); ++k) {
    if (!(times[k] > times[k - 1])) {
      throw std::invalid_argument("time series times are not strictly increasing");
    }
  }
  if (!(driving_period > 0.0)) throw std::invalid_argument("driving period must be positive");
}

bool TimeSeries::is_uniform() const {
  if (times.size() < 2) return true;
  const double h = (times.back() - times.front()) / static_cast<double>(times.size() - 1);
  for (std::size_t k = 1; k < times.size(); ++k) {
    if (std::abs(times[k] - times[k - 1] - h) > kUniformTolerance * std::max(1.0, h)) {
      return false;
    }
  }
  return true;
}

TimeSeries resample_uniform(const TimeSeries& series, int samples_per_period) {
  series.validate();
  if (series.times.size() < 2) throw std::invalid_argument("cannot resample fewer than 2 points");
  if (samples_per_period < 1) throw std::invalid_argument("samples_per_period must be >= 1");
  const double h = series.driving_period / samples_per_period;
  const double t0 = series.times.front();
  const double span = series.times.back() - t0;
  // Number of grid points in [t0, t_end), excluding an end point that lies on the grid.
  const auto count = static_cast<std::size_t>(std::ceil(span / h - 1e-9));
  TimeSeries out;
  out.driving_period = series.driving_period;
  std::size_t j = 0;
  for (std::size_t k = 0; k < count; ++k) {
    const double t = t0 + h * static_cast<double>(k);
    while (j + 2 < series.times.size() && series.times[j + 1] <= t) ++j;
    const double ta = series.times[j];
    const double tb = series.times[j + 1];
    const double w = std::clamp((t - ta) / (tb - ta), 0.0, 1.0);
    out.times.push_back(t);
    out.values.push_back((1.0 - w) * series.values[j] + w * series.values[j + 1]);
  }
  return out;
}

Spectrum spectral_density(const TimeSeries& input) {
  input.validate();
  if (input.times.size() < kMinSamples) {
    throw std::invalid_argument("spectral density needs at least 16 samples");
  }
  const TimeSeries series =
      input.is_uniform() ? input : resample_uniform(input, kDefaultSamplesPerPeriod);
  if (series.times.size() < kMinSamples) {
    throw std::invalid_argument("spectral density needs at least 16 samples");
  }
  const double h =
      (series.times.back() - series.times.front()) / static_cast<double>(series.times.size() - 1);
  const std::size_t n = next_power_of_two(series.values.size());
  std::vector<double> padded(series.values);
  padded.resize(n, 0.0);

  Eigen::FFT<double> fft;
  std::vector<std::complex<double>> bins;
  fft.fwd(bins, padded);

  Spectrum s;
  s.sample_interval = h;
  s.n_points = n;
  s.bin_width = series.driving_period / (static_cast<double>(n) * h);
  for (std::size_t k = 0; k <= n / 2; ++k) {
    s.frequencies.push_back(static_cast<double>(k) * s.bin_width);
    s.density.push_back(std::norm(h * bins[k]));
  }
  return s;
}

double density_at(const Spectrum& spectrum, double frequency) {
  const auto& f = spectrum.frequencies;
  if (f.empty() || frequency < f.front() || frequency > f.back()) {
    throw std::invalid_argument("frequency outside the spectrum");
  }
  const auto it = std::lower_bound(f.begin(), f.end(), frequency);
  const auto k = static_cast<std::size_t>(it - f.begin());
  if (std::abs(f[k] - frequency) <= 1e-12 || k == 0) return spectrum.density[k];
  const double w = (frequency - f[k - 1]) / (f[k] - f[k - 1]);
  return (1.0 - w) * spectrum.density[k - 1] + w * spectrum.density[k];
}

PeakReport subharmonic_metrics(const Spectrum& spectrum, double f_d) {
  namespace pc = peak_criteria;
  if (!(f_d > 0.0)) throw std::invalid_argument("driving frequency must be positive");
  const std::size_t n = spectrum.frequencies.size();
  if (n < 3 || spectrum.frequencies.back() < f_d - 1e-12) {
    throw std::invalid_argument("spectrum does not cover [0, f_D]");
  }
  const double half = 0.5 * f_d;
  const double edge = 1e-12 * f_d;

  PeakReport r;
  double band_total = 0.0;
  double window = 0.0;
  std::size_t best = 0;
  for (std::size_t k = 1; k < n; ++k) {
    const double f = spectrum.frequencies[k];
    if (f > f_d + edge) break;
    const double d = spectrum.density[k];
    band_total += d;
    if (std::abs(f - half) <= pc::kWindowHalfWidth * f_d + edge) window += d;
    if (best == 0 || d > spectrum.density[best]) best = k;
  }
  r.peak_frequency = spectrum.frequencies[best] / f_d;
  r.peak_height = spectrum.density[best];
  r.subharmonic_weight = band_total > 0.0 ? window / band_total : 0.0;

  std::vector<std::size_t> maxima;
  for (std::size_t k = 1; k + 1 < n; ++k) {
    const double f = spectrum.frequencies[k];
    if (f <= pc::kSplitBandLow * f_d || f >= pc::kSplitBandHigh * f_d) continue;
    const double d = spectrum.density[k];
    if (d > spectrum.density[k - 1] && d >= spectrum.density[k + 1]) maxima.push_back(k);
  }
  std::stable_sort(maxima.begin(), maxima.end(), [&](std::size_t a, std::size_t b) {
    return spectrum.density[a] > spectrum.density[b];
  });
  if (maxima.size() >= 2) {
    const double fa = spectrum.frequencies[maxima[0]];
    const double fb = spectrum.frequencies[maxima[1]];
    const double centre = density_at(spectrum, half);
    const double separation = std::abs(fa - fb) / f_d;
    if (separation > pc::kMinSplitSeparation &&
        spectrum.density[maxima[1]] > pc::kSplitContrast * centre) {
      r.split_detected = true;
      r.split_separation = separation;
    }
  }
  return r;
}

}  // namespace dtc
