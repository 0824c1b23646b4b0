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

#include <cmath>
#include <numeric>
#include <random>

#include <gtest/gtest.h>

#include "dtc/drive.hpp"
#include "dtc/observables.hpp"

namespace dtc {
namespace {

TimeSeries uniform_series(int n_periods, int spp, double period,
                          const std::function<double(double)>& f) {
  TimeSeries s;
  s.driving_period = period;
  for (int k = 0; k < n_periods * spp; ++k) {
    const double t = period * k / spp;
    s.times.push_back(t);
    s.values.push_back(f(t));
  }
  return s;
}

// O(n^2) transform of the same definition, with f in units of f_D.
double direct_density(const TimeSeries& s, double f_over_fd) {
  const double h = s.times[1] - s.times[0];
  Complex acc = 0.0;
  for (std::size_t j = 0; j < s.times.size(); ++j) {
    const double phase = -2.0 * kPi * f_over_fd / s.driving_period * s.times[j];
    acc += s.values[j] * std::exp(Complex(0.0, phase));
  }
  return std::norm(h * acc);
}

double non_dc_total(const Spectrum& sp) {
  return std::accumulate(sp.density.begin() + 1, sp.density.end(), 0.0);
}

TEST(Magnetization, ProductStates) {
  EXPECT_DOUBLE_EQ(magnetization(product_state(parse_spin_pattern("udud u"))), 0.5);
  EXPECT_DOUBLE_EQ(magnetization(product_state(parse_spin_pattern("dudud"))), -0.5);
  EXPECT_DOUBLE_EQ(magnetization(product_state(parse_spin_pattern("uuuuu"))), 2.5);
  EXPECT_DOUBLE_EQ(raw_magnetization(product_state(parse_spin_pattern("udud u"))), 1.0);
}

TEST(Magnetization, MatchesExpectationSumForMixedStates) {
  std::mt19937 rng(5);
  std::normal_distribution<double> d;
  const HilbertSpace s(4);
  for (int trial = 0; trial < 10; ++trial) {
    Matrix a(s.dim(), s.dim());
    for (Index i = 0; i < a.size(); ++i) a(i) = Complex(d(rng), d(rng));
    Matrix rho = a * a.adjoint();
    rho /= rho.trace();
    const DensityMatrix dm(s, rho);
    double sum = 0.0;
    for (int i = 1; i <= 4; ++i) sum += expectation(embed_single(pauli(Axis::z), i, s), dm).real();
    EXPECT_NEAR(magnetization(dm), 0.5 * sum, 1e-12);
    EXPECT_NEAR(raw_magnetization(dm), sum, 1e-12);
  }
}

TEST(Overlap, InitialAndAfterPulses) {
  const HilbertSpace s(5);
  const StateVector neel = product_state(antiferromagnetic_pattern(5));
  EXPECT_DOUBLE_EQ(overlap(neel, neel), 1.0);
  const StateVector flipped(s, global_pulse_operator(kPi, s).apply(neel));
  EXPECT_NEAR(overlap(neel, flipped), 0.0, 1e-28);
  for (double eps : {0.1, 0.1 * kPi, 1.2}) {
    const StateVector after(s, global_pulse_operator(kPi - eps, s).apply(neel));
    // Per site |<s|exp(-i theta sigma^x/2)|s>|^2 = cos^2(theta/2) = sin^2(eps/2).
    EXPECT_NEAR(overlap(neel, after), std::pow(std::sin(eps / 2), 10), 1e-14);
  }
}

TEST(Overlap, SymmetricAndMixedConsistent) {
  std::mt19937 rng(9);
  std::normal_distribution<double> d;
  const HilbertSpace s(3);
  for (int trial = 0; trial < 10; ++trial) {
    Vector a(8), b(8);
    for (Index i = 0; i < 8; ++i) {
      a[i] = Complex(d(rng), d(rng));
      b[i] = Complex(d(rng), d(rng));
    }
    const StateVector pa = StateVector::normalized(s, a);
    const StateVector pb = StateVector::normalized(s, b);
    EXPECT_NEAR(overlap(pa, pb), overlap(pb, pa), 1e-12);
    EXPECT_NEAR(overlap(pa, DensityMatrix::pure(pb)), overlap(pa, pb), 1e-12);
  }
  EXPECT_THROW(overlap(product_state(antiferromagnetic_pattern(3)),
                       product_state(antiferromagnetic_pattern(4))),
               std::invalid_argument);
}

TEST(Spectrum, MatchesDirectTransform) {
  std::mt19937 rng(1);
  std::normal_distribution<double> d;
  const TimeSeries s = uniform_series(8, 8, 2.0, [&](double) { return d(rng); });
  const Spectrum sp = spectral_density(s);
  ASSERT_EQ(sp.n_points, 64u);
  ASSERT_EQ(sp.frequencies.size(), 33u);
  EXPECT_DOUBLE_EQ(sp.bin_width, 1.0 / 8);
  for (std::size_t k = 0; k < sp.frequencies.size(); ++k) {
    EXPECT_NEAR(sp.density[k], direct_density(s, sp.frequencies[k]),
                1e-10 * (1.0 + sp.density[k]));
    EXPECT_GE(sp.density[k], 0.0);
  }
}

TEST(Spectrum, ZeroPadsToPowerOfTwo) {
  const TimeSeries s = uniform_series(5, 4, 1.0, [](double t) { return std::sin(t); });
  const Spectrum sp = spectral_density(s);
  EXPECT_EQ(sp.n_points, 32u);
  // Padding leaves the continuous-frequency definition intact on the finer grid.
  for (std::size_t k = 0; k < sp.frequencies.size(); ++k) {
    EXPECT_NEAR(sp.density[k], direct_density(s, sp.frequencies[k]), 1e-10);
  }
}

TEST(Spectrum, PureSubharmonicTone) {
  const TimeSeries s =
      uniform_series(64, 32, 1.0, [](double t) { return std::cos(2.0 * kPi * 0.5 * t); });
  const Spectrum sp = spectral_density(s);
  EXPECT_EQ(sp.n_points, 2048u);
  const std::size_t k = 32;
  EXPECT_DOUBLE_EQ(sp.frequencies[k], 0.5);
  EXPECT_GT(sp.density[k] / non_dc_total(sp), 0.99);
  const PeakReport r = subharmonic_metrics(sp);
  EXPECT_DOUBLE_EQ(r.peak_frequency, 0.5);
  EXPECT_GT(r.subharmonic_weight, 0.99);
  EXPECT_FALSE(r.split_detected);
}

TEST(Spectrum, ConstantSeriesIsAllDc) {
  const TimeSeries s = uniform_series(16, 4, 1.0, [](double) { return 0.7; });
  const Spectrum sp = spectral_density(s);
  EXPECT_GT(sp.density[0], 0.0);
  EXPECT_LT(non_dc_total(sp), 1e-20 * sp.density[0]);
}

TEST(Spectrum, TwoToneSplit) {
  const TimeSeries s = uniform_series(64, 32, 1.0, [](double t) {
    return std::cos(2.0 * kPi * 0.45 * t) + std::cos(2.0 * kPi * 0.55 * t);
  });
  const Spectrum sp = spectral_density(s);
  const PeakReport r = subharmonic_metrics(sp);
  EXPECT_LT(r.subharmonic_weight, 0.1);
  EXPECT_TRUE(r.split_detected);
  ASSERT_TRUE(r.split_separation.has_value());
  EXPECT_NEAR(*r.split_separation, 0.1, 2.0 / 64);
  // The two peaks are equal up to leakage asymmetry.
  const double lo = *std::max_element(sp.density.begin() + 26, sp.density.begin() + 32);
  const double hi = *std::max_element(sp.density.begin() + 33, sp.density.begin() + 39);
  EXPECT_NEAR(lo / hi, 1.0, 0.05);
}

TEST(Spectrum, ParsevalForDetrendedSeries) {
  std::mt19937 rng(2);
  std::normal_distribution<double> d;
  TimeSeries s = uniform_series(64, 32, 3.0, [&](double t) { return std::sin(t) + 0.3 * d(rng); });
  const double mean = std::accumulate(s.values.begin(), s.values.end(), 0.0) / s.values.size();
  for (double& v : s.values) v -= mean;
  const Spectrum sp = spectral_density(s);
  const double df = 1.0 / (sp.n_points * sp.sample_interval);
  double lhs = 0.0;
  for (std::size_t k = 0; k < sp.density.size(); ++k) {
    const bool edge = k == 0 || k == sp.density.size() - 1;
    lhs += (edge ? 1.0 : 2.0) * sp.density[k] * df;
  }
  double ms = 0.0;
  for (double v : s.values) ms += v * v;
  ms /= s.values.size();
  const double duration = s.values.size() * sp.sample_interval;
  EXPECT_NEAR(lhs / duration, ms, 1e-6 * ms);
}

TEST(Spectrum, ResamplesNonUniformInput) {
  TimeSeries s = uniform_series(16, 32, 1.0, [](double t) { return std::cos(kPi * t); });
  // Insert an off-grid sample; interpolation must reproduce the uniform result.
  s.times.insert(s.times.begin() + 5, 0.5 * (s.times[4] + s.times[5]));
  s.values.insert(s.values.begin() + 5, 0.5 * (s.values[4] + s.values[5]));
  s.times.push_back(16.0);
  s.values.push_back(1.0);
  EXPECT_FALSE(s.is_uniform());
  const Spectrum a = spectral_density(s);
  const Spectrum b =
      spectral_density(uniform_series(16, 32, 1.0, [](double t) { return std::cos(kPi * t); }));
  ASSERT_EQ(a.density.size(), b.density.size());
  for (std::size_t k = 0; k < a.density.size(); ++k) EXPECT_NEAR(a.density[k], b.density[k], 1e-9);
}

TEST(Spectrum, Errors) {
  const TimeSeries short_series = uniform_series(1, 8, 1.0, [](double) { return 1.0; });
  EXPECT_THROW(spectral_density(short_series), std::invalid_argument);
  TimeSeries bad = uniform_series(4, 8, 1.0, [](double) { return 1.0; });
  std::swap(bad.times[2], bad.times[3]);
  EXPECT_THROW(spectral_density(bad), std::invalid_argument);
  const Spectrum narrow = spectral_density(uniform_series(16, 1, 1.0, [](double) { return 1.0; }));
  EXPECT_THROW(subharmonic_metrics(narrow), std::invalid_argument);
}

TEST(Resample, DropsGridEndpoint) {
  TimeSeries s;
  s.driving_period = 1.0;
  for (int k = 0; k <= 8; ++k) {
    s.times.push_back(0.125 * k);
    s.values.push_back(k);
  }
  const TimeSeries r = resample_uniform(s, 4);
  ASSERT_EQ(r.times.size(), 4u);
  EXPECT_DOUBLE_EQ(r.values[1], 2.0);
  EXPECT_DOUBLE_EQ(r.times.back(), 0.75);
}

TEST(Metrics, WeightStaysInUnitInterval) {
  std::mt19937 rng(4);
  std::normal_distribution<double> d;
  for (int trial = 0; trial < 20; ++trial) {
    const TimeSeries s = uniform_series(16, 8, 1.0, [&](double) { return d(rng); });
    const PeakReport r = subharmonic_metrics(spectral_density(s));
    EXPECT_GE(r.subharmonic_weight, 0.0);
    EXPECT_LE(r.subharmonic_weight, 1.0);
  }
}

TEST(Metrics, SquareWaveAlternation) {
  // Exact +/-0.5 alternation with period 2 T_D, as produced by perfect pulses.
  const TimeSeries s = uniform_series(64, 32, 1.0, [](double t) {
    return (static_cast<long>(std::floor(t + 1e-12)) % 2 == 0) ? 0.5 : -0.5;
  });
  const PeakReport r = subharmonic_metrics(spectral_density(s));
  EXPECT_DOUBLE_EQ(r.peak_frequency, 0.5);
  EXPECT_GT(r.subharmonic_weight, 0.9);
  EXPECT_FALSE(r.split_detected);
}

TEST(Metrics, DensityAtInterpolates) {
  Spectrum sp;
  sp.frequencies = {0.0, 0.5, 1.0};
  sp.density = {0.0, 2.0, 4.0};
  EXPECT_DOUBLE_EQ(density_at(sp, 0.25), 1.0);
  EXPECT_DOUBLE_EQ(density_at(sp, 1.0), 4.0);
  EXPECT_THROW(density_at(sp, 1.5), std::invalid_argument);
}

}  // namespace
}  // namespace dtc
