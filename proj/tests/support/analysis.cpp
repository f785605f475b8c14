#include "analysis.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include <fftw3.h>

namespace nl::testing {

std::vector<double> channel(std::span<const float> interleaved, std::size_t which, std::size_t channels) {
  std::vector<double> out;
  out.reserve(interleaved.size() / channels);
  for (std::size_t i = which; i < interleaved.size(); i += channels) out.push_back(interleaved[i]);
  return out;
}

std::vector<double> tail(const std::vector<double>& x, std::size_t n) {
  n = std::min(n, x.size());
  return {x.end() - static_cast<std::ptrdiff_t>(n), x.end()};
}

double rms(std::span<const double> x) {
  if (x.empty()) return 0.0;
  double sum = 0.0;
  for (const double v : x) sum += v * v;
  return std::sqrt(sum / static_cast<double>(x.size()));
}

double mean(std::span<const double> x) {
  if (x.empty()) return 0.0;
  return std::accumulate(x.begin(), x.end(), 0.0) / static_cast<double>(x.size());
}

std::vector<double> magnitude_spectrum(std::span<const double> x, std::size_t fft_size) {
  if (fft_size < x.size()) throw std::invalid_argument("fft_size smaller than input");
  std::vector<double> in(fft_size, 0.0);
  const double n = static_cast<double>(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double w = 0.5 - 0.5 * std::cos(2.0 * std::numbers::pi * static_cast<double>(i) / (n - 1.0));
    in[i] = x[i] * w;
  }
  const std::size_t bins = fft_size / 2 + 1;
  auto* out = static_cast<fftw_complex*>(fftw_malloc(sizeof(fftw_complex) * bins));
  fftw_plan plan = fftw_plan_dft_r2c_1d(static_cast<int>(fft_size), in.data(), out, FFTW_ESTIMATE);
  fftw_execute(plan);
  std::vector<double> mag(bins);
  for (std::size_t k = 0; k < bins; ++k) mag[k] = std::hypot(out[k][0], out[k][1]);
  fftw_destroy_plan(plan);
  fftw_free(out);
  return mag;
}

std::vector<double> power_spectrum(std::span<const double> x) {
  std::vector<double> in(x.begin(), x.end());
  const std::size_t bins = in.size() / 2 + 1;
  auto* out = static_cast<fftw_complex*>(fftw_malloc(sizeof(fftw_complex) * bins));
  fftw_plan plan = fftw_plan_dft_r2c_1d(static_cast<int>(in.size()), in.data(), out, FFTW_ESTIMATE);
  fftw_execute(plan);
  std::vector<double> power(bins);
  for (std::size_t k = 0; k < bins; ++k) power[k] = out[k][0] * out[k][0] + out[k][1] * out[k][1];
  fftw_destroy_plan(plan);
  fftw_free(out);
  return power;
}

double peak_frequency(std::span<const double> x, double sample_rate, double min_hz) {
  const std::size_t fft_size = 4 * x.size();
  const auto mag = magnitude_spectrum(x, fft_size);
  const double bin_hz = sample_rate / static_cast<double>(fft_size);
  std::size_t best = std::max<std::size_t>(1, static_cast<std::size_t>(min_hz / bin_hz));
  for (std::size_t k = best; k + 1 < mag.size(); ++k) {
    if (mag[k] > mag[best]) best = k;
  }
  double offset = 0.0;
  if (best > 0 && best + 1 < mag.size()) {
    const double a = std::log(mag[best - 1] + 1e-300);
    const double b = std::log(mag[best] + 1e-300);
    const double c = std::log(mag[best + 1] + 1e-300);
    const double denom = a - 2.0 * b + c;
    if (denom != 0.0) offset = 0.5 * (a - c) / denom;
  }
  return (static_cast<double>(best) + offset) * bin_hz;
}

double spectral_centroid(std::span<const double> x, double sample_rate) {
  const auto mag = magnitude_spectrum(x, x.size());
  const double bin_hz = sample_rate / static_cast<double>(x.size());
  double num = 0.0;
  double den = 0.0;
  for (std::size_t k = 0; k < mag.size(); ++k) {
    num += static_cast<double>(k) * bin_hz * mag[k];
    den += mag[k];
  }
  return den > 0.0 ? num / den : 0.0;
}

double off_harmonic_energy_fraction(std::span<const double> x, double sample_rate,
                                    std::span<const double> fundamentals, double tolerance_hz) {
  const auto mag = magnitude_spectrum(x, x.size());
  const double bin_hz = sample_rate / static_cast<double>(x.size());
  double total = 0.0;
  double off = 0.0;
  for (std::size_t k = 1; k < mag.size(); ++k) {
    const double f = static_cast<double>(k) * bin_hz;
    const double e = mag[k] * mag[k];
    total += e;
    bool near = false;
    for (const double f0 : fundamentals) {
      const double h = std::round(f / f0);
      if (h >= 1.0 && std::abs(f - h * f0) <= tolerance_hz) {
        near = true;
        break;
      }
    }
    if (!near) off += e;
  }
  return total > 0.0 ? off / total : 0.0;
}

std::size_t autocorrelation_period(std::span<const double> x, std::size_t min_lag, std::size_t max_lag) {
  std::size_t best_lag = min_lag;
  double best = -2.0;
  for (std::size_t lag = min_lag; lag <= max_lag && lag < x.size(); ++lag) {
    double num = 0.0;
    double e0 = 0.0;
    double e1 = 0.0;
    for (std::size_t i = 0; i + lag < x.size(); ++i) {
      num += x[i] * x[i + lag];
      e0 += x[i] * x[i];
      e1 += x[i + lag] * x[i + lag];
    }
    const double r = num / std::sqrt(e0 * e1 + 1e-300);
    if (r > best) {
      best = r;
      best_lag = lag;
    }
  }
  return best_lag;
}

double tone_amplitude(std::span<const double> x, double hz, double sample_rate) {
  double re = 0.0;
  double im = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double phase = 2.0 * std::numbers::pi * hz * static_cast<double>(i) / sample_rate;
    re += x[i] * std::cos(phase);
    im -= x[i] * std::sin(phase);
  }
  return 2.0 * std::hypot(re, im) / static_cast<double>(x.size());
}

double schroeder_rt60(std::span<const double> h, double sample_rate) {
  std::vector<double> edc(h.size());
  double acc = 0.0;
  for (std::size_t i = h.size(); i-- > 0;) {
    acc += h[i] * h[i];
    edc[i] = acc;
  }
  if (acc <= 0.0) return 0.0;
  std::vector<double> t;
  std::vector<double> db;
  for (std::size_t i = 0; i < edc.size(); ++i) {
    const double level = 10.0 * std::log10(edc[i] / acc + 1e-300);
    if (level <= -5.0 && level >= -25.0) {
      t.push_back(static_cast<double>(i) / sample_rate);
      db.push_back(level);
    }
    if (level < -25.0) break;
  }
  if (t.size() < 2) return 0.0;
  const double tm = mean(t);
  const double dm = mean(db);
  double sxy = 0.0;
  double sxx = 0.0;
  for (std::size_t i = 0; i < t.size(); ++i) {
    sxy += (t[i] - tm) * (db[i] - dm);
    sxx += (t[i] - tm) * (t[i] - tm);
  }
  const double slope = sxy / sxx;  // dB per second, negative
  return slope < 0.0 ? -60.0 / slope : 0.0;
}

}  // namespace nl::testing
