#pragma once

// Shared deterministic generators for the test suites: random rasters, the
// smooth synthetic scene corpus, oriented gratings, and a narrow Gaussian
// spot used for shift-invariance measurements.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "wavetir/image.hpp"

namespace testutil {

inline wavetir::Image random_image(int h, int w, std::uint32_t seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  wavetir::Image im = wavetir::Image::zeros(h, w);
  for (double& v : im.data) v = u(rng);
  return im;
}

// Smooth low-frequency scene number `idx`, values kept well inside [0,1] so
// moderate additive noise rarely clamps. Pure function of (idx, n).
inline wavetir::Image smooth_scene(int idx, int n = 64) {
  wavetir::Image im = wavetir::Image::zeros(n, n);
  const double pi = 3.14159265358979323846;
  const double fr = 1.0 + idx % 3;
  const double fc = 1.0 + idx % 4;
  const double ph = 0.37 * idx;
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      const double x = static_cast<double>(c) / n;
      const double y = static_cast<double>(r) / n;
      double v = 0.5 + 0.12 * std::sin(2 * pi * fr * y + ph) *
                           std::cos(2 * pi * fc * x) +
                 0.08 * (x + y - 1.0) + 0.05 * std::sin(2 * pi * (x - y) + idx);
      im.at(r, c) = std::clamp(v, 0.02, 0.98);
    }
  }
  return im;
}

// Sinusoidal grating whose stripes make an angle `deg` with the horizontal
// axis (0 degrees = horizontal stripes, i.e. vertical intensity variation).
inline wavetir::Image grating(int n, double k, double deg) {
  wavetir::Image im = wavetir::Image::zeros(n, n);
  const double th = deg * 3.14159265358979323846 / 180.0;
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      im.at(r, c) = 0.5 + 0.5 * std::cos(k * (c * std::sin(th) + r * std::cos(th)));
    }
  }
  return im;
}

// Narrow Gaussian spot centered at (r0, c0).
inline wavetir::Image gaussian_spot(int n, double r0, double c0,
                                    double sigma = 0.8) {
  wavetir::Image im = wavetir::Image::zeros(n, n);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      const double d2 = (r - r0) * (r - r0) + (c - c0) * (c - c0);
      im.at(r, c) = std::exp(-d2 / (2.0 * sigma * sigma));
    }
  }
  return im;
}

inline double max_abs_diff(const std::vector<double>& a,
                           const std::vector<double>& b) {
  double worst = 0.0;
  for (size_t i = 0; i < a.size(); ++i) {
    worst = std::max(worst, std::fabs(a[i] - b[i]));
  }
  return worst;
}

inline double sumsq(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return s;
}

}  // namespace testutil
