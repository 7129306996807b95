#pragma once

#include <cmath>

#include "wavetir/dwt2d.hpp"
#include "wavetir/image.hpp"
#include "wavetir/wavelet.hpp"

namespace wavetir {

inline double soft_thresh(double c, double t) {
  const double m = std::fabs(c) - t;
  return m <= 0 ? 0.0 : (c < 0 ? -m : m);
}

inline double hard_thresh(double c, double t) {
  return std::fabs(c) < t ? 0.0 : c;
}

enum class ShrinkRule { universal, bayes };
enum class ShrinkMode { soft, hard };

struct ShrinkSpec {
  ShrinkRule rule = ShrinkRule::bayes;
  ShrinkMode mode = ShrinkMode::soft;
  TransformSelector sel;
  int levels = 2;
};

// Robust noise estimate sigma_hat = median(|Y_d at level 1|) / 0.6745.
double estimate_sigma(const SubbandPyramid& pyr);

// Wavelet-shrinkage denoising: decompose, threshold detail coefficients
// (soft: sign(c) max(|c|-t, 0); hard: zero below t), reconstruct, clamp to
// [0,1]. universal: t = sigma_hat sqrt(2 ln N); bayes: per-band
// t = sigma_hat^2 / sigma_band with sigma_band = sqrt(max(var - sigma_hat^2,
// 0)) (a zero sigma_band zeroes the band). The dual-tree path thresholds
// complex magnitudes and preserves phase.
Image shrink_denoise(const Image& noisy, const ShrinkSpec& spec);

}  // namespace wavetir
