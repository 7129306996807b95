#pragma once

#include <vector>

#include "wavetir/image.hpp"
#include "wavetir/wavelet.hpp"

namespace wavetir {

// Generic (batch, channels, height, width) tensor used by the loss stack for
// both images and latent embeddings.
struct Tensor4 {
  int n = 1, c = 1, h = 0, w = 0;
  std::vector<double> v;

  size_t size() const { return v.size(); }
  static Tensor4 from_image(const Image& im);
  static Tensor4 zeros(int n, int c, int h, int w);
};

// Mean of squared differences by default; sum reduction available for
// comparison with papers that use the unnormalized norm.
double mse(const Tensor4& a, const Tensor4& b, bool sum_reduction = false);

// Mean local SSIM over valid window positions, 11x11 Gaussian window with
// sigma 1.5, C1 = (0.01 L)^2, C2 = (0.03 L)^2, L = 1 for [0,1] data.
// Channels are scored independently and averaged. Requires h, w >= 11.
double ssim(const Tensor4& a, const Tensor4& b);

// 10 log10(peak^2 / MSE) in dB; +infinity for identical inputs. peak is 1.0
// under the internal [0,1] convention (pass 255 for the 8-bit convention).
double psnr(const Image& a, const Image& b, double peak = 1.0);

// mse + alpha * (1 - ssim).
double latent_loss(const Tensor4& zhat, const Tensor4& z, double alpha);

// Sum over s in {h, v, d} of the mean-squared difference of level-j sub-band
// coefficients (DWT) or of the h/v/d-grouped magnitudes (dual-tree). With
// sum_levels, levels 1..j are accumulated instead of level j only.
double wavelet_loss(const Image& xhat, const Image& x,
                    const TransformSelector& sel, int j,
                    bool sum_levels = false);

struct LossWeights {
  double alpha = 1.0;
  double beta = 100.0;
  int j = 2;
  TransformSelector sel;  // defaults to the haar DWT; CLI sets db4 etc.
  bool sum_levels = false;
};

struct LossBreakdown {
  double total = 0.0;
  double latent = 0.0;
  double mse_term = 0.0;
  double ssim_value = 0.0;
  double wavelet = 0.0;
};

// latent_loss(zhat, z, alpha) + beta * wavelet_loss(xhat, x), with the named
// components for logging.
LossBreakdown total_loss(const Tensor4& zhat, const Tensor4& z,
                         const Image& xhat, const Image& x,
                         const LossWeights& weights);

// Pixel-level MSE (the tractable term of a perceptual pixel loss; the
// perceptual term needs a pretrained backbone and is intentionally absent).
double pixel_loss(const Image& xhat, const Image& x);

}  // namespace wavetir
