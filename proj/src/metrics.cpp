#include "wavetir/metrics.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "wavetir/dtcwt2d.hpp"
#include "wavetir/dwt2d.hpp"

namespace wavetir {

namespace {

void check_same_shape(const Tensor4& a, const Tensor4& b) {
  if (a.n != b.n || a.c != b.c || a.h != b.h || a.w != b.w) {
    throw std::invalid_argument("tensor shape mismatch");
  }
}

void check_same_shape(const Image& a, const Image& b) {
  if (a.height != b.height || a.width != b.width) {
    throw std::invalid_argument("image shape mismatch");
  }
}

constexpr int kWin = 11;
constexpr double kC1 = 1e-4;  // (0.01 * L)^2, L = 1
constexpr double kC2 = 9e-4;  // (0.03 * L)^2

const std::vector<double>& gaussian_window() {
  static const std::vector<double> win = [] {
    std::vector<double> w(kWin * kWin);
    const double sigma = 1.5;
    double total = 0.0;
    for (int i = 0; i < kWin; ++i) {
      for (int j = 0; j < kWin; ++j) {
        const double dy = i - (kWin - 1) / 2.0;
        const double dx = j - (kWin - 1) / 2.0;
        w[i * kWin + j] = std::exp(-(dx * dx + dy * dy) / (2 * sigma * sigma));
        total += w[i * kWin + j];
      }
    }
    for (double& v : w) v /= total;
    return w;
  }();
  return win;
}

// Mean local SSIM of one channel over all valid window positions.
double ssim_channel(const double* a, const double* b, int h, int w) {
  const auto& win = gaussian_window();
  double acc = 0.0;
  int count = 0;
  for (int r = 0; r + kWin <= h; ++r) {
    for (int c = 0; c + kWin <= w; ++c) {
      double mu1 = 0, mu2 = 0, m11 = 0, m22 = 0, m12 = 0;
      for (int i = 0; i < kWin; ++i) {
        for (int j = 0; j < kWin; ++j) {
          const double wv = win[i * kWin + j];
          const double x = a[(r + i) * w + (c + j)];
          const double y = b[(r + i) * w + (c + j)];
          mu1 += wv * x;
          mu2 += wv * y;
          m11 += wv * x * x;
          m22 += wv * y * y;
          m12 += wv * x * y;
        }
      }
      const double s11 = m11 - mu1 * mu1;
      const double s22 = m22 - mu2 * mu2;
      const double s12 = m12 - mu1 * mu2;
      const double num = (2 * mu1 * mu2 + kC1) * (2 * s12 + kC2);
      const double den = (mu1 * mu1 + mu2 * mu2 + kC1) * (s11 + s22 + kC2);
      acc += num / den;
      ++count;
    }
  }
  return acc / count;
}

}  // namespace

Tensor4 Tensor4::from_image(const Image& im) {
  Tensor4 t;
  t.n = 1;
  t.c = 1;
  t.h = im.height;
  t.w = im.width;
  t.v = im.data;
  return t;
}

Tensor4 Tensor4::zeros(int n, int c, int h, int w) {
  Tensor4 t;
  t.n = n;
  t.c = c;
  t.h = h;
  t.w = w;
  t.v.assign(static_cast<size_t>(n) * c * h * w, 0.0);
  return t;
}

double mse(const Tensor4& a, const Tensor4& b, bool sum_reduction) {
  check_same_shape(a, b);
  double s = 0.0;
  for (size_t i = 0; i < a.v.size(); ++i) {
    const double d = a.v[i] - b.v[i];
    s += d * d;
  }
  return sum_reduction ? s : s / static_cast<double>(a.v.size());
}

double ssim(const Tensor4& a, const Tensor4& b) {
  check_same_shape(a, b);
  if (a.h < kWin || a.w < kWin) {
    throw std::invalid_argument("image smaller than SSIM window");
  }
  const size_t plane = static_cast<size_t>(a.h) * a.w;
  double acc = 0.0;
  const int channels = a.n * a.c;
  for (int ch = 0; ch < channels; ++ch) {
    acc += ssim_channel(a.v.data() + ch * plane, b.v.data() + ch * plane, a.h,
                        a.w);
  }
  return acc / channels;
}

double psnr(const Image& a, const Image& b, double peak) {
  check_same_shape(a, b);
  double s = 0.0;
  for (size_t i = 0; i < a.data.size(); ++i) {
    const double d = a.data[i] - b.data[i];
    s += d * d;
  }
  const double m = s / static_cast<double>(a.data.size());
  if (m == 0.0) return std::numeric_limits<double>::infinity();
  return 10.0 * std::log10(peak * peak / m);
}

double latent_loss(const Tensor4& zhat, const Tensor4& z, double alpha) {
  return mse(zhat, z) + alpha * (1.0 - ssim(zhat, z));
}

namespace {

double band_msd(const Raster& a, const Raster& b) {
  double s = 0.0;
  for (size_t i = 0; i < a.v.size(); ++i) {
    const double d = a.v[i] - b.v[i];
    s += d * d;
  }
  return s / static_cast<double>(a.v.size());
}

double triple_msd(const DetailTriple& a, const DetailTriple& b) {
  return band_msd(a.h, b.h) + band_msd(a.v, b.v) + band_msd(a.d, b.d);
}

}  // namespace

double wavelet_loss(const Image& xhat, const Image& x,
                    const TransformSelector& sel, int j, bool sum_levels) {
  check_same_shape(xhat, x);
  double loss = 0.0;
  if (sel.dtcwt) {
    const auto ga = map_orientations_to_hvd(dtcwt2_forward(xhat, j));
    const auto gb = map_orientations_to_hvd(dtcwt2_forward(x, j));
    for (int l = sum_levels ? 0 : j - 1; l < j; ++l) {
      loss += triple_msd(ga[l], gb[l]);
    }
  } else {
    const SubbandPyramid pa = dwt2_forward(xhat, sel.family, j);
    const SubbandPyramid pb = dwt2_forward(x, sel.family, j);
    for (int l = sum_levels ? 0 : j - 1; l < j; ++l) {
      loss += triple_msd(pa.details[l], pb.details[l]);
    }
  }
  return loss;
}

LossBreakdown total_loss(const Tensor4& zhat, const Tensor4& z,
                         const Image& xhat, const Image& x,
                         const LossWeights& weights) {
  LossBreakdown out;
  out.mse_term = mse(zhat, z);
  out.ssim_value = ssim(zhat, z);
  out.latent = out.mse_term + weights.alpha * (1.0 - out.ssim_value);
  out.wavelet =
      wavelet_loss(xhat, x, weights.sel, weights.j, weights.sum_levels);
  out.total = out.latent + weights.beta * out.wavelet;
  return out;
}

double pixel_loss(const Image& xhat, const Image& x) {
  check_same_shape(xhat, x);
  double s = 0.0;
  for (size_t i = 0; i < x.data.size(); ++i) {
    const double d = xhat.data[i] - x.data[i];
    s += d * d;
  }
  return s / static_cast<double>(x.data.size());
}

}  // namespace wavetir
