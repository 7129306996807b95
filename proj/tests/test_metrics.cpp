#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>

#include "testutil.hpp"
#include "wavetir/dwt2d.hpp"
#include "wavetir/metrics.hpp"

using namespace wavetir;

namespace {

Tensor4 random_tensor(int n, int c, int h, int w, std::uint32_t seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  Tensor4 t = Tensor4::zeros(n, c, h, w);
  for (double& v : t.v) v = u(rng);
  return t;
}

Tensor4 constant_tensor(int h, int w, double value) {
  Tensor4 t = Tensor4::zeros(1, 1, h, w);
  for (double& v : t.v) v = value;
  return t;
}

// Independent SSIM reference: naive sliding window with its own Gaussian
// weights, used as an oracle against the production implementation.
double ssim_reference(const Tensor4& a, const Tensor4& b) {
  const int win = 11;
  const double sigma = 1.5, c1 = 1e-4, c2 = 9e-4;
  double g[win][win];
  double norm = 0.0;
  for (int i = 0; i < win; ++i) {
    for (int j = 0; j < win; ++j) {
      const double di = i - 5.0, dj = j - 5.0;
      g[i][j] = std::exp(-(di * di + dj * dj) / (2.0 * sigma * sigma));
      norm += g[i][j];
    }
  }
  for (auto& row : g) {
    for (double& v : row) v /= norm;
  }

  double channel_sum = 0.0;
  for (int nn = 0; nn < a.n; ++nn) {
    for (int cc = 0; cc < a.c; ++cc) {
      const size_t base =
          (static_cast<size_t>(nn) * a.c + cc) * a.h * a.w;
      double acc = 0.0;
      int count = 0;
      for (int r = 0; r + win <= a.h; ++r) {
        for (int s = 0; s + win <= a.w; ++s) {
          double mua = 0, mub = 0, sa = 0, sb = 0, sab = 0;
          for (int i = 0; i < win; ++i) {
            for (int j = 0; j < win; ++j) {
              const double x = a.v[base + static_cast<size_t>(r + i) * a.w + s + j];
              const double y = b.v[base + static_cast<size_t>(r + i) * a.w + s + j];
              mua += g[i][j] * x;
              mub += g[i][j] * y;
              sa += g[i][j] * x * x;
              sb += g[i][j] * y * y;
              sab += g[i][j] * x * y;
            }
          }
          sa -= mua * mua;
          sb -= mub * mub;
          sab -= mua * mub;
          acc += (2 * mua * mub + c1) * (2 * sab + c2) /
                 ((mua * mua + mub * mub + c1) * (sa + sb + c2));
          ++count;
        }
      }
      channel_sum += acc / count;
    }
  }
  return channel_sum / (a.n * a.c);
}

}  // namespace

TEST_CASE("mse closed forms and oracle") {
  const Tensor4 a = random_tensor(2, 3, 16, 16, 41);
  CHECK(mse(a, a) == 0.0);

  Tensor4 b = a;
  for (double& v : b.v) v += 0.1;
  CHECK(mse(a, b) == doctest::Approx(0.01).epsilon(1e-12));

  const Tensor4 c = random_tensor(2, 3, 16, 16, 42);
  double acc = 0.0;
  for (size_t i = 0; i < a.v.size(); ++i) {
    acc += (a.v[i] - c.v[i]) * (a.v[i] - c.v[i]);
  }
  CHECK(mse(a, c) == doctest::Approx(acc / a.v.size()).epsilon(1e-12));
  CHECK(mse(a, c, true) == doctest::Approx(acc).epsilon(1e-12));
  CHECK(mse(a, c) == doctest::Approx(mse(c, a)).epsilon(1e-15));

  CHECK_THROWS(mse(a, random_tensor(2, 3, 16, 8, 43)));
}

TEST_CASE("ssim identity, range and zero-variance closed form") {
  const Tensor4 a = random_tensor(1, 1, 32, 32, 44);
  CHECK(ssim(a, a) == doctest::Approx(1.0).epsilon(1e-12));

  const Tensor4 m1 = constant_tensor(16, 16, 0.2);
  const Tensor4 m2 = constant_tensor(16, 16, 0.4);
  const double expect = (2 * 0.2 * 0.4 + 1e-4) / (0.2 * 0.2 + 0.4 * 0.4 + 1e-4);
  CHECK(ssim(m1, m2) == doctest::Approx(expect).epsilon(1e-9));

  const Tensor4 b = random_tensor(1, 1, 32, 32, 45);
  const double s = ssim(a, b);
  CHECK(s >= -1.0);
  CHECK(s <= 1.0);
}

TEST_CASE("ssim matches the independent sliding-window reference") {
  const Tensor4 a = random_tensor(1, 2, 24, 20, 46);
  Tensor4 b = a;
  std::mt19937 rng(47);
  std::normal_distribution<double> noise(0.0, 0.05);
  for (double& v : b.v) v += noise(rng);
  CHECK(ssim(a, b) == doctest::Approx(ssim_reference(a, b)).epsilon(1e-9));
}

TEST_CASE("ssim rejects images smaller than the window") {
  const Tensor4 tiny = random_tensor(1, 1, 10, 16, 48);
  CHECK_THROWS(ssim(tiny, tiny));
}

TEST_CASE("psnr closed forms, oracle and monotonicity") {
  const Image a = testutil::random_image(16, 16, 49);
  CHECK(std::isinf(psnr(a, a)));
  CHECK(psnr(a, a) > 0);

  Image b = a;
  for (double& v : b.data) v += 10.0 / 255.0;
  CHECK(psnr(a, b) == doctest::Approx(28.13).epsilon(0.0005));
  // 8-bit convention flag
  CHECK(psnr(a, b, 255.0) ==
        doctest::Approx(28.13 + 20.0 * std::log10(255.0)).epsilon(0.001));

  const Image c = testutil::random_image(16, 16, 50);
  const double m = mse(Tensor4::from_image(a), Tensor4::from_image(c));
  CHECK(psnr(a, c) == doctest::Approx(10.0 * std::log10(1.0 / m)).epsilon(1e-10));

  double last = std::numeric_limits<double>::infinity();
  for (double amp : {0.01, 0.02, 0.05, 0.1, 0.2}) {
    Image d = a;
    for (double& v : d.data) v += amp;
    const double p = psnr(a, d);
    CHECK(p < last);
    last = p;
  }
}

TEST_CASE("latent_loss composition") {
  const Tensor4 a = random_tensor(1, 1, 16, 16, 51);
  const Tensor4 b = random_tensor(1, 1, 16, 16, 52);
  CHECK(latent_loss(a, a, 2.5) == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(latent_loss(a, b, 0.0) == doctest::Approx(mse(a, b)).epsilon(1e-15));
  CHECK(latent_loss(a, b, 1.0) ==
        doctest::Approx(mse(a, b) + 1.0 - ssim(a, b)).epsilon(1e-12));
}

TEST_CASE("wavelet_loss: zero on identity, offset invariant, oracle") {
  const Image x = testutil::random_image(64, 64, 53);
  const TransformSelector db4 = parse_selector("db4");
  CHECK(wavelet_loss(x, x, db4, 2) == 0.0);

  Image shifted = x;
  for (double& v : shifted.data) v += 0.123;
  CHECK(wavelet_loss(shifted, x, db4, 2) < 1e-12);

  const Image y = testutil::random_image(64, 64, 54);
  const SubbandPyramid px = dwt2_forward(x, db4.family, 2);
  const SubbandPyramid py = dwt2_forward(y, db4.family, 2);
  double expect = 0.0;
  const Raster* bx[3] = {&px.details[1].h, &px.details[1].v, &px.details[1].d};
  const Raster* by[3] = {&py.details[1].h, &py.details[1].v, &py.details[1].d};
  for (int s = 0; s < 3; ++s) {
    double acc = 0.0;
    for (size_t i = 0; i < bx[s]->v.size(); ++i) {
      acc += (bx[s]->v[i] - by[s]->v[i]) * (bx[s]->v[i] - by[s]->v[i]);
    }
    expect += acc / bx[s]->v.size();
  }
  CHECK(wavelet_loss(x, y, db4, 2) == doctest::Approx(expect).epsilon(1e-12));
  CHECK(wavelet_loss(x, y, db4, 2) ==
        doctest::Approx(wavelet_loss(y, x, db4, 2)).epsilon(1e-15));

  // sum-levels mode accumulates levels 1..j
  const double l1 = wavelet_loss(x, y, db4, 1);
  const double l2 = wavelet_loss(x, y, db4, 2);
  CHECK(wavelet_loss(x, y, db4, 2, true) == doctest::Approx(l1 + l2).epsilon(1e-12));
}

TEST_CASE("wavelet_loss on the dual tree") {
  const Image x = testutil::random_image(64, 64, 55);
  const TransformSelector dt = parse_selector("dtcwt");
  CHECK(wavelet_loss(x, x, dt, 2) < 1e-20);
  const Image y = testutil::random_image(64, 64, 56);
  CHECK(wavelet_loss(x, y, dt, 2) > 0.0);
  Image shifted = x;
  for (double& v : shifted.data) v += 0.2;
  CHECK(wavelet_loss(shifted, x, dt, 2) < 1e-12);
}

TEST_CASE("total_loss defaults and affinity in beta") {
  const Tensor4 za = random_tensor(1, 4, 16, 16, 57);
  const Tensor4 zb = random_tensor(1, 4, 16, 16, 58);
  const Image xa = testutil::random_image(64, 64, 59);
  const Image xb = testutil::random_image(64, 64, 60);

  LossWeights w;  // defaults: alpha 1.0, beta 100, j 2
  w.sel = parse_selector("db4");
  CHECK(w.alpha == 1.0);
  CHECK(w.beta == 100.0);
  CHECK(w.j == 2);

  const LossBreakdown zero = total_loss(za, za, xa, xa, w);
  CHECK(zero.total == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(zero.latent == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(zero.wavelet == 0.0);

  const LossBreakdown lb = total_loss(za, zb, xa, xb, w);
  const double manual = mse(za, zb) + w.alpha * (1.0 - ssim(za, zb)) +
                        w.beta * wavelet_loss(xa, xb, w.sel, w.j);
  CHECK(lb.total == doctest::Approx(manual).epsilon(1e-12));
  CHECK(lb.mse_term == doctest::Approx(mse(za, zb)).epsilon(1e-12));
  CHECK(lb.ssim_value == doctest::Approx(ssim(za, zb)).epsilon(1e-12));

  LossWeights w0 = w;
  w0.beta = 0.0;
  CHECK(total_loss(za, zb, xa, xb, w0).total ==
        doctest::Approx(latent_loss(za, zb, w.alpha)).epsilon(1e-12));

  LossWeights w50 = w;
  w50.beta = 50.0;
  const double slope =
      (lb.total - total_loss(za, zb, xa, xb, w50).total) / 50.0;
  CHECK(slope == doctest::Approx(lb.wavelet).epsilon(1e-10));
}

TEST_CASE("pixel_loss equals mse") {
  const Image a = testutil::random_image(24, 24, 61);
  const Image b = testutil::random_image(24, 24, 62);
  CHECK(pixel_loss(a, b) ==
        doctest::Approx(mse(Tensor4::from_image(a), Tensor4::from_image(b)))
            .epsilon(1e-15));
  CHECK(pixel_loss(a, a) == 0.0);
  Image off = a;
  for (double& v : off.data) v += 0.1;
  CHECK(pixel_loss(a, off) == doctest::Approx(0.01).epsilon(1e-12));
}
