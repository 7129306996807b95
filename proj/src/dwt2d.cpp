#include "wavetir/dwt2d.hpp"

#include <stdexcept>

#include "filt_internal.hpp"

namespace wavetir {

std::pair<int, int> SubbandPyramid::level_input_shape(int level) const {
  int h = orig_h, w = orig_w;
  for (int l = 1; l < level; ++l) {
    h = (h + 1) / 2;
    w = (w + 1) / 2;
  }
  return {h, w};
}

SubbandPyramid dwt2_forward(const Image& image, const WaveletFamily& family,
                            int levels) {
  if (levels < 1) throw std::invalid_argument("levels must be >= 1");
  if (image.height < (1 << levels) || image.width < (1 << levels)) {
    throw std::invalid_argument("too many levels for image size");
  }
  const FilterBank fb = make_filterbank(family);

  SubbandPyramid pyr;
  pyr.family = family;
  pyr.levels = levels;
  pyr.orig_h = image.height;
  pyr.orig_w = image.width;

  Raster cur = detail::image_to_raster(image);
  for (int l = 0; l < levels; ++l) {
    const Raster padded = detail::pad_even(cur);
    detail::Quad q =
        detail::analyze2(padded, fb.analysis_lo, fb.analysis_hi,
                         fb.analysis_lo, fb.analysis_hi, 0, 0);
    pyr.details.push_back({std::move(q.h), std::move(q.v), std::move(q.d)});
    cur = std::move(q.ll);
  }
  pyr.lowpass = std::move(cur);
  return pyr;
}

Image dwt2_inverse(const SubbandPyramid& pyr) {
  if (pyr.levels < 1 ||
      static_cast<int>(pyr.details.size()) != pyr.levels) {
    throw std::invalid_argument("inconsistent pyramid structure");
  }
  for (int l = 1; l <= pyr.levels; ++l) {
    const auto [h, w] = pyr.level_input_shape(l);
    const int bh = (h + 1) / 2, bw = (w + 1) / 2;
    const DetailTriple& d = pyr.details[l - 1];
    for (const Raster* b : {&d.h, &d.v, &d.d}) {
      if (b->rows != bh || b->cols != bw) {
        throw std::invalid_argument("inconsistent band shapes");
      }
    }
    if (l == pyr.levels && (pyr.lowpass.rows != bh || pyr.lowpass.cols != bw)) {
      throw std::invalid_argument("inconsistent band shapes");
    }
  }

  const FilterBank fb = make_filterbank(pyr.family);
  Raster cur = pyr.lowpass;
  for (int l = pyr.levels; l >= 1; --l) {
    const auto [h, w] = pyr.level_input_shape(l);
    const DetailTriple& dt = pyr.details[l - 1];
    detail::Quad q{cur, dt.h, dt.v, dt.d};
    Raster X = detail::synthesize2(q, fb.synthesis_lo, fb.synthesis_hi,
                                   fb.synthesis_lo, fb.synthesis_hi,
                                   h + (h % 2), w + (w % 2), 0, 0);
    if (X.rows != h || X.cols != w) {
      Raster cropped = Raster::zeros(h, w);
      for (int i = 0; i < h; ++i) {
        for (int j = 0; j < w; ++j) cropped.at(i, j) = X.at(i, j);
      }
      X = std::move(cropped);
    }
    cur = std::move(X);
  }

  Image out = Image::zeros(pyr.orig_h, pyr.orig_w);
  out.data = std::move(cur.v);
  return out;
}

}  // namespace wavetir
