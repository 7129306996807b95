#pragma once

#include <vector>

#include "wavetir/image.hpp"
#include "wavetir/wavelet.hpp"

namespace wavetir {

struct Raster {
  int rows = 0;
  int cols = 0;
  std::vector<double> v;

  double& at(int r, int c) { return v[static_cast<size_t>(r) * cols + c]; }
  double at(int r, int c) const {
    return v[static_cast<size_t>(r) * cols + c];
  }

  static Raster zeros(int r, int c) {
    Raster x;
    x.rows = r;
    x.cols = c;
    x.v.assign(static_cast<size_t>(r) * c, 0.0);
    return x;
  }
};

// One level's detail bands. h is the band produced by high-pass down the
// columns and low-pass along the rows: it responds to horizontal edges
// (vertical intensity variation). v is the transpose case, d is high-pass in
// both directions.
struct DetailTriple {
  Raster h, v, d;
};

struct SubbandPyramid {
  WaveletFamily family;
  int levels = 0;
  int orig_h = 0;
  int orig_w = 0;
  Raster lowpass;                     // coarsest-level LL
  std::vector<DetailTriple> details;  // details[l-1] for level l in 1..levels

  // Shape of the raster entering level `level` (1-based); level 1 sees the
  // original image, each further level the previous LL (ceil-halved).
  std::pair<int, int> level_input_shape(int level) const;
};

// Multi-level separable 2D DWT with periodized filtering; odd extents are
// padded by one duplicated edge sample before each level and cropped on
// synthesis. Throws std::invalid_argument when either dimension < 2^levels.
SubbandPyramid dwt2_forward(const Image& image, const WaveletFamily& family,
                            int levels);

// Exact inverse of dwt2_forward (round-trip below 1e-10 for every supported
// family and size). Output values are the raw reconstruction and are not
// clamped to [0,1].
Image dwt2_inverse(const SubbandPyramid& pyramid);

}  // namespace wavetir
