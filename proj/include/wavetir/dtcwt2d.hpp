#pragma once

#include <array>
#include <vector>

#include "wavetir/dwt2d.hpp"
#include "wavetir/image.hpp"

namespace wavetir {

struct ComplexRaster {
  int rows = 0;
  int cols = 0;
  std::vector<double> re, im;

  static ComplexRaster zeros(int r, int c) {
    ComplexRaster x;
    x.rows = r;
    x.cols = c;
    x.re.assign(static_cast<size_t>(r) * c, 0.0);
    x.im.assign(static_cast<size_t>(r) * c, 0.0);
    return x;
  }
};

// Fixed orientation order of the six complex bands per level.
inline constexpr std::array<int, 6> kOrientationDegrees = {+15, +45, +75,
                                                           -75, -45, -15};

struct ComplexPyramid {
  int levels = 0;
  int orig_h = 0;
  int orig_w = 0;
  // Four branch lowpasses interleaved into one raster:
  // lowpass[2i + vb][2j + hb] is element (i,j) of the branch whose vertical /
  // horizontal tree is b when vb / hb is 1.
  Raster lowpass;
  // oriented[l-1][k]: level-l band at kOrientationDegrees[k].
  std::vector<std::array<ComplexRaster, 6>> oriented;

  std::pair<int, int> level_input_shape(int level) const;
};

// Dual-tree complex wavelet transform: level 1 uses the odd/even-length
// biorthogonal pair, levels >= 2 the quarter-shift pair. Four real separable
// trees are combined per detail type by sum/difference into six oriented
// complex bands. Throws std::invalid_argument when either dimension is
// < 2^levels.
ComplexPyramid dtcwt2_forward(const Image& image, int levels);

// Near-perfect inverse (max-abs error < 1e-8): de-combines the oriented
// bands, inverts the four trees exactly and averages them.
Image dtcwt2_inverse(const ComplexPyramid& pyramid);

// Groups the six oriented bands into a DWT-style {h, v, d} triple as
// per-pixel root-sum-square magnitudes: h from the +/-15 degree pair, v from
// +/-75, d from +/-45.
std::vector<DetailTriple> map_orientations_to_hvd(const ComplexPyramid& pyr);

}  // namespace wavetir
