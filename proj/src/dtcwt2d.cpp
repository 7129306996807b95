#include "wavetir/dtcwt2d.hpp"

#include <cmath>
#include <stdexcept>

#include "filt_internal.hpp"

namespace wavetir {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

// Orientation slot for (detail type, quadrature component): type 0=h, 1=v,
// 2=d; component 0 carries the positive angle. Order of slots is
// {+15, +45, +75, -75, -45, -15}.
constexpr int kSlot[3][2] = {{0, 5}, {2, 3}, {1, 4}};

struct BranchBands {
  Raster h, v, d;
};

struct Branch {
  Raster low;
  std::vector<BranchBands> bands;
};

// Forward pass of one of the four separable trees. vt/ht select the tree
// used along the vertical/horizontal axis; at level 1 the trees differ only
// by a one-sample sampling phase, at deeper levels by the quarter-shift
// filters.
Branch branch_forward(const Raster& x0, int vt, int ht, int levels,
                      const DualTreeFilters& dt) {
  Branch br;
  Raster cur = x0;
  for (int l = 0; l < levels; ++l) {
    const Raster padded = detail::pad_even(cur);
    detail::Quad q;
    if (l == 0) {
      const FilterBank& fb = dt.level1_a;
      q = detail::analyze2(padded, fb.analysis_lo, fb.analysis_hi,
                           fb.analysis_lo, fb.analysis_hi, vt, ht);
    } else {
      const FilterBank& fv = vt ? dt.higher_b : dt.higher_a;
      const FilterBank& fh = ht ? dt.higher_b : dt.higher_a;
      q = detail::analyze2(padded, fv.analysis_lo, fv.analysis_hi,
                           fh.analysis_lo, fh.analysis_hi, 0, 0);
    }
    br.bands.push_back({std::move(q.h), std::move(q.v), std::move(q.d)});
    cur = std::move(q.ll);
  }
  br.low = std::move(cur);
  return br;
}

Raster branch_inverse(const Branch& br, int vt, int ht,
                      const DualTreeFilters& dt, int orig_h, int orig_w) {
  const int levels = static_cast<int>(br.bands.size());
  // Input shape chain
  std::vector<std::pair<int, int>> shapes(levels);
  int h = orig_h, w = orig_w;
  for (int l = 0; l < levels; ++l) {
    shapes[l] = {h, w};
    h = (h + 1) / 2;
    w = (w + 1) / 2;
  }
  Raster cur = br.low;
  for (int l = levels - 1; l >= 0; --l) {
    const auto [sh, sw] = shapes[l];
    const BranchBands& b = br.bands[l];
    detail::Quad q{cur, b.h, b.v, b.d};
    Raster X;
    if (l == 0) {
      const FilterBank& fb = dt.level1_a;
      X = detail::synthesize2(q, fb.synthesis_lo, fb.synthesis_hi,
                              fb.synthesis_lo, fb.synthesis_hi, sh + (sh % 2),
                              sw + (sw % 2), vt, ht);
    } else {
      const FilterBank& fv = vt ? dt.higher_b : dt.higher_a;
      const FilterBank& fh = ht ? dt.higher_b : dt.higher_a;
      X = detail::synthesize2(q, fv.synthesis_lo, fv.synthesis_hi,
                              fh.synthesis_lo, fh.synthesis_hi, sh + (sh % 2),
                              sw + (sw % 2), 0, 0);
    }
    if (X.rows != sh || X.cols != sw) {
      Raster cropped = Raster::zeros(sh, sw);
      for (int i = 0; i < sh; ++i) {
        for (int j = 0; j < sw; ++j) cropped.at(i, j) = X.at(i, j);
      }
      X = std::move(cropped);
    }
    cur = std::move(X);
  }
  return cur;
}

const Raster& type_band(const BranchBands& b, int t) {
  return t == 0 ? b.h : (t == 1 ? b.v : b.d);
}

Raster& type_band(BranchBands& b, int t) {
  return t == 0 ? b.h : (t == 1 ? b.v : b.d);
}

}  // namespace

std::pair<int, int> ComplexPyramid::level_input_shape(int level) const {
  int h = orig_h, w = orig_w;
  for (int l = 1; l < level; ++l) {
    h = (h + 1) / 2;
    w = (w + 1) / 2;
  }
  return {h, w};
}

ComplexPyramid dtcwt2_forward(const Image& image, int levels) {
  if (levels < 1) throw std::invalid_argument("levels must be >= 1");
  if (image.height < (1 << levels) || image.width < (1 << levels)) {
    throw std::invalid_argument("too many levels for image size");
  }
  const DualTreeFilters dt = make_dualtree_filters();
  const Raster x0 = detail::image_to_raster(image);

  // branch index = 2*vt + ht
  Branch br[4];
  for (int vt = 0; vt < 2; ++vt) {
    for (int ht = 0; ht < 2; ++ht) {
      br[2 * vt + ht] = branch_forward(x0, vt, ht, levels, dt);
    }
  }

  ComplexPyramid pyr;
  pyr.levels = levels;
  pyr.orig_h = image.height;
  pyr.orig_w = image.width;
  pyr.oriented.resize(levels);
  for (int l = 0; l < levels; ++l) {
    for (int t = 0; t < 3; ++t) {
      const Raster& waa = type_band(br[0].bands[l], t);
      const Raster& wab = type_band(br[1].bands[l], t);
      const Raster& wba = type_band(br[2].bands[l], t);
      const Raster& wbb = type_band(br[3].bands[l], t);
      ComplexRaster z1 = ComplexRaster::zeros(waa.rows, waa.cols);
      ComplexRaster z2 = ComplexRaster::zeros(waa.rows, waa.cols);
      for (size_t i = 0; i < waa.v.size(); ++i) {
        z1.re[i] = (waa.v[i] - wbb.v[i]) * kInvSqrt2;
        z1.im[i] = (wab.v[i] + wba.v[i]) * kInvSqrt2;
        z2.re[i] = (waa.v[i] + wbb.v[i]) * kInvSqrt2;
        z2.im[i] = (wab.v[i] - wba.v[i]) * kInvSqrt2;
      }
      pyr.oriented[l][kSlot[t][0]] = std::move(z1);
      pyr.oriented[l][kSlot[t][1]] = std::move(z2);
    }
  }

  const Raster& l0 = br[0].low;
  pyr.lowpass = Raster::zeros(2 * l0.rows, 2 * l0.cols);
  for (int vt = 0; vt < 2; ++vt) {
    for (int ht = 0; ht < 2; ++ht) {
      const Raster& low = br[2 * vt + ht].low;
      for (int i = 0; i < low.rows; ++i) {
        for (int j = 0; j < low.cols; ++j) {
          pyr.lowpass.at(2 * i + vt, 2 * j + ht) = low.at(i, j);
        }
      }
    }
  }
  return pyr;
}

Image dtcwt2_inverse(const ComplexPyramid& pyr) {
  if (pyr.levels < 1 ||
      static_cast<int>(pyr.oriented.size()) != pyr.levels) {
    throw std::invalid_argument("inconsistent pyramid structure");
  }
  for (int l = 1; l <= pyr.levels; ++l) {
    const auto [h, w] = pyr.level_input_shape(l);
    const int bh = (h + 1) / 2, bw = (w + 1) / 2;
    for (const ComplexRaster& b : pyr.oriented[l - 1]) {
      if (b.rows != bh || b.cols != bw) {
        throw std::invalid_argument("inconsistent band shapes");
      }
    }
    if (l == pyr.levels &&
        (pyr.lowpass.rows != 2 * bh || pyr.lowpass.cols != 2 * bw)) {
      throw std::invalid_argument("inconsistent band shapes");
    }
  }

  const DualTreeFilters dt = make_dualtree_filters();
  Branch br[4];
  for (int b = 0; b < 4; ++b) br[b].bands.resize(pyr.levels);

  for (int l = 0; l < pyr.levels; ++l) {
    for (int t = 0; t < 3; ++t) {
      const ComplexRaster& z1 = pyr.oriented[l][kSlot[t][0]];
      const ComplexRaster& z2 = pyr.oriented[l][kSlot[t][1]];
      Raster waa = Raster::zeros(z1.rows, z1.cols);
      Raster wab = waa, wba = waa, wbb = waa;
      for (size_t i = 0; i < z1.re.size(); ++i) {
        waa.v[i] = (z1.re[i] + z2.re[i]) * kInvSqrt2;
        wbb.v[i] = (z2.re[i] - z1.re[i]) * kInvSqrt2;
        wab.v[i] = (z1.im[i] + z2.im[i]) * kInvSqrt2;
        wba.v[i] = (z1.im[i] - z2.im[i]) * kInvSqrt2;
      }
      type_band(br[0].bands[l], t) = std::move(waa);
      type_band(br[1].bands[l], t) = std::move(wab);
      type_band(br[2].bands[l], t) = std::move(wba);
      type_band(br[3].bands[l], t) = std::move(wbb);
    }
  }
  const int lr = pyr.lowpass.rows / 2, lc = pyr.lowpass.cols / 2;
  for (int vt = 0; vt < 2; ++vt) {
    for (int ht = 0; ht < 2; ++ht) {
      Raster low = Raster::zeros(lr, lc);
      for (int i = 0; i < lr; ++i) {
        for (int j = 0; j < lc; ++j) {
          low.at(i, j) = pyr.lowpass.at(2 * i + vt, 2 * j + ht);
        }
      }
      br[2 * vt + ht].low = std::move(low);
    }
  }

  Image out = Image::zeros(pyr.orig_h, pyr.orig_w);
  Raster acc = Raster::zeros(pyr.orig_h, pyr.orig_w);
  for (int vt = 0; vt < 2; ++vt) {
    for (int ht = 0; ht < 2; ++ht) {
      Raster rec = branch_inverse(br[2 * vt + ht], vt, ht, dt, pyr.orig_h,
                                  pyr.orig_w);
      for (size_t i = 0; i < acc.v.size(); ++i) acc.v[i] += rec.v[i];
    }
  }
  for (size_t i = 0; i < acc.v.size(); ++i) out.data[i] = acc.v[i] * 0.25;
  return out;
}

std::vector<DetailTriple> map_orientations_to_hvd(const ComplexPyramid& pyr) {
  std::vector<DetailTriple> out(pyr.levels);
  for (int l = 0; l < pyr.levels; ++l) {
    for (int t = 0; t < 3; ++t) {
      const ComplexRaster& z1 = pyr.oriented[l][kSlot[t][0]];
      const ComplexRaster& z2 = pyr.oriented[l][kSlot[t][1]];
      Raster m = Raster::zeros(z1.rows, z1.cols);
      for (size_t i = 0; i < m.v.size(); ++i) {
        m.v[i] = std::sqrt(z1.re[i] * z1.re[i] + z1.im[i] * z1.im[i] +
                           z2.re[i] * z2.re[i] + z2.im[i] * z2.im[i]);
      }
      Raster& dst = t == 0 ? out[l].h : (t == 1 ? out[l].v : out[l].d);
      dst = std::move(m);
    }
  }
  return out;
}

}  // namespace wavetir
