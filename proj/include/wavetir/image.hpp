#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace wavetir {

enum class SourceDepth { bits8, bits16 };

// Single-channel raster, row-major, intensities normalized to [0,1] at load
// time. source_depth records the bit depth of the file the image came from.
struct Image {
  int height = 0;
  int width = 0;
  std::vector<double> data;
  SourceDepth source_depth = SourceDepth::bits8;

  double& at(int r, int c) { return data[static_cast<size_t>(r) * width + c]; }
  double at(int r, int c) const {
    return data[static_cast<size_t>(r) * width + c];
  }

  static Image zeros(int h, int w) {
    Image im;
    im.height = h;
    im.width = w;
    im.data.assign(static_cast<size_t>(h) * w, 0.0);
    return im;
  }
};

// Reads a PGM (P2/P5) or 8/16-bit grayscale PNG file. Values are mapped
// linearly from [0, 2^depth - 1] to [0,1]. Throws std::runtime_error on
// unreadable, truncated, or unsupported input.
Image load_image(const std::string& path);

// Writes PGM (".pgm") or PNG (anything else) at the requested depth. Values
// are clamped to [0,1] and quantized with round-half-up. Writes to a
// temporary file first and renames into place on success.
void save_image(const Image& img, const std::string& path, SourceDepth depth);

// Affine map of an arbitrary finite raster onto [0,1]; a constant raster maps
// to all zeros.
Image rescale_minmax(const std::vector<double>& raw, int height, int width);

enum class NoiseKind { gaussian, column_fpn, row_fpn, strip };

struct NoiseSpec {
  NoiseKind kind = NoiseKind::gaussian;
  double amplitude = 0.0;  // sigma or offset scale, in [0,1] intensity units
  std::uint64_t seed = 0;
};

NoiseKind parse_noise_kind(const std::string& s);
std::string noise_kind_name(NoiseKind k);

// Deterministic synthetic degradation. The noise field is a pure function of
// (kind, amplitude, seed, image shape); output is clamped to [0,1].
Image add_noise(const Image& clean, const NoiseSpec& spec);

}  // namespace wavetir
