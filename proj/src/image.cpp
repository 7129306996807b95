#include "wavetir/image.hpp"

#include <png.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace wavetir {

namespace {

[[noreturn]] void corrupt(const std::string& path) {
  throw std::runtime_error("unsupported or corrupt image: " + path);
}

// --- PGM ----------------------------------------------------------------

int next_pgm_token(std::istream& in, const std::string& path) {
  // skips whitespace and '#' comments, returns a non-negative integer
  for (;;) {
    int ch = in.peek();
    if (ch == EOF) corrupt(path);
    if (std::isspace(ch)) {
      in.get();
    } else if (ch == '#') {
      std::string line;
      std::getline(in, line);
    } else {
      break;
    }
  }
  int value;
  if (!(in >> value) || value < 0) corrupt(path);
  return value;
}

Image load_pgm(std::istream& in, const std::string& path, bool ascii) {
  const int w = next_pgm_token(in, path);
  const int h = next_pgm_token(in, path);
  const int maxval = next_pgm_token(in, path);
  if (w < 1 || h < 1 || maxval < 1 || maxval > 65535) corrupt(path);

  Image im = Image::zeros(h, w);
  im.source_depth = maxval > 255 ? SourceDepth::bits16 : SourceDepth::bits8;
  const size_t count = im.data.size();
  if (ascii) {
    for (size_t i = 0; i < count; ++i) {
      const int v = next_pgm_token(in, path);
      if (v > maxval) corrupt(path);
      im.data[i] = static_cast<double>(v) / maxval;
    }
  } else {
    in.get();  // single whitespace after maxval
    const int bytes = maxval > 255 ? 2 : 1;
    std::vector<unsigned char> buf(count * bytes);
    in.read(reinterpret_cast<char*>(buf.data()),
            static_cast<std::streamsize>(buf.size()));
    if (static_cast<size_t>(in.gcount()) != buf.size()) corrupt(path);
    for (size_t i = 0; i < count; ++i) {
      const int v = bytes == 2 ? (buf[2 * i] << 8) | buf[2 * i + 1] : buf[i];
      if (v > maxval) corrupt(path);
      im.data[i] = static_cast<double>(v) / maxval;
    }
  }
  return im;
}

void save_pgm(const Image& im, const std::string& path, SourceDepth depth) {
  const int maxval = depth == SourceDepth::bits16 ? 65535 : 255;
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << "P5\n" << im.width << " " << im.height << "\n" << maxval << "\n";
  for (double v : im.data) {
    const double c = std::clamp(v, 0.0, 1.0);
    const int q = static_cast<int>(std::floor(c * maxval + 0.5));
    if (maxval > 255) {
      out.put(static_cast<char>((q >> 8) & 0xff));
      out.put(static_cast<char>(q & 0xff));
    } else {
      out.put(static_cast<char>(q & 0xff));
    }
  }
  if (!out) throw std::runtime_error("cannot write " + path);
}

// --- PNG ----------------------------------------------------------------

Image load_png(const std::string& path) {
  FILE* fp = std::fopen(path.c_str(), "rb");
  if (!fp) throw std::runtime_error("cannot read " + path);
  png_structp png =
      png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
  png_infop info = png ? png_create_info_struct(png) : nullptr;
  if (!png || !info) {
    if (png) png_destroy_read_struct(&png, &info, nullptr);
    std::fclose(fp);
    throw std::runtime_error("png init failure");
  }
  std::vector<png_bytep> rows;
  std::vector<unsigned char> pixels;
  if (setjmp(png_jmpbuf(png))) {
    png_destroy_read_struct(&png, &info, nullptr);
    std::fclose(fp);
    corrupt(path);
  }
  png_init_io(png, fp);
  png_read_info(png, info);

  const png_uint_32 w = png_get_image_width(png, info);
  const png_uint_32 h = png_get_image_height(png, info);
  const int color = png_get_color_type(png, info);
  int depth = png_get_bit_depth(png, info);
  if (color != PNG_COLOR_TYPE_GRAY || w < 1 || h < 1) {
    png_destroy_read_struct(&png, &info, nullptr);
    std::fclose(fp);
    corrupt(path);
  }
  if (depth < 8) {
    png_set_expand_gray_1_2_4_to_8(png);
    depth = 8;
  }
  png_read_update_info(png, info);

  const int bytes = depth == 16 ? 2 : 1;
  pixels.resize(static_cast<size_t>(w) * h * bytes);
  rows.resize(h);
  for (png_uint_32 r = 0; r < h; ++r) {
    rows[r] = pixels.data() + static_cast<size_t>(r) * w * bytes;
  }
  png_read_image(png, rows.data());
  png_read_end(png, nullptr);
  png_destroy_read_struct(&png, &info, nullptr);
  std::fclose(fp);

  Image im = Image::zeros(static_cast<int>(h), static_cast<int>(w));
  im.source_depth = depth == 16 ? SourceDepth::bits16 : SourceDepth::bits8;
  const double maxval = depth == 16 ? 65535.0 : 255.0;
  for (size_t i = 0; i < im.data.size(); ++i) {
    const int v = bytes == 2 ? (pixels[2 * i] << 8) | pixels[2 * i + 1]
                             : pixels[i];  // PNG 16-bit is big-endian
    im.data[i] = v / maxval;
  }
  return im;
}

void save_png(const Image& im, const std::string& path, SourceDepth depth) {
  FILE* fp = std::fopen(path.c_str(), "wb");
  if (!fp) throw std::runtime_error("cannot write " + path);
  png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr,
                                            nullptr, nullptr);
  png_infop info = png ? png_create_info_struct(png) : nullptr;
  if (!png || !info) {
    if (png) png_destroy_write_struct(&png, &info);
    std::fclose(fp);
    throw std::runtime_error("png init failure");
  }
  if (setjmp(png_jmpbuf(png))) {
    png_destroy_write_struct(&png, &info);
    std::fclose(fp);
    throw std::runtime_error("cannot write " + path);
  }
  const int bits = depth == SourceDepth::bits16 ? 16 : 8;
  const int maxval = (1 << bits) - 1;
  png_init_io(png, fp);
  png_set_IHDR(png, info, im.width, im.height, bits, PNG_COLOR_TYPE_GRAY,
               PNG_INTERLACE_NONE, PNG_COMPRESSION_TYPE_DEFAULT,
               PNG_FILTER_TYPE_DEFAULT);
  png_write_info(png, info);

  const int bytes = bits / 8;
  std::vector<unsigned char> row(static_cast<size_t>(im.width) * bytes);
  for (int r = 0; r < im.height; ++r) {
    for (int c = 0; c < im.width; ++c) {
      const double v = std::clamp(im.at(r, c), 0.0, 1.0);
      const int q = static_cast<int>(std::floor(v * maxval + 0.5));
      if (bytes == 2) {
        row[2 * c] = static_cast<unsigned char>((q >> 8) & 0xff);
        row[2 * c + 1] = static_cast<unsigned char>(q & 0xff);
      } else {
        row[c] = static_cast<unsigned char>(q & 0xff);
      }
    }
    png_write_row(png, row.data());
  }
  png_write_end(png, nullptr);
  png_destroy_write_struct(&png, &info);
  std::fclose(fp);
}

bool has_suffix(const std::string& s, const std::string& suf) {
  return s.size() >= suf.size() &&
         std::equal(suf.rbegin(), suf.rend(), s.rbegin());
}

}  // namespace

Image load_image(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  char magic[2] = {0, 0};
  in.read(magic, 2);
  if (in.gcount() != 2) corrupt(path);
  if (magic[0] == 'P' && (magic[1] == '2' || magic[1] == '5')) {
    Image im = load_pgm(in, path, magic[1] == '2');
    return im;
  }
  if (static_cast<unsigned char>(magic[0]) == 0x89 && magic[1] == 'P') {
    in.close();
    return load_png(path);
  }
  corrupt(path);
}

void save_image(const Image& img, const std::string& path, SourceDepth depth) {
  if (img.height < 1 || img.width < 1 ||
      img.data.size() != static_cast<size_t>(img.height) * img.width) {
    throw std::runtime_error("invalid image");
  }
  const std::string tmp = path + ".tmp";
  if (has_suffix(path, ".pgm")) {
    save_pgm(img, tmp, depth);
  } else {
    save_png(img, tmp, depth);
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp);
    throw std::runtime_error("cannot write " + path);
  }
}

Image rescale_minmax(const std::vector<double>& raw, int height, int width) {
  if (height < 1 || width < 1 ||
      raw.size() != static_cast<size_t>(height) * width) {
    throw std::invalid_argument("invalid raster dimensions");
  }
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  for (double v : raw) {
    if (!std::isfinite(v)) throw std::invalid_argument("non-finite raster");
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  Image im = Image::zeros(height, width);
  if (hi > lo) {
    const double scale = 1.0 / (hi - lo);
    for (size_t i = 0; i < raw.size(); ++i) im.data[i] = (raw[i] - lo) * scale;
  }
  return im;
}

NoiseKind parse_noise_kind(const std::string& s) {
  if (s == "gaussian") return NoiseKind::gaussian;
  if (s == "column-fpn") return NoiseKind::column_fpn;
  if (s == "row-fpn") return NoiseKind::row_fpn;
  if (s == "strip") return NoiseKind::strip;
  throw std::invalid_argument("unknown noise kind: " + s);
}

std::string noise_kind_name(NoiseKind k) {
  switch (k) {
    case NoiseKind::gaussian:
      return "gaussian";
    case NoiseKind::column_fpn:
      return "column-fpn";
    case NoiseKind::row_fpn:
      return "row-fpn";
    case NoiseKind::strip:
      return "strip";
  }
  return "?";
}

namespace {

// Counter-based generator: every variate is a pure hash of
// (seed, stream, index), so noise fields are reproducible across platforms
// and schedulers.
std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t hash3(std::uint64_t seed, std::uint64_t stream,
                    std::uint64_t idx) {
  return mix64(mix64(mix64(seed) ^ (stream * 0xd1342543de82ef95ULL)) ^
               (idx * 0xaf251af3b0f025b5ULL));
}

double u01(std::uint64_t seed, std::uint64_t stream, std::uint64_t idx) {
  return static_cast<double>(hash3(seed, stream, idx) >> 11) * 0x1.0p-53;
}

double gauss(std::uint64_t seed, std::uint64_t stream, std::uint64_t idx) {
  const double u1 = 1.0 - u01(seed, stream, 2 * idx);      // (0, 1]
  const double u2 = u01(seed, stream, 2 * idx + 1);
  return std::sqrt(-2.0 * std::log(u1)) *
         std::cos(2.0 * 3.14159265358979323846 * u2);
}

}  // namespace

Image add_noise(const Image& clean, const NoiseSpec& spec) {
  if (spec.amplitude < 0) throw std::invalid_argument("negative amplitude");
  Image out = clean;
  if (spec.amplitude == 0.0) return out;
  const int h = clean.height, w = clean.width;

  switch (spec.kind) {
    case NoiseKind::gaussian: {
      for (int r = 0; r < h; ++r) {
        for (int c = 0; c < w; ++c) {
          out.at(r, c) += spec.amplitude *
                          gauss(spec.seed, 0, static_cast<std::uint64_t>(r) * w + c);
        }
      }
      break;
    }
    case NoiseKind::column_fpn: {
      for (int c = 0; c < w; ++c) {
        const double off = spec.amplitude * gauss(spec.seed, 1, c);
        for (int r = 0; r < h; ++r) out.at(r, c) += off;
      }
      break;
    }
    case NoiseKind::row_fpn: {
      for (int r = 0; r < h; ++r) {
        const double off = spec.amplitude * gauss(spec.seed, 2, r);
        for (int c = 0; c < w; ++c) out.at(r, c) += off;
      }
      break;
    }
    case NoiseKind::strip: {
      // contiguous column bands of width 4..16 sharing one offset each
      int c = 0;
      std::uint64_t band = 0;
      while (c < w) {
        const int bw = 4 + static_cast<int>(hash3(spec.seed, 3, band) % 13);
        const double off = spec.amplitude * gauss(spec.seed, 4, band);
        for (int cc = c; cc < std::min(c + bw, w); ++cc) {
          for (int r = 0; r < h; ++r) out.at(r, cc) += off;
        }
        c += bw;
        ++band;
      }
      break;
    }
  }
  for (double& v : out.data) v = std::clamp(v, 0.0, 1.0);
  return out;
}

}  // namespace wavetir
