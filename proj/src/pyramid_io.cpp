#include "wavetir/pyramid_io.hpp"

#include <array>
#include <bit>
#include <cstdint>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <stdexcept>

#include <json.hpp>

namespace wavetir {

namespace fs = std::filesystem;
using nlohmann::ordered_json;

namespace {

// Rasters are stored as flat 64-bit little-endian doubles, row-major.
void write_raster(const fs::path& file, const std::vector<double>& v) {
  std::ofstream out(file, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + file.string());
  static_assert(sizeof(double) == 8);
  if constexpr (std::endian::native == std::endian::little) {
    out.write(reinterpret_cast<const char*>(v.data()),
              static_cast<std::streamsize>(v.size() * 8));
  } else {
    for (double d : v) {
      std::uint64_t bits;
      std::memcpy(&bits, &d, 8);
      char b[8];
      for (int i = 0; i < 8; ++i) b[i] = static_cast<char>(bits >> (8 * i));
      out.write(b, 8);
    }
  }
  if (!out) throw std::runtime_error("cannot write " + file.string());
}

std::vector<double> read_raster(const fs::path& file, size_t count) {
  std::ifstream in(file, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + file.string());
  std::vector<double> v(count);
  if constexpr (std::endian::native == std::endian::little) {
    in.read(reinterpret_cast<char*>(v.data()),
            static_cast<std::streamsize>(count * 8));
    if (static_cast<size_t>(in.gcount()) != count * 8) {
      throw std::runtime_error("truncated raster " + file.string());
    }
  } else {
    for (size_t i = 0; i < count; ++i) {
      unsigned char b[8];
      in.read(reinterpret_cast<char*>(b), 8);
      if (in.gcount() != 8) {
        throw std::runtime_error("truncated raster " + file.string());
      }
      std::uint64_t bits = 0;
      for (int k = 0; k < 8; ++k) bits |= std::uint64_t(b[k]) << (8 * k);
      std::memcpy(&v[i], &bits, 8);
    }
  }
  return v;
}

void write_manifest(const fs::path& dir, const ordered_json& j) {
  const fs::path tmp = dir / "manifest.json.tmp";
  {
    std::ofstream out(tmp);
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
    out << j.dump(2) << "\n";
  }
  fs::rename(tmp, dir / "manifest.json");
}

ordered_json band_entry(const std::string& name, int rows, int cols) {
  return ordered_json{
      {"name", name}, {"rows", rows}, {"cols", cols}, {"file", name + ".bin"}};
}

}  // namespace

void save_pyramid(const SubbandPyramid& pyr, const std::string& dirname) {
  const fs::path dir(dirname);
  fs::create_directories(dir);

  ordered_json j;
  j["schema"] = 1;
  j["kind"] = "dwt";
  j["family"] = pyr.family.str();
  j["levels"] = pyr.levels;
  j["original_shape"] = {pyr.orig_h, pyr.orig_w};
  j["bands"] = ordered_json::array();

  j["bands"].push_back(
      band_entry("lowpass", pyr.lowpass.rows, pyr.lowpass.cols));
  write_raster(dir / "lowpass.bin", pyr.lowpass.v);
  for (int l = 1; l <= pyr.levels; ++l) {
    const DetailTriple& d = pyr.details[l - 1];
    const std::string prefix = "L" + std::to_string(l) + "_";
    const std::array<std::pair<const char*, const Raster*>, 3> triple = {
        {{"h", &d.h}, {"v", &d.v}, {"d", &d.d}}};
    for (const auto& [suffix, band] : triple) {
      j["bands"].push_back(band_entry(prefix + suffix, band->rows, band->cols));
      write_raster(dir / (prefix + suffix + ".bin"), band->v);
    }
  }
  write_manifest(dir, j);
}

void save_pyramid(const ComplexPyramid& pyr, const std::string& dirname) {
  const fs::path dir(dirname);
  fs::create_directories(dir);

  ordered_json j;
  j["schema"] = 1;
  j["kind"] = "dtcwt";
  j["levels"] = pyr.levels;
  j["original_shape"] = {pyr.orig_h, pyr.orig_w};
  j["orientations"] = kOrientationDegrees;
  j["bands"] = ordered_json::array();

  j["bands"].push_back(
      band_entry("lowpass", pyr.lowpass.rows, pyr.lowpass.cols));
  write_raster(dir / "lowpass.bin", pyr.lowpass.v);
  for (int l = 1; l <= pyr.levels; ++l) {
    for (int k = 0; k < 6; ++k) {
      const ComplexRaster& z = pyr.oriented[l - 1][k];
      const int deg = kOrientationDegrees[k];
      const std::string base = "L" + std::to_string(l) + "_" +
                               (deg < 0 ? "m" : "p") + std::to_string(std::abs(deg));
      j["bands"].push_back(band_entry(base + "_re", z.rows, z.cols));
      write_raster(dir / (base + "_re.bin"), z.re);
      j["bands"].push_back(band_entry(base + "_im", z.rows, z.cols));
      write_raster(dir / (base + "_im.bin"), z.im);
    }
  }
  write_manifest(dir, j);
}

AnyPyramid load_pyramid(const std::string& dirname) {
  const fs::path dir(dirname);
  std::ifstream in(dir / "manifest.json");
  if (!in) throw std::runtime_error("cannot read " + (dir / "manifest.json").string());
  ordered_json j;
  try {
    in >> j;
  } catch (const std::exception&) {
    throw std::runtime_error("corrupt manifest in " + dirname);
  }

  auto find_band = [&](const std::string& name) -> ordered_json {
    for (const auto& b : j.at("bands")) {
      if (b.at("name") == name) return b;
    }
    throw std::runtime_error("missing band " + name + " in " + dirname);
  };
  auto read_band = [&](const std::string& name) -> Raster {
    const auto b = find_band(name);
    Raster r;
    r.rows = b.at("rows").get<int>();
    r.cols = b.at("cols").get<int>();
    r.v = read_raster(dir / b.at("file").get<std::string>(),
                      static_cast<size_t>(r.rows) * r.cols);
    return r;
  };

  const std::string kind = j.at("kind").get<std::string>();
  const int levels = j.at("levels").get<int>();
  const auto shape = j.at("original_shape");

  if (kind == "dwt") {
    SubbandPyramid pyr;
    pyr.family = parse_family(j.at("family").get<std::string>());
    pyr.levels = levels;
    pyr.orig_h = shape.at(0).get<int>();
    pyr.orig_w = shape.at(1).get<int>();
    pyr.lowpass = read_band("lowpass");
    for (int l = 1; l <= levels; ++l) {
      const std::string prefix = "L" + std::to_string(l) + "_";
      DetailTriple d;
      d.h = read_band(prefix + "h");
      d.v = read_band(prefix + "v");
      d.d = read_band(prefix + "d");
      pyr.details.push_back(std::move(d));
    }
    return pyr;
  }
  if (kind == "dtcwt") {
    ComplexPyramid pyr;
    pyr.levels = levels;
    pyr.orig_h = shape.at(0).get<int>();
    pyr.orig_w = shape.at(1).get<int>();
    pyr.lowpass = read_band("lowpass");
    pyr.oriented.resize(levels);
    for (int l = 1; l <= levels; ++l) {
      for (int k = 0; k < 6; ++k) {
        const int deg = kOrientationDegrees[k];
        const std::string base = "L" + std::to_string(l) + "_" +
                                 (deg < 0 ? "m" : "p") +
                                 std::to_string(std::abs(deg));
        Raster re = read_band(base + "_re");
        Raster im = read_band(base + "_im");
        ComplexRaster z;
        z.rows = re.rows;
        z.cols = re.cols;
        z.re = std::move(re.v);
        z.im = std::move(im.v);
        pyr.oriented[l - 1][k] = std::move(z);
      }
    }
    return pyr;
  }
  throw std::runtime_error("unknown pyramid kind: " + kind);
}

}  // namespace wavetir
