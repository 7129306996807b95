#pragma once

#include <string>
#include <variant>

#include "wavetir/dtcwt2d.hpp"
#include "wavetir/dwt2d.hpp"

namespace wavetir {

// Pyramid container layout: a directory holding manifest.json plus one flat
// binary file per band (64-bit little-endian doubles, row-major). Complex
// bands are stored as separate _re/_im rasters. The manifest records the
// transform kind, family, levels, original shape and per-band metadata.
void save_pyramid(const SubbandPyramid& pyr, const std::string& dir);
void save_pyramid(const ComplexPyramid& pyr, const std::string& dir);

using AnyPyramid = std::variant<SubbandPyramid, ComplexPyramid>;

AnyPyramid load_pyramid(const std::string& dir);

}  // namespace wavetir
