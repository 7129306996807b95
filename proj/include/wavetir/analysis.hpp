#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wavetir/dtcwt2d.hpp"
#include "wavetir/dwt2d.hpp"
#include "wavetir/image.hpp"

namespace wavetir {

// Per-band coefficient energies E_s = sum |Y_s|^2. The headline e_h/e_v/e_d
// sum detail energies over levels 1..j; per_level keeps the breakdown. For
// the dual-tree transform, band energies are averaged over the four branches
// (complex pairs carry two branches per quadrature component) so magnitudes
// are directly comparable with the critically-sampled families; the h/v/d
// grouping follows map_orientations_to_hvd.
struct EnergyReport {
  std::string family_label;
  int levels = 0;
  double e_lo = 0.0;
  double e_h = 0.0, e_v = 0.0, e_d = 0.0;
  std::vector<std::array<double, 3>> per_level;  // {h, v, d} per level
};

EnergyReport subband_energy(const SubbandPyramid& pyr, int j);
EnergyReport subband_energy(const ComplexPyramid& pyr, int j);

// One family row of the energy-ratio report. Ratios are clean/noisy energy
// percentages; absent when the noisy energy is zero.
struct RatioRow {
  std::string family_label;
  EnergyReport clean, noisy;
  std::optional<double> ratio_lo, ratio_h, ratio_v, ratio_d;
};

struct RatioReport {
  int levels = 0;
  std::vector<RatioRow> rows;
};

RatioRow make_ratio_row(const EnergyReport& clean, const EnergyReport& noisy);

// Decomposes both images with each selector ("haar", "db4", ..., "dtcwt")
// and reports per-band clean/noisy ratios. Throws on shape mismatch.
RatioReport energy_ratio(const Image& clean, const Image& noisy,
                         const std::vector<TransformSelector>& selectors,
                         int levels);

struct BatchConfig {
  std::vector<TransformSelector> selectors;
  int levels = 2;
  int workers = 1;
};

// Corpus-level report: band energies are summed across all pairs before the
// ratios are taken, so the result is order-independent and equals the
// single-pair report for a one-element list.
RatioReport batch_energy_report(
    const std::vector<std::pair<std::string, std::string>>& pairs,
    const BatchConfig& config);

// "2.340B" / "3.789M" style magnitude formatting, three decimals.
std::string format_energy(double e);

std::string render_table(const RatioReport& report);
std::string render_csv(const RatioReport& report);
std::string render_json(const RatioReport& report);

}  // namespace wavetir
