#pragma once

#include <span>
#include <string>
#include <vector>

namespace wavetir {

enum class FamilyName { haar, daubechies, symlet, coiflet, biorthogonal };

// (name, order) pair selecting one member of a family. Orders follow the
// usual naming: db4 -> order 4, coif2 -> order 2. Biorthogonal members pack
// N.M into a two-digit order, e.g. bior4.4 -> 44, bior3.9 -> 39.
struct WaveletFamily {
  FamilyName name = FamilyName::haar;
  int order = 0;

  bool operator==(const WaveletFamily&) const = default;
  std::string str() const;  // "haar", "db4", "bior4.4", ...
};

// Parses "haar", "db4", "sym4", "coif2", "bior4.4" (letters then numeric
// order; biorthogonal as N.M). Throws std::invalid_argument on unsupported
// names or orders.
WaveletFamily parse_family(const std::string& s);

// Default member used when only a family name is given: db4, sym4, coif2,
// bior4.4.
WaveletFamily default_member(FamilyName name);

// Two-channel filter bank. Analysis convention (periodized):
//   a[i] = sum_k analysis_lo[k] * x[(2i + 2 - k) mod n]
// and likewise for the high-pass. Synthesis filters are stored so that
//   xhat[(2i + 3 - Ls + k) mod n] += c[i] * synthesis[k]
// inverts the analysis step exactly. For orthogonal families the synthesis
// filters are the time-reversed analysis filters.
struct FilterBank {
  std::vector<double> analysis_lo;
  std::vector<double> analysis_hi;
  std::vector<double> synthesis_lo;
  std::vector<double> synthesis_hi;
  bool orthogonal = false;
};

FilterBank make_filterbank(const WaveletFamily& family);

// Level-1 odd/even-length pair plus 14-tap quarter-shift pair for the dual
// tree. Tree b is a one-sample delay of tree a at level 1 (half a sample
// after decimation); at levels >= 2 the trees differ by half a sample via
// the quarter-shift design.
struct DualTreeFilters {
  FilterBank level1_a;
  FilterBank level1_b;
  FilterBank higher_a;
  FilterBank higher_b;
};

DualTreeFilters make_dualtree_filters();

// Selects either a DWT family or the dual-tree transform; parsed from the
// same grammar plus the literal "dtcwt".
struct TransformSelector {
  bool dtcwt = false;
  WaveletFamily family;

  std::string str() const { return dtcwt ? "dtcwt" : family.str(); }
};

TransformSelector parse_selector(const std::string& s);

namespace tables {

std::span<const double> orthogonal_scaling(FamilyName name, int order);

struct BiorTable {
  std::span<const double> dec_lo;
  std::span<const double> rec_lo;
};

BiorTable biorthogonal_pair(int n, int m);

std::span<const double> qshift14();

}  // namespace tables

}  // namespace wavetir
