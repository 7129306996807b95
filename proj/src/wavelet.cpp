#include "wavetir/wavelet.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace wavetir {

namespace {

std::vector<double> reversed(const std::vector<double>& f) {
  return {f.rbegin(), f.rend()};
}

// g[k] = (-1)^k h[L-1-k]; gives haar analysis_hi = {1/sqrt2, -1/sqrt2}.
std::vector<double> qmf(const std::vector<double>& h) {
  const int L = static_cast<int>(h.size());
  std::vector<double> g(L);
  for (int k = 0; k < L; ++k) {
    g[k] = (k % 2 ? -1.0 : 1.0) * h[L - 1 - k];
  }
  return g;
}

FilterBank orthogonal_bank(std::vector<double> h) {
  FilterBank fb;
  fb.analysis_lo = std::move(h);
  fb.analysis_hi = qmf(fb.analysis_lo);
  fb.synthesis_lo = reversed(fb.analysis_lo);
  fb.synthesis_hi = reversed(fb.analysis_hi);
  fb.orthogonal = true;
  return fb;
}

// Aligns a biorthogonal pair of unequal support for the shared periodized
// convention: the shorter synthesis side is padded with leading zeros (in
// transpose form) so both channels share one sampling grid and the
// round-trip is an exact identity.
FilterBank biorthogonal_bank(std::span<const double> dec,
                             std::span<const double> rec) {
  const int lh = static_cast<int>(dec.size());
  const int lr = static_cast<int>(rec.size());
  const int delta = (lh - lr) / 2;
  const double sg = (lr % 2 == 0) ? 1.0 : -1.0;

  FilterBank fb;
  fb.analysis_lo.assign(dec.begin(), dec.end());
  fb.analysis_hi.assign(2 * delta, 0.0);
  for (int k = 0; k < lr; ++k) {
    fb.analysis_hi.push_back((k % 2 ? -1.0 : 1.0) * rec[k]);
  }
  std::vector<double> lo_t(delta, 0.0), hi_t(delta, 0.0);
  lo_t.insert(lo_t.end(), rec.begin(), rec.end());
  for (int k = 0; k < lh; ++k) {
    hi_t.push_back(sg * (k % 2 ? -1.0 : 1.0) * dec[k]);
  }
  fb.synthesis_lo = reversed(lo_t);
  fb.synthesis_hi = reversed(hi_t);
  fb.orthogonal = false;
  return fb;
}

}  // namespace

std::string WaveletFamily::str() const {
  switch (name) {
    case FamilyName::haar:
      return "haar";
    case FamilyName::daubechies:
      return "db" + std::to_string(order);
    case FamilyName::symlet:
      return "sym" + std::to_string(order);
    case FamilyName::coiflet:
      return "coif" + std::to_string(order);
    case FamilyName::biorthogonal:
      return "bior" + std::to_string(order / 10) + "." +
             std::to_string(order % 10);
  }
  return "?";
}

WaveletFamily default_member(FamilyName name) {
  switch (name) {
    case FamilyName::haar:
      return {FamilyName::haar, 0};
    case FamilyName::daubechies:
      return {FamilyName::daubechies, 4};
    case FamilyName::symlet:
      return {FamilyName::symlet, 4};
    case FamilyName::coiflet:
      return {FamilyName::coiflet, 2};
    case FamilyName::biorthogonal:
      return {FamilyName::biorthogonal, 44};
  }
  throw std::invalid_argument("unknown family");
}

WaveletFamily parse_family(const std::string& s) {
  size_t i = 0;
  while (i < s.size() && std::isalpha(static_cast<unsigned char>(s[i]))) ++i;
  const std::string letters = s.substr(0, i);
  const std::string digits = s.substr(i);

  FamilyName name;
  if (letters == "haar") {
    if (!digits.empty()) {
      throw std::invalid_argument("unsupported wavelet: " + s);
    }
    return {FamilyName::haar, 0};
  } else if (letters == "db" || letters == "daubechies") {
    name = FamilyName::daubechies;
  } else if (letters == "sym" || letters == "symlet") {
    name = FamilyName::symlet;
  } else if (letters == "coif" || letters == "coiflet") {
    name = FamilyName::coiflet;
  } else if (letters == "bior" || letters == "biorthogonal") {
    name = FamilyName::biorthogonal;
  } else {
    throw std::invalid_argument("unsupported wavelet: " + s);
  }
  if (digits.empty()) return default_member(name);

  WaveletFamily fam{name, 0};
  if (name == FamilyName::biorthogonal) {
    const auto dot = digits.find('.');
    if (dot == std::string::npos || dot == 0 || dot + 1 >= digits.size()) {
      throw std::invalid_argument("unsupported wavelet: " + s);
    }
    try {
      fam.order = std::stoi(digits.substr(0, dot)) * 10 +
                  std::stoi(digits.substr(dot + 1));
    } catch (const std::exception&) {
      throw std::invalid_argument("unsupported wavelet: " + s);
    }
  } else {
    try {
      fam.order = std::stoi(digits);
    } catch (const std::exception&) {
      throw std::invalid_argument("unsupported wavelet: " + s);
    }
  }
  make_filterbank(fam);  // validates the (name, order) pair
  return fam;
}

FilterBank make_filterbank(const WaveletFamily& family) {
  if (family.name == FamilyName::haar) {
    const double s = 1.0 / std::numbers::sqrt2;
    return orthogonal_bank({s, s});
  }
  if (family.name == FamilyName::biorthogonal) {
    const auto t = tables::biorthogonal_pair(family.order / 10,
                                            family.order % 10);
    if (t.dec_lo.empty()) {
      throw std::invalid_argument("unsupported wavelet: " +
                                  family.str());
    }
    return biorthogonal_bank(t.dec_lo, t.rec_lo);
  }
  const auto h = tables::orthogonal_scaling(family.name, family.order);
  if (h.empty()) {
    throw std::invalid_argument("unsupported wavelet: " +
                                family.str());
  }
  return orthogonal_bank({h.begin(), h.end()});
}

DualTreeFilters make_dualtree_filters() {
  DualTreeFilters dt;
  dt.level1_a = make_filterbank({FamilyName::biorthogonal, 44});

  // Tree b at level 1 is tree a delayed by one input sample (half a sample
  // after decimation): a zero is prepended to the analysis filters and
  // appended to the synthesis filters. This also makes the pair an
  // odd/even-length one (9/7 vs 10/8 taps).
  dt.level1_b = dt.level1_a;
  auto delay = [](std::vector<double>& f, bool analysis) {
    if (analysis) {
      f.insert(f.begin(), 0.0);
    } else {
      f.push_back(0.0);
    }
  };
  delay(dt.level1_b.analysis_lo, true);
  delay(dt.level1_b.analysis_hi, true);
  delay(dt.level1_b.synthesis_lo, false);
  delay(dt.level1_b.synthesis_hi, false);

  const auto q = tables::qshift14();
  std::vector<double> h0b(q.begin(), q.end());
  std::vector<double> h0a(q.rbegin(), q.rend());
  dt.higher_a = orthogonal_bank(std::move(h0a));
  dt.higher_b = orthogonal_bank(std::move(h0b));
  return dt;
}

TransformSelector parse_selector(const std::string& s) {
  TransformSelector sel;
  if (s == "dtcwt") {
    sel.dtcwt = true;
    return sel;
  }
  sel.family = parse_family(s);
  return sel;
}

}  // namespace wavetir
