#include "wavetir/analysis.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <mutex>
#include <stdexcept>
#include <thread>

#include <json.hpp>

namespace wavetir {

namespace {

double sumsq(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return s;
}

EnergyReport report_from_triples(const std::string& label, int j,
                                 double e_lo,
                                 const std::vector<std::array<double, 3>>& per) {
  EnergyReport r;
  r.family_label = label;
  r.levels = j;
  r.e_lo = e_lo;
  r.per_level = per;
  for (const auto& t : per) {
    r.e_h += t[0];
    r.e_v += t[1];
    r.e_d += t[2];
  }
  return r;
}

std::optional<double> pct(double clean, double noisy) {
  if (noisy == 0.0) return std::nullopt;
  return 100.0 * clean / noisy;
}

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

std::string ratio_str(const std::optional<double>& r) {
  return r ? fmt("%.2f", *r) : std::string("-");
}

EnergyReport decompose_energy(const Image& im, const TransformSelector& sel,
                              int levels) {
  if (sel.dtcwt) {
    return subband_energy(dtcwt2_forward(im, levels), levels);
  }
  return subband_energy(dwt2_forward(im, sel.family, levels), levels);
}

}  // namespace

EnergyReport subband_energy(const SubbandPyramid& pyr, int j) {
  if (j < 1 || j > pyr.levels) throw std::invalid_argument("level out of range");
  std::vector<std::array<double, 3>> per;
  for (int l = 0; l < j; ++l) {
    per.push_back({sumsq(pyr.details[l].h.v), sumsq(pyr.details[l].v.v),
                   sumsq(pyr.details[l].d.v)});
  }
  return report_from_triples(pyr.family.str(), j, sumsq(pyr.lowpass.v), per);
}

EnergyReport subband_energy(const ComplexPyramid& pyr, int j) {
  if (j < 1 || j > pyr.levels) throw std::invalid_argument("level out of range");
  // Energies averaged over the four branches (the 2x redundancy per axis) so
  // values are comparable with the critically-sampled families.
  std::vector<std::array<double, 3>> per;
  const auto hvd = map_orientations_to_hvd(pyr);
  for (int l = 0; l < j; ++l) {
    per.push_back({sumsq(hvd[l].h.v) * 0.25, sumsq(hvd[l].v.v) * 0.25,
                   sumsq(hvd[l].d.v) * 0.25});
  }
  return report_from_triples("dtcwt", j, sumsq(pyr.lowpass.v) * 0.25, per);
}

RatioRow make_ratio_row(const EnergyReport& clean, const EnergyReport& noisy) {
  RatioRow row;
  row.family_label = clean.family_label;
  row.clean = clean;
  row.noisy = noisy;
  row.ratio_lo = pct(clean.e_lo, noisy.e_lo);
  row.ratio_h = pct(clean.e_h, noisy.e_h);
  row.ratio_v = pct(clean.e_v, noisy.e_v);
  row.ratio_d = pct(clean.e_d, noisy.e_d);
  return row;
}

RatioReport energy_ratio(const Image& clean, const Image& noisy,
                         const std::vector<TransformSelector>& selectors,
                         int levels) {
  if (clean.height != noisy.height || clean.width != noisy.width) {
    throw std::invalid_argument("shape mismatch between clean and noisy");
  }
  RatioReport rep;
  rep.levels = levels;
  for (const auto& sel : selectors) {
    rep.rows.push_back(make_ratio_row(decompose_energy(clean, sel, levels),
                                      decompose_energy(noisy, sel, levels)));
  }
  return rep;
}

RatioReport batch_energy_report(
    const std::vector<std::pair<std::string, std::string>>& pairs,
    const BatchConfig& config) {
  if (pairs.empty()) throw std::invalid_argument("no pairs");

  struct PairResult {
    std::vector<EnergyReport> clean, noisy;
  };
  std::vector<PairResult> results(pairs.size());
  std::atomic<size_t> next{0};
  std::atomic<bool> failed{false};
  std::string error;
  std::mutex error_mu;

  auto work = [&] {
    for (;;) {
      const size_t i = next.fetch_add(1);
      if (i >= pairs.size() || failed.load()) break;
      try {
        const Image clean = load_image(pairs[i].first);
        const Image noisy = load_image(pairs[i].second);
        if (clean.height != noisy.height || clean.width != noisy.width) {
          throw std::runtime_error("shape mismatch in pair " + pairs[i].first +
                                   ", " + pairs[i].second);
        }
        for (const auto& sel : config.selectors) {
          results[i].clean.push_back(
              decompose_energy(clean, sel, config.levels));
          results[i].noisy.push_back(
              decompose_energy(noisy, sel, config.levels));
        }
      } catch (const std::exception& e) {
        std::lock_guard<std::mutex> lk(error_mu);
        if (!failed.exchange(true)) error = e.what();
      }
    }
  };

  const int workers = std::max(1, config.workers);
  if (workers == 1) {
    work();
  } else {
    std::vector<std::thread> threads;
    for (int t = 0; t < workers; ++t) threads.emplace_back(work);
    for (auto& t : threads) t.join();
  }
  if (failed.load()) throw std::runtime_error(error);

  // Ordered reduction: sum energies across the corpus, then take ratios.
  RatioReport rep;
  rep.levels = config.levels;
  for (size_t s = 0; s < config.selectors.size(); ++s) {
    EnergyReport clean = results[0].clean[s];
    EnergyReport noisy = results[0].noisy[s];
    for (size_t i = 1; i < results.size(); ++i) {
      auto add = [](EnergyReport& acc, const EnergyReport& r) {
        acc.e_lo += r.e_lo;
        acc.e_h += r.e_h;
        acc.e_v += r.e_v;
        acc.e_d += r.e_d;
        for (size_t l = 0; l < acc.per_level.size(); ++l) {
          for (int t = 0; t < 3; ++t) acc.per_level[l][t] += r.per_level[l][t];
        }
      };
      add(clean, results[i].clean[s]);
      add(noisy, results[i].noisy[s]);
    }
    rep.rows.push_back(make_ratio_row(clean, noisy));
  }
  return rep;
}

std::string format_energy(double e) {
  const double a = std::fabs(e);
  if (a >= 1e9) return fmt("%.3f", e / 1e9) + "B";
  if (a >= 1e6) return fmt("%.3f", e / 1e6) + "M";
  if (a >= 1e3) return fmt("%.3f", e / 1e3) + "K";
  return fmt("%.3f", e);
}

std::string render_table(const RatioReport& rep) {
  std::string out;
  out += "# sub-band energies and clean/noisy energy ratios (percent)\n";
  out += "# levels: " + std::to_string(rep.levels) + "\n";
  char line[256];
  std::snprintf(line, sizeof line, "%-10s %-7s %12s %12s %12s %12s\n",
                "family", "row", "lo", "h", "v", "d");
  out += line;
  for (const auto& row : rep.rows) {
    std::snprintf(line, sizeof line, "%-10s %-7s %12s %12s %12s %12s\n",
                  row.family_label.c_str(), "noisy",
                  format_energy(row.noisy.e_lo).c_str(),
                  format_energy(row.noisy.e_h).c_str(),
                  format_energy(row.noisy.e_v).c_str(),
                  format_energy(row.noisy.e_d).c_str());
    out += line;
    std::snprintf(line, sizeof line, "%-10s %-7s %12s %12s %12s %12s\n",
                  row.family_label.c_str(), "clean",
                  format_energy(row.clean.e_lo).c_str(),
                  format_energy(row.clean.e_h).c_str(),
                  format_energy(row.clean.e_v).c_str(),
                  format_energy(row.clean.e_d).c_str());
    out += line;
    std::snprintf(line, sizeof line, "%-10s %-7s %12s %12s %12s %12s\n",
                  row.family_label.c_str(), "ratio%",
                  ratio_str(row.ratio_lo).c_str(),
                  ratio_str(row.ratio_h).c_str(),
                  ratio_str(row.ratio_v).c_str(),
                  ratio_str(row.ratio_d).c_str());
    out += line;
  }
  return out;
}

std::string render_csv(const RatioReport& rep) {
  std::string out = "family,row,lo,h,v,d\n";
  auto csv_ratio = [](const std::optional<double>& r) {
    return r ? fmt("%.2f", *r) : std::string();
  };
  for (const auto& row : rep.rows) {
    out += row.family_label + ",noisy," + format_energy(row.noisy.e_lo) + "," +
           format_energy(row.noisy.e_h) + "," + format_energy(row.noisy.e_v) +
           "," + format_energy(row.noisy.e_d) + "\n";
    out += row.family_label + ",clean," + format_energy(row.clean.e_lo) + "," +
           format_energy(row.clean.e_h) + "," + format_energy(row.clean.e_v) +
           "," + format_energy(row.clean.e_d) + "\n";
    out += row.family_label + ",ratio," + csv_ratio(row.ratio_lo) + "," +
           csv_ratio(row.ratio_h) + "," + csv_ratio(row.ratio_v) + "," +
           csv_ratio(row.ratio_d) + "\n";
  }
  return out;
}

std::string render_json(const RatioReport& rep) {
  nlohmann::ordered_json j;
  j["schema"] = 1;
  j["levels"] = rep.levels;
  j["ratio_direction"] = "clean/noisy";
  j["rows"] = nlohmann::ordered_json::array();
  for (const auto& row : rep.rows) {
    nlohmann::ordered_json r;
    r["family"] = row.family_label;
    auto energies = [](const EnergyReport& e) {
      nlohmann::ordered_json o;
      o["lo"] = e.e_lo;
      o["h"] = e.e_h;
      o["v"] = e.e_v;
      o["d"] = e.e_d;
      return o;
    };
    r["noisy"] = energies(row.noisy);
    r["clean"] = energies(row.clean);
    auto ratio = [](const std::optional<double>& x) {
      return x ? nlohmann::ordered_json(*x) : nlohmann::ordered_json(nullptr);
    };
    r["ratio_percent"] = {{"lo", ratio(row.ratio_lo)},
                          {"h", ratio(row.ratio_h)},
                          {"v", ratio(row.ratio_v)},
                          {"d", ratio(row.ratio_d)}};
    j["rows"].push_back(r);
  }
  return j.dump(2) + "\n";
}

}  // namespace wavetir
