// wavetir: batch CLI over the wavelet toolkit library.

#include <clocale>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "wavetir/analysis.hpp"
#include "wavetir/denoise.hpp"
#include "wavetir/dtcwt2d.hpp"
#include "wavetir/dwt2d.hpp"
#include "wavetir/image.hpp"
#include "wavetir/metrics.hpp"
#include "wavetir/pyramid_io.hpp"

namespace fs = std::filesystem;
using nlohmann::ordered_json;
using namespace wavetir;

namespace {

// Usage/validation problems exit 2, I/O and data problems exit 1.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

int worker_count() {
  if (const char* env = std::getenv("WAVETIR_WORKERS")) {
    const int n = std::atoi(env);
    if (n >= 1) return n;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return static_cast<int>(std::min(4u, hw ? hw : 1u));
}

std::vector<TransformSelector> parse_family_list(const std::string& arg) {
  std::vector<TransformSelector> out;
  std::stringstream ss(arg);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    try {
      out.push_back(parse_selector(item));
    } catch (const std::exception& e) {
      throw UsageError(e.what());
    }
  }
  if (out.empty()) throw UsageError("empty --family list");
  return out;
}

// One pair per line, comma or tab separated; blank lines and # comments
// skipped.
std::vector<std::pair<std::string, std::string>> parse_pairlist(
    const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read pair list " + path);
  std::vector<std::pair<std::string, std::string>> pairs;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ' ||
                             line.back() == '\t')) {
      line.pop_back();
    }
    size_t start = line.find_first_not_of(" \t");
    if (start == std::string::npos) continue;
    line.erase(0, start);

    size_t sep = line.find_first_of(",\t");
    if (sep == std::string::npos) {
      throw std::runtime_error("malformed pair list line " +
                               std::to_string(lineno) + " in " + path);
    }
    std::string a = line.substr(0, sep);
    std::string b = line.substr(sep + 1);
    auto trim = [](std::string& s) {
      const size_t f = s.find_first_not_of(" \t");
      const size_t l = s.find_last_not_of(" \t");
      s = f == std::string::npos ? std::string() : s.substr(f, l - f + 1);
    };
    trim(a);
    trim(b);
    if (a.empty() || b.empty() ||
        b.find_first_of(",\t") != std::string::npos) {
      throw std::runtime_error("malformed pair list line " +
                               std::to_string(lineno) + " in " + path);
    }
    pairs.emplace_back(std::move(a), std::move(b));
  }
  if (pairs.empty()) throw std::runtime_error("no pairs in " + path);
  return pairs;
}

void write_text_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  const std::string tmp = out_path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + out_path);
    out << text;
  }
  fs::rename(tmp, out_path);
}

std::string fmt2(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string fmt_sci(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

ordered_json json_number_or_inf(double v) {
  if (std::isinf(v)) return "inf";
  return v;
}

SourceDepth depth_flag(int bits) {
  if (bits == 8) return SourceDepth::bits8;
  if (bits == 16) return SourceDepth::bits16;
  throw UsageError("--depth must be 8 or 16");
}

NoiseSpec parse_noise_flag(const std::string& arg, std::uint64_t seed) {
  const auto colon = arg.find(':');
  if (colon == std::string::npos) {
    throw UsageError("--noise expects kind:amplitude");
  }
  NoiseSpec spec;
  try {
    spec.kind = parse_noise_kind(arg.substr(0, colon));
    spec.amplitude = std::stod(arg.substr(colon + 1));
  } catch (const std::exception&) {
    throw UsageError("bad --noise value: " + arg);
  }
  if (spec.amplitude < 0) throw UsageError("noise amplitude must be >= 0");
  spec.seed = seed;
  return spec;
}

struct MetricsLine {
  double psnr_db;
  double ssim_v;
};

MetricsLine compute_metrics(const Image& a, const Image& b, double peak) {
  return {psnr(a, b, peak),
          ssim(Tensor4::from_image(a), Tensor4::from_image(b))};
}

std::string render_metrics(const MetricsLine& m, const std::string& format) {
  if (format == "json") {
    ordered_json j;
    j["schema"] = 1;
    j["name"] = "metrics";
    j["psnr_db"] = json_number_or_inf(m.psnr_db);
    j["ssim"] = m.ssim_v;
    return j.dump(2) + "\n";
  }
  if (format == "csv") {
    return "metric,value\npsnr_db," +
           (std::isinf(m.psnr_db) ? std::string("inf") : fmt2(m.psnr_db)) +
           "\nssim," + fmt_sci(m.ssim_v) + "\n";
  }
  return "PSNR (dB): " +
         (std::isinf(m.psnr_db) ? std::string("inf") : fmt2(m.psnr_db)) +
         "\nSSIM:      " + fmt_sci(m.ssim_v) + "\n";
}

int run(int argc, char** argv) {
  CLI::App app{"multiresolution wavelet toolkit for thermal-infrared imagery"};
  app.require_subcommand(1);

  std::string family_arg = "db4";
  int levels = 2;
  double alpha = 1.0, beta = 100.0;
  std::string format = "table";
  std::string out_arg;
  std::uint64_t seed = 0;

  auto add_common = [&](CLI::App* cmd, bool with_loss) {
    cmd->add_option("--family", family_arg,
                    "comma list of wavelets, e.g. db4,bior4.4,dtcwt");
    cmd->add_option("--levels", levels, "decomposition levels")
        ->check(CLI::PositiveNumber);
    if (with_loss) {
      cmd->add_option("--alpha", alpha, "SSIM weight in the latent loss");
      cmd->add_option("--beta", beta, "wavelet-loss weight");
    }
    cmd->add_option("--format", format, "report format")
        ->check(CLI::IsMember({"table", "csv", "json"}));
    cmd->add_option("--out", out_arg, "output file or directory");
  };

  // decompose
  auto* dec = app.add_subcommand("decompose", "write pyramid containers");
  std::string input_path;
  dec->add_option("--input", input_path, "input image")->required();
  add_common(dec, false);

  // reconstruct
  auto* rec = app.add_subcommand("reconstruct", "invert a pyramid container");
  std::string pyr_dir;
  int depth_bits = 8;
  rec->add_option("--input", pyr_dir, "pyramid directory")->required();
  rec->add_option("--out", out_arg, "output image path")->required();
  rec->add_option("--depth", depth_bits, "output bit depth (8 or 16)");

  // energy-report
  auto* er = app.add_subcommand("energy-report",
                                "sub-band energy and clean/noisy ratio report");
  std::string pairs_path;
  er->add_option("--pairs", pairs_path, "pair list: clean,noisy per line")
      ->required();
  add_common(er, false);

  // loss-eval
  auto* le = app.add_subcommand("loss-eval", "loss stack for an image pair");
  std::string clean_path, noisy_path;
  le->add_option("--clean", clean_path, "clean image")->required();
  le->add_option("--noisy", noisy_path, "noisy/restored image")->required();
  bool sum_levels = false;
  le->add_flag("--sum-levels", sum_levels,
               "sum wavelet loss over levels 1..j instead of level j only");
  add_common(le, true);

  // metrics
  auto* me = app.add_subcommand("metrics", "PSNR / SSIM for an image pair");
  bool peak255 = false;
  me->add_option("--clean", clean_path, "reference image")->required();
  me->add_option("--noisy", noisy_path, "test image")->required();
  me->add_flag("--peak255", peak255, "use the 8-bit 255 peak convention");
  me->add_option("--format", format, "report format")
      ->check(CLI::IsMember({"table", "csv", "json"}));
  me->add_option("--out", out_arg, "output file");

  // denoise
  auto* dn = app.add_subcommand("denoise", "wavelet-shrinkage denoising");
  std::string rule_arg = "bayes", mode_arg = "soft";
  dn->add_option("--input", input_path, "noisy image (single-image mode)");
  dn->add_option("--clean", clean_path, "clean reference for metrics");
  dn->add_option("--pairs", pairs_path, "pair list: clean,noisy per line");
  dn->add_option("--rule", rule_arg, "threshold rule")
      ->check(CLI::IsMember({"bayes", "universal"}));
  dn->add_option("--mode", mode_arg, "threshold mode")
      ->check(CLI::IsMember({"soft", "hard"}));
  dn->add_option("--depth", depth_bits, "output bit depth (8 or 16)");
  add_common(dn, false);

  // synth-noise
  auto* sn = app.add_subcommand("synth-noise", "materialize a noisy image");
  std::string noise_arg;
  sn->add_option("--input", input_path, "clean image")->required();
  sn->add_option("--noise", noise_arg, "kind:amplitude, e.g. column-fpn:0.1")
      ->required();
  sn->add_option("--seed", seed, "noise seed");
  sn->add_option("--out", out_arg, "output image path")->required();
  sn->add_option("--depth", depth_bits, "output bit depth (8 or 16)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  if (dec->parsed()) {
    const auto selectors = parse_family_list(family_arg);
    if (out_arg.empty()) throw UsageError("decompose requires --out DIR");
    const Image im = load_image(input_path);
    for (const auto& sel : selectors) {
      const std::string dir = (fs::path(out_arg) / sel.str()).string();
      if (sel.dtcwt) {
        save_pyramid(dtcwt2_forward(im, levels), dir);
      } else {
        save_pyramid(dwt2_forward(im, sel.family, levels), dir);
      }
    }
    return 0;
  }

  if (rec->parsed()) {
    const AnyPyramid pyr = load_pyramid(pyr_dir);
    const Image im = std::holds_alternative<SubbandPyramid>(pyr)
                         ? dwt2_inverse(std::get<SubbandPyramid>(pyr))
                         : dtcwt2_inverse(std::get<ComplexPyramid>(pyr));
    save_image(im, out_arg, depth_flag(depth_bits));
    return 0;
  }

  if (er->parsed()) {
    BatchConfig cfg;
    cfg.selectors = parse_family_list(family_arg);
    cfg.levels = levels;
    cfg.workers = worker_count();
    const RatioReport rep = batch_energy_report(parse_pairlist(pairs_path), cfg);
    const std::string text = format == "csv"
                                 ? render_csv(rep)
                                 : (format == "json" ? render_json(rep)
                                                     : render_table(rep));
    write_text_output(text, out_arg);
    return 0;
  }

  if (le->parsed()) {
    const auto selectors = parse_family_list(family_arg);
    if (selectors.size() != 1) {
      throw UsageError("loss-eval expects a single --family selector");
    }
    const Image clean = load_image(clean_path);
    const Image noisy = load_image(noisy_path);
    LossWeights w;
    w.alpha = alpha;
    w.beta = beta;
    w.j = levels;
    w.sel = selectors[0];
    w.sum_levels = sum_levels;
    const LossBreakdown lb = total_loss(Tensor4::from_image(noisy),
                                        Tensor4::from_image(clean), noisy,
                                        clean, w);
    std::string text;
    if (format == "json") {
      ordered_json j;
      j["schema"] = 1;
      j["name"] = "total_loss";
      j["value"] = lb.total;
      j["components"] = {{"latent", lb.latent},
                         {"mse", lb.mse_term},
                         {"ssim", lb.ssim_value},
                         {"wavelet", lb.wavelet}};
      j["weights"] = {{"alpha", w.alpha},
                      {"beta", w.beta},
                      {"j", w.j},
                      {"family", w.sel.str()}};
      text = j.dump(2) + "\n";
    } else if (format == "csv") {
      text = "component,value\ntotal," + fmt_sci(lb.total) + "\nlatent," +
             fmt_sci(lb.latent) + "\nmse," + fmt_sci(lb.mse_term) + "\nssim," +
             fmt_sci(lb.ssim_value) + "\nwavelet," + fmt_sci(lb.wavelet) + "\n";
    } else {
      text = "total:   " + fmt_sci(lb.total) + "\nlatent:  " +
             fmt_sci(lb.latent) + "\nmse:     " + fmt_sci(lb.mse_term) +
             "\nssim:    " + fmt_sci(lb.ssim_value) + "\nwavelet: " +
             fmt_sci(lb.wavelet) + "\n";
    }
    write_text_output(text, out_arg);
    return 0;
  }

  if (me->parsed()) {
    const Image clean = load_image(clean_path);
    const Image noisy = load_image(noisy_path);
    const MetricsLine m = compute_metrics(noisy, clean, peak255 ? 255.0 : 1.0);
    write_text_output(render_metrics(m, format), out_arg);
    return 0;
  }

  if (dn->parsed()) {
    const auto selectors = parse_family_list(family_arg);
    if (selectors.size() != 1) {
      throw UsageError("denoise expects a single --family selector");
    }
    ShrinkSpec spec;
    spec.rule = rule_arg == "bayes" ? ShrinkRule::bayes : ShrinkRule::universal;
    spec.mode = mode_arg == "soft" ? ShrinkMode::soft : ShrinkMode::hard;
    spec.sel = selectors[0];
    spec.levels = levels;

    std::vector<std::pair<std::string, std::string>> pairs;  // clean, noisy
    if (!pairs_path.empty()) {
      pairs = parse_pairlist(pairs_path);
    } else if (!input_path.empty()) {
      pairs.emplace_back(clean_path, input_path);
    } else {
      throw UsageError("denoise requires --input or --pairs");
    }
    if (out_arg.empty()) throw UsageError("denoise requires --out DIR");
    fs::create_directories(out_arg);

    std::string text;
    for (const auto& [cpath, npath] : pairs) {
      const Image noisy = load_image(npath);
      const Image restored = shrink_denoise(noisy, spec);
      const std::string dst =
          (fs::path(out_arg) / fs::path(npath).filename()).string();
      save_image(restored, dst, depth_flag(depth_bits));
      if (!cpath.empty()) {
        const Image clean = load_image(cpath);
        const MetricsLine before = compute_metrics(noisy, clean, 1.0);
        const MetricsLine after = compute_metrics(restored, clean, 1.0);
        text += fs::path(npath).filename().string() + ": PSNR " +
                fmt2(before.psnr_db) + " -> " + fmt2(after.psnr_db) +
                " dB, SSIM " + fmt2(before.ssim_v) + " -> " +
                fmt2(after.ssim_v) + "\n";
      }
    }
    std::cout << text;
    return 0;
  }

  if (sn->parsed()) {
    const NoiseSpec spec = parse_noise_flag(noise_arg, seed);
    const Image clean = load_image(input_path);
    save_image(add_noise(clean, spec), out_arg, depth_flag(depth_bits));
    return 0;
  }

  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  std::setlocale(LC_ALL, "C");
  try {
    return run(argc, argv);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
