#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>
#include <unistd.h>

#include <json.hpp>

#include "testutil.hpp"
#include "wavetir/image.hpp"
#include "wavetir/metrics.hpp"

namespace fs = std::filesystem;
using namespace wavetir;

namespace {

std::string g_cli;  // path to the wavetir binary, from argv[1]

struct RunResult {
  int code = -1;
  std::string output;
};

// Runs the CLI with optional extra environment assignments prepended.
RunResult run_cli(const std::string& args, const std::string& env = "") {
  const std::string out_file =
      (fs::temp_directory_path() / ("wavetir_cli_out_" + std::to_string(::getpid())))
          .string();
  const std::string cmd =
      env + (env.empty() ? "" : " ") + "'" + g_cli + "' " + args + " > '" +
      out_file + "' 2>&1";
  const int status = std::system(cmd.c_str());
  RunResult r;
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  std::ifstream in(out_file, std::ios::binary);
  r.output.assign((std::istreambuf_iterator<char>(in)),
                  std::istreambuf_iterator<char>());
  std::remove(out_file.c_str());
  return r;
}

fs::path tmpdir() {
  static fs::path dir = [] {
    fs::path d = fs::temp_directory_path() /
                 ("wavetir_cli_test_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string save_scene(const Image& im, const std::string& name) {
  const std::string path = (tmpdir() / name).string();
  save_image(im, path, SourceDepth::bits16);
  return path;
}

std::string write_text(const std::string& name, const std::string& text) {
  const fs::path p = tmpdir() / name;
  std::ofstream out(p, std::ios::binary);
  out << text;
  return p.string();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  return std::string((std::istreambuf_iterator<char>(in)),
                     std::istreambuf_iterator<char>());
}

}  // namespace

TEST_CASE("usage errors exit 2, help exits 0") {
  CHECK(run_cli("").code == 2);
  CHECK(run_cli("frobnicate").code == 2);
  CHECK(run_cli("metrics --bogus-flag x").code == 2);
  CHECK(run_cli("energy-report").code == 2);  // missing required --pairs
  CHECK(run_cli("--help").code == 0);
  CHECK(run_cli("denoise --input x.pgm --clean y.pgm --out d "
                "--family db4,sym4").code == 2);  // multi-family denoise
}

TEST_CASE("missing input files exit 1") {
  CHECK(run_cli("metrics --clean /nope/a.pgm --noisy /nope/b.pgm").code == 1);
  CHECK(run_cli("decompose --input /nope/a.pgm --out " +
                (tmpdir() / "x").string()).code == 1);
}

TEST_CASE("synth-noise is deterministic and respects the seed") {
  const std::string clean = save_scene(testutil::smooth_scene(0), "sn_clean.pgm");
  const std::string o1 = (tmpdir() / "sn1.pgm").string();
  const std::string o2 = (tmpdir() / "sn2.pgm").string();
  const std::string o3 = (tmpdir() / "sn3.pgm").string();
  CHECK(run_cli("synth-noise --input " + clean +
                " --noise column-fpn:0.1 --seed 5 --depth 16 --out " + o1)
            .code == 0);
  CHECK(run_cli("synth-noise --input " + clean +
                " --noise column-fpn:0.1 --seed 5 --depth 16 --out " + o2)
            .code == 0);
  CHECK(run_cli("synth-noise --input " + clean +
                " --noise column-fpn:0.1 --seed 6 --depth 16 --out " + o3)
            .code == 0);
  CHECK(read_file(o1) == read_file(o2));
  CHECK(read_file(o1) != read_file(o3));
  CHECK(run_cli("synth-noise --input " + clean +
                " --noise column-fpn --seed 5 --out " + o1).code == 2);
  CHECK(run_cli("synth-noise --input " + clean +
                " --noise sparkle:0.1 --seed 5 --out " + o1).code == 2);
}

TEST_CASE("decompose then reconstruct round trips") {
  const Image scene = testutil::smooth_scene(1);
  const std::string input = save_scene(scene, "dr_in.pgm");
  const std::string pyr = (tmpdir() / "dr_pyr").string();
  CHECK(run_cli("decompose --input " + input +
                " --family db4,dtcwt --levels 2 --out " + pyr).code == 0);
  CHECK(fs::exists(fs::path(pyr) / "db4" / "manifest.json"));
  CHECK(fs::exists(fs::path(pyr) / "dtcwt" / "manifest.json"));

  for (const char* sel : {"db4", "dtcwt"}) {
    const std::string out = (tmpdir() / ("dr_out_" + std::string(sel) + ".pgm")).string();
    CHECK(run_cli("reconstruct --input " + pyr + "/" + sel +
                  " --depth 16 --out " + out).code == 0);
    const Image back = load_image(out);
    CHECK(psnr(back, load_image(input)) > 80.0);
  }
}

TEST_CASE("metrics: closed-form PSNR and identical-pair sentinel") {
  Image a = testutil::smooth_scene(2);
  for (double& v : a.data) v = 0.3 + 0.4 * (v - 0.02) / 0.96;  // keep headroom
  Image b = a;
  for (double& v : b.data) v += 10.0 / 255.0;
  const std::string ap = save_scene(a, "m_a.pgm");
  const std::string bp = save_scene(b, "m_b.pgm");

  const RunResult r = run_cli("metrics --clean " + ap + " --noisy " + bp);
  CHECK(r.code == 0);
  CHECK(r.output.find("28.13") != std::string::npos);

  const RunResult same = run_cli("metrics --clean " + ap + " --noisy " + ap);
  CHECK(same.code == 0);
  CHECK(same.output.find("inf") != std::string::npos);
  CHECK(same.output.find("SSIM") != std::string::npos);

  const RunResult js =
      run_cli("metrics --clean " + ap + " --noisy " + bp + " --format json");
  const auto j = nlohmann::json::parse(js.output);
  CHECK(j["schema"] == 1);
  CHECK(j["psnr_db"].get<double>() == doctest::Approx(28.13).epsilon(0.001));
}

TEST_CASE("pair list parsing contract") {
  const std::string clean = save_scene(testutil::smooth_scene(3), "pl_c.pgm");
  const std::string noisy = save_scene(
      add_noise(testutil::smooth_scene(3), {NoiseKind::column_fpn, 0.1, 1}),
      "pl_n.pgm");

  const std::string good = write_text(
      "pairs_good.txt", "# comment line\n" + clean + "," + noisy + "\n\n" +
                            clean + "\t" + noisy + "  # trailing comment\n");
  CHECK(run_cli("energy-report --pairs " + good + " --family haar").code == 0);

  const std::string empty = write_text("pairs_empty.txt", "# nothing\n\n");
  const RunResult re = run_cli("energy-report --pairs " + empty);
  CHECK(re.code == 1);
  CHECK(re.output.find("no pairs") != std::string::npos);

  const std::string bad3 = write_text(
      "pairs_bad.txt", clean + "," + noisy + "\n" + clean + "," + noisy + "," +
                           clean + "\n");
  const RunResult rb = run_cli("energy-report --pairs " + bad3);
  CHECK(rb.code == 1);
  CHECK(rb.output.find("line 2") != std::string::npos);
}

TEST_CASE("energy-report: identical pair gives 100 percent ratios") {
  const std::string clean = save_scene(testutil::smooth_scene(4), "er_c.pgm");
  const std::string pairs = write_text("pairs_id.txt", clean + "," + clean + "\n");
  const RunResult r = run_cli("energy-report --pairs " + pairs +
                              " --family haar,db4,dtcwt --levels 2");
  CHECK(r.code == 0);
  CHECK(r.output.find("100.00") != std::string::npos);
  CHECK(r.output.find("dtcwt") != std::string::npos);
}

TEST_CASE("energy-report is byte-identical across worker counts and formats") {
  std::string pairs_text;
  for (int i = 0; i < 6; ++i) {
    const Image c = testutil::smooth_scene(i);
    const Image n = add_noise(c, {NoiseKind::column_fpn, 0.1,
                                  static_cast<std::uint64_t>(i + 1)});
    pairs_text += save_scene(c, "det_c" + std::to_string(i) + ".pgm") + "," +
                  save_scene(n, "det_n" + std::to_string(i) + ".pgm") + "\n";
  }
  const std::string pairs = write_text("pairs_det.txt", pairs_text);
  for (const char* format : {"table", "csv", "json"}) {
    const std::string base =
        "energy-report --pairs " + pairs +
        " --family haar,db4,sym4,coif2,bior4.4,dtcwt --levels 2 --format " +
        format;
    const RunResult w1 = run_cli(base, "WAVETIR_WORKERS=1");
    const RunResult w4 = run_cli(base, "WAVETIR_WORKERS=4");
    const RunResult again = run_cli(base, "WAVETIR_WORKERS=4");
    CHECK(w1.code == 0);
    CHECK(w1.output == w4.output);
    CHECK(w4.output == again.output);
  }
}

TEST_CASE("energy-report names a shape-mismatched pair and exits 1") {
  const std::string a = save_scene(testutil::smooth_scene(0, 32), "mm32.pgm");
  const std::string b = save_scene(testutil::smooth_scene(0, 64), "mm64.pgm");
  const std::string pairs = write_text("pairs_mm.txt", a + "," + b + "\n");
  const RunResult r = run_cli("energy-report --pairs " + pairs);
  CHECK(r.code == 1);
  CHECK(r.output.find("mm32.pgm") != std::string::npos);
}

TEST_CASE("loss-eval: identical pair is all zeros; defaults documented") {
  const std::string clean = save_scene(testutil::smooth_scene(5), "le_c.pgm");
  const RunResult r = run_cli("loss-eval --clean " + clean + " --noisy " +
                              clean + " --format json");
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.output);
  CHECK(j["value"].get<double>() == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(j["components"]["wavelet"].get<double>() == 0.0);
  CHECK(j["weights"]["alpha"] == 1.0);
  CHECK(j["weights"]["beta"] == 100.0);
  CHECK(j["weights"]["j"] == 2);

  // --out writes the same bytes to a file
  const std::string out = (tmpdir() / "loss.json").string();
  CHECK(run_cli("loss-eval --clean " + clean + " --noisy " + clean +
                " --format json --out " + out).code == 0);
  CHECK(read_file(out) == r.output);
}

TEST_CASE("denoise writes restored images and improvement metrics") {
  const Image c = testutil::smooth_scene(6);
  const Image n = add_noise(c, {NoiseKind::gaussian, 15.0 / 255.0, 33});
  const std::string cp = save_scene(c, "dn_clean.pgm");
  const std::string np = save_scene(n, "dn_noisy.pgm");
  const std::string outdir = (tmpdir() / "dn_out").string();

  const RunResult r = run_cli("denoise --input " + np + " --clean " + cp +
                              " --family db4 --depth 16 --out " + outdir);
  CHECK(r.code == 0);
  CHECK(r.output.find("PSNR") != std::string::npos);
  const std::string restored = (fs::path(outdir) / "dn_noisy.pgm").string();
  REQUIRE(fs::exists(restored));
  const Image out = load_image(restored);
  CHECK(psnr(out, c) > psnr(n, c) + 3.0);
}

int main(int argc, char** argv) {
  if (argc < 2) {
    std::fprintf(stderr, "usage: test_cli <path-to-wavetir-binary>\n");
    return 1;
  }
  g_cli = argv[1];
  doctest::Context ctx;
  ctx.applyCommandLine(argc - 1, argv + 1);
  return ctx.run();
}
