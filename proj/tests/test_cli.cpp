#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include <json.hpp>

#include "radcal/io/pgm.hpp"
#include "radcal/io/run_config.hpp"

using namespace radcal;
namespace fs = std::filesystem;
using nlohmann::json;

namespace {

fs::path cli_path() { return fs::path(RADCAL_CLI_PATH); }

fs::path temp_dir() {
  static int counter = 0;
  const fs::path dir =
      fs::temp_directory_path() / ("radcal_cli_test_" + std::to_string(counter++));
  fs::create_directories(dir);
  return dir;
}

int run_cli(const std::string& args) {
  const std::string command = cli_path().string() + " " + args + " 2>/dev/null";
  const int status = std::system(command.c_str());
  return WEXITSTATUS(status);
}

std::string read_bytes(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  return std::string(std::istreambuf_iterator<char>(in), {});
}

// Small, fast configuration for CLI runs.
fs::path write_small_config(const fs::path& dir) {
  RunConfig config;
  config.layout = {64, 48, 12, 18};
  config.crp_panel_px = 24;
  config.sweep.gains = {1.0, 2.0};
  config.sweep.exposures_ms = {0.068, 0.18, 0.315, 0.585, 0.99, 1.89, 4.386};
  config.vi.plot_grid = {3, 4, 8, 3};
  const fs::path path = dir / "config.json";
  write_run_config(config, path);
  return path;
}

}  // namespace

TEST_CASE("cli runs every command and is idempotent") {
  const fs::path dir = temp_dir();
  const fs::path config = write_small_config(dir);

  SUBCASE("sweep emits per-gain csv plus onset/window json") {
    REQUIRE(run_cli("sweep --config " + config.string() + " --out " +
                    (dir / "sweep").string()) == 0);
    CHECK(fs::exists(dir / "sweep" / "sweep_blue_g1.csv"));
    CHECK(fs::exists(dir / "sweep" / "sweep_nir_g2.csv"));
    CHECK(fs::exists(dir / "sweep" / "sweep_long.csv"));
    const json doc =
        json::parse(read_bytes(dir / "sweep" / "onsets_windows.json"));
    CHECK(doc.at("windows").size() == 5 * 2 * 2);  // band x gain x mode
    CHECK(doc.at("onset_reports").size() == 5);

    const std::string first = read_bytes(dir / "sweep" / "sweep_long.csv");
    REQUIRE(run_cli("sweep --config " + config.string() + " --out " +
                    (dir / "sweep").string()) == 0);
    CHECK(read_bytes(dir / "sweep" / "sweep_long.csv") == first);
  }

  SUBCASE("simulate writes raw captures that read back") {
    REQUIRE(run_cli("simulate --config " + config.string() + " --out " +
                    (dir / "sim").string()) == 0);
    const RawImage image = read_raw_image(dir / "sim" / "sim_green_g1_e0.18.pgm");
    CHECK(image.meta.band.name == Band::green);
    CHECK(image.meta.setting.exposure_ms == 0.18);
    CHECK(image.meta.object_category == ObjectCategory::targets);
    CHECK(fs::exists(dir / "sim" / "crp_green_g1_e0.18.pgm"));
  }

  SUBCASE("calibrate with identity distortion reports a near-identity line") {
    REQUIRE(run_cli("calibrate --config " + config.string() + " --out " +
                    (dir / "cal").string()) == 0);
    const json report =
        json::parse(read_bytes(dir / "cal" / "calibration_report.json"));
    for (const char* band : {"blue", "green", "red", "rededge", "nir"}) {
      CHECK(std::abs(report.at(band).at("slope").get<double>() - 1.0) < 1e-3);
      CHECK(std::abs(report.at(band).at("intercept").get<double>()) < 1e-3);
      CHECK(report.at(band).at("mape_after_percent").get<double>() < 0.1);
    }
    CHECK(fs::exists(dir / "cal" / "refl_nir_g1_e0.248.pgm"));
  }

  SUBCASE("crossmat emits csv and json per band") {
    REQUIRE(run_cli("crossmat --config " + config.string() + " --out " +
                    (dir / "mat").string()) == 0);
    const json doc = json::parse(read_bytes(dir / "mat" / "matrix_nir.json"));
    CHECK(doc.at("cells_mape_percent").size() == 14);  // 7 exposures x 2 gains
    const std::string csv = read_bytes(dir / "mat" / "matrix_nir.csv");
    CHECK(csv.starts_with("reference\\target,1x 0.068,"));

    const std::string first = read_bytes(dir / "mat" / "matrices_long.csv");
    REQUIRE(run_cli("crossmat --config " + config.string() + " --out " +
                    (dir / "mat").string()) == 0);
    CHECK(read_bytes(dir / "mat" / "matrices_long.csv") == first);
  }

  SUBCASE("vi emits plot means and regressions") {
    REQUIRE(run_cli("vi --config " + config.string() + " --out " +
                    (dir / "vi").string()) == 0);
    const json doc = json::parse(read_bytes(dir / "vi" / "vi_regressions.json"));
    // Reference is linear in NDRE: that regression must be significant and
    // close to the configured slope.
    CHECK(doc.at("NDRE").at("p_value").get<double>() < 0.05);
    CHECK(std::abs(doc.at("NDRE").at("slope").get<double>() - 3.0) < 0.5);
    const std::string csv = read_bytes(dir / "vi" / "vi_plots.csv");
    CHECK(csv.starts_with("plot_id,vi_kind,mean,n_pixels\n"));
    CHECK(csv.find("plot_11,") != std::string::npos);  // 3x4 grid
  }

  SUBCASE("report consolidates a summary document") {
    REQUIRE(run_cli("report --config " + config.string() + " --out " +
                    (dir / "rep").string()) == 0);
    const json doc = json::parse(read_bytes(dir / "rep" / "summary.json"));
    CHECK(doc.contains("windows"));
    CHECK(doc.contains("cross_calibration"));
    CHECK(doc.at("cross_calibration").contains("nir"));
  }
}

TEST_CASE("cli failure paths") {
  const fs::path dir = temp_dir();

  SUBCASE("missing config exits with the io-failure code and an error record") {
    const std::string command = cli_path().string() + " sweep --config " +
                                (dir / "nope.json").string() + " --out " +
                                (dir / "out").string() + " 2> " +
                                (dir / "err.json").string();
    const int status = std::system(command.c_str());
    CHECK(WEXITSTATUS(status) == 30);  // IoFailure
    const json record = json::parse(read_bytes(dir / "err.json"));
    CHECK(record.at("error") == "IoFailure");
    CHECK(record.at("message").get<std::string>().find("nope.json") !=
          std::string::npos);
  }

  SUBCASE("schema violations map to their own exit code") {
    std::ofstream(dir / "bad.json") << "{\"unknown_section\": 1}";
    CHECK(run_cli("sweep --config " + (dir / "bad.json").string() + " --out " +
                  (dir / "out").string()) == 27);  // SchemaViolation
  }

  SUBCASE("unknown command is rejected by the parser") {
    CHECK(run_cli("frobnicate --config x --out y") != 0);
  }
}

TEST_CASE("cli respects the thread cap") {
  const fs::path dir = temp_dir();
  const fs::path config = write_small_config(dir);
  const std::string base = cli_path().string() + " crossmat --config " +
                           config.string() + " --out ";
  REQUIRE(std::system((base + (dir / "par").string() + " 2>/dev/null").c_str()) == 0);
  REQUIRE(std::system(("RADCAL_THREADS=1 " + base + (dir / "seq").string() +
                       " 2>/dev/null")
                          .c_str()) == 0);
  CHECK(read_bytes(dir / "par" / "matrix_red.csv") ==
        read_bytes(dir / "seq" / "matrix_red.csv"));
}
