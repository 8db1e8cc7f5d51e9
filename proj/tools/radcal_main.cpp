// radcal: batch radiometric-calibration pipeline driver.
//
//   radcal <command> --config <path> --out <dir> [--seed <u64>]
//
// Commands: simulate, sweep, calibrate, crossmat, vi, report. Every command
// is config-driven and deterministic: re-running with identical inputs
// rewrites identical bytes. RADCAL_THREADS caps internal parallelism.

#include <CLI11.hpp>
#include <bit>
#include <filesystem>
#include <iostream>

#include "radcal/elm.hpp"
#include "radcal/exposure_analysis.hpp"
#include "radcal/io/format.hpp"
#include "radcal/io/pgm.hpp"
#include "radcal/io/reports.hpp"
#include "radcal/io/run_config.hpp"
#include "radcal/io/sidecar.hpp"
#include "radcal/parallel.hpp"
#include "radcal/radiometry.hpp"
#include "radcal/rng.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace radcal;

namespace {

// Reflectance images are exported as 16-bit PGM at a fixed scale so they
// stay plottable with stock viewers; the sidecar records the scale.
constexpr double kReflectanceScaleDn = 20000.0;

struct PipelineResult {
  ReflectanceImage reflectance;
  double correction_factor = 1.0;
};

std::string capture_stem(const std::string& prefix, Band band,
                         const ExposureSetting& setting) {
  return prefix + "_" + band_name(band) + "_g" + format_double(setting.gain) +
         "_e" + format_double(setting.exposure_ms);
}

// Chain: simulate CRP and scene at one setting, convert, and calibrate with
// the panel factor. Optionally distorts the estimated reflectance by
// slope/offset before returning (models atmospheric/sensor drift).
PipelineResult run_pipeline(const RunConfig& config, const ReflectanceScene& scene,
                            Band band, const ExposureSetting& setting,
                            double distortion_slope, double distortion_offset) {
  const SimulatedCapture crp =
      simulate_capture(crp_panel_scene(config.crp_panel_px, config.crp_known), band,
                       config.irradiance, setting, config.sensor);
  const double factor =
      crp_correction_factor(dn_to_radiance(crp.image),
                            central_roi(config.crp_panel_px, config.crp_panel_px),
                            config.crp_known);
  const SimulatedCapture capture =
      simulate_capture(scene, band, config.irradiance, setting, config.sensor);
  PipelineResult result;
  result.reflectance =
      radiance_to_reflectance(dn_to_radiance(capture.image), factor);
  result.correction_factor = factor;
  if (distortion_slope != 1.0 || distortion_offset != 0.0)
    result.reflectance.values =
        distortion_slope * result.reflectance.values + distortion_offset;
  return result;
}

void write_reflectance_image(const ReflectanceImage& image, const fs::path& path) {
  PixelGrid scaled =
      (image.values * kReflectanceScaleDn / kFullScaleDn).max(0.0).min(1.0);
  write_pgm16(scaled, path);
  json meta = capture_meta_to_json(image.meta);
  meta["reflectance_scale_dn_per_unit"] = kReflectanceScaleDn;
  if (image.correction_factor)
    meta["correction_factor"] = *image.correction_factor;
  write_json(meta, fs::path(path) += ".meta.json");
}

// Per-setting target observations against the config's ground truth.
SettingObservations observe_targets(const RunConfig& config,
                                    const ReflectanceScene& scene,
                                    const ReflectanceImage& reflectance,
                                    Band band, const ExposureSetting& setting) {
  SettingObservations set;
  set.setting = setting;
  const std::map<Gradient, RegionLabel> region_of = {
      {Gradient::B, RegionLabel::black_target},
      {Gradient::G, RegionLabel::gray_target},
      {Gradient::W, RegionLabel::white_target}};
  const auto truth = config.ground_truth();
  for (const auto& [gradient, label] : region_of) {
    const Rect rect = *scene.region_rect(label);
    set.observations.push_back({gradient,
                                extract_roi_mean(reflectance, rect),
                                truth.at(gradient), band});
  }
  return set;
}

std::vector<SweepRecord> run_all_sweeps(const RunConfig& config) {
  const ReflectanceScene scene = config.target_scene();
  std::vector<SweepRecord> sweeps(kAllBands.size());
  parallel_for(kAllBands.size(), [&](std::size_t i) {
    sweeps[i] = run_exposure_sweep(scene, kAllBands[i], config.irradiance,
                                   config.sweep.gains, config.sweep.exposures_ms,
                                   config.sensor, config.crp_known,
                                   config.crp_panel_px);
  });
  return sweeps;
}

int cmd_simulate(const RunConfig& config, const fs::path& out) {
  const ReflectanceScene scene = config.target_scene();
  const ReflectanceScene panel = crp_panel_scene(config.crp_panel_px, config.crp_known);
  for (Band band : kAllBands) {
    for (double gain : config.sweep.gains) {
      for (double exposure : config.sweep.exposures_ms) {
        const ExposureSetting setting{exposure, gain};
        const SimulatedCapture capture =
            simulate_capture(scene, band, config.irradiance, setting, config.sensor);
        write_raw_image(capture.image,
                        out / (capture_stem("sim", band, setting) + ".pgm"));
        const SimulatedCapture crp =
            simulate_capture(panel, band, config.irradiance, setting, config.sensor);
        write_raw_image(crp.image,
                        out / (capture_stem("crp", band, setting) + ".pgm"));
      }
    }
  }
  return 0;
}

int cmd_sweep(const RunConfig& config, const fs::path& out) {
  const std::vector<SweepRecord> sweeps = run_all_sweeps(config);
  const std::map<RegionLabel, double> truths = {
      {RegionLabel::black_target, config.black},
      {RegionLabel::gray_target, config.gray},
      {RegionLabel::white_target, config.white}};

  std::vector<OnsetReport> reports;
  std::vector<ExposureWindow> windows;
  for (const SweepRecord& sweep : sweeps) {
    for (double gain : sweep.gains)
      write_sweep_csv(sweep, gain,
                      out / ("sweep_" + std::string(band_name(sweep.band)) + "_g" +
                             format_double(gain) + ".csv"));
    reports.push_back(analyze_onsets(sweep, truths, config.crp_known,
                                     config.sweep.divergence_tolerance,
                                     config.sweep.saturation_epsilon));
    for (double gain : sweep.gains)
      for (WindowMode mode : {WindowMode::full_scale, WindowMode::object_based})
        windows.push_back(ideal_exposure_window(
            sweep, gain, mode, truths, config.crp_known,
            config.sweep.divergence_tolerance, config.sweep.saturation_epsilon,
            config.sweep.under_exposure_floor));
  }
  write_sweep_long_csv(sweeps, out / "sweep_long.csv");
  write_onsets_and_windows_json(reports, windows, out / "onsets_windows.json");
  return 0;
}

int cmd_calibrate(const RunConfig& config, const fs::path& out) {
  const ReflectanceScene scene = config.target_scene();
  json report = json::object();
  for (Band band : kAllBands) {
    const PipelineResult pipeline = run_pipeline(
        config, scene, band, config.calibrate.setting,
        config.calibrate.distortion_slope, config.calibrate.distortion_offset);
    const SettingObservations observed = observe_targets(
        config, scene, pipeline.reflectance, band, config.calibrate.setting);

    // Object-based ELM on the band's gradient subset.
    const std::set<Gradient> gradients = select_targets_for_band(band);
    std::vector<TargetObservation> subset;
    for (const TargetObservation& obs : observed.observations)
      if (gradients.count(obs.gradient)) subset.push_back(obs);
    const CalibrationLine line = fit_elm(subset, ElmMode::multi_point);

    const ReflectanceImage calibrated = apply_calibration(line, pipeline.reflectance);
    write_reflectance_image(
        calibrated,
        out / (capture_stem("refl", band, config.calibrate.setting) + ".pgm"));

    Eigen::VectorXd estimated(static_cast<long>(subset.size()));
    Eigen::VectorXd known(static_cast<long>(subset.size()));
    for (std::size_t i = 0; i < subset.size(); ++i) {
      estimated[static_cast<long>(i)] = subset[i].estimated;
      known[static_cast<long>(i)] = subset[i].known;
    }
    const Eigen::VectorXd corrected = apply_calibration(line, estimated);

    json band_report = calibration_line_to_json(line);
    band_report["correction_factor"] = pipeline.correction_factor;
    band_report["r_squared"] = r_squared(corrected, known);
    band_report["mape_before_percent"] = mape(estimated, known);
    band_report["mape_after_percent"] = mape(corrected, known);
    report[band_name(band)] = band_report;
  }
  write_json(report, out / "calibration_report.json");
  return 0;
}

int cmd_crossmat(const RunConfig& config, const fs::path& out) {
  const ReflectanceScene scene = config.target_scene();
  const std::vector<SweepRecord> sweeps = run_all_sweeps(config);
  const auto truth = config.ground_truth();

  std::vector<ErrorMatrix> matrices;
  for (const SweepRecord& sweep : sweeps) {
    std::vector<SettingObservations> sets;
    for (double gain : sweep.gains) {
      for (const SweepPoint* point : sweep.series(gain)) {
        SettingObservations set;
        set.setting = point->setting;
        set.observations = {
            {Gradient::B, point->regions.at(RegionLabel::black_target).estimate,
             config.black, sweep.band},
            {Gradient::G, point->regions.at(RegionLabel::gray_target).estimate,
             config.gray, sweep.band},
            {Gradient::W, point->regions.at(RegionLabel::white_target).estimate,
             config.white, sweep.band}};
        sets.push_back(std::move(set));
      }
    }
    ErrorMatrix matrix = cross_calibration_matrix(sets, sets, sweep.band, truth);
    write_error_matrix_csv(matrix,
                           out / ("matrix_" + std::string(band_name(sweep.band)) +
                                  ".csv"));
    write_error_matrix_json(matrix,
                            out / ("matrix_" + std::string(band_name(sweep.band)) +
                                   ".json"));
    matrices.push_back(std::move(matrix));
  }
  write_error_matrix_long_csv(matrices, out / "matrices_long.csv");
  (void)scene;
  return 0;
}

// Per-plot canopy reflectance: the configured base with the NIR band spread
// evenly across plots (deterministic), so the reference regression has a
// real signal to find.
std::vector<BandRatios> plot_reflectances(const ViConfig& vi) {
  const int n = vi.plot_grid.rows * vi.plot_grid.cols;
  std::vector<BandRatios> plots;
  plots.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    BandRatios ratios = vi.canopy;
    const double t = n > 1 ? static_cast<double>(i) / (n - 1) : 0.5;
    const double factor = 1.0 + vi.nir_variation * (2.0 * t - 1.0);
    ratios[static_cast<std::size_t>(Band::nir)] =
        std::min(1.0, ratios[static_cast<std::size_t>(Band::nir)] * factor);
    plots.push_back(ratios);
  }
  return plots;
}

int cmd_vi(const RunConfig& config, const fs::path& out) {
  const ViConfig& vi = config.vi;
  const std::vector<BandRatios> plots = plot_reflectances(vi);
  const PlotGridSpec grid{vi.plot_grid.rows, vi.plot_grid.cols, vi.plot_grid.plot_px,
                          vi.plot_grid.gap_px};
  const ReflectanceScene scene =
      generate_plot_grid_scene(grid, plots, uniform_ratios(0.18));

  // Plot regions are the canopy regions in row-major order.
  std::vector<PlotRegion> plot_regions;
  for (const SceneRegion& region : scene.regions)
    if (region.label == RegionLabel::canopy)
      plot_regions.push_back(
          {"plot_" + std::to_string(plot_regions.size()), region.rect});

  std::map<Band, PixelGrid> reflectance;
  std::map<Band, const PixelGrid*> band_grids;
  for (Band band : kAllBands) {
    reflectance[band] =
        run_pipeline(config, scene, band, vi.setting, 1.0, 0.0).reflectance.values;
    band_grids[band] = &reflectance[band];
  }

  // Reference variable: linear in the true index of the reference VI kind,
  // plus seeded Gaussian noise.
  GaussianSampler noise(mix_seed(config.seed, 0x7669u /* "vi" */));
  Eigen::VectorXd reference(static_cast<long>(plots.size()));
  for (std::size_t i = 0; i < plots.size(); ++i) {
    BandReflectance bands;
    bands.blue = band_ratio(plots[i], Band::blue);
    bands.green = band_ratio(plots[i], Band::green);
    bands.red = band_ratio(plots[i], Band::red);
    bands.rededge = band_ratio(plots[i], Band::rededge);
    bands.nir = band_ratio(plots[i], Band::nir);
    reference[static_cast<long>(i)] =
        vi.reference.slope * compute_vi(vi.reference.vi, bands) +
        vi.reference.intercept + noise.normal(vi.reference.noise_sigma);
  }

  std::vector<PlotViRow> rows;
  std::map<VIKind, PlotRegressionResult> regressions;
  for (VIKind kind : vi.kinds) {
    const PixelGrid vi_image = compute_vi_image(kind, band_grids);
    const std::vector<PlotAggregate> aggregates =
        plot_level_aggregate(vi_image, plot_regions);
    Eigen::VectorXd means(static_cast<long>(aggregates.size()));
    for (std::size_t i = 0; i < aggregates.size(); ++i) {
      means[static_cast<long>(i)] = aggregates[i].mean;
      rows.push_back({aggregates[i].id, kind, aggregates[i].mean,
                      aggregates[i].n_pixels});
    }
    regressions[kind] = regress_vi_vs_reference(means, reference);
  }

  write_vi_plots_csv(rows, out / "vi_plots.csv");
  write_vi_regressions_json(regressions, out / "vi_regressions.json");
  return 0;
}

int cmd_report(const RunConfig& config, const fs::path& out) {
  // Consolidated single-document summary of the analysis stages.
  const std::vector<SweepRecord> sweeps = run_all_sweeps(config);
  const std::map<RegionLabel, double> truths = {
      {RegionLabel::black_target, config.black},
      {RegionLabel::gray_target, config.gray},
      {RegionLabel::white_target, config.white}};

  json summary;
  summary["seed"] = config.seed;

  json window_list = json::array();
  json onset_list = json::array();
  for (const SweepRecord& sweep : sweeps) {
    onset_list.push_back(onset_report_to_json(
        analyze_onsets(sweep, truths, config.crp_known,
                       config.sweep.divergence_tolerance,
                       config.sweep.saturation_epsilon)));
    for (double gain : sweep.gains)
      for (WindowMode mode : {WindowMode::full_scale, WindowMode::object_based})
        window_list.push_back(exposure_window_to_json(ideal_exposure_window(
            sweep, gain, mode, truths, config.crp_known,
            config.sweep.divergence_tolerance, config.sweep.saturation_epsilon,
            config.sweep.under_exposure_floor)));
  }
  summary["windows"] = window_list;
  summary["onset_reports"] = onset_list;

  const auto truth = config.ground_truth();
  json matrix_stats = json::object();
  for (const SweepRecord& sweep : sweeps) {
    std::vector<SettingObservations> sets;
    for (double gain : sweep.gains)
      for (const SweepPoint* point : sweep.series(gain)) {
        SettingObservations set;
        set.setting = point->setting;
        set.observations = {
            {Gradient::B, point->regions.at(RegionLabel::black_target).estimate,
             config.black, sweep.band},
            {Gradient::G, point->regions.at(RegionLabel::gray_target).estimate,
             config.gray, sweep.band},
            {Gradient::W, point->regions.at(RegionLabel::white_target).estimate,
             config.white, sweep.band}};
        sets.push_back(std::move(set));
      }
    const ErrorMatrix matrix = cross_calibration_matrix(sets, sets, sweep.band, truth);
    matrix_stats[band_name(sweep.band)] = {
        {"max_mape_percent", matrix.cells.maxCoeff()},
        {"diagonal_max_mape_percent",
         matrix.cells.matrix().diagonal().maxCoeff()}};
  }
  summary["cross_calibration"] = matrix_stats;

  write_json(summary, out / "summary.json");
  return 0;
}

int exit_code_for(ErrorCode code) { return 10 + static_cast<int>(code); }

std::string exit_code_table() {
  std::string table = "Exit codes:\n  0   success\n  1   unexpected failure\n";
  for (int i = 1; i <= static_cast<int>(ErrorCode::InvalidArgument); ++i) {
    const ErrorCode code = static_cast<ErrorCode>(i);
    table += "  " + std::to_string(exit_code_for(code)) + "  " +
             error_code_name(code) + "\n";
  }
  return table;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"radcal: synthetic multispectral radiometric calibration pipeline"};
  app.footer(exit_code_table());

  std::string config_path;
  std::string out_dir;
  std::uint64_t seed_override = 0;
  bool seed_given = false;

  const std::map<std::string, int (*)(const RunConfig&, const fs::path&)> commands = {
      {"simulate", cmd_simulate}, {"sweep", cmd_sweep},   {"calibrate", cmd_calibrate},
      {"crossmat", cmd_crossmat}, {"vi", cmd_vi},         {"report", cmd_report}};

  for (const auto& [name, handler] : commands) {
    CLI::App* sub = app.add_subcommand(name);
    sub->add_option("--config", config_path, "run-config JSON path")->required();
    sub->add_option("--out", out_dir, "output directory")->required();
    sub->add_option("--seed", seed_override, "override the config seed")
        ->each([&seed_given](const std::string&) { seed_given = true; });
  }
  app.require_subcommand(1);

  CLI11_PARSE(app, argc, argv);

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    RunConfig config = load_run_config(config_path);
    if (seed_given) {
      config.seed = seed_override;
      if (config.sensor.noise) config.sensor.noise->seed = seed_override;
    }
    fs::create_directories(out_dir);
    return commands.at(command)(config, out_dir);
  } catch (const Error& e) {
    const json record = {{"error", error_code_name(e.code())},
                         {"exit_code", exit_code_for(e.code())},
                         {"message", e.what()},
                         {"command", command},
                         {"config", config_path}};
    std::cerr << record.dump() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    const json record = {{"error", "Unexpected"},
                         {"exit_code", 1},
                         {"message", e.what()},
                         {"command", command},
                         {"config", config_path}};
    std::cerr << record.dump() << "\n";
    return 1;
  }
}
