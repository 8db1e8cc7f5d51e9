// Run configuration: one JSON document drives every CLI command. The schema
// is strict; unknown keys are rejected so stale configs fail loudly.
#pragma once

#include <filesystem>
#include <json.hpp>
#include <optional>
#include <vector>

#include "radcal/defaults.hpp"
#include "radcal/elm.hpp"
#include "radcal/scene.hpp"
#include "radcal/sensor_sim.hpp"
#include "radcal/vegetation.hpp"

namespace radcal {

struct SweepConfig {
  std::vector<double> gains = default_gain_values();
  std::vector<double> exposures_ms = default_exposure_grid();
  double divergence_tolerance = kDefaultTolerance;
  double saturation_epsilon = kDefaultSaturationEpsilon;
  double under_exposure_floor = kDefaultUnderExposureFloor;
};

struct CalibrateConfig {
  ExposureSetting setting{0.248, 1.0};
  double distortion_slope = 1.0;   // affine distortion injected into the
  double distortion_offset = 0.0;  // estimated reflectance before the ELM
};

struct PlotGridConfig {
  int rows = 6;
  int cols = 8;
  int plot_px = 12;
  int gap_px = 4;
};

struct ViReferenceConfig {
  VIKind vi = VIKind::NDRE;   // reference variable is linear in this index
  double slope = 3.0;
  double intercept = 0.5;
  double noise_sigma = 0.05;
};

struct ViConfig {
  std::vector<VIKind> kinds{kAllVIKinds.begin(), kAllVIKinds.end()};
  ExposureSetting setting{0.248, 1.0};
  PlotGridConfig plot_grid;
  BandRatios canopy = {0.03, 0.06, 0.04, 0.30, 0.55};
  double nir_variation = 0.35;  // relative NIR spread across plots
  ViReferenceConfig reference;
};

struct RunConfig {
  std::uint64_t seed = 42;
  SensorProfile sensor = default_sensor_profile();
  double irradiance = kDefaultIrradiance;
  TargetLayout layout = default_target_layout();
  double black = kDefaultBlackReflectance;
  double gray = kDefaultGrayReflectance;
  double white = kDefaultWhiteReflectance;
  double soil = kDefaultSoilReflectance;
  double canopy = kDefaultCanopyReflectance;
  double crp_known = kDefaultCrpKnown;
  int crp_panel_px = kDefaultCrpPanelPx;
  SweepConfig sweep;
  CalibrateConfig calibrate;
  ViConfig vi;

  ReflectanceScene target_scene() const;
  std::map<Gradient, double> ground_truth() const;
};

RunConfig run_config_from_json(const nlohmann::json& doc);
nlohmann::json run_config_to_json(const RunConfig& config);

// Loads and validates. Throws IoFailure (missing file) or SchemaViolation.
RunConfig load_run_config(const std::filesystem::path& path);
void write_run_config(const RunConfig& config, const std::filesystem::path& path);

}  // namespace radcal
