// Bundled synthetic fixture: a sensor profile, target scene, and exposure
// grid sized so the sweep reproduces the qualitative structure of a real
// exposure experiment (per-target divergence, CRP-driven inflation, and the
// half-scale saturation plateau) on a 15-point grid.
//
// The target reflectances straddle the panel's known reflectance on purpose:
// white and gray clip before the panel does, so their divergence onsets are
// ordered by brightness, while black diverges later through the shared
// correction factor once the panel clips.
#pragma once

#include <vector>

#include "radcal/scene.hpp"
#include "radcal/sensor_sim.hpp"

namespace radcal {

constexpr double kDefaultIrradiance = 100.0;   // per band, uW/cm^2/nm as stored
constexpr double kDefaultCrpKnown = 0.50;
constexpr double kDefaultTolerance = 0.05;     // relative divergence tolerance
constexpr double kDefaultSaturationEpsilon = 0.01;
constexpr double kDefaultUnderExposureFloor = 64.0 / 65535.0;
constexpr int kDefaultCrpPanelPx = 48;

constexpr double kDefaultBlackReflectance = 0.08;
constexpr double kDefaultGrayReflectance = 0.60;
constexpr double kDefaultWhiteReflectance = 0.85;
constexpr double kDefaultSoilReflectance = 0.18;
constexpr double kDefaultCanopyReflectance = 0.35;

SensorProfile default_sensor_profile();
ReflectanceScene default_target_scene();
TargetLayout default_target_layout();

// The 15-value exposure grid (ms) spanning 0.068 to 4.386.
const std::vector<double>& default_exposure_grid();
const std::vector<double>& default_gain_values();  // {1, 2}

}  // namespace radcal
