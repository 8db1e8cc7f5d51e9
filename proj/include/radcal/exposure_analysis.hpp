// Sweep analysis: divergence and saturation onsets, ideal exposure windows,
// and exposure/gain distribution summaries.
#pragma once

#include <map>
#include <optional>
#include <vector>

#include "radcal/sensor_sim.hpp"

namespace radcal {

enum class WindowMode { full_scale, object_based };

const char* window_mode_name(WindowMode mode);

struct ExposureWindow {
  Band band = Band::blue;
  double gain = 1.0;
  WindowMode mode = WindowMode::full_scale;
  double lower_ms = 0.0;
  double upper_ms = 0.0;
};

struct RegionOnsets {
  std::optional<double> divergence_ms;
  std::optional<double> saturation_ms;
};

struct OnsetReport {
  Band band = Band::blue;
  // Keyed by (region, gain).
  std::map<std::pair<RegionLabel, double>, RegionOnsets> onsets;
};

// Smallest grid exposure at which |estimate - truth| / truth exceeds the
// tolerance and keeps exceeding it at every larger exposure; nullopt when
// the series never diverges persistently.
std::optional<double> detect_divergence(const SweepRecord& sweep, double gain,
                                        RegionLabel region, double truth,
                                        double tolerance);

// Smallest grid exposure from which |estimate - plateau| <= epsilon holds
// for the rest of the series.
std::optional<double> detect_saturation(const SweepRecord& sweep, double gain,
                                        RegionLabel region, double plateau,
                                        double epsilon);

// Onsets for the three targets at every gain; the saturation plateau is the
// CRP known reflectance.
OnsetReport analyze_onsets(const SweepRecord& sweep,
                           const std::map<RegionLabel, double>& truths,
                           double crp_known, double tolerance, double epsilon);

// Derives the ideal exposure window for one (band, gain) series.
//
// Upper limit: the largest grid exposure strictly below the earliest
// constraint onset for the mode --
//   full_scale: divergence of any of the three targets;
//   object_based, visible bands: gray divergence or white saturation;
//   object_based, red edge / NIR: divergence of any target (the wide-range
//   rule, same limit as full scale).
// Lower limit: the smallest grid exposure at which the darkest relevant
// region's mean pre-clip signal reaches the under-exposure floor. The
// darkest relevant region is the black target, except for object-based NIR
// where the gray target is the darkest of the object-based subset.
// Throws EmptyWindow when no grid exposure satisfies both limits.
ExposureWindow ideal_exposure_window(const SweepRecord& sweep, double gain,
                                     WindowMode mode,
                                     const std::map<RegionLabel, double>& truths,
                                     double crp_known, double tolerance,
                                     double saturation_epsilon,
                                     double under_exposure_floor);

struct ExposureBin {
  Band band = Band::blue;
  ObjectCategory category = ObjectCategory::mixed;
  double gain = 1.0;
  double exposure_ms = 0.0;  // snapped to the nearest grid value
  long count = 0;
};

// Histogram of capture settings grouped by band, object category, gain, and
// grid-snapped exposure, sorted by those keys.
std::vector<ExposureBin> exposure_distribution_summary(
    const std::vector<CaptureMeta>& metas, const std::vector<double>& exposure_grid);

}  // namespace radcal
