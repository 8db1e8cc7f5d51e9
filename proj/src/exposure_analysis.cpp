#include "radcal/exposure_analysis.hpp"

#include <algorithm>
#include <cmath>

namespace radcal {

const char* window_mode_name(WindowMode mode) {
  return mode == WindowMode::full_scale ? "full_scale" : "object_based";
}

namespace {

const RegionStat& region_stat(const SweepPoint& point, RegionLabel region) {
  const auto it = point.regions.find(region);
  if (it == point.regions.end())
    raise(ErrorCode::InvalidArgument,
          std::string("sweep does not track region ") + region_label_name(region));
  return it->second;
}

std::vector<const SweepPoint*> series_or_throw(const SweepRecord& sweep, double gain) {
  std::vector<const SweepPoint*> series = sweep.series(gain);
  if (series.empty())
    raise(ErrorCode::InvalidArgument, "sweep has no points for the requested gain");
  return series;
}

}  // namespace

std::optional<double> detect_divergence(const SweepRecord& sweep, double gain,
                                        RegionLabel region, double truth,
                                        double tolerance) {
  if (truth <= 0.0)
    raise(ErrorCode::InvalidArgument, "divergence detection needs positive truth");
  const auto series = series_or_throw(sweep, gain);
  // Scan from the tail: the onset is the start of the last run of
  // out-of-tolerance points that touches the end of the series.
  std::optional<double> onset;
  for (auto it = series.rbegin(); it != series.rend(); ++it) {
    const double estimate = region_stat(**it, region).estimate;
    const bool diverged = std::abs(estimate - truth) / truth > tolerance;
    if (!diverged) break;
    onset = (*it)->setting.exposure_ms;
  }
  return onset;
}

std::optional<double> detect_saturation(const SweepRecord& sweep, double gain,
                                        RegionLabel region, double plateau,
                                        double epsilon) {
  const auto series = series_or_throw(sweep, gain);
  std::optional<double> onset;
  for (auto it = series.rbegin(); it != series.rend(); ++it) {
    const double estimate = region_stat(**it, region).estimate;
    if (std::abs(estimate - plateau) > epsilon) break;
    onset = (*it)->setting.exposure_ms;
  }
  return onset;
}

OnsetReport analyze_onsets(const SweepRecord& sweep,
                           const std::map<RegionLabel, double>& truths,
                           double crp_known, double tolerance, double epsilon) {
  OnsetReport report;
  report.band = sweep.band;
  for (double gain : sweep.gains) {
    for (const auto& [region, truth] : truths) {
      RegionOnsets onsets;
      onsets.divergence_ms = detect_divergence(sweep, gain, region, truth, tolerance);
      onsets.saturation_ms = detect_saturation(sweep, gain, region, crp_known, epsilon);
      report.onsets[{region, gain}] = onsets;
    }
  }
  return report;
}

namespace {

double truth_for(const std::map<RegionLabel, double>& truths, RegionLabel region) {
  const auto it = truths.find(region);
  if (it == truths.end())
    raise(ErrorCode::InvalidArgument,
          std::string("missing ground truth for ") + region_label_name(region));
  return it->second;
}

}  // namespace

ExposureWindow ideal_exposure_window(const SweepRecord& sweep, double gain,
                                     WindowMode mode,
                                     const std::map<RegionLabel, double>& truths,
                                     double crp_known, double tolerance,
                                     double saturation_epsilon,
                                     double under_exposure_floor) {
  const auto series = series_or_throw(sweep, gain);

  // Earliest onset among the mode's constraints.
  std::optional<double> earliest;
  auto consider = [&earliest](std::optional<double> onset) {
    if (onset && (!earliest || *onset < *earliest)) earliest = onset;
  };

  const bool object_based = mode == WindowMode::object_based;
  const bool visible = is_visible_band(sweep.band);
  RegionLabel darkest = RegionLabel::black_target;
  if (object_based && visible) {
    consider(detect_divergence(sweep, gain, RegionLabel::gray_target,
                               truth_for(truths, RegionLabel::gray_target), tolerance));
    consider(detect_saturation(sweep, gain, RegionLabel::white_target, crp_known,
                               saturation_epsilon));
  } else {
    for (RegionLabel region : {RegionLabel::black_target, RegionLabel::gray_target,
                               RegionLabel::white_target})
      consider(detect_divergence(sweep, gain, region, truth_for(truths, region),
                                 tolerance));
  }
  if (object_based && sweep.band == Band::nir) darkest = RegionLabel::gray_target;

  std::optional<double> upper;
  for (const SweepPoint* point : series) {
    if (earliest && point->setting.exposure_ms >= *earliest) break;
    upper = point->setting.exposure_ms;
  }

  std::optional<double> lower;
  for (const SweepPoint* point : series) {
    if (region_stat(*point, darkest).mean_signal >= under_exposure_floor) {
      lower = point->setting.exposure_ms;
      break;
    }
  }

  if (!upper || !lower || *lower > *upper)
    raise(ErrorCode::EmptyWindow, "no exposure satisfies both window limits");

  ExposureWindow window;
  window.band = sweep.band;
  window.gain = gain;
  window.mode = mode;
  window.lower_ms = *lower;
  window.upper_ms = *upper;
  return window;
}

std::vector<ExposureBin> exposure_distribution_summary(
    const std::vector<CaptureMeta>& metas, const std::vector<double>& exposure_grid) {
  if (exposure_grid.empty())
    raise(ErrorCode::InvalidArgument, "exposure grid must not be empty");

  auto snap = [&exposure_grid](double exposure) {
    double best = exposure_grid.front();
    for (double value : exposure_grid)
      if (std::abs(value - exposure) < std::abs(best - exposure)) best = value;
    return best;
  };

  std::map<std::tuple<Band, ObjectCategory, double, double>, long> counts;
  for (const CaptureMeta& meta : metas)
    ++counts[{meta.band.name, meta.object_category, meta.setting.gain,
              snap(meta.setting.exposure_ms)}];

  std::vector<ExposureBin> bins;
  bins.reserve(counts.size());
  for (const auto& [key, count] : counts) {
    const auto& [band, category, gain, exposure] = key;
    bins.push_back({band, category, gain, exposure, count});
  }
  return bins;
}

}  // namespace radcal
