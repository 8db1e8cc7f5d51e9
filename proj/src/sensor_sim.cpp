#include "radcal/sensor_sim.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>

#include "radcal/parallel.hpp"
#include "radcal/radiometry.hpp"
#include "radcal/rng.hpp"

namespace radcal {

namespace {

std::uint64_t capture_seed(std::uint64_t seed, Band band,
                           const ExposureSetting& setting) {
  std::uint64_t h = mix_seed(seed, static_cast<std::uint64_t>(band));
  h = mix_seed(h, std::bit_cast<std::uint64_t>(setting.exposure_ms));
  return mix_seed(h, std::bit_cast<std::uint64_t>(setting.gain));
}

}  // namespace

double SimulatedCapture::clip_fraction(const Rect& roi) const {
  if (!roi.inside(static_cast<int>(clipped.cols()), static_cast<int>(clipped.rows())))
    raise(ErrorCode::EmptyRoi, "clip-fraction ROI outside image");
  const auto block = clipped.block(roi.y, roi.x, roi.height, roi.width);
  return static_cast<double>(block.count()) /
         (static_cast<double>(roi.width) * roi.height);
}

SimulatedCapture simulate_capture(const ReflectanceScene& scene, Band band,
                                  double irradiance, const ExposureSetting& setting,
                                  const SensorProfile& profile) {
  validate_scene(scene);
  if (profile.bit_depth != 16)
    raise(ErrorCode::InvalidArgument, "only 16-bit quantization is supported");

  CaptureMeta meta;
  for (const BandSpec& spec : profile.bands)
    if (spec.name == band) meta.band = spec;
  if (meta.band.fwhm_nm <= 0.0)
    raise(ErrorCode::MissingBand, "profile does not define the requested band");
  meta.setting = setting;
  meta.irradiance = irradiance;
  meta.vignette = profile.vignette;
  if (meta.vignette.cx == 0.0 && meta.vignette.cy == 0.0) {
    meta.vignette.cx = (scene.width - 1) / 2.0;
    meta.vignette.cy = (scene.height - 1) / 2.0;
  }
  meta.coeffs = profile.coeffs;
  meta.width = scene.width;
  meta.height = scene.height;
  meta.object_category = scene_category(scene);
  validate_capture_meta(meta);

  const PixelGrid reflectance = scene.rasterize(band);
  const double black_level = profile.coeffs.black_level;
  const double gain = setting.gain;

  SimulatedCapture capture;
  capture.image.meta = meta;
  capture.image.pixels.resize(scene.height, scene.width);
  capture.clipped.resize(scene.height, scene.width);
  capture.preclip_signal.resize(scene.height, scene.width);

  std::optional<GaussianSampler> rng;
  if (profile.noise && profile.noise->sigma > 0.0)
    rng.emplace(capture_seed(profile.noise->seed, band, setting));

  for (int y = 0; y < scene.height; ++y) {
    const double denom = row_denominator(profile.coeffs, setting.exposure_ms, y);
    for (int x = 0; x < scene.width; ++x) {
      const double k = vignette_polynomial(x, y, meta.vignette);
      const double radiance = reflectance(y, x) * irradiance / std::numbers::pi;
      const double signal = radiance * k * gain * denom / profile.coeffs.a1;
      capture.preclip_signal(y, x) = signal;
      double value = black_level + signal;
      if (rng) value += rng->normal(profile.noise->sigma);
      capture.clipped(y, x) = value >= 1.0;
      value = std::clamp(value, 0.0, 1.0);
      capture.image.pixels(y, x) =
          std::nearbyint(value * kFullScaleDn) / kFullScaleDn;
    }
  }
  return capture;
}

std::vector<const SweepPoint*> SweepRecord::series(double gain) const {
  std::vector<const SweepPoint*> out;
  for (const SweepPoint& point : points)
    if (point.setting.gain == gain) out.push_back(&point);
  return out;
}

Rect central_roi(int width, int height) {
  return Rect{width / 4, height / 4, width / 2, height / 2};
}

SweepRecord run_exposure_sweep(const ReflectanceScene& scene, Band band,
                               double irradiance,
                               const std::vector<double>& gain_values,
                               const std::vector<double>& exposure_values_ms,
                               const SensorProfile& profile, double crp_known,
                               int crp_panel_px) {
  if (exposure_values_ms.empty() || gain_values.empty())
    raise(ErrorCode::InvalidArgument, "sweep needs at least one gain and exposure");
  for (std::size_t i = 1; i < exposure_values_ms.size(); ++i)
    if (exposure_values_ms[i] <= exposure_values_ms[i - 1])
      raise(ErrorCode::InvalidArgument, "exposure values must be strictly increasing");

  const ReflectanceScene panel = crp_panel_scene(crp_panel_px, crp_known);
  const Rect panel_roi = central_roi(crp_panel_px, crp_panel_px);

  SweepRecord record;
  record.band = band;
  record.gains = gain_values;
  record.exposures_ms = exposure_values_ms;
  record.points.resize(gain_values.size() * exposure_values_ms.size());

  parallel_for(record.points.size(), [&](std::size_t index) {
    const double gain = gain_values[index / exposure_values_ms.size()];
    const double exposure = exposure_values_ms[index % exposure_values_ms.size()];
    const ExposureSetting setting{exposure, gain};

    const SimulatedCapture crp_capture =
        simulate_capture(panel, band, irradiance, setting, profile);
    const RadianceImage crp_radiance = dn_to_radiance(crp_capture.image);
    const double factor = crp_correction_factor(crp_radiance, panel_roi, crp_known);

    const SimulatedCapture scene_capture =
        simulate_capture(scene, band, irradiance, setting, profile);
    const ReflectanceImage estimated =
        radiance_to_reflectance(dn_to_radiance(scene_capture.image), factor);

    SweepPoint point;
    point.setting = setting;
    point.correction_factor = factor;
    point.crp_clip_fraction = crp_capture.clip_fraction(panel_roi);
    for (const SceneRegion& region : scene.regions) {
      RegionStat stat;
      stat.estimate = roi_mean(estimated.values, region.rect);
      stat.clip_fraction = scene_capture.clip_fraction(region.rect);
      stat.mean_signal = roi_mean(scene_capture.preclip_signal, region.rect);
      // A label can span several filler rects (soil); the first rect wins.
      point.regions.emplace(region.label, stat);
    }
    record.points[index] = std::move(point);
  });
  return record;
}

}  // namespace radcal
