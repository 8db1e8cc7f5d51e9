#include "radcal/radiometry.hpp"

#include <cmath>
#include <numbers>

namespace radcal {

double radial_distance(double x, double y, const VignetteModel& model) {
  return std::hypot(x - model.cx, y - model.cy);
}

double vignette_polynomial(double x, double y, const VignetteModel& model) {
  const double r = radial_distance(x, y, model);
  // Horner over k5..k0, then the constant 1.
  double acc = 0.0;
  for (int i = 5; i >= 0; --i) acc = (acc + model.k[static_cast<std::size_t>(i)]) * r;
  return 1.0 + acc;
}

double vignette_factor(double x, double y, const VignetteModel& model) {
  const double k = vignette_polynomial(x, y, model);
  if (k <= 0.0)
    raise(ErrorCode::NonPositivePolynomial,
          "vignette polynomial is non-positive at this pixel");
  return 1.0 / k;
}

PixelGrid vignette_map(const VignetteModel& model, int width, int height) {
  PixelGrid v(height, width);
  for (int y = 0; y < height; ++y)
    for (int x = 0; x < width; ++x)
      v(y, x) = vignette_factor(x, y, model);
  return v;
}

RadianceImage dn_to_radiance(const RawImage& image) {
  const CaptureMeta& meta = image.meta;
  validate_capture_meta(meta);
  if (image.pixels.rows() != meta.height || image.pixels.cols() != meta.width)
    raise(ErrorCode::InvalidArgument, "pixel grid does not match capture meta dimensions");

  const double a1_over_gain = meta.coeffs.a1 / meta.setting.gain;
  const PixelGrid vmap = vignette_map(meta.vignette, meta.width, meta.height);

  RadianceImage out;
  out.meta = meta;
  out.values.resize(meta.height, meta.width);
  for (int y = 0; y < meta.height; ++y) {
    const double denom = row_denominator(meta.coeffs, meta.setting.exposure_ms, y);
    const double row_scale = a1_over_gain / denom;
    out.values.row(y) =
        vmap.row(y) * row_scale * (image.pixels.row(y) - meta.coeffs.black_level);
  }
  out.clamped_negative_count = (out.values < 0.0).count();
  out.values = out.values.max(0.0);
  return out;
}

double roi_mean(const PixelGrid& grid, const Rect& roi) {
  if (!roi.inside(static_cast<int>(grid.cols()), static_cast<int>(grid.rows())))
    raise(ErrorCode::EmptyRoi, "ROI is empty or outside the image bounds");
  return grid.block(roi.y, roi.x, roi.height, roi.width).mean();
}

double crp_correction_factor(const RadianceImage& crp_image, const Rect& crp_roi,
                             double known_reflectance) {
  if (known_reflectance <= 0.0 || known_reflectance > 1.0)
    raise(ErrorCode::InvalidArgument, "CRP known reflectance must lie in (0, 1]");
  if (crp_image.meta.irradiance <= 0.0)
    raise(ErrorCode::ZeroIrradiance, "CRP capture has non-positive irradiance");
  const double mean_radiance = roi_mean(crp_image.values, crp_roi);
  const double estimated =
      std::numbers::pi * mean_radiance / crp_image.meta.irradiance;
  if (estimated <= 0.0)
    raise(ErrorCode::ZeroEstimatedReflectance,
          "estimated CRP reflectance is non-positive");
  return estimated / known_reflectance;
}

ReflectanceImage radiance_to_reflectance(const RadianceImage& image,
                                         double correction_factor) {
  if (image.meta.irradiance <= 0.0)
    raise(ErrorCode::ZeroIrradiance, "capture has non-positive irradiance");
  if (correction_factor <= 0.0)
    raise(ErrorCode::InvalidArgument, "correction factor must be positive");
  ReflectanceImage out;
  out.meta = image.meta;
  out.correction_factor = correction_factor;
  out.values = std::numbers::pi * (image.values / image.meta.irradiance) /
               correction_factor;
  return out;
}

}  // namespace radcal
