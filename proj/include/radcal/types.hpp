// Core value types for the radiometric pipeline.
//
// Pixel grids are Eigen arrays indexed (row, col) = (y, x); row 0 is the top
// image row. Values are normalized: raw pixels P = DN / 65535 in [0, 1],
// reflectance is stored as a unitless ratio (never percent).
#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <optional>
#include <string>

#include "radcal/bands.hpp"
#include "radcal/error.hpp"

namespace radcal {

using PixelGrid = Eigen::ArrayXXd;

constexpr double kFullScaleDn = 65535.0;

struct ExposureSetting {
  double exposure_ms = 1.0;
  double gain = 1.0;

  friend bool operator==(const ExposureSetting&, const ExposureSetting&) = default;
};

// Radial falloff polynomial k(r) = 1 + k0 r + k1 r^2 + ... + k5 r^6 about
// the optical center (cx, cy); the correction factor is V = 1/k.
struct VignetteModel {
  std::array<double, 6> k = {0, 0, 0, 0, 0, 0};
  double cx = 0.0;
  double cy = 0.0;
};

struct RadCalCoeffs {
  double a1 = 1.0;          // scales normalized signal to radiance
  double a2 = 0.0;          // row-gradient term (per row)
  double a3 = 0.0;          // row x exposure cross term
  double black_level = 0.0; // P_BL, normalized
};

enum class ObjectCategory { targets, canopy, soil, crp, mixed };

const char* object_category_name(ObjectCategory cat);
ObjectCategory object_category_from_name(const std::string& name);

struct CaptureMeta {
  BandSpec band;
  ExposureSetting setting;
  double irradiance = 1.0;  // downwelling irradiance at capture time
  VignetteModel vignette;
  RadCalCoeffs coeffs;
  int width = 0;
  int height = 0;
  ObjectCategory object_category = ObjectCategory::mixed;
};

// Throws on violated invariants (positive dims, irradiance, exposure, gain;
// positive Eq.-1 denominator at every row for the meta's exposure).
void validate_capture_meta(const CaptureMeta& meta);

struct RawImage {
  PixelGrid pixels;  // height x width, values in [0, 1]
  CaptureMeta meta;
};

struct RadianceImage {
  PixelGrid values;  // radiance, W/m^2/sr/nm
  CaptureMeta meta;
  std::int64_t clamped_negative_count = 0;  // pixels with P < P_BL clamped to 0
};

struct ReflectanceImage {
  PixelGrid values;  // reflectance ratio; may exceed 1, never clamped
  CaptureMeta meta;
  std::optional<double> correction_factor;  // F applied, if any
};

// Axis-aligned pixel rectangle.
struct Rect {
  int x = 0;
  int y = 0;
  int width = 0;
  int height = 0;

  bool valid() const { return width > 0 && height > 0; }
  bool inside(int image_width, int image_height) const {
    return valid() && x >= 0 && y >= 0 && x + width <= image_width &&
           y + height <= image_height;
  }
  friend bool operator==(const Rect&, const Rect&) = default;
};

// Labeled region of interest. Either a pixel rect, or a physically sized
// square (side_cm around a center) resolved against a cm-per-pixel scale.
struct RegionSpec {
  std::string label;
  Rect rect;

  static RegionSpec from_pixels(std::string label, Rect rect);
  // Square of side_cm centered at (center_x, center_y) pixels.
  static RegionSpec from_physical(std::string label, double center_x,
                                  double center_y, double side_cm,
                                  double cm_per_pixel);
};

}  // namespace radcal
