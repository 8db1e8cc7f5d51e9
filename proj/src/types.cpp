#include "radcal/types.hpp"

#include <cmath>

#include "radcal/radiometry.hpp"

namespace radcal {

const char* object_category_name(ObjectCategory cat) {
  switch (cat) {
    case ObjectCategory::targets: return "targets";
    case ObjectCategory::canopy: return "canopy";
    case ObjectCategory::soil: return "soil";
    case ObjectCategory::crp: return "crp";
    case ObjectCategory::mixed: return "mixed";
  }
  return "unknown";
}

ObjectCategory object_category_from_name(const std::string& name) {
  for (ObjectCategory c : {ObjectCategory::targets, ObjectCategory::canopy,
                           ObjectCategory::soil, ObjectCategory::crp,
                           ObjectCategory::mixed})
    if (name == object_category_name(c)) return c;
  raise(ErrorCode::SchemaViolation, "unknown object category '" + name + "'");
}

void validate_capture_meta(const CaptureMeta& meta) {
  if (meta.width <= 0 || meta.height <= 0)
    raise(ErrorCode::InvalidArgument, "capture dimensions must be positive");
  if (meta.irradiance <= 0.0)
    raise(ErrorCode::ZeroIrradiance, "irradiance must be positive");
  if (meta.setting.exposure_ms <= 0.0)
    raise(ErrorCode::InvalidArgument, "exposure time must be positive");
  if (meta.setting.gain <= 0.0)
    raise(ErrorCode::InvalidArgument, "gain must be positive");
  if (meta.coeffs.a1 <= 0.0)
    raise(ErrorCode::InvalidArgument, "a1 must be positive");
  if (meta.coeffs.black_level < 0.0 || meta.coeffs.black_level >= 1.0)
    raise(ErrorCode::InvalidArgument, "black level must lie in [0, 1)");
  for (int y = 0; y < meta.height; ++y) {
    if (row_denominator(meta.coeffs, meta.setting.exposure_ms, y) <= 0.0)
      raise(ErrorCode::DenominatorNonPositive,
            "radiometric denominator is non-positive at row " + std::to_string(y));
  }
}

RegionSpec RegionSpec::from_pixels(std::string label, Rect rect) {
  if (!rect.valid())
    raise(ErrorCode::InvalidArgument, "region rect must have positive extents");
  return RegionSpec{std::move(label), rect};
}

RegionSpec RegionSpec::from_physical(std::string label, double center_x,
                                     double center_y, double side_cm,
                                     double cm_per_pixel) {
  if (side_cm <= 0.0 || cm_per_pixel <= 0.0)
    raise(ErrorCode::InvalidArgument, "physical region needs positive extents and scale");
  const int side_px = std::max(1, static_cast<int>(std::lround(side_cm / cm_per_pixel)));
  const int x0 = static_cast<int>(std::lround(center_x - side_px / 2.0));
  const int y0 = static_cast<int>(std::lround(center_y - side_px / 2.0));
  return RegionSpec{std::move(label), Rect{x0, y0, side_px, side_px}};
}

}  // namespace radcal
