// Camera model: vignette correction, DN -> radiance conversion, CRP-based
// correction factor, and radiance -> reflectance conversion.
//
// The per-pixel model is
//   L(x, y) = V(x, y) * (a1 / g) * (P - P_BL) / (t_e + a2*y - a3*t_e*y)
// with V = 1/k(r), r the radial distance from the vignette center.
// Reflectance is rho = pi * (L / E) / F, where the correction factor
// F = rho_crp_estimated / rho_crp_known comes from a panel capture; dividing
// by F is the direction that makes a perfect panel (F = 1) a no-op and lets
// a known injected distortion be recovered exactly.
#pragma once

#include "radcal/types.hpp"

namespace radcal {

// Euclidean distance of a pixel from the vignette center.
double radial_distance(double x, double y, const VignetteModel& model);

// Polynomial k(r); always 1 at the center.
double vignette_polynomial(double x, double y, const VignetteModel& model);

// V = 1/k. Throws NonPositivePolynomial when k(r) <= 0.
double vignette_factor(double x, double y, const VignetteModel& model);

// Dense V over a width x height grid (same errors as vignette_factor).
PixelGrid vignette_map(const VignetteModel& model, int width, int height);

// Eq.-1 denominator for a given row.
inline double row_denominator(const RadCalCoeffs& c, double exposure_ms, int y) {
  return exposure_ms + c.a2 * y - c.a3 * exposure_ms * y;
}

// Converts a raw capture to radiance. Negative radiance from sub-black-level
// noise is clamped to zero and counted, never an error. Throws
// DenominatorNonPositive for unusable coefficient/exposure combinations.
RadianceImage dn_to_radiance(const RawImage& image);

// Mean of a grid over a rect. Throws EmptyRoi when the rect is empty or not
// fully inside the grid.
double roi_mean(const PixelGrid& grid, const Rect& roi);

// Correction factor from a calibrated reflectance panel capture:
// F = (pi * mean(L over ROI) / E) / known_reflectance.
double crp_correction_factor(const RadianceImage& crp_image, const Rect& crp_roi,
                             double known_reflectance);

// rho = pi * (L / E) / F. Values above 1 are preserved (diagnostic).
ReflectanceImage radiance_to_reflectance(const RadianceImage& image, double correction_factor);

}  // namespace radcal
