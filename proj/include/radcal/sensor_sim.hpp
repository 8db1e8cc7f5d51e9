// Forward sensor model: the algebraic inverse of the DN -> radiance
// conversion, plus full-scale clipping and 16-bit quantization. Used as the
// oracle for roundtrip tests and to regenerate sweep/matrix experiments
// synthetically.
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "radcal/scene.hpp"
#include "radcal/types.hpp"

namespace radcal {

struct NoiseModel {
  double sigma = 0.0;       // zero-mean Gaussian on normalized DN
  std::uint64_t seed = 0;
};

struct SensorProfile {
  RadCalCoeffs coeffs;
  VignetteModel vignette;   // center is set per capture when cx = cy = 0
  std::vector<BandSpec> bands;
  int bit_depth = 16;       // fixed; quantization is round(P * (2^16 - 1))
  std::optional<NoiseModel> noise;
};

struct SimulatedCapture {
  RawImage image;
  // True where the pre-quantization value reached full scale and was clamped.
  Eigen::Array<bool, Eigen::Dynamic, Eigen::Dynamic> clipped;
  // Pre-clip, pre-noise normalized signal (P - P_BL); feeds the
  // under-exposure analysis.
  PixelGrid preclip_signal;

  double clip_fraction(const Rect& roi) const;
};

// Forms P = clamp(P_BL + rho*E/pi * k(r) * g * (t_e + a2*y - a3*t_e*y) / a1)
// quantized to 16 bits. Deterministic given the profile's noise seed; the
// seed is re-derived per capture from (seed, band, setting) so repeated
// captures are independent but reproducible.
SimulatedCapture simulate_capture(const ReflectanceScene& scene, Band band,
                                  double irradiance, const ExposureSetting& setting,
                                  const SensorProfile& profile);

struct RegionStat {
  double estimate = 0.0;       // mean estimated reflectance over the region
  double clip_fraction = 0.0;  // fraction of region pixels clipped at full scale
  double mean_signal = 0.0;    // mean pre-clip (P - P_BL) over the region
};

struct SweepPoint {
  ExposureSetting setting;
  std::map<RegionLabel, RegionStat> regions;
  double crp_clip_fraction = 0.0;
  double correction_factor = 1.0;
};

struct SweepRecord {
  Band band = Band::blue;
  std::vector<double> gains;
  std::vector<double> exposures_ms;
  std::vector<SweepPoint> points;  // gain-major, exposure-minor order

  // Points for one gain, in increasing exposure order.
  std::vector<const SweepPoint*> series(double gain) const;
};

// For every (gain, exposure) pair, simulates a dedicated CRP panel capture
// and a scene capture at the same setting and irradiance, applies the full
// DN -> radiance -> reflectance chain, and records per-region estimates,
// clip fractions, and pre-clip signal means.
SweepRecord run_exposure_sweep(const ReflectanceScene& scene, Band band,
                               double irradiance,
                               const std::vector<double>& gain_values,
                               const std::vector<double>& exposure_values_ms,
                               const SensorProfile& profile, double crp_known,
                               int crp_panel_px = 48);

// Central ROI (half the extent in each dimension) used for panel statistics.
Rect central_roi(int width, int height);

}  // namespace radcal
