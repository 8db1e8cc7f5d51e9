// Spectrometer curves at 1 nm resolution and FWHM band averaging.
#pragma once

#include <filesystem>
#include <vector>

#include "radcal/bands.hpp"

namespace radcal {

struct SpectralSample {
  double wavelength_nm = 0.0;
  double reflectance = 0.0;
};

struct SpectralCurve {
  std::vector<SpectralSample> samples;  // strictly increasing, 1 nm spacing

  double min_wavelength() const { return samples.front().wavelength_nm; }
  double max_wavelength() const { return samples.back().wavelength_nm; }
};

// Validates ordering, 1 nm spacing, coverage of [350, 2500], and the
// reflectance range [0, 1.5].
void validate_spectral_curve(const SpectralCurve& curve);

// Two-column CSV with header "wavelength_nm,reflectance".
SpectralCurve load_spectrometer_csv(const std::filesystem::path& path);
void write_spectrometer_csv(const SpectralCurve& curve, const std::filesystem::path& path);

// Arithmetic mean of samples with wavelength in the closed interval
// [center - fwhm/2, center + fwhm/2]. Throws GapInCoverage when the curve
// does not cover that interval.
double band_average_reflectance(const SpectralCurve& curve, const BandSpec& band);

}  // namespace radcal
