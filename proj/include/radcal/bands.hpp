// Spectral band definitions for a five-band multispectral sensor.
#pragma once

#include <array>
#include <string>

#include "radcal/error.hpp"

namespace radcal {

enum class Band { blue, green, red, rededge, nir };

constexpr std::array<Band, 5> kAllBands = {Band::blue, Band::green, Band::red,
                                           Band::rededge, Band::nir};

struct BandSpec {
  Band name = Band::blue;
  double center_nm = 0.0;  // central wavelength
  double fwhm_nm = 0.0;    // full width at half maximum

  double lower_nm() const { return center_nm - fwhm_nm / 2.0; }
  double upper_nm() const { return center_nm + fwhm_nm / 2.0; }
};

// Validates fwhm > 0 and center within the usable spectrometer range.
BandSpec make_band_spec(Band name, double center_nm, double fwhm_nm);

// The RedEdge-3 filter set: blue 475/20, green 560/20, red 668/10,
// red edge 717/10, NIR 840/40.
const std::array<BandSpec, 5>& rededge3_bands();

BandSpec rededge3_band(Band band);

const char* band_name(Band band);
Band band_from_name(const std::string& name);

// True for blue/green/red; red edge and NIR follow the wide-range rules.
bool is_visible_band(Band band);

}  // namespace radcal
