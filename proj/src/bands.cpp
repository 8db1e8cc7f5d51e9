#include "radcal/bands.hpp"

namespace radcal {

BandSpec make_band_spec(Band name, double center_nm, double fwhm_nm) {
  if (fwhm_nm <= 0.0)
    raise(ErrorCode::InvalidArgument, "band fwhm must be positive");
  if (center_nm < 350.0 || center_nm > 2500.0)
    raise(ErrorCode::InvalidArgument, "band center must lie in [350, 2500] nm");
  return BandSpec{name, center_nm, fwhm_nm};
}

const std::array<BandSpec, 5>& rededge3_bands() {
  static const std::array<BandSpec, 5> bands = {
      make_band_spec(Band::blue, 475.0, 20.0),
      make_band_spec(Band::green, 560.0, 20.0),
      make_band_spec(Band::red, 668.0, 10.0),
      make_band_spec(Band::rededge, 717.0, 10.0),
      make_band_spec(Band::nir, 840.0, 40.0),
  };
  return bands;
}

BandSpec rededge3_band(Band band) {
  return rededge3_bands()[static_cast<std::size_t>(band)];
}

const char* band_name(Band band) {
  switch (band) {
    case Band::blue: return "blue";
    case Band::green: return "green";
    case Band::red: return "red";
    case Band::rededge: return "rededge";
    case Band::nir: return "nir";
  }
  return "unknown";
}

Band band_from_name(const std::string& name) {
  for (Band b : kAllBands)
    if (name == band_name(b)) return b;
  raise(ErrorCode::SchemaViolation, "unknown band name '" + name + "'");
}

bool is_visible_band(Band band) {
  return band == Band::blue || band == Band::green || band == Band::red;
}

}  // namespace radcal
