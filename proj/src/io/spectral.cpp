#include "radcal/io/spectral.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "radcal/io/format.hpp"

namespace radcal {

void validate_spectral_curve(const SpectralCurve& curve) {
  if (curve.samples.size() < 2)
    raise(ErrorCode::InvalidArgument, "spectral curve needs at least two samples");
  for (std::size_t i = 0; i < curve.samples.size(); ++i) {
    const SpectralSample& s = curve.samples[i];
    if (s.reflectance < 0.0 || s.reflectance > 1.5)
      raise(ErrorCode::InvalidArgument,
            "reflectance out of range at " + format_double(s.wavelength_nm) + " nm");
    if (i > 0) {
      const double step = s.wavelength_nm - curve.samples[i - 1].wavelength_nm;
      if (step <= 0.0)
        raise(ErrorCode::NonMonotonicWavelengths,
              "wavelengths must be strictly increasing");
      if (std::abs(step - 1.0) > 1e-9)
        raise(ErrorCode::GapInCoverage, "curve must be sampled at 1 nm resolution");
    }
  }
  if (curve.min_wavelength() > 350.0 || curve.max_wavelength() < 2500.0)
    raise(ErrorCode::GapInCoverage, "curve must cover [350, 2500] nm");
}

SpectralCurve load_spectrometer_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) raise(ErrorCode::IoFailure, "cannot open '" + path.string() + "'");

  std::string line;
  if (!std::getline(in, line) || line != "wavelength_nm,reflectance")
    raise(ErrorCode::SchemaViolation,
          "expected header 'wavelength_nm,reflectance' in " + path.string());

  SpectralCurve curve;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream row(line);
    std::string wavelength_text, reflectance_text;
    if (!std::getline(row, wavelength_text, ',') || !std::getline(row, reflectance_text))
      raise(ErrorCode::SchemaViolation, "malformed CSV row '" + line + "'");
    try {
      curve.samples.push_back(
          {std::stod(wavelength_text), std::stod(reflectance_text)});
    } catch (const std::exception&) {
      raise(ErrorCode::SchemaViolation, "non-numeric CSV row '" + line + "'");
    }
  }
  validate_spectral_curve(curve);
  return curve;
}

void write_spectrometer_csv(const SpectralCurve& curve,
                            const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) raise(ErrorCode::IoFailure, "cannot open '" + path.string() + "' for writing");
  out << "wavelength_nm,reflectance\n";
  for (const SpectralSample& s : curve.samples)
    out << format_double(s.wavelength_nm) << "," << format_double(s.reflectance) << "\n";
}

double band_average_reflectance(const SpectralCurve& curve, const BandSpec& band) {
  const double lower = band.lower_nm();
  const double upper = band.upper_nm();
  if (curve.samples.empty() || curve.min_wavelength() > lower ||
      curve.max_wavelength() < upper)
    raise(ErrorCode::GapInCoverage, "curve does not cover the band interval");

  double sum = 0.0;
  long count = 0;
  for (const SpectralSample& s : curve.samples) {
    if (s.wavelength_nm >= lower && s.wavelength_nm <= upper) {
      sum += s.reflectance;
      ++count;
    }
  }
  if (count == 0)
    raise(ErrorCode::GapInCoverage, "no samples inside the band interval");
  return sum / static_cast<double>(count);
}

}  // namespace radcal
