#include "radcal/defaults.hpp"

namespace radcal {

SensorProfile default_sensor_profile() {
  SensorProfile profile;
  profile.coeffs.a1 = 11.0;
  profile.coeffs.a2 = 6.0e-4;
  profile.coeffs.a3 = 2.0e-5;
  profile.coeffs.black_level = 0.075;
  profile.vignette.k = {0.0, 2.5e-7, 0.0, 0.0, 0.0, 0.0};
  profile.bands.assign(rededge3_bands().begin(), rededge3_bands().end());
  return profile;
}

TargetLayout default_target_layout() {
  return TargetLayout{};  // 128x96, 24 px targets, 36 canopy rows
}

ReflectanceScene default_target_scene() {
  return generate_target_scene(default_target_layout(),
                               uniform_ratios(kDefaultBlackReflectance),
                               uniform_ratios(kDefaultGrayReflectance),
                               uniform_ratios(kDefaultWhiteReflectance),
                               uniform_ratios(kDefaultSoilReflectance),
                               uniform_ratios(kDefaultCanopyReflectance));
}

const std::vector<double>& default_exposure_grid() {
  static const std::vector<double> grid = {
      0.068, 0.090, 0.135, 0.180, 0.248, 0.315, 0.428, 0.585,
      0.765, 0.990, 1.395, 1.890, 2.500, 3.289, 4.386};
  return grid;
}

const std::vector<double>& default_gain_values() {
  static const std::vector<double> gains = {1.0, 2.0};
  return gains;
}

}  // namespace radcal
