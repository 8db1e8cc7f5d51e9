#include <doctest.h>

#include <numbers>

#include "radcal/radiometry.hpp"
#include "radcal/sensor_sim.hpp"
#include "testutil.hpp"

using namespace radcal;

namespace {

CaptureMeta basic_meta(int width = 8, int height = 6) {
  CaptureMeta meta;
  meta.band = rededge3_band(Band::blue);
  meta.setting = {0.5, 1.0};
  meta.irradiance = 100.0;
  meta.coeffs = {2e-5, 0.0, 0.0, 0.1};
  meta.vignette.cx = (width - 1) / 2.0;
  meta.vignette.cy = (height - 1) / 2.0;
  meta.width = width;
  meta.height = height;
  return meta;
}

}  // namespace

TEST_CASE("radial distance") {
  VignetteModel model;
  model.cx = 640.0;
  model.cy = 480.0;
  CHECK(radial_distance(640.0, 480.0, model) == 0.0);
  CHECK(radial_distance(643.0, 484.0, model) == doctest::Approx(5.0).epsilon(1e-12));
  CHECK(radial_distance(0.0, 0.0, model) == doctest::Approx(800.0).epsilon(1e-12));
}

TEST_CASE("vignette factor") {
  VignetteModel model;
  model.cx = 10.0;
  model.cy = 20.0;

  SUBCASE("center pixel is exactly 1 for any coefficients") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 50; ++i) {
      for (double& k : model.k) k = testutil::uniform(rng, -1e-3, 1e-3);
      CHECK(vignette_factor(10.0, 20.0, model) == 1.0);
    }
  }

  SUBCASE("identity vignette") {
    model.k = {0, 0, 0, 0, 0, 0};
    CHECK(vignette_factor(123.0, 45.0, model) == 1.0);
  }

  SUBCASE("linear term hand value") {
    model.k = {0.001, 0, 0, 0, 0, 0};
    model.cx = 0.0;
    model.cy = 0.0;
    CHECK(vignette_factor(100.0, 0.0, model) ==
          doctest::Approx(1.0 / 1.1).epsilon(1e-12));
  }

  SUBCASE("non-positive polynomial is an error") {
    model.k = {-1.0, 0, 0, 0, 0, 0};
    model.cx = 0.0;
    model.cy = 0.0;
    CHECK_THROWS_WITH_AS(vignette_factor(10.0, 0.0, model),
                         doctest::Contains("NonPositivePolynomial"), Error);
  }
}

TEST_CASE("dn_to_radiance") {
  SUBCASE("black-level input maps to zero radiance") {
    CaptureMeta meta = basic_meta();
    RawImage image{PixelGrid::Constant(meta.height, meta.width, meta.coeffs.black_level),
                   meta};
    const RadianceImage radiance = dn_to_radiance(image);
    CHECK((radiance.values == 0.0).all());
    CHECK(radiance.clamped_negative_count == 0);
  }

  SUBCASE("direct hand evaluation") {
    CaptureMeta meta = basic_meta();
    RawImage image{PixelGrid::Constant(meta.height, meta.width,
                                       meta.coeffs.black_level + 0.25),
                   meta};
    const RadianceImage radiance = dn_to_radiance(image);
    CHECK(radiance.values(0, 0) == doctest::Approx(1e-5).epsilon(1e-12));
  }

  SUBCASE("sub-black-level pixels clamp to zero and are counted") {
    CaptureMeta meta = basic_meta();
    PixelGrid pixels = PixelGrid::Constant(meta.height, meta.width, 0.5);
    pixels(0, 0) = 0.0;
    pixels(2, 3) = 0.05;
    const RadianceImage radiance = dn_to_radiance({pixels, meta});
    CHECK(radiance.clamped_negative_count == 2);
    CHECK(radiance.values(0, 0) == 0.0);
    CHECK(radiance.values(2, 3) == 0.0);
    CHECK(radiance.values(1, 1) > 0.0);
  }

  SUBCASE("non-positive denominator is an error") {
    CaptureMeta meta = basic_meta();
    meta.coeffs.a3 = 10.0;  // t + a2 y - a3 t y goes negative by row 1
    RawImage image{PixelGrid::Constant(meta.height, meta.width, 0.5), meta};
    CHECK_THROWS_WITH_AS(dn_to_radiance(image),
                         doctest::Contains("DenominatorNonPositive"), Error);
  }

  SUBCASE("affine in P: doubling the signal doubles radiance") {
    CaptureMeta meta = basic_meta();
    meta.coeffs.a2 = 3e-4;
    meta.coeffs.a3 = 1e-5;
    meta.vignette.k = {0.0, 1e-6, 0, 0, 0, 0};
    RawImage once{PixelGrid::Constant(meta.height, meta.width,
                                      meta.coeffs.black_level + 0.2),
                  meta};
    RawImage twice{PixelGrid::Constant(meta.height, meta.width,
                                       meta.coeffs.black_level + 0.4),
                   meta};
    const PixelGrid l1 = dn_to_radiance(once).values;
    const PixelGrid l2 = dn_to_radiance(twice).values;
    CHECK(((l2 - 2.0 * l1).abs() < 1e-15).all());
  }

  SUBCASE("gain and exposure normalization") {
    CaptureMeta meta = basic_meta();  // a2 = a3 = 0
    const double signal = 0.2;
    RawImage base{PixelGrid::Constant(meta.height, meta.width,
                                      meta.coeffs.black_level + signal),
                  meta};
    const double l_base = dn_to_radiance(base).values(0, 0);

    CaptureMeta doubled_exposure = meta;
    doubled_exposure.setting.exposure_ms *= 2.0;
    RawImage exposure_image{PixelGrid::Constant(meta.height, meta.width,
                                                meta.coeffs.black_level + 2.0 * signal),
                            doubled_exposure};
    CHECK(dn_to_radiance(exposure_image).values(0, 0) ==
          doctest::Approx(l_base).epsilon(1e-12));

    CaptureMeta doubled_gain = meta;
    doubled_gain.setting.gain *= 2.0;
    RawImage gain_image{PixelGrid::Constant(meta.height, meta.width,
                                            meta.coeffs.black_level + 2.0 * signal),
                        doubled_gain};
    CHECK(dn_to_radiance(gain_image).values(0, 0) ==
          doctest::Approx(l_base).epsilon(1e-12));
  }
}

TEST_CASE("roi_mean") {
  PixelGrid grid(2, 2);
  grid << 0.1, 0.2, 0.3, 0.4;
  CHECK(roi_mean(grid, {0, 0, 2, 2}) == doctest::Approx(0.25).epsilon(1e-15));
  CHECK(roi_mean(PixelGrid::Constant(4, 4, 0.28), {1, 1, 2, 2}) ==
        doctest::Approx(0.28).epsilon(1e-15));
  CHECK_THROWS_WITH_AS(roi_mean(grid, {1, 1, 4, 4}), doctest::Contains("EmptyRoi"),
                       Error);
  CHECK_THROWS_WITH_AS(roi_mean(grid, {0, 0, 0, 0}), doctest::Contains("EmptyRoi"),
                       Error);
}

TEST_CASE("crp_correction_factor") {
  CaptureMeta meta = basic_meta();

  SUBCASE("perfect panel gives identity factor") {
    const double known = 0.5;
    RadianceImage crp{PixelGrid::Constant(meta.height, meta.width,
                                          known * meta.irradiance / std::numbers::pi),
                      meta, 0};
    CHECK(crp_correction_factor(crp, {0, 0, meta.width, meta.height}, known) ==
          doctest::Approx(1.0).epsilon(1e-12));
  }

  SUBCASE("ratio definition") {
    RadianceImage crp{PixelGrid::Constant(meta.height, meta.width,
                                          0.25 * meta.irradiance / std::numbers::pi),
                      meta, 0};
    CHECK(crp_correction_factor(crp, {0, 0, meta.width, meta.height}, 0.5) ==
          doctest::Approx(0.5).epsilon(1e-12));
  }

  SUBCASE("injected distortion is recovered through the sensor model") {
    // Panel actually reflecting 0.9 * known; exposure chosen so the panel
    // signal lands exactly on a quantization step.
    SensorProfile profile = testutil::uniform_profile();
    profile.coeffs.black_level = 4915.0 / 65535.0;
    const double known = 0.5;
    const double actual = 0.45;  // 0.9 * known
    const double exposure = 0.5;
    const double irradiance = 100.0;
    const double target_signal = 30000.0 / 65535.0;
    profile.coeffs.a1 =
        actual * irradiance * exposure / (std::numbers::pi * target_signal);

    const ReflectanceScene panel = crp_panel_scene(32, actual);
    const SimulatedCapture capture =
        simulate_capture(panel, Band::blue, irradiance, {exposure, 1.0}, profile);
    const double factor = crp_correction_factor(
        dn_to_radiance(capture.image), central_roi(32, 32), known);
    CHECK(factor == doctest::Approx(0.9).epsilon(1e-6));
  }

  SUBCASE("errors") {
    RadianceImage zero{PixelGrid::Zero(meta.height, meta.width), meta, 0};
    CHECK_THROWS_WITH_AS(
        crp_correction_factor(zero, {0, 0, meta.width, meta.height}, 0.5),
        doctest::Contains("ZeroEstimatedReflectance"), Error);
    CHECK_THROWS_WITH_AS(crp_correction_factor(zero, {0, 0, 0, 0}, 0.5),
                         doctest::Contains("EmptyRoi"), Error);
  }
}

TEST_CASE("radiance_to_reflectance") {
  CaptureMeta meta = basic_meta();

  SUBCASE("zero radiance maps to zero") {
    RadianceImage radiance{PixelGrid::Zero(meta.height, meta.width), meta, 0};
    CHECK((radiance_to_reflectance(radiance, 1.0).values == 0.0).all());
  }

  SUBCASE("perfect reflector identity") {
    RadianceImage radiance{PixelGrid::Constant(meta.height, meta.width,
                                               meta.irradiance / std::numbers::pi),
                           meta, 0};
    CHECK(radiance_to_reflectance(radiance, 1.0).values(0, 0) ==
          doctest::Approx(1.0).epsilon(1e-12));
  }

  SUBCASE("values above 1 are preserved") {
    RadianceImage radiance{PixelGrid::Constant(meta.height, meta.width,
                                               1.5 * meta.irradiance / std::numbers::pi),
                           meta, 0};
    CHECK(radiance_to_reflectance(radiance, 1.0).values(0, 0) ==
          doctest::Approx(1.5).epsilon(1e-12));
  }

  SUBCASE("dividing by the factor undoes a distorted panel") {
    RadianceImage radiance{PixelGrid::Constant(meta.height, meta.width,
                                               0.9 * 0.3 * meta.irradiance /
                                                   std::numbers::pi),
                           meta, 0};
    const ReflectanceImage rho = radiance_to_reflectance(radiance, 0.9);
    CHECK(rho.values(0, 0) == doctest::Approx(0.3).epsilon(1e-12));
    CHECK(rho.correction_factor == doctest::Approx(0.9));
  }

  SUBCASE("zero irradiance is an error") {
    CaptureMeta bad = meta;
    bad.irradiance = 0.0;
    RadianceImage radiance{PixelGrid::Zero(meta.height, meta.width), bad, 0};
    CHECK_THROWS_WITH_AS(radiance_to_reflectance(radiance, 1.0),
                         doctest::Contains("ZeroIrradiance"), Error);
  }
}

TEST_CASE("clipped plateau is exact for uniform geometry") {
  // Panel and scene captured at the same setting and irradiance, both fully
  // clipped, vignette-free and row-uniform: the estimated reflectance equals
  // the panel's known reflectance exactly.
  const SensorProfile profile = testutil::uniform_profile();
  const double known = 0.5;
  const double irradiance = 100.0;
  const ExposureSetting setting{50.0, 1.0};  // far beyond full scale

  const ReflectanceScene panel = crp_panel_scene(32, known);
  const SimulatedCapture crp =
      simulate_capture(panel, Band::nir, irradiance, setting, profile);
  REQUIRE(crp.clip_fraction({0, 0, 32, 32}) == 1.0);
  const double factor =
      crp_correction_factor(dn_to_radiance(crp.image), central_roi(32, 32), known);

  const ReflectanceScene scene = default_target_scene();
  const SimulatedCapture capture =
      simulate_capture(scene, Band::nir, irradiance, setting, profile);
  REQUIRE(capture.clip_fraction({0, 0, scene.width, scene.height}) == 1.0);
  const ReflectanceImage rho =
      radiance_to_reflectance(dn_to_radiance(capture.image), factor);
  CHECK(((rho.values - known).abs() <= 1e-9).all());
}

TEST_CASE("simulate/convert roundtrip stays within one quantization step") {
  std::mt19937_64 rng(2024);
  const ReflectanceScene scene = default_target_scene();
  for (int trial = 0; trial < 10; ++trial) {
    SensorProfile profile = default_sensor_profile();
    profile.coeffs.a2 = testutil::uniform(rng, 0.0, 6e-4);
    profile.coeffs.a3 = testutil::uniform(rng, 0.0, 2e-5);
    const ExposureSetting setting{testutil::uniform(rng, 0.06, 0.18),
                                  trial % 2 == 0 ? 1.0 : 2.0};
    const double irradiance = testutil::uniform(rng, 40.0, 80.0);

    const SimulatedCapture capture =
        simulate_capture(scene, Band::green, irradiance, setting, profile);
    REQUIRE(capture.clip_fraction({0, 0, scene.width, scene.height}) == 0.0);
    const RadianceImage recovered = dn_to_radiance(capture.image);
    const PixelGrid truth = scene.rasterize(Band::green);

    for (int y = 0; y < scene.height; ++y) {
      const double denom = row_denominator(profile.coeffs, setting.exposure_ms, y);
      for (int x = 0; x < scene.width; ++x) {
        const double true_radiance = truth(y, x) * irradiance / std::numbers::pi;
        const double k = vignette_polynomial(x, y, capture.image.meta.vignette);
        // One ADC step expressed in radiance units at this pixel.
        const double step = (1.0 / k) * (profile.coeffs.a1 / setting.gain) /
                            denom / kFullScaleDn;
        CHECK(std::abs(recovered.values(y, x) - true_radiance) <= 0.5 * step + 1e-15);
      }
    }
  }
}
