#include <doctest.h>

#include <cmath>

#include "radcal/vegetation.hpp"
#include "testutil.hpp"

using namespace radcal;

namespace {

BandReflectance tuple(double blue, double green, double red, double rededge,
                      double nir) {
  BandReflectance b;
  b.blue = blue;
  b.green = green;
  b.red = red;
  b.rededge = rededge;
  b.nir = nir;
  return b;
}

// Direct re-implementation of the seven formulas, independent of
// vegetation.cpp, for the agreement oracle.
double brute_vi(VIKind kind, const BandReflectance& b) {
  switch (kind) {
    case VIKind::NDVI: return (*b.nir - *b.red) / (*b.nir + *b.red);
    case VIKind::NDRE: return (*b.nir - *b.rededge) / (*b.nir + *b.rededge);
    case VIKind::TGI:
      return -0.5 * ((668.0 - 475.0) * (*b.red - *b.green) -
                     (668.0 - 560.0) * (*b.red - *b.blue));
    case VIKind::GNDVI: return (*b.nir - *b.green) / (*b.nir + *b.green);
    case VIKind::CI_rededge: return *b.nir / *b.rededge - 1.0;
    case VIKind::CI_green: return *b.nir / *b.green - 1.0;
    case VIKind::RDVI: return (*b.nir - *b.red) / std::sqrt(*b.nir + *b.red);
  }
  return 0.0;
}

}  // namespace

TEST_CASE("compute_vi hand cases") {
  CHECK(compute_vi(VIKind::NDVI, tuple(0, 0, 0.4, 0, 0.4)) == 0.0);
  CHECK(compute_vi(VIKind::NDVI, tuple(0, 0, 0.1, 0, 0.5)) ==
        doctest::Approx(0.4 / 0.6).epsilon(1e-12));
  CHECK(compute_vi(VIKind::TGI, tuple(0.2, 0.2, 0.2, 0, 0)) == 0.0);
  CHECK(compute_vi(VIKind::CI_green, tuple(0, 0.3, 0, 0, 0.3)) == 0.0);
  CHECK(compute_vi(VIKind::CI_rededge, tuple(0, 0, 0, 0.25, 0.5)) ==
        doctest::Approx(1.0).epsilon(1e-12));
  CHECK(compute_vi(VIKind::RDVI, tuple(0, 0, 0.1, 0, 0.5)) ==
        doctest::Approx(0.4 / std::sqrt(0.6)).epsilon(1e-12));
  // TGI hand evaluation: -0.5 * (193*(red-green) - 108*(red-blue)).
  CHECK(compute_vi(VIKind::TGI, tuple(0.05, 0.12, 0.08, 0, 0)) ==
        doctest::Approx(-0.5 * (193.0 * (0.08 - 0.12) - 108.0 * (0.08 - 0.05)))
            .epsilon(1e-12));
}

TEST_CASE("compute_vi errors") {
  BandReflectance missing;
  missing.nir = 0.5;
  CHECK_THROWS_WITH_AS(compute_vi(VIKind::NDVI, missing),
                       doctest::Contains("MissingBand"), Error);
  CHECK_THROWS_WITH_AS(compute_vi(VIKind::NDVI, tuple(0, 0, -0.5, 0, 0.5)),
                       doctest::Contains("ZeroDenominator"), Error);
  CHECK_THROWS_WITH_AS(compute_vi(VIKind::CI_green, tuple(0, 0.0, 0, 0, 0.5)),
                       doctest::Contains("ZeroDenominator"), Error);
}

TEST_CASE("compute_vi agrees with the direct re-implementation") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 1000; ++trial) {
    const BandReflectance b = tuple(testutil::uniform(rng, 0.01, 1.0),
                                    testutil::uniform(rng, 0.01, 1.0),
                                    testutil::uniform(rng, 0.01, 1.0),
                                    testutil::uniform(rng, 0.01, 1.0),
                                    testutil::uniform(rng, 0.01, 1.0));
    for (VIKind kind : kAllVIKinds)
      CHECK(compute_vi(kind, b) == doctest::Approx(brute_vi(kind, b)).epsilon(1e-12));
  }
}

TEST_CASE("normalized-difference symmetry and range") {
  std::mt19937_64 rng(78);
  for (int trial = 0; trial < 200; ++trial) {
    const double a = testutil::uniform(rng, 0.01, 1.0);
    const double b = testutil::uniform(rng, 0.01, 1.0);
    // Swapping the band pair negates the index.
    CHECK(compute_vi(VIKind::NDVI, tuple(0, 0, a, 0, b)) ==
          doctest::Approx(-compute_vi(VIKind::NDVI, tuple(0, 0, b, 0, a)))
              .epsilon(1e-12));
    CHECK(compute_vi(VIKind::NDRE, tuple(0, 0, 0, a, b)) ==
          doctest::Approx(-compute_vi(VIKind::NDRE, tuple(0, 0, 0, b, a)))
              .epsilon(1e-12));
    CHECK(compute_vi(VIKind::GNDVI, tuple(0, a, 0, 0, b)) ==
          doctest::Approx(-compute_vi(VIKind::GNDVI, tuple(0, b, 0, 0, a)))
              .epsilon(1e-12));
    const double ndvi = compute_vi(VIKind::NDVI, tuple(0, 0, a, 0, b));
    CHECK(ndvi >= -1.0);
    CHECK(ndvi <= 1.0);
  }
}

TEST_CASE("scale behavior under rho -> c*rho") {
  std::mt19937_64 rng(79);
  for (int trial = 0; trial < 100; ++trial) {
    const BandReflectance b = tuple(testutil::uniform(rng, 0.05, 0.9),
                                    testutil::uniform(rng, 0.05, 0.9),
                                    testutil::uniform(rng, 0.05, 0.9),
                                    testutil::uniform(rng, 0.05, 0.9),
                                    testutil::uniform(rng, 0.05, 0.9));
    const double c = testutil::uniform(rng, 0.2, 4.0);
    const BandReflectance scaled =
        tuple(*b.blue * c, *b.green * c, *b.red * c, *b.rededge * c, *b.nir * c);

    for (VIKind kind : {VIKind::NDVI, VIKind::NDRE, VIKind::GNDVI,
                        VIKind::CI_rededge, VIKind::CI_green})
      CHECK(compute_vi(kind, scaled) ==
            doctest::Approx(compute_vi(kind, b)).epsilon(1e-10));

    // TGI scales linearly with c; RDVI scales by sqrt(c).
    CHECK(compute_vi(VIKind::TGI, scaled) ==
          doctest::Approx(c * compute_vi(VIKind::TGI, b)).epsilon(1e-10));
    CHECK(compute_vi(VIKind::RDVI, scaled) ==
          doctest::Approx(std::sqrt(c) * compute_vi(VIKind::RDVI, b)).epsilon(1e-10));
  }
}

TEST_CASE("compute_vi_image marks zero denominators as non-finite") {
  PixelGrid nir = PixelGrid::Constant(2, 3, 0.5);
  PixelGrid red = PixelGrid::Constant(2, 3, 0.1);
  red(1, 2) = -0.5;  // nir + red = 0 at this pixel
  const PixelGrid vi = compute_vi_image(
      VIKind::NDVI, {{Band::nir, &nir}, {Band::red, &red}});
  CHECK(vi(0, 0) == doctest::Approx(0.4 / 0.6).epsilon(1e-12));
  CHECK(!std::isfinite(vi(1, 2)));

  CHECK_THROWS_WITH_AS(compute_vi_image(VIKind::NDVI, {{Band::nir, &nir}}),
                       doctest::Contains("MissingBand"), Error);
}

TEST_CASE("plot_level_aggregate") {
  SUBCASE("constant image gives the constant everywhere") {
    const PixelGrid vi = PixelGrid::Constant(10, 10, 0.42);
    const auto plots = plot_level_aggregate(
        vi, {{"p1", {0, 0, 4, 4}}, {"p2", {5, 5, 5, 5}}});
    REQUIRE(plots.size() == 2);
    CHECK(plots[0].mean == doctest::Approx(0.42).epsilon(1e-15));
    CHECK(plots[1].mean == doctest::Approx(0.42).epsilon(1e-15));
  }

  SUBCASE("hand means over two plots, excluding non-finite pixels") {
    PixelGrid vi(2, 4);
    vi << 0.1, 0.2, 0.5, 0.7, 0.3, 0.4, std::nan(""), 0.9;
    const auto plots = plot_level_aggregate(
        vi, {{"left", {0, 0, 2, 2}}, {"right", {2, 0, 2, 2}}});
    CHECK(plots[0].mean == doctest::Approx(0.25).epsilon(1e-12));
    CHECK(plots[0].n_pixels == 4);
    CHECK(plots[0].n_nonfinite == 0);
    CHECK(plots[1].mean == doctest::Approx((0.5 + 0.7 + 0.9) / 3.0).epsilon(1e-12));
    CHECK(plots[1].n_pixels == 3);
    CHECK(plots[1].n_nonfinite == 1);
  }

  SUBCASE("fully non-finite plot is an error") {
    PixelGrid vi = PixelGrid::Constant(2, 2, std::nan(""));
    CHECK_THROWS_WITH_AS(plot_level_aggregate(vi, {{"p", {0, 0, 2, 2}}}),
                         doctest::Contains("EmptyPlot"), Error);
  }

  SUBCASE("out-of-bounds plot is an error") {
    const PixelGrid vi = PixelGrid::Constant(2, 2, 0.1);
    CHECK_THROWS_WITH_AS(plot_level_aggregate(vi, {{"p", {1, 1, 4, 4}}}),
                         doctest::Contains("EmptyPlot"), Error);
  }
}

TEST_CASE("regress_vi_vs_reference") {
  SUBCASE("exact linear relation") {
    Eigen::VectorXd vi(5), reference(5);
    vi << 0.1, 0.2, 0.3, 0.4, 0.5;
    reference = 3.0 * vi.array() + 0.5;
    const PlotRegressionResult result = regress_vi_vs_reference(vi, reference);
    CHECK(result.slope == doctest::Approx(3.0).epsilon(1e-12));
    CHECK(result.intercept == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(result.r_squared == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(result.mape == doctest::Approx(0.0).scale(1.0).epsilon(1e-9));
    CHECK(result.p_value < 1e-10);
  }

  SUBCASE("two points are not enough") {
    Eigen::VectorXd vi(2), reference(2);
    vi << 0.1, 0.2;
    reference << 1.0, 2.0;
    CHECK_THROWS_AS(regress_vi_vs_reference(vi, reference), Error);
  }

  SUBCASE("independent noise is usually insignificant") {
    // Reference values are a fixed permutation-like noise series unrelated
    // to the VI means: the slope test should fail to reject in at least 90%
    // of seeds.
    const int n = 50;
    int insignificant = 0;
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
      std::mt19937_64 rng(seed);
      Eigen::VectorXd vi(n), reference(n);
      for (int i = 0; i < n; ++i) {
        vi[i] = testutil::uniform(rng, 0.1, 0.6);
        reference[i] = testutil::uniform(rng, 1.0, 3.0);
      }
      if (regress_vi_vs_reference(vi, reference).p_value > 0.05) ++insignificant;
    }
    CHECK(insignificant >= 90);
  }
}
