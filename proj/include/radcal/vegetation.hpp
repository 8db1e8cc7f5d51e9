// The seven vegetation indices, per-pixel image evaluation, plot-level
// aggregation, and regression of plot means against a reference variable.
#pragma once

#include <map>
#include <optional>
#include <vector>

#include "radcal/stats.hpp"
#include "radcal/types.hpp"

namespace radcal {

enum class VIKind { NDVI, NDRE, TGI, GNDVI, CI_rededge, CI_green, RDVI };

constexpr std::array<VIKind, 7> kAllVIKinds = {
    VIKind::NDVI, VIKind::NDRE,     VIKind::TGI, VIKind::GNDVI,
    VIKind::CI_rededge, VIKind::CI_green, VIKind::RDVI};

const char* vi_kind_name(VIKind kind);
VIKind vi_kind_from_name(const std::string& name);

// Per-band reflectance values for one sample; only the bands an index needs
// must be present.
struct BandReflectance {
  std::optional<double> blue;
  std::optional<double> green;
  std::optional<double> red;
  std::optional<double> rededge;
  std::optional<double> nir;
};

// Exact formula evaluation. Throws MissingBand when a required band is
// absent and ZeroDenominator when a ratio index's denominator vanishes.
double compute_vi(VIKind kind, const BandReflectance& bands);

// Per-pixel VI over whole-band grids (all grids same shape). Pixels whose
// denominator vanishes become NaN (excluded and counted downstream).
PixelGrid compute_vi_image(VIKind kind, const std::map<Band, const PixelGrid*>& bands);

struct PlotRegion {
  std::string id;
  Rect rect;
};

struct PlotAggregate {
  std::string id;
  double mean = 0.0;
  long n_pixels = 0;         // finite pixels contributing to the mean
  long n_nonfinite = 0;      // excluded pixels
};

// Arithmetic mean per plot, excluding non-finite pixels. Throws EmptyPlot
// when a plot has no finite pixels.
std::vector<PlotAggregate> plot_level_aggregate(const PixelGrid& vi_image,
                                                const std::vector<PlotRegion>& plots);

struct PlotRegressionResult {
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
  double mape = 0.0;    // percent
  double p_value = 1.0; // two-sided t-test on the slope, df = n - 2
  long n = 0;
};

// OLS of the reference variable on the VI means (needs n >= 3).
PlotRegressionResult regress_vi_vs_reference(const Eigen::VectorXd& vi_means,
                                             const Eigen::VectorXd& reference);

}  // namespace radcal
