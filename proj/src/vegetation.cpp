#include "radcal/vegetation.hpp"

#include <cmath>
#include <limits>

#include "radcal/metrics.hpp"

namespace radcal {

const char* vi_kind_name(VIKind kind) {
  switch (kind) {
    case VIKind::NDVI: return "NDVI";
    case VIKind::NDRE: return "NDRE";
    case VIKind::TGI: return "TGI";
    case VIKind::GNDVI: return "GNDVI";
    case VIKind::CI_rededge: return "CI_rededge";
    case VIKind::CI_green: return "CI_green";
    case VIKind::RDVI: return "RDVI";
  }
  return "unknown";
}

VIKind vi_kind_from_name(const std::string& name) {
  for (VIKind kind : kAllVIKinds)
    if (name == vi_kind_name(kind)) return kind;
  raise(ErrorCode::SchemaViolation, "unknown vegetation index '" + name + "'");
}

namespace {

double require(const std::optional<double>& value, const char* band) {
  if (!value)
    raise(ErrorCode::MissingBand, std::string("index needs the ") + band + " band");
  return *value;
}

double checked_ratio(double numerator, double denominator) {
  if (denominator == 0.0)
    raise(ErrorCode::ZeroDenominator, "index denominator is zero");
  return numerator / denominator;
}

// TGI wavelength constants (nm) for the red/blue and red/green spans.
constexpr double kTgiRedBlueSpan = 668.0 - 475.0;
constexpr double kTgiRedGreenSpan = 668.0 - 560.0;

}  // namespace

double compute_vi(VIKind kind, const BandReflectance& bands) {
  switch (kind) {
    case VIKind::NDVI: {
      const double nir = require(bands.nir, "NIR");
      const double red = require(bands.red, "red");
      return checked_ratio(nir - red, nir + red);
    }
    case VIKind::NDRE: {
      const double nir = require(bands.nir, "NIR");
      const double rededge = require(bands.rededge, "red edge");
      return checked_ratio(nir - rededge, nir + rededge);
    }
    case VIKind::TGI: {
      const double red = require(bands.red, "red");
      const double green = require(bands.green, "green");
      const double blue = require(bands.blue, "blue");
      return -0.5 * (kTgiRedBlueSpan * (red - green) - kTgiRedGreenSpan * (red - blue));
    }
    case VIKind::GNDVI: {
      const double nir = require(bands.nir, "NIR");
      const double green = require(bands.green, "green");
      return checked_ratio(nir - green, nir + green);
    }
    case VIKind::CI_rededge: {
      const double nir = require(bands.nir, "NIR");
      const double rededge = require(bands.rededge, "red edge");
      return checked_ratio(nir, rededge) - 1.0;
    }
    case VIKind::CI_green: {
      const double nir = require(bands.nir, "NIR");
      const double green = require(bands.green, "green");
      return checked_ratio(nir, green) - 1.0;
    }
    case VIKind::RDVI: {
      const double nir = require(bands.nir, "NIR");
      const double red = require(bands.red, "red");
      const double sum = nir + red;
      if (sum <= 0.0)
        raise(ErrorCode::ZeroDenominator, "RDVI needs a positive band sum");
      return (nir - red) / std::sqrt(sum);
    }
  }
  raise(ErrorCode::InvalidArgument, "unknown vegetation index");
}

PixelGrid compute_vi_image(VIKind kind, const std::map<Band, const PixelGrid*>& bands) {
  if (bands.empty())
    raise(ErrorCode::MissingBand, "no band images supplied");
  const PixelGrid* first = bands.begin()->second;
  for (const auto& [band, grid] : bands)
    if (grid->rows() != first->rows() || grid->cols() != first->cols())
      raise(ErrorCode::InvalidArgument, "band images must share dimensions");

  auto lookup = [&bands](Band band) -> const PixelGrid* {
    const auto it = bands.find(band);
    return it == bands.end() ? nullptr : it->second;
  };

  PixelGrid out(first->rows(), first->cols());
  BandReflectance sample;
  for (long y = 0; y < first->rows(); ++y) {
    for (long x = 0; x < first->cols(); ++x) {
      sample = BandReflectance{};
      if (const PixelGrid* g = lookup(Band::blue)) sample.blue = (*g)(y, x);
      if (const PixelGrid* g = lookup(Band::green)) sample.green = (*g)(y, x);
      if (const PixelGrid* g = lookup(Band::red)) sample.red = (*g)(y, x);
      if (const PixelGrid* g = lookup(Band::rededge)) sample.rededge = (*g)(y, x);
      if (const PixelGrid* g = lookup(Band::nir)) sample.nir = (*g)(y, x);
      try {
        out(y, x) = compute_vi(kind, sample);
      } catch (const Error& e) {
        if (e.code() != ErrorCode::ZeroDenominator) throw;
        out(y, x) = std::numeric_limits<double>::quiet_NaN();
      }
    }
  }
  return out;
}

std::vector<PlotAggregate> plot_level_aggregate(const PixelGrid& vi_image,
                                                const std::vector<PlotRegion>& plots) {
  std::vector<PlotAggregate> aggregates;
  aggregates.reserve(plots.size());
  for (const PlotRegion& plot : plots) {
    if (!plot.rect.inside(static_cast<int>(vi_image.cols()),
                          static_cast<int>(vi_image.rows())))
      raise(ErrorCode::EmptyPlot, "plot '" + plot.id + "' lies outside the image");
    PlotAggregate aggregate;
    aggregate.id = plot.id;
    double sum = 0.0;
    for (int y = plot.rect.y; y < plot.rect.y + plot.rect.height; ++y) {
      for (int x = plot.rect.x; x < plot.rect.x + plot.rect.width; ++x) {
        const double value = vi_image(y, x);
        if (std::isfinite(value)) {
          sum += value;
          ++aggregate.n_pixels;
        } else {
          ++aggregate.n_nonfinite;
        }
      }
    }
    if (aggregate.n_pixels == 0)
      raise(ErrorCode::EmptyPlot, "plot '" + plot.id + "' has no finite pixels");
    aggregate.mean = sum / static_cast<double>(aggregate.n_pixels);
    aggregates.push_back(std::move(aggregate));
  }
  return aggregates;
}

PlotRegressionResult regress_vi_vs_reference(const Eigen::VectorXd& vi_means,
                                             const Eigen::VectorXd& reference) {
  if (vi_means.size() != reference.size())
    raise(ErrorCode::InvalidArgument, "regression vectors must have equal length");
  if (vi_means.size() < 3)
    raise(ErrorCode::InvalidArgument, "plot regression needs at least three plots");

  const LinearFit fit = fit_line(vi_means, reference);
  const Eigen::VectorXd predicted =
      (fit.slope * vi_means.array() + fit.intercept).matrix();

  PlotRegressionResult result;
  result.slope = fit.slope;
  result.intercept = fit.intercept;
  result.n = fit.n;
  result.r_squared = r_squared(predicted, reference);
  result.mape = mape(predicted, reference);
  result.p_value = slope_p_value(fit);
  return result;
}

}  // namespace radcal
