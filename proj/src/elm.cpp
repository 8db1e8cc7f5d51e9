#include "radcal/elm.hpp"

#include <algorithm>

#include "radcal/parallel.hpp"
#include "radcal/radiometry.hpp"
#include "radcal/stats.hpp"

namespace radcal {

const char* gradient_name(Gradient g) {
  switch (g) {
    case Gradient::B: return "B";
    case Gradient::G: return "G";
    case Gradient::W: return "W";
  }
  return "?";
}

std::set<Gradient> select_targets_for_band(Band band) {
  switch (band) {
    case Band::blue:
    case Band::green:
    case Band::red:
      return {Gradient::B, Gradient::G};
    case Band::rededge:
      return {Gradient::B, Gradient::G, Gradient::W};
    case Band::nir:
      return {Gradient::G, Gradient::W};
  }
  raise(ErrorCode::InvalidArgument, "unknown band");
}

double extract_roi_mean(const ReflectanceImage& image, const Rect& roi) {
  return roi_mean(image.values, roi);
}

namespace {

Eigen::VectorXd estimated_vector(const std::vector<TargetObservation>& obs) {
  Eigen::VectorXd v(static_cast<long>(obs.size()));
  for (std::size_t i = 0; i < obs.size(); ++i) v[static_cast<long>(i)] = obs[i].estimated;
  return v;
}

Eigen::VectorXd known_vector(const std::vector<TargetObservation>& obs) {
  Eigen::VectorXd v(static_cast<long>(obs.size()));
  for (std::size_t i = 0; i < obs.size(); ++i) v[static_cast<long>(i)] = obs[i].known;
  return v;
}

}  // namespace

CalibrationLine fit_elm(const std::vector<TargetObservation>& observations,
                        ElmMode mode) {
  if (observations.empty())
    raise(ErrorCode::InvalidArgument, "empirical line needs observations");
  for (const TargetObservation& obs : observations)
    if (obs.known <= 0.0 || obs.known > 1.0)
      raise(ErrorCode::InvalidArgument, "known reflectance must lie in (0, 1]");

  const Eigen::VectorXd estimated = estimated_vector(observations);
  const Eigen::VectorXd known = known_vector(observations);

  CalibrationLine line;
  line.n_points = static_cast<long>(observations.size());

  if (mode == ElmMode::one_point) {
    const double estimated_mean = estimated.mean();
    if (estimated_mean == 0.0)
      raise(ErrorCode::ZeroEstimatedReflectance,
            "one-point fit needs a nonzero estimated mean");
    line.slope = known.mean() / estimated_mean;
    line.intercept = 0.0;
  } else {
    if (observations.size() < 2)
      raise(ErrorCode::InvalidArgument, "multi-point fit needs at least two observations");
    const LinearFit fit = [&] {
      try {
        return fit_line(estimated, known);
      } catch (const Error& e) {
        if (e.code() == ErrorCode::DegenerateFit)
          raise(ErrorCode::DegenerateFit, "estimated values are all equal");
        throw;
      }
    }();
    line.slope = fit.slope;
    line.intercept = fit.intercept;
  }
  line.residual_mape = mape(apply_calibration(line, estimated), known);
  return line;
}

double apply_calibration(const CalibrationLine& line, double value) {
  return line.slope * value + line.intercept;
}

Eigen::VectorXd apply_calibration(const CalibrationLine& line,
                                  const Eigen::VectorXd& values) {
  return (line.slope * values.array() + line.intercept).matrix();
}

PixelGrid apply_calibration(const CalibrationLine& line, const PixelGrid& values) {
  return line.slope * values + line.intercept;
}

ReflectanceImage apply_calibration(const CalibrationLine& line,
                                   const ReflectanceImage& image) {
  ReflectanceImage out = image;
  out.values = apply_calibration(line, image.values);
  return out;
}

namespace {

// Observations for one setting restricted to the band's gradient subset, in
// B < G < W order.
std::vector<TargetObservation> subset_for_band(
    const SettingObservations& setting_obs, const std::set<Gradient>& gradients) {
  std::vector<TargetObservation> subset;
  for (Gradient g : {Gradient::B, Gradient::G, Gradient::W}) {
    if (!gradients.count(g)) continue;
    const auto it = std::find_if(
        setting_obs.observations.begin(), setting_obs.observations.end(),
        [g](const TargetObservation& o) { return o.gradient == g; });
    if (it == setting_obs.observations.end())
      raise(ErrorCode::InvalidArgument,
            std::string("setting is missing gradient ") + gradient_name(g));
    subset.push_back(*it);
  }
  return subset;
}

}  // namespace

ErrorMatrix cross_calibration_matrix(
    const std::vector<SettingObservations>& reference_sets,
    const std::vector<SettingObservations>& target_sets, Band band,
    const std::map<Gradient, double>& ground_truth) {
  if (reference_sets.empty() || target_sets.empty())
    raise(ErrorCode::InvalidArgument, "cross-calibration needs reference and target sets");

  const std::set<Gradient> gradients = select_targets_for_band(band);
  for (Gradient g : gradients)
    if (!ground_truth.count(g))
      raise(ErrorCode::InvalidArgument,
            std::string("ground truth is missing gradient ") + gradient_name(g));

  Eigen::VectorXd truth(static_cast<long>(gradients.size()));
  {
    long i = 0;
    for (Gradient g : gradients) truth[i++] = ground_truth.at(g);
  }

  ErrorMatrix matrix;
  matrix.band = band;
  for (const SettingObservations& s : reference_sets)
    matrix.reference_axis.push_back(s.setting);
  for (const SettingObservations& s : target_sets)
    matrix.target_axis.push_back(s.setting);
  matrix.cells.resize(static_cast<long>(reference_sets.size()),
                      static_cast<long>(target_sets.size()));

  const std::size_t columns = target_sets.size();
  parallel_for(reference_sets.size() * columns, [&](std::size_t index) {
    const std::size_t row = index / columns;
    const std::size_t col = index % columns;
    const CalibrationLine line =
        fit_elm(subset_for_band(reference_sets[row], gradients), ElmMode::multi_point);
    const Eigen::VectorXd target_estimates =
        estimated_vector(subset_for_band(target_sets[col], gradients));
    matrix.cells(static_cast<long>(row), static_cast<long>(col)) =
        mape(apply_calibration(line, target_estimates), truth);
  });
  return matrix;
}

}  // namespace radcal
