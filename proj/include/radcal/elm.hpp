// Empirical-line calibration: one-point and multi-point fits, application,
// per-band object-based target selection, and cross-calibration error
// matrices.
#pragma once

#include <map>
#include <set>
#include <vector>

#include "radcal/metrics.hpp"
#include "radcal/types.hpp"

namespace radcal {

enum class Gradient { B, G, W };

const char* gradient_name(Gradient g);

struct TargetObservation {
  Gradient gradient = Gradient::B;
  double estimated = 0.0;  // reflectance estimated from imagery
  double known = 0.0;      // spectrometer ground truth, in (0, 1]
  Band band = Band::blue;
};

struct CalibrationLine {
  double slope = 1.0;
  double intercept = 0.0;  // zero for one-point fits by construction
  long n_points = 0;
  double residual_mape = 0.0;  // percent, over the fit points
};

enum class ElmMode { one_point, multi_point };

// Object-based calibration ranges: blue/green/red use {B, G}; red edge uses
// {B, G, W}; NIR uses {G, W}.
std::set<Gradient> select_targets_for_band(Band band);

// Mean reflectance over an ROI. Throws EmptyRoi when the rect is empty or
// not fully inside the image.
double extract_roi_mean(const ReflectanceImage& image, const Rect& roi);

// one_point: slope = mean(known) / mean(estimated), intercept fixed at 0.
// multi_point: OLS of known on estimated (maps estimated -> true). Throws
// DegenerateFit when multi_point observations share one estimated value.
CalibrationLine fit_elm(const std::vector<TargetObservation>& observations,
                        ElmMode mode);

double apply_calibration(const CalibrationLine& line, double value);
Eigen::VectorXd apply_calibration(const CalibrationLine& line,
                                  const Eigen::VectorXd& values);
PixelGrid apply_calibration(const CalibrationLine& line, const PixelGrid& values);
ReflectanceImage apply_calibration(const CalibrationLine& line,
                                   const ReflectanceImage& image);

// One exposure setting's observations (all gradients present in the data).
struct SettingObservations {
  ExposureSetting setting;
  std::vector<TargetObservation> observations;
};

struct ErrorMatrix {
  Band band = Band::blue;
  std::vector<ExposureSetting> reference_axis;  // rows
  std::vector<ExposureSetting> target_axis;     // columns
  Eigen::ArrayXXd cells;                        // MAPE percent
};

// cell(ref, tgt) = mape of applying the multi-point ELM fitted on the
// reference setting's observations to the target setting's estimates,
// evaluated against ground truth. Both fit and evaluation use only the
// band's object-based gradient subset.
ErrorMatrix cross_calibration_matrix(
    const std::vector<SettingObservations>& reference_sets,
    const std::vector<SettingObservations>& target_sets, Band band,
    const std::map<Gradient, double>& ground_truth);

}  // namespace radcal
