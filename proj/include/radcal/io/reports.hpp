// Report writers. All writers produce deterministic bytes for identical
// inputs (shortest round-trip number formatting, fixed key order).
#pragma once

#include <filesystem>
#include <json.hpp>
#include <map>

#include "radcal/elm.hpp"
#include "radcal/exposure_analysis.hpp"
#include "radcal/vegetation.hpp"

namespace radcal {

// One gain series: "exposure_ms,region,estimate,clip_fraction".
void write_sweep_csv(const SweepRecord& sweep, double gain,
                     const std::filesystem::path& path);

// Long format across gains for plotting:
// "band,gain,exposure_ms,region,estimate,clip_fraction".
void write_sweep_long_csv(const std::vector<SweepRecord>& sweeps,
                          const std::filesystem::path& path);

// Grid layout; header row/column cells are "<gain>x <exposure_ms>".
void write_error_matrix_csv(const ErrorMatrix& matrix,
                            const std::filesystem::path& path);

// Long format: "band,ref_gain,ref_exposure_ms,tgt_gain,tgt_exposure_ms,mape".
void write_error_matrix_long_csv(const std::vector<ErrorMatrix>& matrices,
                                 const std::filesystem::path& path);

nlohmann::json error_matrix_to_json(const ErrorMatrix& matrix);
void write_error_matrix_json(const ErrorMatrix& matrix,
                             const std::filesystem::path& path);

nlohmann::json onset_report_to_json(const OnsetReport& report);
nlohmann::json exposure_window_to_json(const ExposureWindow& window);
void write_onsets_and_windows_json(const std::vector<OnsetReport>& reports,
                                   const std::vector<ExposureWindow>& windows,
                                   const std::filesystem::path& path);

// "band,category,gain,exposure_ms,count".
void write_distribution_csv(const std::vector<ExposureBin>& bins,
                            const std::filesystem::path& path);

// "plot_id,vi_kind,mean,n_pixels".
struct PlotViRow {
  std::string plot_id;
  VIKind kind = VIKind::NDVI;
  double mean = 0.0;
  long n_pixels = 0;
};
void write_vi_plots_csv(const std::vector<PlotViRow>& rows,
                        const std::filesystem::path& path);

nlohmann::json regression_to_json(const PlotRegressionResult& result);
void write_vi_regressions_json(
    const std::map<VIKind, PlotRegressionResult>& regressions,
    const std::filesystem::path& path);

nlohmann::json calibration_line_to_json(const CalibrationLine& line);

void write_json(const nlohmann::json& doc, const std::filesystem::path& path);

}  // namespace radcal
