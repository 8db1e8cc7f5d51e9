#include "radcal/io/reports.hpp"

#include <fstream>

#include "radcal/io/format.hpp"

namespace radcal {

using nlohmann::json;

namespace {

std::ofstream open_out(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) raise(ErrorCode::IoFailure, "cannot open '" + path.string() + "' for writing");
  return out;
}

void write_sweep_rows(std::ostream& out, const SweepRecord& sweep, double gain,
                      bool with_prefix) {
  for (const SweepPoint* point : sweep.series(gain)) {
    for (const auto& [region, stat] : point->regions) {
      if (with_prefix)
        out << band_name(sweep.band) << "," << format_double(gain) << ",";
      out << format_double(point->setting.exposure_ms) << ","
          << region_label_name(region) << "," << format_double(stat.estimate) << ","
          << format_double(stat.clip_fraction) << "\n";
    }
  }
}

}  // namespace

void write_sweep_csv(const SweepRecord& sweep, double gain,
                     const std::filesystem::path& path) {
  std::ofstream out = open_out(path);
  out << "exposure_ms,region,estimate,clip_fraction\n";
  write_sweep_rows(out, sweep, gain, false);
}

void write_sweep_long_csv(const std::vector<SweepRecord>& sweeps,
                          const std::filesystem::path& path) {
  std::ofstream out = open_out(path);
  out << "band,gain,exposure_ms,region,estimate,clip_fraction\n";
  for (const SweepRecord& sweep : sweeps)
    for (double gain : sweep.gains) write_sweep_rows(out, sweep, gain, true);
}

void write_error_matrix_csv(const ErrorMatrix& matrix,
                            const std::filesystem::path& path) {
  std::ofstream out = open_out(path);
  out << "reference\\target";
  for (const ExposureSetting& target : matrix.target_axis)
    out << "," << format_setting(target.gain, target.exposure_ms);
  out << "\n";
  for (long row = 0; row < matrix.cells.rows(); ++row) {
    const ExposureSetting& reference = matrix.reference_axis[static_cast<std::size_t>(row)];
    out << format_setting(reference.gain, reference.exposure_ms);
    for (long col = 0; col < matrix.cells.cols(); ++col)
      out << "," << format_double(matrix.cells(row, col));
    out << "\n";
  }
}

void write_error_matrix_long_csv(const std::vector<ErrorMatrix>& matrices,
                                 const std::filesystem::path& path) {
  std::ofstream out = open_out(path);
  out << "band,ref_gain,ref_exposure_ms,tgt_gain,tgt_exposure_ms,mape\n";
  for (const ErrorMatrix& matrix : matrices)
    for (long row = 0; row < matrix.cells.rows(); ++row)
      for (long col = 0; col < matrix.cells.cols(); ++col) {
        const ExposureSetting& r = matrix.reference_axis[static_cast<std::size_t>(row)];
        const ExposureSetting& t = matrix.target_axis[static_cast<std::size_t>(col)];
        out << band_name(matrix.band) << "," << format_double(r.gain) << ","
            << format_double(r.exposure_ms) << "," << format_double(t.gain) << ","
            << format_double(t.exposure_ms) << ","
            << format_double(matrix.cells(row, col)) << "\n";
      }
}

namespace {

json setting_json(const ExposureSetting& setting) {
  return json{{"gain", setting.gain}, {"exposure_ms", setting.exposure_ms}};
}

}  // namespace

json error_matrix_to_json(const ErrorMatrix& matrix) {
  json reference_axis = json::array();
  for (const ExposureSetting& s : matrix.reference_axis)
    reference_axis.push_back(setting_json(s));
  json target_axis = json::array();
  for (const ExposureSetting& s : matrix.target_axis)
    target_axis.push_back(setting_json(s));
  json cells = json::array();
  for (long row = 0; row < matrix.cells.rows(); ++row) {
    json row_values = json::array();
    for (long col = 0; col < matrix.cells.cols(); ++col)
      row_values.push_back(matrix.cells(row, col));
    cells.push_back(std::move(row_values));
  }
  return json{{"band", band_name(matrix.band)},
              {"reference_axis", reference_axis},
              {"target_axis", target_axis},
              {"cells_mape_percent", cells}};
}

void write_error_matrix_json(const ErrorMatrix& matrix,
                             const std::filesystem::path& path) {
  write_json(error_matrix_to_json(matrix), path);
}

json onset_report_to_json(const OnsetReport& report) {
  json entries = json::array();
  for (const auto& [key, onsets] : report.onsets) {
    json entry{{"region", region_label_name(key.first)}, {"gain", key.second}};
    entry["divergence_ms"] =
        onsets.divergence_ms ? json(*onsets.divergence_ms) : json(nullptr);
    entry["saturation_ms"] =
        onsets.saturation_ms ? json(*onsets.saturation_ms) : json(nullptr);
    entries.push_back(std::move(entry));
  }
  return json{{"band", band_name(report.band)}, {"onsets", entries}};
}

json exposure_window_to_json(const ExposureWindow& window) {
  return json{{"band", band_name(window.band)},
              {"gain", window.gain},
              {"mode", window_mode_name(window.mode)},
              {"lower_ms", window.lower_ms},
              {"upper_ms", window.upper_ms}};
}

void write_onsets_and_windows_json(const std::vector<OnsetReport>& reports,
                                   const std::vector<ExposureWindow>& windows,
                                   const std::filesystem::path& path) {
  json onsets = json::array();
  for (const OnsetReport& report : reports) onsets.push_back(onset_report_to_json(report));
  json window_list = json::array();
  for (const ExposureWindow& window : windows)
    window_list.push_back(exposure_window_to_json(window));
  write_json(json{{"onset_reports", onsets}, {"windows", window_list}}, path);
}

void write_distribution_csv(const std::vector<ExposureBin>& bins,
                            const std::filesystem::path& path) {
  std::ofstream out = open_out(path);
  out << "band,category,gain,exposure_ms,count\n";
  for (const ExposureBin& bin : bins)
    out << band_name(bin.band) << "," << object_category_name(bin.category) << ","
        << format_double(bin.gain) << "," << format_double(bin.exposure_ms) << ","
        << bin.count << "\n";
}

void write_vi_plots_csv(const std::vector<PlotViRow>& rows,
                        const std::filesystem::path& path) {
  std::ofstream out = open_out(path);
  out << "plot_id,vi_kind,mean,n_pixels\n";
  for (const PlotViRow& row : rows)
    out << row.plot_id << "," << vi_kind_name(row.kind) << ","
        << format_double(row.mean) << "," << row.n_pixels << "\n";
}

json regression_to_json(const PlotRegressionResult& result) {
  return json{{"slope", result.slope},   {"intercept", result.intercept},
              {"r_squared", result.r_squared}, {"mape_percent", result.mape},
              {"p_value", result.p_value},     {"n", result.n}};
}

void write_vi_regressions_json(
    const std::map<VIKind, PlotRegressionResult>& regressions,
    const std::filesystem::path& path) {
  json doc = json::object();
  for (const auto& [kind, result] : regressions)
    doc[vi_kind_name(kind)] = regression_to_json(result);
  write_json(doc, path);
}

json calibration_line_to_json(const CalibrationLine& line) {
  return json{{"slope", line.slope},
              {"intercept", line.intercept},
              {"n_points", line.n_points},
              {"residual_mape_percent", line.residual_mape}};
}

void write_json(const json& doc, const std::filesystem::path& path) {
  std::ofstream out = open_out(path);
  out << doc.dump(2) << "\n";
}

}  // namespace radcal
