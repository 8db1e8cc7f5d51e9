#include "radcal/io/run_config.hpp"

#include <fstream>
#include <set>

namespace radcal {

using nlohmann::json;

namespace {

void check_keys(const json& doc, const std::set<std::string>& allowed,
                const std::string& where) {
  if (!doc.is_object())
    raise(ErrorCode::SchemaViolation, where + " must be a JSON object");
  for (const auto& [key, value] : doc.items())
    if (!allowed.count(key))
      raise(ErrorCode::SchemaViolation, "unknown key '" + key + "' in " + where);
}

double number_or(const json& doc, const std::string& key, double fallback) {
  if (!doc.contains(key)) return fallback;
  if (!doc.at(key).is_number())
    raise(ErrorCode::SchemaViolation, "field '" + key + "' must be a number");
  return doc.at(key).get<double>();
}

int int_or(const json& doc, const std::string& key, int fallback) {
  if (!doc.contains(key)) return fallback;
  if (!doc.at(key).is_number_integer())
    raise(ErrorCode::SchemaViolation, "field '" + key + "' must be an integer");
  return doc.at(key).get<int>();
}

ExposureSetting setting_from_json(const json& doc, const std::string& where) {
  check_keys(doc, {"exposure_ms", "gain"}, where);
  ExposureSetting setting;
  setting.exposure_ms = number_or(doc, "exposure_ms", setting.exposure_ms);
  setting.gain = number_or(doc, "gain", setting.gain);
  return setting;
}

json setting_to_json(const ExposureSetting& setting) {
  return json{{"exposure_ms", setting.exposure_ms}, {"gain", setting.gain}};
}

}  // namespace

ReflectanceScene RunConfig::target_scene() const {
  return generate_target_scene(layout, uniform_ratios(black), uniform_ratios(gray),
                               uniform_ratios(white), uniform_ratios(soil),
                               uniform_ratios(canopy));
}

std::map<Gradient, double> RunConfig::ground_truth() const {
  return {{Gradient::B, black}, {Gradient::G, gray}, {Gradient::W, white}};
}

RunConfig run_config_from_json(const json& doc) {
  check_keys(doc, {"seed", "sensor", "irradiance_uw_cm2_nm", "scene", "crp",
                   "sweep", "calibrate", "vi"},
             "config");
  RunConfig config;

  if (doc.contains("seed")) {
    if (!doc.at("seed").is_number_unsigned())
      raise(ErrorCode::SchemaViolation, "'seed' must be a non-negative integer");
    config.seed = doc.at("seed").get<std::uint64_t>();
  }

  if (doc.contains("sensor")) {
    const json& sensor = doc.at("sensor");
    check_keys(sensor, {"a1", "a2", "a3", "black_level", "vignette", "noise_sigma"},
               "config sensor");
    config.sensor.coeffs.a1 = number_or(sensor, "a1", config.sensor.coeffs.a1);
    config.sensor.coeffs.a2 = number_or(sensor, "a2", config.sensor.coeffs.a2);
    config.sensor.coeffs.a3 = number_or(sensor, "a3", config.sensor.coeffs.a3);
    config.sensor.coeffs.black_level =
        number_or(sensor, "black_level", config.sensor.coeffs.black_level);
    if (sensor.contains("vignette")) {
      const json& vignette = sensor.at("vignette");
      check_keys(vignette, {"k0", "k1", "k2", "k3", "k4", "k5", "cx", "cy"},
                 "config vignette");
      for (int i = 0; i < 6; ++i)
        config.sensor.vignette.k[static_cast<std::size_t>(i)] = number_or(
            vignette, "k" + std::to_string(i),
            config.sensor.vignette.k[static_cast<std::size_t>(i)]);
      config.sensor.vignette.cx = number_or(vignette, "cx", config.sensor.vignette.cx);
      config.sensor.vignette.cy = number_or(vignette, "cy", config.sensor.vignette.cy);
    }
    const double sigma = number_or(sensor, "noise_sigma", 0.0);
    if (sigma > 0.0) config.sensor.noise = NoiseModel{sigma, config.seed};
  }

  config.irradiance = number_or(doc, "irradiance_uw_cm2_nm", config.irradiance);

  if (doc.contains("scene")) {
    const json& scene = doc.at("scene");
    check_keys(scene,
               {"width", "height", "target_size", "canopy_rows", "black", "gray",
                "white", "soil", "canopy"},
               "config scene");
    config.layout.width = int_or(scene, "width", config.layout.width);
    config.layout.height = int_or(scene, "height", config.layout.height);
    config.layout.target_size = int_or(scene, "target_size", config.layout.target_size);
    config.layout.canopy_rows = int_or(scene, "canopy_rows", config.layout.canopy_rows);
    config.black = number_or(scene, "black", config.black);
    config.gray = number_or(scene, "gray", config.gray);
    config.white = number_or(scene, "white", config.white);
    config.soil = number_or(scene, "soil", config.soil);
    config.canopy = number_or(scene, "canopy", config.canopy);
  }

  if (doc.contains("crp")) {
    const json& crp = doc.at("crp");
    check_keys(crp, {"known_reflectance", "panel_px"}, "config crp");
    config.crp_known = number_or(crp, "known_reflectance", config.crp_known);
    config.crp_panel_px = int_or(crp, "panel_px", config.crp_panel_px);
  }

  if (doc.contains("sweep")) {
    const json& sweep = doc.at("sweep");
    check_keys(sweep,
               {"gains", "exposures_ms", "divergence_tolerance", "saturation_epsilon",
                "under_exposure_floor"},
               "config sweep");
    if (sweep.contains("gains"))
      config.sweep.gains = sweep.at("gains").get<std::vector<double>>();
    if (sweep.contains("exposures_ms"))
      config.sweep.exposures_ms = sweep.at("exposures_ms").get<std::vector<double>>();
    config.sweep.divergence_tolerance =
        number_or(sweep, "divergence_tolerance", config.sweep.divergence_tolerance);
    config.sweep.saturation_epsilon =
        number_or(sweep, "saturation_epsilon", config.sweep.saturation_epsilon);
    config.sweep.under_exposure_floor =
        number_or(sweep, "under_exposure_floor", config.sweep.under_exposure_floor);
  }

  if (doc.contains("calibrate")) {
    const json& calibrate = doc.at("calibrate");
    check_keys(calibrate, {"setting", "distortion"}, "config calibrate");
    if (calibrate.contains("setting"))
      config.calibrate.setting =
          setting_from_json(calibrate.at("setting"), "config calibrate setting");
    if (calibrate.contains("distortion")) {
      const json& distortion = calibrate.at("distortion");
      check_keys(distortion, {"slope", "offset"}, "config distortion");
      config.calibrate.distortion_slope =
          number_or(distortion, "slope", config.calibrate.distortion_slope);
      config.calibrate.distortion_offset =
          number_or(distortion, "offset", config.calibrate.distortion_offset);
    }
  }

  if (doc.contains("vi")) {
    const json& vi = doc.at("vi");
    check_keys(vi, {"kinds", "setting", "plot_grid", "canopy", "nir_variation",
                    "reference"},
               "config vi");
    if (vi.contains("kinds")) {
      config.vi.kinds.clear();
      for (const auto& name : vi.at("kinds"))
        config.vi.kinds.push_back(vi_kind_from_name(name.get<std::string>()));
    }
    if (vi.contains("setting"))
      config.vi.setting = setting_from_json(vi.at("setting"), "config vi setting");
    if (vi.contains("plot_grid")) {
      const json& grid = vi.at("plot_grid");
      check_keys(grid, {"rows", "cols", "plot_px", "gap_px"}, "config plot_grid");
      config.vi.plot_grid.rows = int_or(grid, "rows", config.vi.plot_grid.rows);
      config.vi.plot_grid.cols = int_or(grid, "cols", config.vi.plot_grid.cols);
      config.vi.plot_grid.plot_px = int_or(grid, "plot_px", config.vi.plot_grid.plot_px);
      config.vi.plot_grid.gap_px = int_or(grid, "gap_px", config.vi.plot_grid.gap_px);
    }
    if (vi.contains("canopy")) {
      const json& canopy = vi.at("canopy");
      check_keys(canopy, {"blue", "green", "red", "rededge", "nir"}, "config vi canopy");
      for (Band band : kAllBands)
        config.vi.canopy[static_cast<std::size_t>(band)] = number_or(
            canopy, band_name(band), config.vi.canopy[static_cast<std::size_t>(band)]);
    }
    config.vi.nir_variation = number_or(vi, "nir_variation", config.vi.nir_variation);
    if (vi.contains("reference")) {
      const json& reference = vi.at("reference");
      check_keys(reference, {"vi", "slope", "intercept", "noise_sigma"},
                 "config vi reference");
      if (reference.contains("vi"))
        config.vi.reference.vi = vi_kind_from_name(reference.at("vi").get<std::string>());
      config.vi.reference.slope =
          number_or(reference, "slope", config.vi.reference.slope);
      config.vi.reference.intercept =
          number_or(reference, "intercept", config.vi.reference.intercept);
      config.vi.reference.noise_sigma =
          number_or(reference, "noise_sigma", config.vi.reference.noise_sigma);
    }
  }
  return config;
}

json run_config_to_json(const RunConfig& config) {
  json vignette = json::object();
  for (int i = 0; i < 6; ++i)
    vignette["k" + std::to_string(i)] =
        config.sensor.vignette.k[static_cast<std::size_t>(i)];
  vignette["cx"] = config.sensor.vignette.cx;
  vignette["cy"] = config.sensor.vignette.cy;

  json kinds = json::array();
  for (VIKind kind : config.vi.kinds) kinds.push_back(vi_kind_name(kind));

  json canopy = json::object();
  for (Band band : kAllBands)
    canopy[band_name(band)] = config.vi.canopy[static_cast<std::size_t>(band)];

  return json{
      {"seed", config.seed},
      {"sensor",
       {{"a1", config.sensor.coeffs.a1},
        {"a2", config.sensor.coeffs.a2},
        {"a3", config.sensor.coeffs.a3},
        {"black_level", config.sensor.coeffs.black_level},
        {"vignette", vignette},
        {"noise_sigma", config.sensor.noise ? config.sensor.noise->sigma : 0.0}}},
      {"irradiance_uw_cm2_nm", config.irradiance},
      {"scene",
       {{"width", config.layout.width},
        {"height", config.layout.height},
        {"target_size", config.layout.target_size},
        {"canopy_rows", config.layout.canopy_rows},
        {"black", config.black},
        {"gray", config.gray},
        {"white", config.white},
        {"soil", config.soil},
        {"canopy", config.canopy}}},
      {"crp", {{"known_reflectance", config.crp_known}, {"panel_px", config.crp_panel_px}}},
      {"sweep",
       {{"gains", config.sweep.gains},
        {"exposures_ms", config.sweep.exposures_ms},
        {"divergence_tolerance", config.sweep.divergence_tolerance},
        {"saturation_epsilon", config.sweep.saturation_epsilon},
        {"under_exposure_floor", config.sweep.under_exposure_floor}}},
      {"calibrate",
       {{"setting", setting_to_json(config.calibrate.setting)},
        {"distortion",
         {{"slope", config.calibrate.distortion_slope},
          {"offset", config.calibrate.distortion_offset}}}}},
      {"vi",
       {{"kinds", kinds},
        {"setting", setting_to_json(config.vi.setting)},
        {"plot_grid",
         {{"rows", config.vi.plot_grid.rows},
          {"cols", config.vi.plot_grid.cols},
          {"plot_px", config.vi.plot_grid.plot_px},
          {"gap_px", config.vi.plot_grid.gap_px}}},
        {"canopy", canopy},
        {"nir_variation", config.vi.nir_variation},
        {"reference",
         {{"vi", vi_kind_name(config.vi.reference.vi)},
          {"slope", config.vi.reference.slope},
          {"intercept", config.vi.reference.intercept},
          {"noise_sigma", config.vi.reference.noise_sigma}}}}},
  };
}

RunConfig load_run_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) raise(ErrorCode::IoFailure, "cannot open config '" + path.string() + "'");
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    raise(ErrorCode::SchemaViolation,
          "config '" + path.string() + "' is not valid JSON: " + e.what());
  }
  return run_config_from_json(doc);
}

void write_run_config(const RunConfig& config, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) raise(ErrorCode::IoFailure, "cannot open '" + path.string() + "' for writing");
  out << run_config_to_json(config).dump(2) << "\n";
}

}  // namespace radcal
