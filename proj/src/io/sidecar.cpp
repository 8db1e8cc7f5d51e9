#include "radcal/io/sidecar.hpp"

#include <set>

namespace radcal {

using nlohmann::json;

namespace {

const std::set<std::string> kRequiredKeys = {
    "band", "exposure_ms", "gain", "irradiance_uw_cm2_nm", "a1", "a2", "a3",
    "black_level", "vignette", "width", "height"};
const std::set<std::string> kOptionalKeys = {"object_category"};
const std::set<std::string> kVignetteKeys = {"k0", "k1", "k2", "k3",
                                             "k4", "k5", "cx", "cy"};

double number_field(const json& doc, const std::string& key) {
  if (!doc.at(key).is_number())
    raise(ErrorCode::SchemaViolation, "field '" + key + "' must be a number");
  return doc.at(key).get<double>();
}

void check_keys(const json& doc, const std::set<std::string>& required,
                const std::set<std::string>& optional, const std::string& where) {
  for (const auto& [key, value] : doc.items())
    if (!required.count(key) && !optional.count(key))
      raise(ErrorCode::SchemaViolation, "unknown key '" + key + "' in " + where);
  for (const std::string& key : required)
    if (!doc.contains(key))
      raise(ErrorCode::SchemaViolation, "missing key '" + key + "' in " + where);
}

}  // namespace

json capture_meta_to_json(const CaptureMeta& meta) {
  json vignette = {
      {"k0", meta.vignette.k[0]}, {"k1", meta.vignette.k[1]},
      {"k2", meta.vignette.k[2]}, {"k3", meta.vignette.k[3]},
      {"k4", meta.vignette.k[4]}, {"k5", meta.vignette.k[5]},
      {"cx", meta.vignette.cx},   {"cy", meta.vignette.cy},
  };
  return json{
      {"band", band_name(meta.band.name)},
      {"exposure_ms", meta.setting.exposure_ms},
      {"gain", meta.setting.gain},
      {"irradiance_uw_cm2_nm", meta.irradiance},
      {"a1", meta.coeffs.a1},
      {"a2", meta.coeffs.a2},
      {"a3", meta.coeffs.a3},
      {"black_level", meta.coeffs.black_level},
      {"vignette", vignette},
      {"width", meta.width},
      {"height", meta.height},
      {"object_category", object_category_name(meta.object_category)},
  };
}

CaptureMeta capture_meta_from_json(const json& doc) {
  if (!doc.is_object())
    raise(ErrorCode::SchemaViolation, "sidecar must be a JSON object");
  check_keys(doc, kRequiredKeys, kOptionalKeys, "sidecar");
  check_keys(doc.at("vignette"), kVignetteKeys, {}, "sidecar vignette");

  CaptureMeta meta;
  const std::string band = doc.at("band").get<std::string>();
  meta.band = rededge3_band(band_from_name(band));
  meta.setting.exposure_ms = number_field(doc, "exposure_ms");
  meta.setting.gain = number_field(doc, "gain");
  meta.irradiance = number_field(doc, "irradiance_uw_cm2_nm");
  meta.coeffs.a1 = number_field(doc, "a1");
  meta.coeffs.a2 = number_field(doc, "a2");
  meta.coeffs.a3 = number_field(doc, "a3");
  meta.coeffs.black_level = number_field(doc, "black_level");
  const json& vignette = doc.at("vignette");
  for (int i = 0; i < 6; ++i)
    meta.vignette.k[static_cast<std::size_t>(i)] =
        number_field(vignette, "k" + std::to_string(i));
  meta.vignette.cx = number_field(vignette, "cx");
  meta.vignette.cy = number_field(vignette, "cy");
  meta.width = doc.at("width").get<int>();
  meta.height = doc.at("height").get<int>();
  if (doc.contains("object_category"))
    meta.object_category =
        object_category_from_name(doc.at("object_category").get<std::string>());
  return meta;
}

}  // namespace radcal
