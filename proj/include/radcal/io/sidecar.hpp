// CaptureMeta <-> JSON sidecar document. The schema is strict: unknown keys
// and missing required keys are SchemaViolation errors.
#pragma once

#include <json.hpp>

#include "radcal/types.hpp"

namespace radcal {

nlohmann::json capture_meta_to_json(const CaptureMeta& meta);
CaptureMeta capture_meta_from_json(const nlohmann::json& doc);

}  // namespace radcal
