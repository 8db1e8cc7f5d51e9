// Deterministic, locale-independent numeric formatting for file output.
#pragma once

#include <string>

namespace radcal {

// Shortest round-trip decimal representation (std::to_chars).
std::string format_double(double value);

// "<gain>x <exposure>", e.g. "1x 0.315"; integral gains print without a
// fractional part.
std::string format_setting(double gain, double exposure_ms);

}  // namespace radcal
