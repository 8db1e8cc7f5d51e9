#include "radcal/io/format.hpp"

#include <charconv>
#include <cmath>

namespace radcal {

std::string format_double(double value) {
  char buffer[64];
  const auto result = std::to_chars(buffer, buffer + sizeof(buffer), value);
  return std::string(buffer, result.ptr);
}

std::string format_setting(double gain, double exposure_ms) {
  std::string gain_text;
  if (gain == std::floor(gain))
    gain_text = std::to_string(static_cast<long>(gain));
  else
    gain_text = format_double(gain);
  return gain_text + "x " + format_double(exposure_ms);
}

}  // namespace radcal
