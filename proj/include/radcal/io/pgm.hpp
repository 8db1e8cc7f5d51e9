// 16-bit binary PGM ("P5", maxval 65535, big-endian samples) with a JSON
// metadata sidecar at <path>.meta.json.
#pragma once

#include <filesystem>

#include "radcal/types.hpp"

namespace radcal {

// Writes the pixel payload; values are expected in [0, 1] and are stored as
// round(P * 65535). Deterministic byte output.
void write_pgm16(const PixelGrid& pixels, const std::filesystem::path& path);

// Reads a P5/65535 payload back to normalized values. Throws MalformedPgm.
PixelGrid read_pgm16(const std::filesystem::path& path);

// Raw capture with sidecar. write/read round-trip bit-exactly.
void write_raw_image(const RawImage& image, const std::filesystem::path& path);
RawImage read_raw_image(const std::filesystem::path& path);

}  // namespace radcal
