#include "radcal/io/pgm.hpp"

#include <cmath>
#include <cstdint>
#include <fstream>
#include <vector>

#include "radcal/io/sidecar.hpp"

namespace radcal {

namespace {

std::filesystem::path sidecar_path(const std::filesystem::path& path) {
  std::filesystem::path p = path;
  p += ".meta.json";
  return p;
}

// Reads one PGM header token, skipping whitespace and '#' comments.
std::string next_token(std::istream& in) {
  std::string token;
  int c = in.get();
  while (c != EOF) {
    if (c == '#') {
      while (c != EOF && c != '\n') c = in.get();
    } else if (std::isspace(c)) {
      c = in.get();
    } else {
      break;
    }
  }
  while (c != EOF && !std::isspace(c)) {
    token.push_back(static_cast<char>(c));
    c = in.get();
  }
  return token;
}

long parse_positive(const std::string& token, const char* what) {
  if (token.empty() || token.find_first_not_of("0123456789") != std::string::npos)
    raise(ErrorCode::MalformedPgm, std::string("invalid ") + what);
  const long value = std::stol(token);
  if (value <= 0) raise(ErrorCode::MalformedPgm, std::string("invalid ") + what);
  return value;
}

}  // namespace

void write_pgm16(const PixelGrid& pixels, const std::filesystem::path& path) {
  if (pixels.size() == 0)
    raise(ErrorCode::InvalidArgument, "cannot write an empty image");

  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) raise(ErrorCode::IoFailure, "cannot open '" + path.string() + "' for writing");

  out << "P5\n" << pixels.cols() << " " << pixels.rows() << "\n65535\n";
  std::vector<std::uint8_t> row_bytes(static_cast<std::size_t>(pixels.cols()) * 2);
  for (long y = 0; y < pixels.rows(); ++y) {
    for (long x = 0; x < pixels.cols(); ++x) {
      const double value = pixels(y, x);
      if (value < 0.0 || value > 1.0)
        raise(ErrorCode::InvalidArgument, "pixel values must lie in [0, 1]");
      const auto dn = static_cast<std::uint16_t>(std::lround(value * kFullScaleDn));
      row_bytes[static_cast<std::size_t>(x) * 2] = static_cast<std::uint8_t>(dn >> 8);
      row_bytes[static_cast<std::size_t>(x) * 2 + 1] = static_cast<std::uint8_t>(dn & 0xff);
    }
    out.write(reinterpret_cast<const char*>(row_bytes.data()),
              static_cast<std::streamsize>(row_bytes.size()));
  }
  if (!out) raise(ErrorCode::IoFailure, "failed writing '" + path.string() + "'");
}

PixelGrid read_pgm16(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) raise(ErrorCode::IoFailure, "cannot open '" + path.string() + "'");

  if (next_token(in) != "P5")
    raise(ErrorCode::MalformedPgm, "not a binary PGM ('P5') file");
  const long width = parse_positive(next_token(in), "width");
  const long height = parse_positive(next_token(in), "height");
  const long maxval = parse_positive(next_token(in), "maxval");
  if (maxval != 65535)
    raise(ErrorCode::MalformedPgm, "maxval must be 65535 for 16-bit captures");

  std::vector<std::uint8_t> bytes(static_cast<std::size_t>(width) * height * 2);
  in.read(reinterpret_cast<char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  if (in.gcount() != static_cast<std::streamsize>(bytes.size()))
    raise(ErrorCode::MalformedPgm, "truncated pixel payload");

  PixelGrid pixels(height, width);
  for (long y = 0; y < height; ++y)
    for (long x = 0; x < width; ++x) {
      const std::size_t offset = (static_cast<std::size_t>(y) * width + x) * 2;
      const std::uint16_t dn = static_cast<std::uint16_t>(
          (static_cast<std::uint16_t>(bytes[offset]) << 8) | bytes[offset + 1]);
      pixels(y, x) = static_cast<double>(dn) / kFullScaleDn;
    }
  return pixels;
}

void write_raw_image(const RawImage& image, const std::filesystem::path& path) {
  if (image.pixels.rows() != image.meta.height || image.pixels.cols() != image.meta.width)
    raise(ErrorCode::InvalidArgument, "pixel grid does not match capture meta");
  write_pgm16(image.pixels, path);
  std::ofstream sidecar(sidecar_path(path), std::ios::binary | std::ios::trunc);
  if (!sidecar)
    raise(ErrorCode::IoFailure, "cannot open sidecar for '" + path.string() + "'");
  sidecar << capture_meta_to_json(image.meta).dump(2) << "\n";
}

RawImage read_raw_image(const std::filesystem::path& path) {
  const std::filesystem::path meta_path = sidecar_path(path);
  if (!std::filesystem::exists(path))
    raise(ErrorCode::IoFailure, "missing image '" + path.string() + "'");
  if (!std::filesystem::exists(meta_path))
    raise(ErrorCode::MissingSidecar, "missing sidecar '" + meta_path.string() + "'");

  RawImage image;
  image.pixels = read_pgm16(path);

  std::ifstream in(meta_path, std::ios::binary);
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    raise(ErrorCode::SchemaViolation,
          "sidecar '" + meta_path.string() + "' is not valid JSON: " + e.what());
  }
  image.meta = capture_meta_from_json(doc);
  if (image.meta.height != image.pixels.rows() || image.meta.width != image.pixels.cols())
    raise(ErrorCode::SchemaViolation, "sidecar dimensions do not match the PGM payload");
  return image;
}

}  // namespace radcal
