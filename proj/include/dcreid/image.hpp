#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace dcreid {

struct Rgb {
  std::uint8_t r = 0;
  std::uint8_t g = 0;
  std::uint8_t b = 0;

  friend bool operator==(const Rgb&, const Rgb&) = default;
};

/// Row-major 24-bit RGB raster.
struct ImageBuffer {
  int width = 0;
  int height = 0;
  std::vector<Rgb> pixels;  // size == width * height

  const Rgb& at(int x, int y) const { return pixels[static_cast<std::size_t>(y) * width + x]; }
  Rgb& at(int x, int y) { return pixels[static_cast<std::size_t>(y) * width + x]; }

  friend bool operator==(const ImageBuffer&, const ImageBuffer&) = default;
};

/// Row-major foreground bits, true = foreground.
struct ForegroundMask {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> bits;  // size == width * height, 0 or 1

  bool at(int x, int y) const { return bits[static_cast<std::size_t>(y) * width + x] != 0; }

  friend bool operator==(const ForegroundMask&, const ForegroundMask&) = default;
};

ImageBuffer make_image(int width, int height, Rgb fill = {});

/// Binary PPM (P6) decode. Header comments (`#` to end of line) are allowed,
/// maxval must be 255. Errors name the offending byte offset.
ImageBuffer decode_ppm(std::span<const std::uint8_t> bytes);

std::vector<std::uint8_t> encode_ppm(const ImageBuffer& img);

ImageBuffer read_ppm_file(const std::string& path);
void write_ppm_file(const std::string& path, const ImageBuffer& img);

/// Nearest-neighbor resize: out(x,y) = in(floor(x*W/w), floor(y*H/h)).
ImageBuffer resize_nearest(const ImageBuffer& img, int width, int height);
ForegroundMask resize_nearest(const ForegroundMask& mask, int width, int height);

ForegroundMask full_mask(int width, int height);

/// Mask decode: PPM where any nonzero pixel counts as foreground.
ForegroundMask decode_mask_ppm(std::span<const std::uint8_t> bytes);

}  // namespace dcreid
