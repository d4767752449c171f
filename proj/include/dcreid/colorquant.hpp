#pragma once

#include <cstdint>
#include <vector>

#include "dcreid/image.hpp"

namespace dcreid {

/// HSV triple with h in degrees [0,360), s and v in [0,1].
/// Achromatic pixels (max == min) carry no hue.
struct HsvColor {
  double h = 0.0;
  double s = 0.0;
  double v = 0.0;
  bool achromatic = false;
};

inline constexpr int kQuantLevels = 72;  // 8 hue x 3 sat x 3 val

HsvColor rgb_to_hsv(std::uint8_t r, std::uint8_t g, std::uint8_t b);

/// Hue bin in [0,7]; bin 0 wraps [316,360) U [0,20).
int quantize_hue(double h_degrees);
int quantize_hue(const HsvColor& hsv);  // achromatic -> bin 0

/// Saturation/value bins: [0,0.2] -> 0, (0.2,0.7] -> 1, (0.7,1] -> 2.
int quantize_sat(double s);
int quantize_val(double v);

/// Full pixel quantization to the 1-D index C = 9H + 3S + V in [0,71].
std::uint8_t quantize_pixel(std::uint8_t r, std::uint8_t g, std::uint8_t b);

/// Per-pixel quantized color indices; masked-out cells hold kMaskedCell.
struct QuantizedImage {
  static constexpr std::uint8_t kMaskedCell = 0xFF;

  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> cells;  // size == width * height

  std::uint8_t at(int x, int y) const { return cells[static_cast<std::size_t>(y) * width + x]; }

  friend bool operator==(const QuantizedImage&, const QuantizedImage&) = default;
};

QuantizedImage quantize_image(const ImageBuffer& img, const ForegroundMask& mask);

}  // namespace dcreid
