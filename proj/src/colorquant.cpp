#include "dcreid/colorquant.hpp"

#include <algorithm>

#include "dcreid/errors.hpp"
#include "dcreid/quantize_kernel.hpp"

namespace dcreid {

HsvColor rgb_to_hsv(std::uint8_t r8, std::uint8_t g8, std::uint8_t b8) {
  const double r = r8 / 255.0;
  const double g = g8 / 255.0;
  const double b = b8 / 255.0;
  const double maxc = std::max(r, std::max(g, b));
  const double minc = std::min(r, std::min(g, b));
  const double delta = maxc - minc;

  HsvColor hsv;
  hsv.v = maxc;
  hsv.s = (maxc == 0.0) ? 0.0 : delta / maxc;

  if (maxc == minc) {
    hsv.achromatic = true;
    return hsv;
  }

  double h;
  if (r == maxc && g != minc)
    h = 60.0 * (g - b) / delta;
  else if (r == maxc && g == minc)
    h = 360.0 + 60.0 * (g - b) / delta;
  else if (g == maxc)
    h = 60.0 * (2.0 + (b - r) / delta);
  else
    h = 60.0 * (4.0 + (r - g) / delta);

  if (h == 360.0) h = 0.0;  // fold the hue circle
  hsv.h = h;
  return hsv;
}

int quantize_hue(double h) {
  if (h >= 316.0) return 0;
  if (h >= 295.0) return 7;
  if (h >= 270.0) return 6;
  if (h >= 190.0) return 5;
  if (h >= 155.0) return 4;
  if (h >= 75.0) return 3;
  if (h >= 40.0) return 2;
  if (h >= 20.0) return 1;
  return 0;  // wrap interval [316,360) U [0,20)
}

int quantize_hue(const HsvColor& hsv) { return hsv.achromatic ? 0 : quantize_hue(hsv.h); }

int quantize_sat(double s) {
  if (s <= 0.2) return 0;
  if (s <= 0.7) return 1;
  return 2;
}

int quantize_val(double v) {
  if (v <= 0.2) return 0;
  if (v <= 0.7) return 1;
  return 2;
}

std::uint8_t quantize_pixel(std::uint8_t r, std::uint8_t g, std::uint8_t b) {
  const HsvColor hsv = rgb_to_hsv(r, g, b);
  const int c = 9 * quantize_hue(hsv) + 3 * quantize_sat(hsv.s) + quantize_val(hsv.v);
  return static_cast<std::uint8_t>(c);
}

QuantizedImage quantize_image(const ImageBuffer& img, const ForegroundMask& mask) {
  if (img.width != mask.width || img.height != mask.height)
    throw ArgumentError("quantize_image: mask dimensions do not match image");

  QuantizedImage out;
  out.width = img.width;
  out.height = img.height;
  out.cells.resize(img.pixels.size());
  kernel::active_kernel()(img.pixels.data(), img.pixels.size(), out.cells.data());
  for (std::size_t i = 0; i < out.cells.size(); ++i)
    if (!mask.bits[i]) out.cells[i] = QuantizedImage::kMaskedCell;
  return out;
}

}  // namespace dcreid
