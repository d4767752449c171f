#pragma once

#include <cstdint>
#include <vector>

#include "dcreid/colorquant.hpp"
#include "dcreid/descriptor.hpp"

namespace dcreid {

enum class BodyPart : std::uint8_t { Upper = 0, Lower = 1 };

/// Row-major binary mask, 1 = set.
struct PixelMask {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> bits;

  bool at(int x, int y) const { return bits[static_cast<std::size_t>(y) * width + x] != 0; }
};

/// One connected component as linear pixel indices (y * width + x),
/// in raster order.
struct Component {
  std::vector<std::int32_t> pixels;

  int area() const { return static_cast<int>(pixels.size()); }
};

struct Mbr {
  int x = 0;
  int y = 0;
  int width = 0;
  int height = 0;

  friend bool operator==(const Mbr&, const Mbr&) = default;
};

struct DominantColorRegion {
  int color = 0;
  BodyPart part = BodyPart::Upper;
  int area = 0;
  Mbr mbr;
  double center_y = 0;    // (mbr.y + mbr.height/2) / image_height
  double mbr_height = 0;  // mbr.height / image_height

  friend bool operator==(const DominantColorRegion&, const DominantColorRegion&) = default;
};

/// Regions ordered by part, then color, then raster position of the
/// first component pixel.
struct RegionSet {
  std::vector<DominantColorRegion> regions;

  bool empty() const { return regions.empty(); }

  friend bool operator==(const RegionSet&, const RegionSet&) = default;
};

/// Pixels of one color within a row range, masked cells excluded.
PixelMask color_mask(const QuantizedImage& qimg, int color, RowRange rows);

/// Maximal connected sets of mask bits; components appear in raster order
/// of their first pixel. connectivity is 4 or 8.
std::vector<Component> connected_components(const PixelMask& mask, int connectivity);

/// Keep components with area >= min_area; order preserved.
std::vector<Component> filter_noise(std::vector<Component> components, int min_area);

DominantColorRegion region_stats(const Component& component, int mask_width, int color,
                                 BodyPart part, int image_height);

RegionSet extract_dcrs(const QuantizedImage& qimg, const DcdSet& dcds, BodyPart part,
                       RowRange rows, int connectivity, int min_area);

}  // namespace dcreid
