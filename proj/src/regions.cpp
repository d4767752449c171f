#include "dcreid/regions.hpp"

#include <algorithm>

#include "dcreid/errors.hpp"

namespace dcreid {

PixelMask color_mask(const QuantizedImage& qimg, int color, RowRange rows) {
  if (color < 0 || color >= kQuantLevels) throw ArgumentError("color_mask: color out of range");
  PixelMask mask;
  mask.width = qimg.width;
  mask.height = qimg.height;
  mask.bits.assign(qimg.cells.size(), 0);
  for (int y = rows.begin; y < rows.end; ++y)
    for (int x = 0; x < qimg.width; ++x)
      if (qimg.at(x, y) == color) mask.bits[static_cast<std::size_t>(y) * qimg.width + x] = 1;
  return mask;
}

std::vector<Component> connected_components(const PixelMask& mask, int connectivity) {
  if (connectivity != 4 && connectivity != 8)
    throw ArgumentError("connected_components: connectivity must be 4 or 8");

  const int w = mask.width;
  const int h = mask.height;
  std::vector<std::uint8_t> visited(mask.bits.size(), 0);
  std::vector<Component> components;
  std::vector<std::int32_t> stack;

  for (std::int32_t start = 0; start < static_cast<std::int32_t>(mask.bits.size()); ++start) {
    if (!mask.bits[start] || visited[start]) continue;
    Component comp;
    stack.clear();
    stack.push_back(start);
    visited[start] = 1;
    while (!stack.empty()) {
      const std::int32_t idx = stack.back();
      stack.pop_back();
      comp.pixels.push_back(idx);
      const int x = idx % w;
      const int y = idx / w;
      for (int dy = -1; dy <= 1; ++dy) {
        for (int dx = -1; dx <= 1; ++dx) {
          if (dx == 0 && dy == 0) continue;
          if (connectivity == 4 && dx != 0 && dy != 0) continue;
          const int nx = x + dx;
          const int ny = y + dy;
          if (nx < 0 || nx >= w || ny < 0 || ny >= h) continue;
          const std::int32_t nidx = ny * w + nx;
          if (mask.bits[nidx] && !visited[nidx]) {
            visited[nidx] = 1;
            stack.push_back(nidx);
          }
        }
      }
    }
    std::sort(comp.pixels.begin(), comp.pixels.end());
    components.push_back(std::move(comp));
  }
  return components;
}

std::vector<Component> filter_noise(std::vector<Component> components, int min_area) {
  if (min_area < 1) throw ArgumentError("filter_noise: min_area must be >= 1");
  std::erase_if(components, [min_area](const Component& c) { return c.area() < min_area; });
  return components;
}

DominantColorRegion region_stats(const Component& component, int mask_width, int color,
                                 BodyPart part, int image_height) {
  if (component.pixels.empty()) throw ArgumentError("region_stats: empty component");

  int x_min = mask_width, x_max = -1;
  int y_min = image_height, y_max = -1;
  for (std::int32_t idx : component.pixels) {
    const int x = idx % mask_width;
    const int y = idx / mask_width;
    x_min = std::min(x_min, x);
    x_max = std::max(x_max, x);
    y_min = std::min(y_min, y);
    y_max = std::max(y_max, y);
  }

  DominantColorRegion region;
  region.color = color;
  region.part = part;
  region.area = component.area();
  region.mbr = {x_min, y_min, x_max - x_min + 1, y_max - y_min + 1};
  region.center_y = (region.mbr.y + region.mbr.height / 2.0) / image_height;
  region.mbr_height = static_cast<double>(region.mbr.height) / image_height;
  return region;
}

RegionSet extract_dcrs(const QuantizedImage& qimg, const DcdSet& dcds, BodyPart part,
                       RowRange rows, int connectivity, int min_area) {
  // ascending color order keeps the RegionSet ordering deterministic
  std::vector<int> colors;
  for (const auto& dcd : dcds.entries) colors.push_back(dcd.color);
  std::sort(colors.begin(), colors.end());

  RegionSet set;
  for (int color : colors) {
    const PixelMask mask = color_mask(qimg, color, rows);
    auto components = filter_noise(connected_components(mask, connectivity), min_area);
    for (const auto& comp : components)
      set.regions.push_back(region_stats(comp, qimg.width, color, part, qimg.height));
  }
  return set;
}

}  // namespace dcreid
