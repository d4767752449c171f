// Test-only oracles and generators. These stay independent of the library's
// implementation paths: the flood fill is label propagation to a fixed point,
// the DCD oracle is count-sort-truncate-renormalize over raw counts, and the
// DCR oracle is a plain double loop.
#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "dcreid/colorquant.hpp"
#include "dcreid/descriptor.hpp"
#include "dcreid/matching.hpp"
#include "dcreid/regions.hpp"

namespace testutil {

inline dcreid::QuantizedImage make_quantized(int width, int height,
                                             std::vector<std::uint8_t> cells) {
  dcreid::QuantizedImage q;
  q.width = width;
  q.height = height;
  q.cells = std::move(cells);
  return q;
}

inline dcreid::PixelMask make_mask(int width, int height, std::vector<std::uint8_t> bits) {
  dcreid::PixelMask m;
  m.width = width;
  m.height = height;
  m.bits = std::move(bits);
  return m;
}

// Connected components by label propagation: every pixel starts as its own
// label, then labels flow to the neighborhood minimum until nothing changes.
inline std::vector<std::vector<std::int32_t>> oracle_components(const dcreid::PixelMask& mask,
                                                                int connectivity) {
  const int w = mask.width;
  const int h = mask.height;
  std::vector<std::int32_t> label(mask.bits.size(), -1);
  for (std::size_t i = 0; i < mask.bits.size(); ++i)
    if (mask.bits[i]) label[i] = static_cast<std::int32_t>(i);

  bool changed = true;
  while (changed) {
    changed = false;
    for (int y = 0; y < h; ++y) {
      for (int x = 0; x < w; ++x) {
        const std::int32_t idx = y * w + x;
        if (label[idx] < 0) continue;
        for (int dy = -1; dy <= 1; ++dy) {
          for (int dx = -1; dx <= 1; ++dx) {
            if (dx == 0 && dy == 0) continue;
            if (connectivity == 4 && dx != 0 && dy != 0) continue;
            const int nx = x + dx;
            const int ny = y + dy;
            if (nx < 0 || nx >= w || ny < 0 || ny >= h) continue;
            const std::int32_t nidx = ny * w + nx;
            if (label[nidx] >= 0 && label[nidx] < label[idx]) {
              label[idx] = label[nidx];
              changed = true;
            }
          }
        }
      }
    }
  }

  std::map<std::int32_t, std::vector<std::int32_t>> groups;
  for (std::size_t i = 0; i < label.size(); ++i)
    if (label[i] >= 0) groups[label[i]].push_back(static_cast<std::int32_t>(i));
  std::vector<std::vector<std::int32_t>> components;
  for (auto& [root, pixels] : groups) components.push_back(std::move(pixels));
  // map keys are the minimum member index, so this is raster order already
  return components;
}

// Count, sort (desc pct / asc color), truncate, renormalize.
inline std::vector<dcreid::CentroidDcd> oracle_dcds(const std::vector<std::uint8_t>& cells,
                                                    int max_colors) {
  std::map<int, std::size_t> counts;
  std::size_t total = 0;
  for (std::uint8_t c : cells) {
    if (c == dcreid::QuantizedImage::kMaskedCell) continue;
    ++counts[c];
    ++total;
  }
  std::vector<dcreid::CentroidDcd> entries;
  for (const auto& [color, count] : counts)
    entries.push_back({color, static_cast<double>(count) / static_cast<double>(total)});
  std::sort(entries.begin(), entries.end(),
            [](const dcreid::CentroidDcd& a, const dcreid::CentroidDcd& b) {
              if (a.percentage != b.percentage) return a.percentage > b.percentage;
              return a.color < b.color;
            });
  if (static_cast<int>(entries.size()) > max_colors) entries.resize(max_colors);
  const double sum = std::accumulate(entries.begin(), entries.end(), 0.0,
                                     [](double s, const dcreid::CentroidDcd& e) {
                                       return s + e.percentage;
                                     });
  for (auto& e : entries) e.percentage /= sum;
  return entries;
}

inline double oracle_dcr(const dcreid::RegionSet& probe, const dcreid::RegionSet& gallery,
                         double beta) {
  if (probe.regions.empty() && gallery.regions.empty()) return 0.0;
  if (probe.regions.empty() || gallery.regions.empty()) return 1.0;
  double total = 0.0;
  for (const auto& u : probe.regions) {
    double best = 1.0;
    for (const auto& w : gallery.regions) {
      if (w.color != u.color) continue;
      const double d = beta * std::abs(u.center_y - w.center_y) +
                       (1.0 - beta) * std::abs(u.mbr_height - w.mbr_height);
      best = std::min(best, d);
    }
    total += best;
  }
  return total / probe.regions.size();
}

inline dcreid::RegionSet random_region_set(std::mt19937& rng, int max_regions = 6) {
  std::uniform_int_distribution<int> count_dist(0, max_regions);
  std::uniform_int_distribution<int> color_dist(0, 71);
  std::uniform_int_distribution<int> part_dist(0, 1);
  std::uniform_int_distribution<int> pos_dist(0, 100);
  dcreid::RegionSet set;
  const int n = count_dist(rng);
  for (int i = 0; i < n; ++i) {
    dcreid::DominantColorRegion r;
    r.color = color_dist(rng);
    r.part = part_dist(rng) ? dcreid::BodyPart::Lower : dcreid::BodyPart::Upper;
    const int y0 = pos_dist(rng);
    const int h = 1 + pos_dist(rng) / 4;
    r.mbr = {pos_dist(rng), y0, 1 + pos_dist(rng) / 4, h};
    r.area = r.mbr.width * r.mbr.height;
    r.center_y = (y0 + h / 2.0) / 128.0;
    r.mbr_height = h / 128.0;
    set.regions.push_back(r);
  }
  return set;
}

}  // namespace testutil
