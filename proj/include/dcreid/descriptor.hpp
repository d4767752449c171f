#pragma once

#include <array>
#include <vector>

#include "dcreid/colorquant.hpp"

namespace dcreid {

/// Half-open row interval [begin, end).
struct RowRange {
  int begin = 0;
  int end = 0;

  bool contains(int y) const { return y >= begin && y < end; }
  int rows() const { return end - begin; }

  friend bool operator==(const RowRange&, const RowRange&) = default;
};

/// Normalized 72-bin color histogram; bins sum to 1 when pixel_count > 0.
struct ColorHistogram {
  std::array<double, kQuantLevels> bins{};
  std::size_t pixel_count = 0;
};

struct CentroidDcd {
  int color = 0;          // quantized index in [0,71]
  double percentage = 0;  // (0,1], renormalized over the surviving colors

  friend bool operator==(const CentroidDcd&, const CentroidDcd&) = default;
};

/// Up to max_colors dominant colors, descending by percentage,
/// ties broken by ascending color index.
struct DcdSet {
  std::vector<CentroidDcd> entries;
  int max_colors = 8;

  bool empty() const { return entries.empty(); }

  friend bool operator==(const DcdSet&, const DcdSet&) = default;
};

/// Histogram over the selected cells; masked cells never count.
template <class Pred>
ColorHistogram color_histogram_if(const QuantizedImage& qimg, Pred selected) {
  std::array<std::size_t, kQuantLevels> counts{};
  std::size_t total = 0;
  for (int y = 0; y < qimg.height; ++y) {
    for (int x = 0; x < qimg.width; ++x) {
      const std::uint8_t c = qimg.at(x, y);
      if (c == QuantizedImage::kMaskedCell || !selected(x, y)) continue;
      ++counts[c];
      ++total;
    }
  }
  ColorHistogram hist;
  hist.pixel_count = total;
  if (total > 0)
    for (int c = 0; c < kQuantLevels; ++c)
      hist.bins[c] = static_cast<double>(counts[c]) / static_cast<double>(total);
  return hist;
}

ColorHistogram color_histogram(const QuantizedImage& qimg, RowRange rows);
ColorHistogram color_histogram(const QuantizedImage& qimg);

/// Drop zero bins, sort descending by percentage (ascending color on ties),
/// keep the top max_colors, renormalize to unit sum.
DcdSet extract_centroid_dcds(const ColorHistogram& hist, int max_colors = 8);

}  // namespace dcreid
