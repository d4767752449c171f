#include "dcreid/descriptor.hpp"

#include <algorithm>

#include "dcreid/errors.hpp"

namespace dcreid {

ColorHistogram color_histogram(const QuantizedImage& qimg, RowRange rows) {
  return color_histogram_if(qimg, [rows](int, int y) { return rows.contains(y); });
}

ColorHistogram color_histogram(const QuantizedImage& qimg) {
  return color_histogram_if(qimg, [](int, int) { return true; });
}

DcdSet extract_centroid_dcds(const ColorHistogram& hist, int max_colors) {
  if (max_colors < 1) throw ArgumentError("extract_centroid_dcds: max_colors must be >= 1");

  DcdSet set;
  set.max_colors = max_colors;
  for (int c = 0; c < kQuantLevels; ++c)
    if (hist.bins[c] > 0.0) set.entries.push_back({c, hist.bins[c]});

  std::sort(set.entries.begin(), set.entries.end(), [](const CentroidDcd& a, const CentroidDcd& b) {
    if (a.percentage != b.percentage) return a.percentage > b.percentage;
    return a.color < b.color;
  });

  if (static_cast<int>(set.entries.size()) > max_colors) set.entries.resize(max_colors);

  double sum = 0.0;
  for (const auto& e : set.entries) sum += e.percentage;
  if (sum > 0.0)
    for (auto& e : set.entries) e.percentage /= sum;
  return set;
}

}  // namespace dcreid
