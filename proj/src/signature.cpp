#include "dcreid/signature.hpp"

#include <cmath>
#include <cstdio>

#include "dcreid/errors.hpp"

namespace dcreid {

void validate(const ExtractionParams& p) {
  if (p.norm_width <= 0 || p.norm_height <= 0)
    throw ArgumentError("params: normalization size must be positive");
  if (!(p.tau > 0.0 && p.tau < 1.0)) throw ArgumentError("params: tau must be in (0,1)");
  if (p.max_colors < 1) throw ArgumentError("params: max_colors must be >= 1");
  if (p.connectivity != 4 && p.connectivity != 8)
    throw ArgumentError("params: connectivity must be 4 or 8");
  if (p.min_area < 1) throw ArgumentError("params: min_area must be >= 1");
}

std::uint64_t params_fingerprint(const ExtractionParams& p) {
  char buf[160];
  std::snprintf(buf, sizeof(buf), "w=%d;h=%d;tau=%.17g;M=%d;conn=%d;minarea=%d", p.norm_width,
                p.norm_height, p.tau, p.max_colors, p.connectivity, p.min_area);
  // FNV-1a
  std::uint64_t hash = 14695981039346656037ull;
  for (const char* c = buf; *c; ++c) {
    hash ^= static_cast<std::uint8_t>(*c);
    hash *= 1099511628211ull;
  }
  return hash;
}

std::pair<RowRange, RowRange> split_body(int image_height, double tau) {
  if (!(tau > 0.0 && tau < 1.0)) throw ArgumentError("split_body: tau must be in (0,1)");
  if (image_height <= 0) throw ArgumentError("split_body: height must be positive");
  const int split = static_cast<int>(std::floor(tau * image_height));
  if (split <= 0 || split >= image_height)
    throw ArgumentError("split_body: split at row " + std::to_string(split) +
                        " leaves an empty part");
  return {RowRange{0, split}, RowRange{split, image_height}};
}

PersonSignature build_signature(const ImageBuffer& img, const ForegroundMask* mask,
                                std::string id, const ExtractionParams& params) {
  validate(params);
  if (mask && (mask->width != img.width || mask->height != img.height))
    throw ArgumentError("build_signature: mask dimensions do not match image");

  const ImageBuffer norm = resize_nearest(img, params.norm_width, params.norm_height);
  const ForegroundMask norm_mask = mask
                                       ? resize_nearest(*mask, params.norm_width, params.norm_height)
                                       : full_mask(params.norm_width, params.norm_height);

  const QuantizedImage qimg = quantize_image(norm, norm_mask);
  const auto [upper, lower] = split_body(params.norm_height, params.tau);

  PersonSignature sig;
  sig.id = std::move(id);
  sig.width = params.norm_width;
  sig.height = params.norm_height;
  sig.fingerprint = params_fingerprint(params);

  sig.upper_dcds = extract_centroid_dcds(color_histogram(qimg, upper), params.max_colors);
  sig.lower_dcds = extract_centroid_dcds(color_histogram(qimg, lower), params.max_colors);

  RegionSet up = extract_dcrs(qimg, sig.upper_dcds, BodyPart::Upper, upper, params.connectivity,
                              params.min_area);
  RegionSet low = extract_dcrs(qimg, sig.lower_dcds, BodyPart::Lower, lower, params.connectivity,
                               params.min_area);
  sig.regions.regions = std::move(up.regions);
  sig.regions.regions.insert(sig.regions.regions.end(), low.regions.begin(), low.regions.end());
  return sig;
}

}  // namespace dcreid
