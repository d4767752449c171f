#pragma once

#include <cstdint>
#include <string>
#include <utility>

#include "dcreid/descriptor.hpp"
#include "dcreid/image.hpp"
#include "dcreid/regions.hpp"

namespace dcreid {

/// Every knob that changes feature semantics. Signatures extracted with
/// different params carry different fingerprints and refuse to match.
struct ExtractionParams {
  int norm_width = 48;
  int norm_height = 128;
  double tau = 0.5;  // upper/lower split fraction
  int max_colors = 8;
  int connectivity = 8;
  int min_area = 5;

  friend bool operator==(const ExtractionParams&, const ExtractionParams&) = default;
};

void validate(const ExtractionParams& params);

std::uint64_t params_fingerprint(const ExtractionParams& params);

struct PersonSignature {
  std::string id;
  int width = 0;
  int height = 0;
  DcdSet upper_dcds;
  DcdSet lower_dcds;
  RegionSet regions;  // both parts, full-image coordinates
  std::uint64_t fingerprint = 0;

  friend bool operator==(const PersonSignature&, const PersonSignature&) = default;
};

/// Upper rows [0, floor(tau*H)), lower rows [floor(tau*H), H).
std::pair<RowRange, RowRange> split_body(int image_height, double tau);

/// Full pipeline for one pedestrian crop: resize, quantize, split,
/// per-part DCDs and DCRs. mask may be null (whole image is foreground).
PersonSignature build_signature(const ImageBuffer& img, const ForegroundMask* mask,
                                std::string id, const ExtractionParams& params);

}  // namespace dcreid
