#pragma once

#include "dcreid/signature.hpp"

namespace dcreid {

struct MatchParams {
  double alpha = 0.4;  // weight of the histogram cue
  double beta = 0.6;   // weight of MBR y-center vs height
  double gamma = 0.55; // weight of the upper part
  bool same_part_only = false;  // restrict region matches to the same body part

  friend bool operator==(const MatchParams&, const MatchParams&) = default;
};

void validate(const MatchParams& params);

struct MatchScore {
  double dch = 0;         // histogram similarity in [0,1]
  double dcr_dissim = 0;  // normalized region dissimilarity in [0,1]
  double combined = 0;    // alpha*dch + (1-alpha)*(1-dcr_dissim)
};

/// Sparse histogram intersection over the shared colors.
double part_hist_similarity(const DcdSet& fa, const DcdSet& fb);

/// gamma-weighted sum of upper/lower intersections.
double dch_similarity(const PersonSignature& a, const PersonSignature& b, double gamma);

/// beta*|dy| + (1-beta)*|dh| over height-normalized MBR stats.
double region_dissimilarity(const DominantColorRegion& u, const DominantColorRegion& w,
                            double beta);

/// Mean over probe regions of the best color-matched gallery region
/// dissimilarity; unmatched colors score 1.
double dcr_dissimilarity(const RegionSet& probe, const RegionSet& gallery, double beta,
                         bool same_part_only = false);

MatchScore combined_score(const PersonSignature& a, const PersonSignature& b,
                          const MatchParams& params);

}  // namespace dcreid
