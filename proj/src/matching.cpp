#include "dcreid/matching.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "dcreid/errors.hpp"

namespace dcreid {

namespace {

void require_compatible(const PersonSignature& a, const PersonSignature& b) {
  if (a.fingerprint != b.fingerprint)
    throw IncompatibleSignatureError("signatures '" + a.id + "' and '" + b.id +
                                     "' were extracted with different parameters");
}

}  // namespace

void validate(const MatchParams& p) {
  if (!(p.alpha > 0.0 && p.alpha < 1.0)) throw ArgumentError("params: alpha must be in (0,1)");
  if (!(p.beta > 0.0 && p.beta < 1.0)) throw ArgumentError("params: beta must be in (0,1)");
  if (!(p.gamma > 0.0 && p.gamma < 1.0)) throw ArgumentError("params: gamma must be in (0,1)");
}

double part_hist_similarity(const DcdSet& fa, const DcdSet& fb) {
  std::array<double, kQuantLevels> pa{}, pb{};
  for (const auto& e : fa.entries) pa[e.color] = e.percentage;
  for (const auto& e : fb.entries) pb[e.color] = e.percentage;
  // fixed ascending-color summation keeps the result exactly symmetric
  double sum = 0.0;
  for (int c = 0; c < kQuantLevels; ++c) sum += std::min(pa[c], pb[c]);
  return sum;
}

double dch_similarity(const PersonSignature& a, const PersonSignature& b, double gamma) {
  require_compatible(a, b);
  return gamma * part_hist_similarity(a.upper_dcds, b.upper_dcds) +
         (1.0 - gamma) * part_hist_similarity(a.lower_dcds, b.lower_dcds);
}

double region_dissimilarity(const DominantColorRegion& u, const DominantColorRegion& w,
                            double beta) {
  const double dy = std::abs(u.center_y - w.center_y);
  const double dh = std::abs(u.mbr_height - w.mbr_height);
  return beta * dy + (1.0 - beta) * dh;
}

double dcr_dissimilarity(const RegionSet& probe, const RegionSet& gallery, double beta,
                         bool same_part_only) {
  if (probe.empty() && gallery.empty()) return 0.0;
  if (probe.empty() || gallery.empty()) return 1.0;

  double sum = 0.0;
  for (const auto& u : probe.regions) {
    double best = 1.0;  // unmatched colors take the supremum of d_R
    for (const auto& w : gallery.regions) {
      if (w.color != u.color) continue;
      if (same_part_only && w.part != u.part) continue;
      best = std::min(best, region_dissimilarity(u, w, beta));
    }
    sum += best;
  }
  return sum / static_cast<double>(probe.regions.size());
}

MatchScore combined_score(const PersonSignature& a, const PersonSignature& b,
                          const MatchParams& params) {
  validate(params);
  require_compatible(a, b);
  MatchScore score;
  score.dch = dch_similarity(a, b, params.gamma);
  score.dcr_dissim = dcr_dissimilarity(a.regions, b.regions, params.beta, params.same_part_only);
  score.combined = params.alpha * score.dch + (1.0 - params.alpha) * (1.0 - score.dcr_dissim);
  return score;
}

}  // namespace dcreid
