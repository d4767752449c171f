#pragma once

#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "dcreid/matching.hpp"

namespace dcreid {

struct RankedEntry {
  std::string gallery_id;
  double score = 0;
};

/// Gallery ids by descending score; ties break by ascending id.
struct RankedList {
  std::string probe_id;
  std::vector<RankedEntry> entries;
};

/// points[k-1] = fraction of probes whose true match has rank <= k.
struct CmcCurve {
  std::vector<double> points;
};

struct ProbeRank {
  std::string probe_id;
  std::string gallery_id;  // true match
  int rank = 0;            // 1-based
  double score = 0;        // score of the true match
};

struct EvaluationResult {
  CmcCurve cmc;
  std::vector<ProbeRank> ranks;
};

RankedList rank_gallery(const PersonSignature& probe,
                        const std::vector<PersonSignature>& gallery, const MatchParams& params);

CmcCurve compute_cmc(const std::vector<RankedList>& ranked,
                     const std::map<std::string, std::string>& truth);

/// Ranks every probe against the gallery and aggregates the CMC.
/// jobs > 1 parallelizes over probes; output is order-identical to jobs == 1.
EvaluationResult evaluate_dataset(const std::vector<PersonSignature>& probes,
                                  const std::vector<PersonSignature>& gallery,
                                  const std::map<std::string, std::string>& truth,
                                  const MatchParams& params, int jobs = 1);

/// CSV: header "rank,cmc", fractions with 6 decimals.
void write_cmc_csv(std::ostream& out, const CmcCurve& curve);

/// CSV: header "probe_id,gallery_id,rank,score".
void write_rank_csv(std::ostream& out, const std::vector<ProbeRank>& ranks);

}  // namespace dcreid
