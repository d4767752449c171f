#include "dcreid/evaluation.hpp"

#include <algorithm>
#include <cstdio>

#include "dcreid/errors.hpp"
#include "dcreid/parallel.hpp"

namespace dcreid {

RankedList rank_gallery(const PersonSignature& probe,
                        const std::vector<PersonSignature>& gallery, const MatchParams& params) {
  if (gallery.empty()) throw ArgumentError("rank_gallery: empty gallery");

  RankedList ranked;
  ranked.probe_id = probe.id;
  ranked.entries.reserve(gallery.size());
  for (const auto& g : gallery)
    ranked.entries.push_back({g.id, combined_score(probe, g, params).combined});

  std::stable_sort(ranked.entries.begin(), ranked.entries.end(),
                   [](const RankedEntry& a, const RankedEntry& b) {
                     if (a.score != b.score) return a.score > b.score;
                     return a.gallery_id < b.gallery_id;
                   });
  return ranked;
}

CmcCurve compute_cmc(const std::vector<RankedList>& ranked,
                     const std::map<std::string, std::string>& truth) {
  if (ranked.empty()) throw EvaluationError("compute_cmc: no ranked lists");
  const std::size_t gallery_size = ranked.front().entries.size();

  std::vector<std::size_t> hits(gallery_size, 0);
  for (const auto& list : ranked) {
    auto it = truth.find(list.probe_id);
    if (it == truth.end())
      throw EvaluationError("compute_cmc: no truth entry for probe '" + list.probe_id + "'");
    const std::string& target = it->second;
    std::size_t rank = 0;
    for (std::size_t i = 0; i < list.entries.size(); ++i) {
      if (list.entries[i].gallery_id == target) {
        rank = i + 1;
        break;
      }
    }
    if (rank == 0)
      throw EvaluationError("compute_cmc: gallery id '" + target +
                            "' absent from ranked list of probe '" + list.probe_id + "'");
    ++hits[rank - 1];
  }

  CmcCurve curve;
  curve.points.resize(gallery_size);
  std::size_t cumulative = 0;
  for (std::size_t k = 0; k < gallery_size; ++k) {
    cumulative += hits[k];
    curve.points[k] = static_cast<double>(cumulative) / static_cast<double>(ranked.size());
  }
  return curve;
}

EvaluationResult evaluate_dataset(const std::vector<PersonSignature>& probes,
                                  const std::vector<PersonSignature>& gallery,
                                  const std::map<std::string, std::string>& truth,
                                  const MatchParams& params, int jobs) {
  if (probes.empty()) throw ArgumentError("evaluate_dataset: no probes");

  std::vector<RankedList> ranked(probes.size());
  parallel_for(probes.size(), jobs,
               [&](std::size_t i) { ranked[i] = rank_gallery(probes[i], gallery, params); });

  EvaluationResult result;
  result.cmc = compute_cmc(ranked, truth);
  result.ranks.reserve(probes.size());
  for (const auto& list : ranked) {
    const std::string& target = truth.at(list.probe_id);
    for (std::size_t i = 0; i < list.entries.size(); ++i) {
      if (list.entries[i].gallery_id == target) {
        result.ranks.push_back(
            {list.probe_id, target, static_cast<int>(i + 1), list.entries[i].score});
        break;
      }
    }
  }
  return result;
}

void write_cmc_csv(std::ostream& out, const CmcCurve& curve) {
  out << "rank,cmc\n";
  char buf[32];
  for (std::size_t k = 0; k < curve.points.size(); ++k) {
    std::snprintf(buf, sizeof(buf), "%.6f", curve.points[k]);
    out << (k + 1) << ',' << buf << '\n';
  }
}

void write_rank_csv(std::ostream& out, const std::vector<ProbeRank>& ranks) {
  out << "probe_id,gallery_id,rank,score\n";
  char buf[32];
  for (const auto& row : ranks) {
    std::snprintf(buf, sizeof(buf), "%.6f", row.score);
    out << row.probe_id << ',' << row.gallery_id << ',' << row.rank << ',' << buf << '\n';
  }
}

}  // namespace dcreid
