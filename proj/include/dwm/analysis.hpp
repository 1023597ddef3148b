#pragma once

// Post-hoc weight analysis: scores a probe corpus under the weighting model
// of each training stage, splits samples into preferred/unpreferred against
// the within-batch uniform reference 1/bs, and aggregates by source tag.

#include <map>
#include <string>
#include <vector>

#include "dwm/corpus.hpp"
#include "dwm/trainer.hpp"
#include "dwm/weighting.hpp"

namespace dwm {

struct SampleScore {
    uint64_t id = 0;
    std::string source_tag;
    double omega = 0.0;
};

struct ScoredCorpus {
    std::vector<SampleScore> scores;
    int bs = 0;
    int dropped = 0;  // leftover samples that did not fill a micro-batch
};

// partitions samples into seeded micro-batches of bs and scores each with
// compute_weights; the (< bs) leftover is dropped and reported
ScoredCorpus score_corpus(const WeightingParams& wp, const std::vector<Sample>& samples, int bs,
                          uint64_t seed);

// omega strictly above 1/bs is preferred; ties go unpreferred
std::pair<std::vector<uint64_t>, std::vector<uint64_t>> split_preferred(const ScoredCorpus& scored);

struct TagAggregate {
    double mean_omega = 0.0;
    int64_t count = 0;
    double preferred_fraction = 0.0;
};

struct WeightReport {
    int stage = 0;
    std::string checkpoint;      // weighting checkpoint path prefix ("" = uniform stage)
    std::string checkpoint_hash;
    int bs = 0;
    int dropped = 0;
    std::vector<SampleScore> rows;
    std::map<std::string, TagAggregate> per_tag;
    std::vector<uint64_t> preferred_ids, unpreferred_ids;

    // aggregates must equal recomputation from rows
    void check_consistency() const;
};

WeightReport make_weight_report(int stage, const std::string& checkpoint,
                                const ScoredCorpus& scored);

// scores the same probe set under each stage's weighting checkpoint from a
// run directory; stage 1 (uniform, no checkpoint) reports omega = 1/bs
std::vector<WeightReport> stage_preference_report(const RunRecord& run,
                                                  const std::vector<Sample>& probe_samples, int bs,
                                                  uint64_t seed,
                                                  std::vector<std::string>* gaps = nullptr);

void save_reports_json(const std::vector<WeightReport>& reports, const std::string& path);
// per-tag trajectory table: stage, tag, mean_omega, preferred_fraction
void save_reports_csv(const std::vector<WeightReport>& reports, const std::string& path);

}  // namespace dwm
