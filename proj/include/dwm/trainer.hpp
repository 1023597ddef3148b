#pragma once

// Multi-stage alternating trainer. Each stage t >= 2 first updates the
// weighting model over meta-steps with the LM frozen, then trains the LM
// for the stage budget with the weighting model frozen. Stage 1 always
// trains with uniform weights. Phase exclusivity is enforced by content
// hashes recorded per stage.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dwm/bilevel.hpp"
#include "dwm/config.hpp"
#include "dwm/corpus.hpp"
#include "dwm/lm.hpp"
#include "dwm/weighting.hpp"

namespace dwm {

struct StepRecord {
    int64_t step = 0;  // global LM update index, 1-based
    int stage = 0;
    double loss = 0.0;  // accumulated weighted micro-batch loss, averaged
};

struct TagStat {
    double mean_omega = 0.0;
    int64_t count = 0;
};

struct StageRecord {
    int stage = 0;
    double reward = 0.0;  // validation reward at stage end
    int lm_steps = 0;
    int meta_steps = 0;
    bool truncated = false;

    std::string lm_checkpoint;  // path prefixes
    std::string w_checkpoint;

    // phase-exclusivity evidence
    std::string lm_hash_before_meta, lm_hash_after_meta;
    std::string w_hash_before_lm, w_hash_after_lm;

    std::map<std::string, TagStat> tag_stats;  // per source_tag over the LM phase
};

struct RunRecord {
    std::string out_dir;
    std::string mode;
    uint64_t seed = 0;
    std::vector<StepRecord> steps;
    std::vector<StageRecord> stages;
    std::vector<std::string> warnings;
    double wall_seconds = 0.0;

    void save(const std::string& path) const;
    static RunRecord load(const std::string& path);
};

// Runs stages 1..T (or resume_from_stage+1..T when resuming from that
// stage's checkpoints in config.out_dir). Writes the resolved config, vocab,
// checkpoints, RunRecord (run_record.json), metrics.csv and the meta-step
// diagnostics JSON-lines under config.out_dir.
RunRecord run_training(const TrainConfig& config, int resume_from_stage = 0);

// Trains config's LM with a frozen weighting model loaded from a checkpoint
// (forward inference only; no meta-steps at any stage).
RunRecord transfer_weighting(const std::string& weighting_checkpoint, TrainConfig config);

// (c_fwd * weighting_params) / (c_bp * target_params); the token count of
// the cost model cancels
double estimate_flops_overhead(int64_t weighting_params, int64_t target_params, double c_fwd = 2.0,
                               double c_bp = 6.0);

// ----------------------------- support -----------------------------

struct PreparedData {
    Vocab vocab;
    std::vector<Sample> train_samples;
    ValidationSet validation;
};

// vocab + tokenized, tagged (and optionally noise-injected) training
// samples + cloze validation set, all per config
PreparedData prepare_data(const TrainConfig& config);

// the independent seeded streams of one run, all derived from config.seed
struct RunSeeds {
    uint64_t model_init;
    uint64_t lm_data;
    uint64_t meta_data;
    uint64_t noise;
    uint64_t weighting_init;
};

RunSeeds derive_run_seeds(uint64_t master_seed);

}  // namespace dwm
