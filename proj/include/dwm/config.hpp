#pragma once

// TrainConfig: everything a run needs, loadable from JSON with strict
// (unknown-key-rejecting) parsing and flat-key CLI overrides.

#include <string>
#include <vector>

#include "dwm/lm.hpp"

namespace dwm {

enum class WeightingMode { dynamic, uniform, frozen_w1, frozen_w4, external_checkpoint };

std::string to_string(WeightingMode mode);
WeightingMode weighting_mode_from_string(const std::string& s);

struct StageSpec {
    int64_t token_budget = 0;  // when > 0, lm_steps is derived from it
    int lm_steps = 0;
    int meta_steps = 0;
    double alpha = 0.0;  // 0 -> config default
    double eta = 0.0;
};

struct StageSchedule {
    int T = 5;
    // template applied to every stage when `stages` is empty
    int64_t token_budget = 0;
    int lm_steps = 50;
    int meta_steps = 8;
    std::vector<StageSpec> stages;  // explicit per-stage plan (optional)

    std::vector<StageSpec> materialize(double default_alpha, double default_eta) const;
};

struct TrainConfig {
    LmConfig model;

    int bs = 8;
    int global_batch = 8;  // samples accumulated per LM update; multiple of bs
    double alpha = 5e-4;   // LM learning rate
    double eta = 1e-3;     // weighting-model learning rate
    double adam_beta1 = 0.9;
    double adam_beta2 = 0.95;
    double adam_eps = 1e-8;
    std::string weighting_optimizer = "adam";  // "adam" | "sgd"

    WeightingMode mode = WeightingMode::dynamic;
    std::string source_weighting_checkpoint;  // required by frozen_* / external

    uint64_t seed = 0;
    int workers = 0;  // 0 -> hardware concurrency

    std::vector<std::string> corpus_paths;  // .txt (doc per line) or .dwmc shards
    std::vector<std::string> val_paths;
    std::string vocab_file;  // empty -> built from the corpus
    int vocab_target_size = 96;
    double noise_fraction = 0.0;
    int val_items = 32;
    int min_context = 4;

    std::string out_dir;
    StageSchedule schedule;

    void validate() const;
};

TrainConfig train_config_from_json_text(const std::string& text);
TrainConfig load_train_config(const std::string& path);
std::string train_config_to_json_text(const TrainConfig& config);

// flat-key override, e.g. apply_override(cfg, "schedule.T", "2")
void apply_override(TrainConfig& config, const std::string& key, const std::string& value);

}  // namespace dwm
